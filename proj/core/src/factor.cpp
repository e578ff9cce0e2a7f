#include "ivkit/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "ivkit/error.hpp"
#include "ivkit/primes.hpp"

namespace ivkit {

namespace {

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p < 2^31, coefficients lowest degree first.

using FpPoly = std::vector<std::uint64_t>;

struct Fp {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t r = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  void trim(FpPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  FpPoly reduce(const ZPoly& z) const {
    FpPoly out(z.size());
    const Integer modulus(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = mod_floor(z[i], modulus).get_ui();
    trim(out);
    return out;
  }

  FpPoly sub(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }

  FpPoly add(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
    trim(r);
    return r;
  }

  FpPoly mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }

  void divmod(const FpPoly& a, const FpPoly& b, FpPoly* q, FpPoly* r) const {
    FpPoly rem = a;
    const std::size_t db = b.size() - 1;
    FpPoly quot(a.size() >= b.size() ? a.size() - db : 0, 0);
    const std::uint64_t lead_inv = inv(b.back());
    for (std::size_t i = rem.size(); i-- > db;) {
      if (rem[i] == 0) continue;
      const std::uint64_t c = mul(rem[i], lead_inv);
      quot[i - db] = c;
      for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = sub(rem[i - db + j], mul(c, b[j]));
    }
    trim(rem);
    trim(quot);
    if (q) *q = std::move(quot);
    if (r) *r = std::move(rem);
  }

  FpPoly mod(const FpPoly& a, const FpPoly& b) const {
    FpPoly r;
    divmod(a, b, nullptr, &r);
    return r;
  }

  FpPoly quo(const FpPoly& a, const FpPoly& b) const {
    FpPoly q;
    divmod(a, b, &q, nullptr);
    return q;
  }

  FpPoly monic(FpPoly a) const {
    if (a.empty()) return a;
    const std::uint64_t li = inv(a.back());
    for (auto& c : a) c = mul(c, li);
    return a;
  }

  FpPoly gcd(FpPoly a, FpPoly b) const {
    while (!b.empty()) {
      FpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }

  // s*a + t*b = 1, assuming gcd(a, b) = 1.
  void bezout(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) const {
    FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      FpPoly q, r;
      divmod(r0, r1, &q, &r);
      FpPoly s2 = sub(s0, mul(q, s1));
      FpPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const std::uint64_t li = inv(r0.front());
    for (auto& c : s0) c = mul(c, li);
    for (auto& c : t0) c = mul(c, li);
    s = std::move(s0);
    t = std::move(t0);
  }

  FpPoly powmod(FpPoly base, const Integer& exp, const FpPoly& modulus) const {
    FpPoly result{1};
    base = mod(base, modulus);
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = mod(mul(result, result), modulus);
      if (mpz_tstbit(exp.get_mpz_t(), i)) result = mod(mul(result, base), modulus);
    }
    return result;
  }

  FpPoly derivative(const FpPoly& a) const {
    if (a.size() <= 1) return {};
    FpPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p);
    trim(d);
    return d;
  }
};

// Cantor-Zassenhaus equal-degree splitting (p odd).
void equal_degree(const Fp& F, const FpPoly& g, unsigned d, std::mt19937_64& rng,
                  std::vector<FpPoly>& out) {
  const std::size_t n = g.size() - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  const Integer exponent = (pow_int(Integer(static_cast<unsigned long>(F.p)), d) - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coef(0, F.p - 1);
  for (;;) {
    FpPoly a(n);
    for (auto& c : a) c = coef(rng);
    F.trim(a);
    if (a.size() <= 1) continue;
    FpPoly b = F.sub(F.powmod(a, exponent, g), FpPoly{1});
    FpPoly c = F.gcd(b, g);
    if (c.size() > 1 && c.size() < g.size()) {
      equal_degree(F, c, d, rng, out);
      equal_degree(F, F.quo(g, c), d, rng, out);
      return;
    }
  }
}

std::vector<FpPoly> factor_mod_p(const Fp& F, FpPoly f) {
  std::mt19937_64 rng(0x5eed1234u);
  std::vector<FpPoly> out;
  FpPoly h{0, 1};
  const FpPoly x{0, 1};
  const Integer p(static_cast<unsigned long>(F.p));
  for (unsigned i = 1; f.size() - 1 >= 2 * i; ++i) {
    h = F.powmod(h, p, f);
    FpPoly g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      equal_degree(F, g, i, rng, out);
      f = F.quo(f, g);
      h = F.mod(h, f);
    }
  }
  if (f.size() > 1) out.push_back(F.monic(f));
  return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting over Z/p^k.

ZPoly mod_poly(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_floor(a[i], m);
  ztrim(r);
  return r;
}

ZPoly to_z(const FpPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

// F monic modulo p^k with F = a*b mod p, a and b monic and coprime mod p.
// Returns lifts (A, B), both monic, with F = A*B mod p^k.
std::pair<ZPoly, ZPoly> hensel_pair(const Fp& Fq, const ZPoly& F, const FpPoly& a,
                                    const FpPoly& b, unsigned k) {
  FpPoly s, t;
  Fq.bezout(a, b, s, t);
  ZPoly A = to_z(a);
  ZPoly B = to_z(b);
  const Integer p(static_cast<unsigned long>(Fq.p));
  Integer pj = p;
  for (unsigned j = 1; j < k; ++j) {
    const Integer next = pj * p;
    ZPoly err = mod_poly(zsub(F, zpoly_mul(A, B)), next);
    for (auto& c : err) c /= pj;
    const FpPoly e = Fq.reduce(err);
    FpPoly te = Fq.mul(t, e);
    FpPoly q, tau;
    Fq.divmod(te, a, &q, &tau);
    const FpPoly sigma = Fq.add(Fq.mul(s, e), Fq.mul(q, b));
    ZPoly tz = to_z(tau), sz = to_z(sigma);
    if (A.size() < tz.size()) A.resize(tz.size(), Integer(0));
    for (std::size_t i = 0; i < tz.size(); ++i) A[i] += pj * tz[i];
    if (B.size() < sz.size()) B.resize(sz.size(), Integer(0));
    for (std::size_t i = 0; i < sz.size(); ++i) B[i] += pj * sz[i];
    A = mod_poly(A, next);
    B = mod_poly(B, next);
    pj = next;
  }
  return {A, B};
}

std::vector<ZPoly> hensel_lift(const Fp& Fq, const ZPoly& F, std::vector<FpPoly> parts,
                               unsigned k) {
  if (parts.size() == 1) return {F};
  const FpPoly a = parts.front();
  FpPoly b{1};
  for (std::size_t i = 1; i < parts.size(); ++i) b = Fq.mul(b, parts[i]);
  auto [A, B] = hensel_pair(Fq, F, a, b, k);
  std::vector<ZPoly> out{A};
  parts.erase(parts.begin());
  auto rest = hensel_lift(Fq, B, std::move(parts), k);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

ZPoly symmetric(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  const Integer half = m / 2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = mod_floor(a[i], m);
    if (r[i] > half) r[i] -= m;
  }
  ztrim(r);
  return r;
}

ZPoly primitive_part(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

bool squarefree_mod(const Fp& F, const FpPoly& f) {
  const FpPoly g = F.gcd(f, F.derivative(f));
  return g.size() == 1;
}

bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

bool zpoly_divides(const ZPoly& divisor, const ZPoly& dividend, ZPoly* quotient) {
  if (divisor.empty()) throw Error(ErrorCode::ZeroInput, "division by the zero polynomial");
  ZPoly rem = dividend;
  ztrim(rem);
  const int dd = zdeg(divisor);
  if (zdeg(rem) < dd) {
    if (!rem.empty()) return false;
    if (quotient) quotient->clear();
    return true;
  }
  ZPoly quot(rem.size() - divisor.size() + 1, Integer(0));
  const Integer& lead = divisor.back();
  for (int i = zdeg(rem); i >= dd; --i) {
    if (rem[i] == 0) continue;
    if (mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t()) == 0) return false;
    const Integer c = rem[i] / lead;
    quot[i - dd] = c;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor[j];
  }
  ztrim(rem);
  if (!rem.empty()) return false;
  ztrim(quot);
  if (quotient) *quotient = std::move(quot);
  return true;
}

std::vector<ZPoly> factor_squarefree(const ZPoly& input) {
  ZPoly f = primitive_part(input);
  ztrim(f);
  if (zdeg(f) <= 1) return {f};

  // Pick an odd prime not dividing the leading coefficient with f square-free mod p.
  std::uint64_t p = 0;
  for (std::size_t i = 1;; ++i) {
    const std::uint64_t cand = nth_prime(i);
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), cand) != 0) continue;
    Fp F{cand};
    if (squarefree_mod(F, F.reduce(f))) {
      p = cand;
      break;
    }
  }
  const Fp F{p};
  std::vector<FpPoly> modular = factor_mod_p(F, F.monic(F.reduce(f)));
  if (modular.size() == 1) return {f};

  // Mignotte-style coefficient bound for lc(f) * (any factor).
  Integer norm_sq = 0;
  for (const auto& c : f) norm_sq += c * c;
  Integer norm = sqrt(norm_sq) + 1;
  const Integer bound = 2 * pow_int(2, static_cast<unsigned>(zdeg(f))) * norm * abs(f.back());
  unsigned k = 1;
  Integer pk(static_cast<unsigned long>(p));
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }

  const Integer lc_inv = inverse_mod(mod_floor(f.back(), pk), pk);
  ZPoly monic_f(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) monic_f[i] = mod_floor(f[i] * lc_inv, pk);
  std::vector<ZPoly> lifted = hensel_lift(F, monic_f, modular, k);

  std::vector<ZPoly> found;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  for (std::size_t d = 1; 2 * d <= remaining.size();) {
    bool progress = false;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    do {
      ZPoly cand{f.back()};
      for (std::size_t i : idx) cand = mod_poly(zpoly_mul(cand, lifted[remaining[i]]), pk);
      cand = primitive_part(symmetric(cand, pk));
      ZPoly quotient;
      if (zdeg(cand) >= 1 && zpoly_divides(cand, f, &quotient)) {
        found.push_back(cand);
        f = primitive_part(quotient);
        std::vector<std::size_t> next;
        for (std::size_t j = 0; j < remaining.size(); ++j) {
          if (std::find(idx.begin(), idx.end(), j) == idx.end()) next.push_back(remaining[j]);
        }
        remaining = std::move(next);
        progress = true;
        break;
      }
    } while (next_subset(idx, remaining.size()));
    if (!progress) ++d;
  }
  if (zdeg(f) >= 1) found.push_back(f);
  std::sort(found.begin(), found.end(), zpoly_less);
  return found;
}

unsigned QFactorization::total_count() const {
  unsigned n = 0;
  for (const auto& f : factors) n += f.multiplicity;
  return n;
}

QFactorization factor_over_q(const QPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "cannot factor the zero polynomial");
  auto [content, prim] = content_split(f);
  QFactorization out{content, {}};
  if (zdeg(prim) < 1) return out;

  const QPoly fq = QPoly::from_integers(prim);
  const QPoly sqfree_q = divmod(fq, gcd(fq, fq.derivative())).first;
  const ZPoly sqfree = content_split(sqfree_q).primitive;

  for (auto& g : factor_squarefree(sqfree)) {
    unsigned mult = 0;
    ZPoly rest = prim;
    ZPoly q;
    while (zpoly_divides(g, rest, &q)) {
      ++mult;
      rest = std::move(q);
    }
    out.factors.push_back({std::move(g), mult});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return zpoly_less(a.poly, b.poly); });
  return out;
}

}  // namespace ivkit
