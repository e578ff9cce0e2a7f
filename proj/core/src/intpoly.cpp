#include "ivkit/intpoly.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "ivkit/error.hpp"
#include "ivkit/factor.hpp"
#include "ivkit/primes.hpp"

namespace ivkit::intpoly {

Site Site::finite(std::vector<std::int64_t> points) {
  if (points.empty()) throw Error(ErrorCode::EmptySite, "a finite site needs at least one point");
  std::vector<std::int64_t> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::DuplicateSitePoint, "site points must be distinct");
  }
  Site s;
  s.all_integers_ = false;
  s.points_ = std::move(points);
  return s;
}

IVPoly IVPoly::normalized() const {
  if (poly_.is_zero() || poly_.leading() > 0) return *this;
  return IVPoly(-poly_, site_);
}

BinomialExpansion to_binomial_basis(const QPoly& f) {
  if (f.is_zero()) return {};
  const int n = f.degree();
  std::vector<Rational> table;
  table.reserve(n + 1);
  for (int k = 0; k <= n; ++k) table.push_back(f(Rational(k)));
  BinomialExpansion e;
  e.deltas.reserve(n + 1);
  for (int j = 0; j <= n; ++j) {
    e.deltas.push_back(table[0]);
    for (int k = 0; k + 1 < static_cast<int>(table.size()); ++k) table[k] = table[k + 1] - table[k];
    table.pop_back();
  }
  return e;
}

QPoly from_binomial_basis(const BinomialExpansion& e) {
  QPoly f;
  QPoly basis = QPoly::constant(1);
  for (std::size_t j = 0; j < e.deltas.size(); ++j) {
    if (j > 0) {
      basis *= QPoly::linear_root(Rational(static_cast<unsigned long>(j - 1)));
      basis *= make_rational(1, static_cast<unsigned long>(j));
    }
    if (e.deltas[j] != 0) f += basis * e.deltas[j];
  }
  return f;
}

bool is_member(const IVPoly& f) {
  if (f.site().is_all_integers()) {
    const auto e = to_binomial_basis(f.poly());
    return std::all_of(e.deltas.begin(), e.deltas.end(), [](const Rational& d) { return is_integer(d); });
  }
  return std::all_of(f.site().points().begin(), f.site().points().end(), [&](std::int64_t s) {
    return is_integer(f.poly()(Rational(static_cast<long>(s))));
  });
}

Integer fixed_divisor(const QPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "fixed divisor of the zero polynomial");
  if (!f.has_integer_coeffs()) {
    throw Error(ErrorCode::RingMismatch, "fixed divisor needs integer coefficients");
  }
  Integer g = 0;
  for (int k = 0; k <= f.degree(); ++k) g = gcd(g, f(Rational(k)).get_num());
  return g;
}

PullingSequence pulling_sequence(std::span<const std::int64_t> points) {
  if (points.empty()) throw Error(ErrorCode::EmptySite, "pulling sequence needs at least one point");
  PullingSequence seq;
  seq.points.assign(points.begin(), points.end());
  Integer d = 1;
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (points[i] == points[j]) {
        throw Error(ErrorCode::DuplicateSitePoint, "pulling-sequence points must be distinct");
      }
      d *= Integer(static_cast<long>(points[j])) - Integer(static_cast<long>(points[i]));
    }
    seq.values.push_back(d);
  }
  return seq;
}

std::optional<IVPoly> divide(const IVPoly& f, const IVPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroInput, "division by the zero polynomial");
  if (!(f.site() == g.site())) throw Error(ErrorCode::InvalidSpec, "operands live on different sites");
  auto [q, r] = divmod(f.poly(), g.poly());
  if (!r.is_zero()) return std::nullopt;
  IVPoly quotient(std::move(q), f.site());
  if (!is_member(quotient)) return std::nullopt;
  return quotient;
}

namespace {

void require_nonzero_member(const IVPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "the zero polynomial has no divisors");
  if (!is_member(f)) throw Error(ErrorCode::NotAMember, f.poly().pretty() + " is not integer-valued on its site");
}

void require_nonunit(const IVPoly& f) {
  if (f.degree() == 0 && abs(f.poly().leading()) == 1) {
    throw Error(ErrorCode::UnitInput, "units have no irreducible divisors");
  }
}

bool vanishes_on_site(const QPoly& p, const Site& site) {
  return std::all_of(site.points().begin(), site.points().end(),
                     [&](std::int64_t s) { return p(Rational(static_cast<long>(s))) == 0; });
}

// gcd of the values of an integer polynomial over the site (over Z this is the fixed divisor).
Integer value_gcd(const ZPoly& p, const Site& site) {
  const QPoly q = QPoly::from_integers(p);
  if (site.is_all_integers()) return fixed_divisor(q);
  Integer g = 0;
  for (auto s : site.points()) g = gcd(g, q(Rational(static_cast<long>(s))).get_num());
  return g;
}

bool poly_less(const IVPoly& a, const IVPoly& b) { return a.poly() < b.poly(); }

// Divisors of a nonzero member f of Int(S, Z), f not vanishing on all of a finite S.
// Every divisor is u * prod_J g_i for a sub-multiset J of the irreducible factors
// over Q; u = a/b with b | gcd(values of prod_J) and a | numerator(c * b * gcd(values
// of the complement)), kept when the divisor and its cofactor are both members.
std::vector<IVPoly> enumerate_divisors(const IVPoly& f, unsigned scale) {
  const Site& site = f.site();
  const QFactorization fac = factor_over_q(f.poly());
  const std::size_t k = fac.factors.size();
  std::vector<unsigned> pick(k, 0);
  std::map<std::string, IVPoly> found;
  const Integer s(scale);

  for (;;) {
    ZPoly part{Integer(1)}, rest{Integer(1)};
    for (std::size_t i = 0; i < k; ++i) {
      for (unsigned m = 0; m < fac.factors[i].multiplicity; ++m) {
        if (m < pick[i]) part = zpoly_mul(part, fac.factors[i].poly);
        else rest = zpoly_mul(rest, fac.factors[i].poly);
      }
    }
    const Integer g_part = value_gcd(part, site);
    const Integer g_rest = value_gcd(rest, site);
    if (g_part == 0 || g_rest == 0) {
      throw Error(ErrorCode::NotFound, "divisor set is infinite: a factor vanishes on the whole site");
    }
    const QPoly part_q = QPoly::from_integers(part);
    const QPoly rest_q = QPoly::from_integers(rest);
    for (const auto& b : positive_divisors(s * g_part)) {
      Rational n = fac.content * Rational(b * g_rest);
      for (const auto& a : positive_divisors(s * n.get_num())) {
        if (gcd(a, b) != 1) continue;
        const Rational u = make_rational(a, b);
        IVPoly d(part_q * u, site);
        if (!is_member(d)) continue;
        IVPoly cofactor(rest_q * (fac.content / u), site);
        if (!is_member(cofactor)) continue;
        d = d.normalized();
        found.emplace(d.poly().key(), std::move(d));
      }
    }
    std::size_t i = 0;
    while (i < k && pick[i] == fac.factors[i].multiplicity) pick[i++] = 0;
    if (i == k) break;
    ++pick[i];
  }

  std::vector<IVPoly> out;
  out.reserve(found.size());
  for (auto& [key, d] : found) out.push_back(std::move(d));
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

bool is_one(const IVPoly& d) { return d.degree() == 0 && d.poly().leading() == 1; }

// Irreducible members of a complete divisor list (closed under taking divisors).
std::vector<IVPoly> irreducibles_in(const std::vector<IVPoly>& divs) {
  std::vector<IVPoly> out;
  for (const auto& d : divs) {
    if (is_one(d)) continue;
    bool irreducible = true;
    for (const auto& e : divs) {
      if (is_one(e) || e == d || e.degree() > d.degree()) continue;
      if (divide(d, e)) {
        irreducible = false;
        break;
      }
    }
    if (irreducible) out.push_back(d);
  }
  return out;
}

void require_all_integers(const IVPoly& f, const char* what) {
  if (!f.site().is_all_integers()) {
    throw Error(ErrorCode::UnsupportedSiteDegree,
                std::string(what) + " is only available on the site Z (finite sites have infinitely many)");
  }
}

}  // namespace

std::vector<IVPoly> divisors(const IVPoly& f, DivisorOptions options) {
  require_all_integers(f, "divisor enumeration");
  require_nonzero_member(f);
  return enumerate_divisors(f, std::max(1U, options.bound_scale));
}

bool is_irreducible(const IVPoly& f) {
  require_nonzero_member(f);
  require_nonunit(f);
  if (f.site().is_all_integers()) {
    const auto divs = enumerate_divisors(f, 1);
    return divs.size() == 2;
  }
  if (f.degree() >= 2) {
    throw Error(ErrorCode::UnsupportedSiteDegree,
                "irreducibility on a finite site is decided for degree <= 1 only");
  }
  if (f.degree() == 0) return is_prime(abs(f.poly().leading().get_num()));
  // Any splitting of a linear member is (integer constant) * (linear member); the constant
  // divides every value on S, so f is irreducible iff those values have gcd 1.
  Integer g = 0;
  for (auto s : f.site().points()) {
    const Rational v = f.poly()(Rational(static_cast<long>(s)));
    if (abs(v) == 1) return true;
    g = gcd(g, v.get_num());
  }
  return g == 1;
}

std::vector<Factorization> factorizations(const IVPoly& f, DivisorOptions options) {
  require_all_integers(f, "factorization");
  require_nonzero_member(f);
  require_nonunit(f);
  const auto divs = enumerate_divisors(f, std::max(1U, options.bound_scale));
  const auto atoms = irreducibles_in(divs);

  using Key = std::pair<std::string, std::size_t>;
  std::map<Key, std::vector<std::vector<std::size_t>>> memo;
  // Factorizations of g using atoms with index >= first, as index lists.
  auto solve = [&](auto&& self, const IVPoly& g, std::size_t first)
      -> const std::vector<std::vector<std::size_t>>& {
    Key key{g.poly().key(), first};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::vector<std::size_t>> result;
    if (is_one(g)) {
      result.push_back({});
    } else {
      for (std::size_t i = first; i < atoms.size(); ++i) {
        if (atoms[i].degree() > g.degree()) continue;
        auto q = divide(g, atoms[i]);
        if (!q) continue;
        for (const auto& tail : self(self, q->normalized(), i)) {
          std::vector<std::size_t> z{i};
          z.insert(z.end(), tail.begin(), tail.end());
          result.push_back(std::move(z));
        }
      }
    }
    return memo.emplace(std::move(key), std::move(result)).first->second;
  };

  std::vector<Factorization> out;
  for (const auto& z : solve(solve, f.normalized(), 0)) {
    Factorization fz;
    for (auto i : z) fz.parts.push_back(atoms[i]);
    out.push_back(std::move(fz));
  }
  std::sort(out.begin(), out.end(), [](const Factorization& a, const Factorization& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return std::lexicographical_compare(a.parts.begin(), a.parts.end(), b.parts.begin(),
                                        b.parts.end(), poly_less);
  });
  return out;
}

LengthProfile length_profile(const IVPoly& f) {
  LengthProfile p;
  for (const auto& z : factorizations(f)) p.lengths.insert(z.length());
  const auto lo = static_cast<unsigned long>(*p.lengths.begin());
  const auto hi = static_cast<unsigned long>(*p.lengths.rbegin());
  p.elasticity = make_rational(hi, lo);
  p.hfd_violation = p.lengths.size() > 1;
  return p;
}

IVPoly find_irreducible_divisor(const IVPoly& f) {
  require_nonzero_member(f);
  require_nonunit(f);
  const Site& site = f.site();
  if (!site.is_all_integers() && vanishes_on_site(f.poly(), site)) {
    // f / n stays integer-valued on S for every n, and primes are irreducible.
    return IVPoly(QPoly::constant(2), site);
  }
  const auto divs = enumerate_divisors(f, 1);
  auto atoms = irreducibles_in(divs);
  if (atoms.empty()) throw Error(ErrorCode::NotFound, "no irreducible divisor found");
  // Divisor order already puts constants first, by increasing value.
  return atoms.front();
}

NonatomicWitness vanishing_nonatomic_witness(const IVPoly& f) {
  if (f.site().is_all_integers()) {
    throw Error(ErrorCode::UnsupportedSiteDegree, "the vanishing witness applies to finite sites");
  }
  require_nonzero_member(f);
  const Site& site = f.site();
  bool any_zero = false;
  for (auto s : site.points()) any_zero = any_zero || f.poly()(Rational(static_cast<long>(s))) == 0;
  if (!any_zero) throw Error(ErrorCode::NoWitness, "f does not vanish at any point of the site");

  const QFactorization fac = factor_over_q(f.poly());
  for (const auto& g : fac.factors) {
    const QPoly gq = QPoly::from_integers(g.poly);
    if (!vanishes_on_site(gq, site)) continue;
    NonatomicWitness w;
    w.vanishing_points = site.points();
    w.blocking_factor = IVPoly(gq, site);
    w.split_constant = 2;
    w.split_cofactor = IVPoly(f.poly() * make_rational(1, 2), site);
    w.cofactor_member = is_member(w.split_cofactor);
    return w;
  }
  throw Error(ErrorCode::NoWitness,
              "no irreducible factor vanishes on the whole site; a factorization may exist");
}

}  // namespace ivkit::intpoly
