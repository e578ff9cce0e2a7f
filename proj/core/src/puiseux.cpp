#include "ivkit/puiseux.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "ivkit/error.hpp"
#include "ivkit/primes.hpp"

namespace ivkit::puiseux {

MonoidSpec::MonoidSpec(MonoidKind kind, std::size_t truncation, std::vector<Rational> gens)
    : kind_(kind), truncation_(truncation), explicit_(std::move(gens)) {}

MonoidSpec MonoidSpec::grams(std::size_t truncation) {
  return MonoidSpec(MonoidKind::Grams, truncation);
}

MonoidSpec MonoidSpec::prime_reciprocal(std::size_t truncation) {
  return MonoidSpec(MonoidKind::PrimeReciprocal, truncation);
}

MonoidSpec MonoidSpec::dyadic(std::size_t truncation) {
  return MonoidSpec(MonoidKind::DyadicValuation, truncation);
}

MonoidSpec MonoidSpec::explicit_generators(std::vector<Rational> generators,
                                           std::optional<std::size_t> truncation) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] <= 0) {
      throw Error(ErrorCode::InvalidSpec, "generators must be strictly positive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (generators[i] == generators[j]) {
        throw Error(ErrorCode::InvalidSpec, "duplicate generator " + to_string(generators[i]));
      }
    }
  }
  const std::size_t n = generators.size();
  return MonoidSpec(MonoidKind::Explicit, std::min(truncation.value_or(n), n),
                    std::move(generators));
}

Rational MonoidSpec::generator(std::size_t index) const {
  switch (kind_) {
    case MonoidKind::Grams:
      return make_rational(1, pow_int(2, static_cast<unsigned>(index)) *
                                  static_cast<unsigned long>(nth_odd_prime(index)));
    case MonoidKind::PrimeReciprocal:
      return make_rational(1, static_cast<unsigned long>(nth_prime(index)));
    case MonoidKind::DyadicValuation:
      return make_rational(1, pow_int(2, static_cast<unsigned>(index)));
    case MonoidKind::Explicit:
      if (index >= explicit_.size()) throw Error(ErrorCode::OutOfRange, "generator index out of range");
      return explicit_[index];
  }
  return 0;
}

std::vector<Rational> MonoidSpec::truncated_generators() const {
  std::vector<Rational> out;
  out.reserve(truncation_);
  for (std::size_t i = 0; i < truncation_; ++i) out.push_back(generator(i));
  return out;
}

Rational MembershipCertificate::weighted_sum(const MonoidSpec& spec) const {
  Rational s = 0;
  for (const auto& [idx, mult] : combo) s += spec.generator(idx) * Rational(mult);
  return s;
}

Rational GramsDecomposition::value() const {
  Rational s = nu;
  for (const auto& [i, c] : coeffs) {
    s += make_rational(c, pow_int(2, static_cast<unsigned>(i)) *
                              static_cast<unsigned long>(nth_odd_prime(i)));
  }
  return s;
}

namespace {

void require_nonnegative(const Rational& q) {
  if (q < 0) throw Error(ErrorCode::NegativeInput, "negative element " + to_string(q));
}

// Odd part of a denominator, or nullopt if some odd prime appears squared.
std::optional<std::vector<Integer>> squarefree_odd_primes(const Integer& den) {
  std::vector<Integer> primes;
  if (den == 1) return primes;
  for (const auto& [p, e] : factor_integer(den)) {
    if (p == 2) continue;
    if (e > 1) return std::nullopt;
    primes.push_back(p);
  }
  return primes;
}

void add_dyadic(std::map<std::size_t, Integer>& combo, const Rational& nu, MonoidKind kind) {
  if (nu == 0) return;
  const Integer& den = nu.get_den();
  const unsigned e = two_adic_valuation(den);
  const Integer& k = nu.get_num();
  if (kind == MonoidKind::Grams) {
    // 1/2^e = p_e * (1/(2^e p_e)); 1 = 3 * (1/3).
    combo[e] += k * static_cast<unsigned long>(nth_odd_prime(e));
  } else {
    combo[e] += k;
  }
}

Membership prime_reciprocal_membership(const Rational& q) {
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  MembershipCertificate cert;
  Rational rest = q;
  if (den != 1) {
    for (const auto& [p, e] : factor_integer(den)) {
      if (e > 1) return {std::nullopt, true};
      const Integer cofactor = den / p;
      const Integer c = mod_floor(num * inverse_mod(mod_floor(cofactor, p), p), p);
      cert.combo[*prime_index(p)] += c;
      rest -= make_rational(c, p);
    }
  }
  if (rest < 0) return {std::nullopt, true};
  // rest is a nonnegative integer n = 2n * (1/2).
  if (rest > 0) cert.combo[0] += 2 * rest.get_num();
  return {cert, true};
}

Membership explicit_membership(const MonoidSpec& spec, const Rational& q) {
  const auto gens = spec.truncated_generators();
  const bool exact = spec.truncation() >= spec.explicit_list().size();
  if (q == 0) return {MembershipCertificate{}, true};
  Integer scale = q.get_den();
  for (const auto& g : gens) scale = lcm(scale, g.get_den());
  std::vector<Integer> weights;
  for (const auto& g : gens) {
    Rational w = g * Rational(scale);
    weights.push_back(w.get_num());
  }
  Rational tq = q * Rational(scale);
  const Integer target = tq.get_num();

  constexpr unsigned long kDpLimit = 4'000'000;
  if (target.fits_ulong_p() && target.get_ui() <= kDpLimit) {
    const std::size_t t = target.get_ui();
    std::vector<int> via(t + 1, -1);
    via[0] = static_cast<int>(gens.size());
    for (std::size_t v = 1; v <= t; ++v) {
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!weights[i].fits_ulong_p()) continue;
        const std::size_t w = weights[i].get_ui();
        if (w <= v && via[v - w] >= 0) {
          via[v] = static_cast<int>(i);
          break;
        }
      }
    }
    if (via[t] < 0) return {std::nullopt, exact};
    MembershipCertificate cert;
    for (std::size_t v = t; v > 0;) {
      const auto i = static_cast<std::size_t>(via[v]);
      cert.combo[i] += 1;
      v -= weights[i].get_ui();
    }
    return {cert, exact};
  }

  // Bounded depth-first search, largest generators first.
  std::vector<std::size_t> order(gens.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return weights[a] > weights[b]; });
  std::size_t budget = 2'000'000;
  MembershipCertificate cert;
  std::function<bool(std::size_t, const Integer&)> dfs = [&](std::size_t k, const Integer& rem) {
    if (rem == 0) return true;
    if (k == order.size() || budget == 0) return false;
    --budget;
    const Integer& w = weights[order[k]];
    for (Integer m = rem / w; m >= 0; --m) {
      Integer next = rem - m * w;
      if (dfs(k + 1, next)) {
        if (m > 0) cert.combo[order[k]] = m;
        return true;
      }
    }
    return false;
  };
  if (dfs(0, target)) return {cert, exact};
  return {std::nullopt, exact && budget > 0};
}

}  // namespace

std::optional<GramsDecomposition> grams_decompose(const Rational& q) {
  require_nonnegative(q);
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  auto primes = squarefree_odd_primes(den);
  if (!primes) return std::nullopt;
  GramsDecomposition d;
  Rational rest = q;
  for (const auto& p : *primes) {
    const std::size_t i = *odd_prime_index(p);
    // c_i = q * 2^i * p_i (mod p_i)
    const Integer cofactor = den / p;
    const Integer c = mod_floor(num * pow_int(2, static_cast<unsigned>(i)) *
                                    inverse_mod(mod_floor(cofactor, p), p),
                                p);
    d.coeffs[i] = c;
    rest -= make_rational(c, pow_int(2, static_cast<unsigned>(i)) * p);
  }
  if (rest < 0 || !is_dyadic(rest)) return std::nullopt;
  d.nu = rest;
  return d;
}

Membership membership(const MonoidSpec& spec, const Rational& q) {
  require_nonnegative(q);
  switch (spec.kind()) {
    case MonoidKind::Grams: {
      auto d = grams_decompose(q);
      if (!d) return {std::nullopt, true};
      MembershipCertificate cert;
      for (const auto& [i, c] : d->coeffs) cert.combo[i] += c;
      add_dyadic(cert.combo, d->nu, MonoidKind::Grams);
      return {cert, true};
    }
    case MonoidKind::DyadicValuation: {
      if (!is_dyadic(q)) return {std::nullopt, true};
      MembershipCertificate cert;
      add_dyadic(cert.combo, q, MonoidKind::DyadicValuation);
      return {cert, true};
    }
    case MonoidKind::PrimeReciprocal:
      return prime_reciprocal_membership(q);
    case MonoidKind::Explicit:
      if (spec.truncation() == 0) {
        throw Error(ErrorCode::InvalidSpec, "truncation must be positive for explicit generators");
      }
      return explicit_membership(spec, q);
  }
  return {};
}

bool is_atom(const MonoidSpec& spec, const Rational& q) {
  if (q <= 0) return false;
  if (!membership(spec, q).is_member()) return false;
  for (const auto& h : spec.truncated_generators()) {
    if (h < q && membership(spec, q - h).is_member()) return false;
  }
  return true;
}

std::vector<Rational> atoms_up_to(const MonoidSpec& spec, const Integer& denom_bound) {
  if (denom_bound < 1) throw Error(ErrorCode::OutOfRange, "denominator bound must be >= 1");
  std::vector<Rational> candidates;
  if (spec.is_finitely_generated()) {
    for (const auto& g : spec.truncated_generators()) {
      if (g.get_den() <= denom_bound) candidates.push_back(g);
    }
  } else {
    // Generator denominators strictly increase with the index in every infinite family.
    for (std::size_t i = 0;; ++i) {
      Rational g = spec.generator(i);
      if (g.get_den() > denom_bound) break;
      candidates.push_back(std::move(g));
    }
  }
  std::vector<Rational> atoms;
  for (const auto& c : candidates) {
    if (is_atom(spec, c)) atoms.push_back(c);
  }
  std::sort(atoms.begin(), atoms.end(), [](const Rational& a, const Rational& b) {
    if (a.get_den() != b.get_den()) return a.get_den() < b.get_den();
    return a < b;
  });
  return atoms;
}

Rational Factorization::sum() const {
  Rational s = 0;
  for (const auto& p : parts) s += p;
  return s;
}

FactorizationSet factorizations(const MonoidSpec& spec, const Rational& b, std::size_t length_cap) {
  require_nonnegative(b);
  if (length_cap < 1) throw Error(ErrorCode::OutOfRange, "length cap must be >= 1");
  if (spec.kind() == MonoidKind::Explicit && spec.truncation() == 0) {
    throw Error(ErrorCode::InvalidSpec, "truncation must be positive for explicit generators");
  }
  const Membership m = membership(spec, b);
  if (!m.is_member()) {
    throw Error(ErrorCode::NotAMember,
                to_string(b) + " is not in the monoid" + (m.exact ? "" : " (within truncation)"));
  }
  FactorizationSet out;
  if (b == 0) {
    out.items.push_back({});
    return out;
  }

  std::vector<Rational> atoms;
  for (const auto& g : spec.truncated_generators()) {
    if (g <= b && is_atom(spec, g)) atoms.push_back(g);
  }
  std::sort(atoms.begin(), atoms.end(), std::greater<>());

  Integer scale = b.get_den();
  for (const auto& a : atoms) scale = lcm(scale, a.get_den());
  std::vector<Integer> w;
  for (const auto& a : atoms) {
    Rational s = a * Rational(scale);
    w.push_back(s.get_num());
  }
  Rational bs = b * Rational(scale);
  const Integer target = bs.get_num();

  std::vector<std::size_t> mult(atoms.size(), 0);
  std::function<void(std::size_t, const Integer&, std::size_t)> dfs =
      [&](std::size_t k, const Integer& rem, std::size_t used) {
        if (rem == 0) {
          Factorization f;
          for (std::size_t i = 0; i < atoms.size(); ++i) {
            for (std::size_t j = 0; j < mult[i]; ++j) f.parts.push_back(atoms[i]);
          }
          out.items.push_back(std::move(f));
          return;
        }
        if (k == atoms.size()) return;
        const std::size_t slots = length_cap - used;
        if (slots == 0) {
          out.cap_hit = true;
          return;
        }
        // Atoms are sorted decreasingly, so w[k] bounds every remaining part.
        if (rem > w[k] * static_cast<unsigned long>(slots)) {
          out.cap_hit = true;
          return;
        }
        Integer most = rem / w[k];
        std::size_t top = most.fits_ulong_p() ? std::min<std::size_t>(most.get_ui(), slots) : slots;
        for (std::size_t m = top + 1; m-- > 0;) {
          mult[k] = m;
          Integer next = rem - w[k] * static_cast<unsigned long>(m);
          dfs(k + 1, next, used + m);
        }
        mult[k] = 0;
      };
  dfs(0, target, 0);
  std::sort(out.items.begin(), out.items.end(), [](const auto& x, const auto& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return std::lexicographical_compare(x.parts.begin(), x.parts.end(), y.parts.begin(),
                                        y.parts.end(), std::greater<>());
  });
  return out;
}

LengthSet length_set(const MonoidSpec& spec, const Rational& b, std::size_t length_cap) {
  const auto fs = factorizations(spec, b, length_cap);
  LengthSet out;
  for (const auto& f : fs.items) out.lengths.insert(f.length());
  out.lower_bound = fs.cap_hit;
  if (!out.lengths.empty()) {
    const std::size_t lo = *out.lengths.begin();
    const std::size_t hi = *out.lengths.rbegin();
    out.elasticity = lo == 0 ? Rational(1)
                             : make_rational(static_cast<unsigned long>(hi),
                                             static_cast<unsigned long>(lo));
  }
  return out;
}

std::vector<AccpStep> accp_chain_check(const MonoidSpec& spec, std::size_t n_max) {
  if (spec.kind() != MonoidKind::Grams) {
    throw Error(ErrorCode::WrongMonoidKind, "the ACCP chain witness is defined for the Grams monoid");
  }
  if (n_max < 1) throw Error(ErrorCode::OutOfRange, "n_max must be >= 1");
  std::vector<AccpStep> steps;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Rational here = make_rational(1, pow_int(2, static_cast<unsigned>(n)));
    const Rational next = make_rational(1, pow_int(2, static_cast<unsigned>(n + 1)));
    AccpStep step{n, false, false, {}};
    step.certificate.combo[n + 1] = static_cast<unsigned long>(nth_odd_prime(n + 1));
    const Rational up = here - next;
    step.ascending = step.certificate.weighted_sum(spec) == up &&
                     membership(spec, up).is_member();
    const Rational down = next - here;
    step.strict = down < 0 || !membership(spec, down).is_member();
    steps.push_back(std::move(step));
  }
  return steps;
}

bool dyadic_divides(const Rational& q1, const Rational& q2) {
  for (const auto* q : {&q1, &q2}) {
    if (*q < 0) throw Error(ErrorCode::NegativeInput, "negative dyadic " + to_string(*q));
    if (!is_dyadic(*q)) throw Error(ErrorCode::NotDyadic, to_string(*q) + " is not dyadic");
  }
  return q1 <= q2;
}

}  // namespace ivkit::puiseux
