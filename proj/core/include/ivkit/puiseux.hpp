#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ivkit/rational.hpp"

namespace ivkit::puiseux {

enum class MonoidKind {
  Grams,            // generators 1/(2^n p_n), p_n the n-th odd prime
  PrimeReciprocal,  // generators 1/p over all primes p
  Explicit,         // a finite list of positive rationals
  DyadicValuation,  // generators 1/2^n
};

/// A rule producing the generators of an additive submonoid of Q_{>=0}.
/// The truncation bounds the generator index used by search-based operations.
class MonoidSpec {
 public:
  static constexpr std::size_t kDefaultTruncation = 24;

  static MonoidSpec grams(std::size_t truncation = kDefaultTruncation);
  static MonoidSpec prime_reciprocal(std::size_t truncation = kDefaultTruncation);
  static MonoidSpec dyadic(std::size_t truncation = kDefaultTruncation);
  /// Generators must be positive and pairwise distinct. Truncation defaults to all of them.
  static MonoidSpec explicit_generators(std::vector<Rational> generators,
                                        std::optional<std::size_t> truncation = std::nullopt);

  MonoidKind kind() const { return kind_; }
  std::size_t truncation() const { return truncation_; }
  bool is_finitely_generated() const { return kind_ == MonoidKind::Explicit; }

  /// Generator with the given index (any index for the infinite families).
  Rational generator(std::size_t index) const;
  /// Generators with index below the truncation.
  std::vector<Rational> truncated_generators() const;
  const std::vector<Rational>& explicit_list() const { return explicit_; }

 private:
  MonoidSpec(MonoidKind kind, std::size_t truncation, std::vector<Rational> gens = {});

  MonoidKind kind_;
  std::size_t truncation_;
  std::vector<Rational> explicit_;
};

/// generator index -> multiplicity
struct MembershipCertificate {
  std::map<std::size_t, Integer> combo;

  Rational weighted_sum(const MonoidSpec& spec) const;
};

struct Membership {
  std::optional<MembershipCertificate> certificate;
  /// False when absence only means "not found within the truncation".
  bool exact = true;

  bool is_member() const { return certificate.has_value(); }
};

Membership membership(const MonoidSpec& spec, const Rational& q);

/// q = nu + sum c_i / (2^i p_i) with nu a nonnegative dyadic and 0 <= c_i < p_i.
struct GramsDecomposition {
  Rational nu;
  std::map<std::size_t, Integer> coeffs;

  Rational value() const;
};

/// Unique decomposition of a member of the Grams monoid; nullopt for non-members.
std::optional<GramsDecomposition> grams_decompose(const Rational& q);

bool is_atom(const MonoidSpec& spec, const Rational& q);

/// Atoms with reduced denominator <= denom_bound, by increasing denominator then value.
std::vector<Rational> atoms_up_to(const MonoidSpec& spec, const Integer& denom_bound);

struct Factorization {
  std::vector<Rational> parts;  // atoms, sorted decreasingly

  std::size_t length() const { return parts.size(); }
  Rational sum() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct FactorizationSet {
  std::vector<Factorization> items;
  /// Some branch was cut by the length cap, so longer factorizations may exist.
  bool cap_hit = false;
};

FactorizationSet factorizations(const MonoidSpec& spec, const Rational& b, std::size_t length_cap);

struct LengthSet {
  std::set<std::size_t> lengths;
  /// max/min over the discovered lengths; absent when no factorization was found.
  std::optional<Rational> elasticity;
  bool lower_bound = false;
};

LengthSet length_set(const MonoidSpec& spec, const Rational& b, std::size_t length_cap);

struct AccpStep {
  std::size_t n;
  bool ascending;  // 1/2^n - 1/2^(n+1) lies in M
  bool strict;     // 1/2^(n+1) - 1/2^n does not
  MembershipCertificate certificate;  // p_{n+1} copies of generator n+1
};

/// Checks the chain of principal ideals (1/2^n + M) for n = 0..n_max in the Grams monoid.
std::vector<AccpStep> accp_chain_check(const MonoidSpec& spec, std::size_t n_max);

/// Divisibility in the valuation monoid of nonnegative dyadic rationals.
bool dyadic_divides(const Rational& q1, const Rational& q2);

}  // namespace ivkit::puiseux
