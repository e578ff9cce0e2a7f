#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "ivkit/poly.hpp"
#include "ivkit/rational.hpp"

namespace ivkit::intpoly {

/// Where a polynomial must take integer values: all of Z, or a finite set S.
class Site {
 public:
  static Site integers() { return Site(); }
  /// Rejects empty sets and repeated points; keeps the given order.
  static Site finite(std::vector<std::int64_t> points);

  bool is_all_integers() const { return all_integers_; }
  const std::vector<std::int64_t>& points() const { return points_; }

  friend bool operator==(const Site&, const Site&) = default;

 private:
  Site() = default;
  bool all_integers_ = true;
  std::vector<std::int64_t> points_;
};

/// A polynomial of Q[x] read as an element of Int(S, Z).
class IVPoly {
 public:
  IVPoly() = default;
  explicit IVPoly(QPoly poly, Site site = Site::integers())
      : poly_(std::move(poly)), site_(std::move(site)) {}

  const QPoly& poly() const { return poly_; }
  const Site& site() const { return site_; }
  int degree() const { return poly_.degree(); }
  bool is_zero() const { return poly_.is_zero(); }

  /// Associate with positive leading coefficient (units are +-1).
  IVPoly normalized() const;

  friend bool operator==(const IVPoly&, const IVPoly&) = default;

 private:
  QPoly poly_;
  Site site_ = Site::integers();
};

/// Delta^j f(0) for j = 0..deg f.
struct BinomialExpansion {
  std::vector<Rational> deltas;
  friend bool operator==(const BinomialExpansion&, const BinomialExpansion&) = default;
};

BinomialExpansion to_binomial_basis(const QPoly& f);
QPoly from_binomial_basis(const BinomialExpansion& e);

/// On Z: every Delta^j f(0) is an integer. On a finite S: f(s) is an integer for each s.
bool is_member(const IVPoly& f);

/// gcd of f(0), ..., f(deg f); f must be a nonzero integer polynomial.
Integer fixed_divisor(const QPoly& f);

struct PullingSequence {
  std::vector<std::int64_t> points;
  /// values[n] = prod_{0 <= i < j <= n} (s_j - s_i)
  std::vector<Integer> values;
};

PullingSequence pulling_sequence(std::span<const std::int64_t> points);

/// f / g when g divides f in Q[x] with quotient in Int(S, Z).
std::optional<IVPoly> divide(const IVPoly& f, const IVPoly& g);

struct DivisorOptions {
  /// Multiplies the denominator and numerator search ranges of the enumeration.
  unsigned bound_scale = 1;
};

/// All divisors of f in Int(Z) up to sign, normalized, sorted by degree then coefficients.
std::vector<IVPoly> divisors(const IVPoly& f, DivisorOptions options = {});

bool is_irreducible(const IVPoly& f);

struct Factorization {
  std::vector<IVPoly> parts;  // normalized irreducibles, sorted
  std::size_t length() const { return parts.size(); }
};

/// The complete set of factorizations of f in Int(Z), as multisets of normalized irreducibles.
std::vector<Factorization> factorizations(const IVPoly& f, DivisorOptions options = {});

struct LengthProfile {
  std::set<std::size_t> lengths;
  Rational elasticity;
  bool hfd_violation = false;
};

LengthProfile length_profile(const IVPoly& f);

/// Some irreducible of Int(S, Z) dividing f. Prefers the smallest prime constant,
/// then the lowest-degree irreducible in divisor order.
IVPoly find_irreducible_divisor(const IVPoly& f);

/// Evidence that f has no factorization into irreducibles of Int(S, Z), S finite.
struct NonatomicWitness {
  std::vector<std::int64_t> vanishing_points;  // equals S
  IVPoly blocking_factor;   // an irreducible factor over Q vanishing on all of S
  Integer split_constant;   // f = split_constant * split_cofactor
  IVPoly split_cofactor;
  bool cofactor_member = false;
};

NonatomicWitness vanishing_nonatomic_witness(const IVPoly& f);

}  // namespace ivkit::intpoly
