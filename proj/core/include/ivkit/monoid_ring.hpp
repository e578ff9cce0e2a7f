#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ivkit/puiseux.hpp"
#include "ivkit/rational.hpp"

namespace ivkit::ring {

enum class RingKind { Integers, Rationals, PrimeField };

class CoefficientRing {
 public:
  static CoefficientRing integers() { return CoefficientRing(RingKind::Integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(RingKind::Rationals, 0); }
  /// p must be a prime below 2^31.
  static CoefficientRing prime_field(std::uint64_t p);

  RingKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  /// "Z", "Q" or "F_p".
  std::string tag() const;
  static CoefficientRing from_tag(const std::string& tag);

  /// Image of q in the ring; throws RingMismatch if q has no image.
  Rational reduce(const Rational& q) const;
  bool is_unit(const Rational& c) const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  CoefficientRing(RingKind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  RingKind kind_;
  std::uint64_t p_;
};

struct Term {
  Rational coeff;
  Rational exponent;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of R[y; M] for an additive monoid M of nonnegative rationals,
/// kept canonical: exponents strictly decreasing, no zero coefficients.
class Element {
 public:
  /// Merges equal exponents, drops zeros, sorts by decreasing exponent.
  static Element canonicalize(const CoefficientRing& ring, std::vector<Term> raw);
  static Element zero(const CoefficientRing& ring) { return Element(ring); }
  static Element one(const CoefficientRing& ring);
  static Element monomial(const CoefficientRing& ring, const Rational& coeff,
                          const Rational& exponent);

  const CoefficientRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const Element&, const Element&) = default;

  std::string pretty() const;

 private:
  explicit Element(CoefficientRing ring) : ring_(ring) {}
  CoefficientRing ring_;
  std::vector<Term> terms_;
};

Element add(const Element& a, const Element& b);
Element negate(const Element& a);
Element mul(const Element& a, const Element& b);
Element pow(const Element& a, unsigned n);

/// With a reduced exponent monoid the units are exactly u*y^0 with u a ring unit.
/// With monoid_reduced = false every exponent is treated as invertible.
bool is_unit(const Element& a, bool monoid_reduced = true);

/// min over the terms of the dyadic part nu(exponent) in the Grams decomposition.
Rational nu_bar(const Element& f);

/// g with g^p = f over F_p, taking coefficients fixed (Frobenius on F_p) and exponents m/p.
/// nullopt when the exponent monoid is not closed under division by p.
std::optional<Element> pth_root(const Element& f, bool cone_closed);

/// Whether y^c divides f monomially: exponent - c is in the monoid for every term.
bool monomial_divides(const Rational& c, const Element& f, const puiseux::MonoidSpec& spec);

}  // namespace ivkit::ring
