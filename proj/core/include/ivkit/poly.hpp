#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ivkit/rational.hpp"

namespace ivkit {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The coefficient vector never has trailing zeros; the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(std::initializer_list<Rational> coeffs);

  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, unsigned degree);
  /// x - root
  static QPoly linear_root(const Rational& root);
  /// x(x-1)...(x-n+1)/n!
  static QPoly binomial(unsigned n);
  static QPoly from_integers(std::span<const Integer> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool has_integer_coeffs() const;

  Rational operator()(const Rational& x) const;
  Rational operator()(const Integer& x) const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }

  friend bool operator==(const QPoly&, const QPoly&) = default;
  /// Total order: by degree, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const QPoly& a, const QPoly& b);

  QPoly derivative() const;
  QPoly monic() const;

  /// lcm of coefficient denominators (1 for the zero polynomial).
  Integer denominator_lcm() const;

  /// Stable textual key; "0" for the zero polynomial.
  std::string key() const;
  /// Human-readable form such as "1/2*x^2 - 1/2*x".
  std::string pretty() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder over Q; divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);
QPoly pow(const QPoly& base, unsigned exp);

/// f = content * primitive with primitive in Z[x] and positive leading coefficient.
struct ContentSplit {
  Rational content;
  std::vector<Integer> primitive;
};
ContentSplit content_split(const QPoly& f);

}  // namespace ivkit
