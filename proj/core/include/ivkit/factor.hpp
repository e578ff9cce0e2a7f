#pragma once

#include <vector>

#include "ivkit/poly.hpp"
#include "ivkit/rational.hpp"

namespace ivkit {

using ZPoly = std::vector<Integer>;

struct IrreducibleFactor {
  ZPoly poly;  // primitive, positive leading coefficient, degree >= 1
  unsigned multiplicity = 1;
};

/// f = content * prod(poly^multiplicity). Factors sorted by (degree, coefficients).
struct QFactorization {
  Rational content;
  std::vector<IrreducibleFactor> factors;

  unsigned total_count() const;
};

/// Complete factorization over Q of a nonzero polynomial into primitive
/// irreducible integer polynomials (square-free reduction, factoring modulo
/// a small prime, Hensel lifting, and factor recombination).
QFactorization factor_over_q(const QPoly& f);

/// Irreducible factors of a square-free primitive integer polynomial.
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

/// Exact division in Z[x]; the quotient is written only on success.
bool zpoly_divides(const ZPoly& divisor, const ZPoly& dividend, ZPoly* quotient = nullptr);

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);

}  // namespace ivkit
