#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the routines it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "ivkit/poly.hpp"
#include "ivkit/rational.hpp"

namespace oracle {

using ivkit::Integer;
using ivkit::QPoly;
using ivkit::Rational;

/// f(x) integral at x = start .. start + deg f.
bool integer_valued_by_sampling(const QPoly& f, long start = 0);

/// gcd of |f(n)| over n = 0..deg f, computed by direct evaluation.
Integer value_gcd(const QPoly& f);

/// Primitive Z[x] divisors (positive leading coefficient) of an integer polynomial,
/// via Kronecker interpolation over divisors of values.
std::vector<std::vector<Integer>> kronecker_divisors(const std::vector<Integer>& f);

/// Every divisor of f in Int(Z) (f an integer polynomial), normalized to positive
/// leading coefficient, by brute force over constants a/b with b <= fd(prim f) and
/// a <= |content f| * fd(prim f). Sorted by degree, then coefficients from the top.
std::vector<QPoly> int_divisors_brute(const std::vector<Integer>& f);

/// The fixed corpus of integer polynomials, degree <= 4, coefficients in [-6, 6].
std::vector<std::vector<Integer>> divisor_corpus();

/// Lagrange interpolant through (pts[i], vals[i]).
QPoly lagrange(const std::vector<std::int64_t>& pts, const std::vector<Integer>& vals);

/// Factorizations of b as multisets of the given atoms (all positive), each sorted
/// decreasingly, by exhaustive recursion on rationals.
std::vector<std::vector<Rational>> monoid_factorizations(const std::vector<Rational>& atoms, const Rational& b);

/// Whether q is a nonnegative integer combination of gens, by exhaustive recursion.
bool monoid_member(const std::vector<Rational>& gens, const Rational& q);

/// Atoms among the generators: nonzero, not a sum of two nonzero members.
std::vector<Rational> monoid_atoms(const std::vector<Rational>& gens);

Rational random_rational(std::mt19937_64& rng, int num_lo, int num_hi, int den_hi);
QPoly random_poly(std::mt19937_64& rng, int max_deg, int num_lo = -30, int num_hi = 30, int den_hi = 12);

}  // namespace oracle
