#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ivkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "a", "a/b", optional sign (ASCII '-' or U+2212), surrounding spaces.
Rational parse_rational(std::string_view text);

/// Always "a/b" with b >= 1, e.g. "3/1", "-1/2".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer factorial(unsigned n);
Integer pow_int(const Integer& base, unsigned exp);
Rational pow(const Rational& base, unsigned exp);

/// Multiplicative inverse of a modulo m (m > 1, gcd(a, m) = 1).
Integer inverse_mod(const Integer& a, const Integer& m);

/// Prime factorization of |n| (n != 0) as (prime, exponent), increasing primes.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// All positive divisors of |n| (n != 0), increasing.
std::vector<Integer> positive_divisors(const Integer& n);

/// 2-adic exponent of a nonzero integer.
unsigned two_adic_valuation(const Integer& n);

/// True iff q has a denominator that is a power of two.
bool is_dyadic(const Rational& q);

}  // namespace ivkit
