#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "ivkit/rational.hpp"

namespace ivkit {

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// n-th prime, zero-based: 2, 3, 5, 7, ...
std::uint64_t nth_prime(std::size_t n);

/// n-th odd prime, zero-based: 3, 5, 7, 11, ...
std::uint64_t nth_odd_prime(std::size_t n);

/// Zero-based position of an odd prime among the odd primes.
std::optional<std::size_t> odd_prime_index(const Integer& p);

/// Zero-based position of a prime among all primes.
std::optional<std::size_t> prime_index(const Integer& p);

}  // namespace ivkit
