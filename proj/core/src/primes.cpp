#include "ivkit/primes.hpp"

#include <mutex>
#include <vector>

namespace ivkit {

bool is_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

// Grows on demand; guarded because callers may run in parallel.
class PrimeTable {
 public:
  std::uint64_t at(std::size_t n) {
    std::lock_guard lock(mutex_);
    std::uint64_t candidate = primes_.empty() ? 1 : primes_.back();
    while (primes_.size() <= n) {
      ++candidate;
      if (is_prime(candidate)) primes_.push_back(candidate);
    }
    return primes_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<std::uint64_t> primes_;
};

PrimeTable& table() {
  static PrimeTable t;
  return t;
}

}  // namespace

std::uint64_t nth_prime(std::size_t n) { return table().at(n); }

std::uint64_t nth_odd_prime(std::size_t n) { return table().at(n + 1); }

std::optional<std::size_t> prime_index(const Integer& p) {
  if (!p.fits_ulong_p() || !is_prime(p)) return std::nullopt;
  const std::uint64_t target = p.get_ui();
  for (std::size_t i = 0;; ++i) {
    const std::uint64_t q = nth_prime(i);
    if (q == target) return i;
    if (q > target) return std::nullopt;
  }
}

std::optional<std::size_t> odd_prime_index(const Integer& p) {
  if (p == 2) return std::nullopt;
  auto idx = prime_index(p);
  if (!idx) return std::nullopt;
  return *idx - 1;
}

}  // namespace ivkit
