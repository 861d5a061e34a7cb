#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gl3 {

/// Deterministic trial division.
bool is_prime(std::int64_t n);

std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// Smallest-prime-factor sieve on [0, n]; spf[0] = spf[1] = 0.
class FactorSieve {
 public:
  explicit FactorSieve(std::int64_t n);

  std::int64_t limit() const noexcept { return static_cast<std::int64_t>(spf_.size()) - 1; }
  std::int64_t smallest_factor(std::int64_t n) const { return spf_.at(static_cast<std::size_t>(n)); }

  /// (prime, exponent) pairs in increasing prime order.
  std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) const;

  int mobius(std::int64_t n) const;

 private:
  std::vector<std::int64_t> spf_;
};

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
int mobius(std::int64_t n);
int valuation(std::int64_t n, std::int64_t p);

std::vector<std::int64_t> divisors(std::int64_t n);

std::string int128_to_string(__int128 v);
std::string uint128_to_string(unsigned __int128 v);

}  // namespace gl3
