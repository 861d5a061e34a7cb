#include "gl3/arith.hpp"

#include <algorithm>
#include <stdexcept>

#include "gl3/errors.hpp"

namespace gl3 {

NonTemperedError::NonTemperedError(std::vector<std::int64_t> primes)
    : Error([&] {
        std::string msg = "non-tempered input at primes:";
        for (auto p : primes) msg += " " + std::to_string(p);
        return msg;
      }()),
      primes_(std::move(primes)) {}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

FactorSieve::FactorSieve(std::int64_t n) : spf_(static_cast<std::size_t>(std::max<std::int64_t>(n, 1)) + 1, 0) {
  const auto lim = limit();
  for (std::int64_t i = 2; i <= lim; ++i) {
    if (spf_[i] != 0) continue;
    for (std::int64_t j = i; j <= lim; j += i) {
      if (spf_[j] == 0) spf_[j] = i;
    }
  }
}

std::vector<std::pair<std::int64_t, int>> FactorSieve::factorize(std::int64_t n) const {
  if (n < 1 || n > limit()) throw std::out_of_range("FactorSieve: argument outside sieve range");
  std::vector<std::pair<std::int64_t, int>> out;
  while (n > 1) {
    const auto p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

int FactorSieve::mobius(std::int64_t n) const {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int mobius(std::int64_t n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

int valuation(std::int64_t n, std::int64_t p) {
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::string uint128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string int128_to_string(__int128 v) {
  if (v < 0) return "-" + uint128_to_string(static_cast<unsigned __int128>(-(v + 1)) + 1);
  return uint128_to_string(static_cast<unsigned __int128>(v));
}

}  // namespace gl3
