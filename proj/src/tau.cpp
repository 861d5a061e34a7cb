#include <cmath>
#include <stdexcept>

#include "gl3/errors.hpp"
#include "gl3/hecke.hpp"

namespace gl3 {

namespace {

using Int = __int128;

struct SparseTerm {
  std::size_t power;
  Int coeff;
};

// prod_{n>=1} (1 - q^n) mod q^len, Euler's pentagonal expansion.
std::vector<SparseTerm> euler_product(std::size_t len) {
  std::vector<SparseTerm> terms{{0, 1}};
  for (long long k = 1;; ++k) {
    const auto g1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
    if (g1 >= len) break;
    const Int sign = (k % 2 == 0) ? 1 : -1;
    terms.push_back({g1, sign});
    const auto g2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
    if (g2 < len) terms.push_back({g2, sign});
  }
  return terms;
}

std::vector<Int> times_sparse(const std::vector<Int>& dense, const std::vector<SparseTerm>& sparse) {
  const std::size_t len = dense.size();
  std::vector<Int> out(len, 0);
  for (const auto& t : sparse) {
    for (std::size_t i = 0; i + t.power < len; ++i) {
      Int prod;
      if (__builtin_mul_overflow(dense[i], t.coeff, &prod) ||
          __builtin_add_overflow(out[i + t.power], prod, &out[i + t.power])) {
        throw OverflowError("ramanujan_tau: 128-bit overflow in eta power series");
      }
    }
  }
  return out;
}

std::vector<SparseTerm> sparsify(const std::vector<Int>& dense) {
  std::vector<SparseTerm> out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) out.push_back({i, dense[i]});
  }
  return out;
}

}  // namespace

TauSeries ramanujan_tau(std::int64_t N) {
  if (N < 1 || N > 1'000'000) throw std::invalid_argument("ramanujan_tau: N must lie in [1, 1e6]");
  const auto len = static_cast<std::size_t>(N);

  // E = prod (1 - q^n) and E^3 (Jacobi's identity) are sparse.
  const auto e1 = euler_product(len);
  std::vector<Int> power(len, 0);
  power[0] = 1;
  power = times_sparse(power, e1);
  power = times_sparse(power, e1);
  power = times_sparse(power, e1);
  const auto e3 = sparsify(power);
  for (int k = 3; k < 24; k += 3) power = times_sparse(power, e3);

  TauSeries out;
  out.tau = std::move(power);  // Delta = q E^24, so tau(n) is the q^{n-1} coefficient.
  out.normalized.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    const long double n = static_cast<long double>(i + 1);
    out.normalized[i] = static_cast<double>(static_cast<long double>(out.tau[i]) / std::pow(n, 5.5L));
  }
  return out;
}

}  // namespace gl3
