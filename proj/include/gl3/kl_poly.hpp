#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "gl3/measures.hpp"
#include "gl3/qpoly.hpp"

namespace gl3 {

/// Integral weight of SL3 as a vector of Z^3 modulo (1,1,1), stored with
/// minimum coordinate zero so that equal weights compare equal.
class Weight {
 public:
  Weight() = default;
  Weight(int a, int b, int c);
  explicit Weight(const std::array<int, 3>& c) : Weight(c[0], c[1], c[2]) {}

  const std::array<int, 3>& coords() const noexcept { return c_; }
  bool in_root_lattice() const noexcept { return (c_[0] + c_[1] + c_[2]) % 3 == 0; }
  /// Representative with coordinate sum zero; empty off the root lattice.
  std::optional<std::array<int, 3>> sum_zero() const;
  bool dominant() const noexcept { return c_[0] >= c_[1] && c_[1] >= c_[2]; }

  Weight permuted(const WeylElement& w) const { return Weight(w.apply(c_)); }

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(int k, const Weight& a);
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::array<int, 3> c_{0, 0, 0};
};

namespace weights {
inline Weight lambda1() { return {1, 0, 0}; }
inline Weight lambda2() { return {1, 1, 0}; }
inline Weight rho() { return {2, 1, 0}; }
inline std::array<Weight, 3> positive_roots() { return {Weight{1, -1, 0}, Weight{0, 1, -1}, Weight{1, 0, -1}}; }
}  // namespace weights

/// l1 * lambda1 + l2 * lambda2, argument order (l2, l1).
Weight aleph(int l2, int l1);

/// Generating polynomial of decompositions of beta into positive roots,
/// graded by the number of roots used.
QPolynomial kostant_partition(const Weight& beta);

/// sum over W of (-1)^length(w) P_q(w(lambda + rho) - (beta + rho)).
QPolynomial lusztig_q_analog(const Weight& lambda, const Weight& beta);

struct KatoResult {
  double lhs = 0;
  double rhs = 0;
  double diff = 0;
};

/// Compares the q-analog of the zero-weight multiplicity of aleph(l2, l1)
/// at q = 1/p with the Plancherel integral of the matching Schur polynomial.
/// Quadrature starts at grid.resolution() and doubles up to K = 1024.
KatoResult kato_check(int l1, int l2, std::int64_t p, const QuadratureGrid& grid = QuadratureGrid(64));

}  // namespace gl3
