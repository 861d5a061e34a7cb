#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "gl3/hecke.hpp"

namespace gl3 {

/// Dirichlet-polynomial index; D reaches (2M)^6.
using DirichletIndex = unsigned __int128;

/// F(s) = sum a_n n^{-s} over a finite support.
class DirichletPolynomial {
 public:
  DirichletPolynomial() = default;
  explicit DirichletPolynomial(std::string range) : range_(std::move(range)) {}

  void add_term(DirichletIndex n, cplx a);
  const std::map<DirichletIndex, cplx>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  cplx coeff(DirichletIndex n) const;
  DirichletIndex min_index() const;
  DirichletIndex max_index() const;

  const std::string& range() const noexcept { return range_; }
  void set_range(std::string r) { range_ = std::move(r); }

  /// sum |a_n|^2 / n.
  double weighted_l2() const;

  /// Dirichlet convolution; throws OverflowError if an index product overflows.
  friend DirichletPolynomial operator*(const DirichletPolynomial& a, const DirichletPolynomial& b);

 private:
  std::map<DirichletIndex, cplx> terms_;
  std::string range_;
};

/// Exact finite sum with n^{-s} = exp(-s log n).
cplx dirichlet_eval(const DirichletPolynomial& poly, cplx s);

struct MKD {
  DirichletPolynomial M, K, D;
};

/// M(s) over M <= m <= 2M, K(s) over X/3M <= k <= 3X/M, and D(s) over
/// squarefree d <= 2M with the squared local factors expanded.
MKD build_MKD(const CoefficientTable& table, std::int64_t X, std::int64_t M);

/// D(s) summed in its product form, without expanding into a polynomial.
cplx evaluate_D_product(const CoefficientTable& table, std::int64_t M, cplx s);

struct EulerCheck {
  cplx series;                  // sum_{j<=J} A(p^j,1) p^{-js}
  cplx closed;                  // (1 - A(p,1)X + A(1,p)X^2 - X^3)^{-1}, X = p^{-s}
  double ratio_identity_residual = 0;
  double tail_bound = 0;
  bool tail_warning = false;
};

EulerCheck euler_factor_check(const PrimeLocalData& local, cplx s, int J);

struct MvtResult {
  double lhs = 0;  // integral of |F(1/2+it)|^2 over [-T, T]
  double rhs = 0;  // (N + T) sum |a_n|^2 / n
  double ratio = 0;
  bool convergence_warning = false;
};

/// Composite Simpson with step <= min(0.01, 1/(10 log N)). The support must
/// lie in [N, 2N].
MvtResult mvt_ratio(const DirichletPolynomial& poly, std::int64_t N, double T);

}  // namespace gl3
