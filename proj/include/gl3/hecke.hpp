#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace gl3 {

using cplx = std::complex<double>;

/// Local data (alpha1, alpha2, alpha3) at a prime, product one.
class SatakeTriple {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Validates |a1 a2 a3 - 1| and sets `tempered` from the moduli.
  SatakeTriple(cplx a1, cplx a2, cplx a3);

  /// (e^{i t1}, e^{i t2}, e^{-i(t1+t2)}), always tempered.
  static SatakeTriple from_angles(double theta1, double theta2);

  const std::array<cplx, 3>& alpha() const noexcept { return alpha_; }
  cplx operator[](std::size_t i) const { return alpha_.at(i); }
  bool tempered() const noexcept { return tempered_; }

  cplx e1() const noexcept { return alpha_[0] + alpha_[1] + alpha_[2]; }
  cplx e2() const noexcept { return alpha_[0] * alpha_[1] + alpha_[1] * alpha_[2] + alpha_[2] * alpha_[0]; }

 private:
  std::array<cplx, 3> alpha_;
  bool tempered_;
};

/// Exponents of A(p^beta1, p^beta2); partition (beta1 + beta2, beta2, 0).
struct ExponentPair {
  int beta1 = 0;
  int beta2 = 0;

  ExponentPair() = default;
  ExponentPair(int b1, int b2);
};

class PrimeLocalData {
 public:
  PrimeLocalData(std::int64_t p, SatakeTriple satake);

  std::int64_t p() const noexcept { return p_; }
  const SatakeTriple& satake() const noexcept { return satake_; }

 private:
  std::int64_t p_;
  SatakeTriple satake_;
};

/// Complete homogeneous polynomials h_0..h_n of a triple with e3 = 1.
std::vector<cplx> complete_homogeneous(cplx e1, cplx e2, int n);

/// Schur polynomial of partition (beta1+beta2, beta2, 0) via Jacobi-Trudi.
/// Stable at coincident arguments.
cplx schur_eval(ExponentPair pair, const SatakeTriple& x);

using LocalCoefficients = std::map<std::pair<int, int>, cplx>;

/// A(p^a, p^b) for 0 <= a, b <= max_exp.
LocalCoefficients coeff_from_satake(const PrimeLocalData& local, int max_exp);

/// Dense table of A(m, n), 1 <= m <= bound_m, 1 <= n <= bound_n, built from
/// local data by multiplicativity. Immutable once constructed.
class CoefficientTable {
 public:
  CoefficientTable(std::int64_t bound_m, std::int64_t bound_n, std::vector<cplx> entries,
                   std::vector<PrimeLocalData> locals);

  std::int64_t bound_m() const noexcept { return bound_m_; }
  std::int64_t bound_n() const noexcept { return bound_n_; }
  bool contains(std::int64_t m, std::int64_t n) const noexcept {
    return m >= 1 && n >= 1 && m <= bound_m_ && n <= bound_n_;
  }

  /// Throws OutOfBoundsError.
  cplx at(std::int64_t m, std::int64_t n) const;
  cplx operator()(std::int64_t m, std::int64_t n) const { return at(m, n); }

  const std::vector<PrimeLocalData>& locals() const noexcept { return locals_; }
  const PrimeLocalData& local(std::int64_t p) const;

 private:
  std::int64_t bound_m_, bound_n_;
  std::vector<cplx> entries_;
  std::vector<PrimeLocalData> locals_;
};

/// Throws MissingPrimeError when a prime <= max(bound_m, bound_n) is uncovered.
CoefficientTable extend_multiplicative(std::span<const PrimeLocalData> locals, std::int64_t bound_m,
                                       std::int64_t bound_n);

/// |A(m,1)A(m1,m2) - sum over c1c2c3 = m, c1|m1, c2|m2 of A(m1 c3/c1, m2 c1/c2)|.
double hecke_residual(const CoefficientTable& table, std::int64_t m, std::int64_t m1, std::int64_t m2);

/// sum over d | (m1,m2) of mu(d) A(m1/d, 1) A(1, m2/d).
cplx mobius_expand(const CoefficientTable& table, std::int64_t m1, std::int64_t m2);

struct GL2FormData {
  std::vector<std::pair<std::int64_t, double>> pairs;  // (p, lambda_g(p))
  bool ramanujan = true;

  static GL2FormData from_pairs(std::vector<std::pair<std::int64_t, double>> pairs);
};

/// Satake (beta^2, 1, beta^-2) with lambda = beta + 1/beta, |beta| = 1.
/// Throws NonTemperedError listing every prime with |lambda| > 2.
std::vector<PrimeLocalData> sym2_lift(const GL2FormData& g);

struct TauSeries {
  std::vector<__int128> tau;        // tau[n-1] = tau(n)
  std::vector<double> normalized;   // tau(n) / n^{11/2}

  __int128 operator()(std::int64_t n) const { return tau.at(static_cast<std::size_t>(n - 1)); }
};

/// Exact tau(1..N) from the 24th power of the eta series. Throws OverflowError.
TauSeries ramanujan_tau(std::int64_t N);

/// GL(2) data lambda(p) = tau(p)/p^{11/2} for every prime p <= bound.
GL2FormData delta_gl2_data(const TauSeries& tau, std::int64_t bound);

/// Coefficient table of the symmetric-square lift of Delta with bound_n = 1.
CoefficientTable sym2_delta_table(std::int64_t bound_m);

}  // namespace gl3
