#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gl3/hecke.hpp"
#include "gl3/measures.hpp"

namespace gl3 {

using Rational = boost::multiprecision::cpp_rational;
using IndexPair = std::pair<int, int>;

/// Exact polynomial in e1, e2 with e3 = 1; key (a, b) is e1^a e2^b.
class EPoly {
 public:
  EPoly() = default;
  static EPoly constant(const Rational& c);
  static EPoly monomial(int a, int b, const Rational& c = 1);
  static EPoly e1() { return monomial(1, 0); }
  static EPoly e2() { return monomial(0, 1); }

  const std::map<IndexPair, Rational>& terms() const noexcept { return terms_; }
  Rational coeff(int a, int b) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(int a, int b, const Rational& c);
  EPoly& operator+=(const EPoly& rhs);
  EPoly& operator-=(const EPoly& rhs);
  EPoly& operator*=(const Rational& c);
  friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
  friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
  friend EPoly operator*(const EPoly& a, const EPoly& b);
  friend EPoly operator*(EPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const EPoly&, const EPoly&) = default;
  EPoly pow(int k) const;

  cplx eval(const SatakeTriple& x) const;
  std::string to_string() const;

 private:
  std::map<IndexPair, Rational> terms_;
};

/// Finitely supported combination of Schur polynomials S_{l1,l2}, where
/// S_{l1,l2} evaluates to A(p^l1, p^l2).
class WInvariantLaurent {
 public:
  WInvariantLaurent() = default;
  explicit WInvariantLaurent(std::map<IndexPair, Rational> coeffs);

  const std::map<IndexPair, Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(int l1, int l2) const;
  Rational l1_norm() const;

  cplx eval(const SatakeTriple& x) const;
  friend bool operator==(const WInvariantLaurent&, const WInvariantLaurent&) = default;
  std::string to_string() const;

 private:
  std::map<IndexPair, Rational> coeffs_;
};

/// Jacobi-Trudi with h_k = e1 h_{k-1} - e2 h_{k-2} + h_{k-3}. Requires l1 + l2 <= 24.
EPoly schur_to_epoly(int l1, int l2);

/// Graded leading-term elimination: highest degree a + 2b first, then the
/// smallest b, whose Schur polynomial leads with e1^a e2^b.
WInvariantLaurent expand_in_schur(const EPoly& f);

EPoly to_epoly(const WInvariantLaurent& f);

/// Schur expansion of ((S_{1,1} + 1)/9)^l, 0 <= l <= 12.
WInvariantLaurent bernstein_coeffs(int l);

/// sum_j w_j C(n,j) x^j (1-x)^{n-j} with n = w.size() - 1.
double bernstein_approx(std::span<const double> w_samples, double x);

/// Piecewise-cubic smoothstep plateau in the A(p,p) variable y = 9x - 1.
/// Outer: support [a - delta, b + delta], one on [a, b].
/// Inner: support [a, b], one on [a + delta, b - delta].
/// |dw/dy| <= 1.5 / delta.
class PlateauWeight {
 public:
  enum class Kind { Outer, Inner };
  PlateauWeight(double a, double b, double delta, Kind kind);

  double operator()(double x) const;  // x = normalized coefficient in [0, 1]
  double at_coefficient(double y) const;

 private:
  double lo0_, lo1_, hi1_, hi0_;
};

struct EmpiricalDistribution {
  std::vector<double> samples;  // A(p,p) = S_{1,1} values
  std::int64_t p = 0;
  std::uint64_t seed = 0;
};

/// S_{1,1} at a torus point, clamped to its range [-1, 8].
double adjoint_value(double theta1, double theta2);

EmpiricalDistribution sample_adjoint(std::int64_t p, std::size_t count, std::uint64_t seed);

struct StCompare {
  std::int64_t p = 0;
  double lo = 0, hi = 0;
  std::size_t samples = 0;
  double empirical = 0;
  double mass = 0;
  double mass_uncertainty = 0;
  double diff = 0;
};

StCompare effective_st_compare(std::int64_t p, std::size_t n_samples, double lo, double hi, std::uint64_t seed,
                               const QuadratureGrid& grid = QuadratureGrid(128));

/// Same comparison against an already drawn distribution.
StCompare effective_st_compare(const EmpiricalDistribution& dist, double lo, double hi,
                               const QuadratureGrid& grid = QuadratureGrid(128));

/// Error budget of the Bernstein argument for given (p, T): n from the
/// Lambert-W choice, delta = n^{-1/5}, and the three competing terms.
struct BernsteinBudget {
  std::int64_t n = 0;
  double delta = 0;
  double bernstein_term = 0;  // n^{-1/3} delta^{-2/3}
  double spectral_term = 0;   // (2p)^n / T^{1/3 - eta'}
  double delta_term = 0;      // delta
};

BernsteinBudget bernstein_budget(std::int64_t p, double T, int A = 4, double eta_prime = 0.01);

}  // namespace gl3
