#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "gl3/hecke.hpp"
#include "gl3/qpoly.hpp"

namespace gl3 {

/// Point of the maximal torus; theta3 = -theta1 - theta2 (mod 2 pi).
class TorusPoint {
 public:
  TorusPoint(double theta1, double theta2);

  double theta1() const noexcept { return theta1_; }
  double theta2() const noexcept { return theta2_; }
  double theta3() const noexcept;

  SatakeTriple satake() const { return SatakeTriple::from_angles(theta1_, theta2_); }

 private:
  double theta1_, theta2_;
};

struct MeasureSpec {
  enum class Kind { SatoTate, Plancherel };

  Kind kind = Kind::SatoTate;
  std::int64_t p = 0;  // set iff kind == Plancherel

  static MeasureSpec sato_tate() { return {}; }
  static MeasureSpec plancherel(std::int64_t p);
};

/// Periodic trapezoid rule on [0, 2 pi)^2 with K nodes per axis.
class QuadratureGrid {
 public:
  explicit QuadratureGrid(int resolution = 64);

  int resolution() const noexcept { return k_; }
  double step() const noexcept;
  double node(int j) const noexcept { return step() * j; }
  double weight() const noexcept { return step() * step(); }

 private:
  int k_;
};

/// Density with respect to d(theta1) d(theta2) on [0, 2 pi)^2, constants
/// cached for repeated evaluation.
class DensityEvaluator {
 public:
  explicit DensityEvaluator(const MeasureSpec& spec);

  double operator()(double theta1, double theta2) const noexcept;
  /// Strict upper bound of the density over the torus (rejection envelope).
  double bound() const noexcept { return bound_; }
  const MeasureSpec& spec() const noexcept { return spec_; }

 private:
  MeasureSpec spec_;
  double scale_;
  double q_;
  double bound_;
};

double density(const MeasureSpec& spec, const TorusPoint& pt);

using TorusFunction = std::function<cplx(const TorusPoint&)>;

cplx integrate(const MeasureSpec& spec, const TorusFunction& f, const QuadratureGrid& grid);

/// Doubles K from `start` until two successive values agree within `tol`.
/// Throws ConvergenceError past K = max_resolution.
cplx integrate_to_tolerance(const MeasureSpec& spec, const TorusFunction& f, double tol, int start = 64,
                            int max_resolution = 1024);

/// Rejection sampling against the uniform envelope. Output is split into
/// fixed-size chunks seeded by derive_seed(seed, chunk); `workers` only
/// changes scheduling, never the result.
std::vector<TorusPoint> sample(const MeasureSpec& spec, std::size_t count, std::uint64_t seed, unsigned workers = 1);

inline constexpr std::size_t kSampleChunk = 4096;

struct LevelSetMass {
  double mass = 0.0;
  double uncertainty = 0.0;
};

/// mu{ lo <= g <= hi } with two levels of 4x4 refinement on cells where the
/// indicator is not constant at the corners and centre. Cells still mixed
/// after refinement contribute their full mass to `uncertainty`.
LevelSetMass level_set_mass(const MeasureSpec& spec, const std::function<double(double, double)>& g, double lo,
                            double hi, const QuadratureGrid& grid);

/// Spectral parameter (nu1, nu2), nu3 = -nu1 - nu2.
struct SpectralPoint {
  cplx nu1, nu2;

  cplx nu3() const noexcept { return -nu1 - nu2; }
  std::array<cplx, 3> nus() const noexcept { return {nu1, nu2, nu3()}; }
  /// (2nu1 + nu2, nu2 - nu1, -nu1 - 2nu2).
  std::array<cplx, 3> langlands() const noexcept { return {2.0 * nu1 + nu2, nu2 - nu1, -nu1 - 2.0 * nu2}; }
  static SpectralPoint from_langlands(const std::array<cplx, 3>& alpha);
  double norm() const noexcept;
};

struct WeightParams {
  double T;
  SpectralPoint nu0;
  double eta = 0.05;
  int A = 4;

  WeightParams(double T, SpectralPoint nu0, double eta = 0.05, int A = 4);
};

/// exp(3 (nu1^2 + nu2^2 + nu3^2)).
cplx psi(const SpectralPoint& nu);
/// prod_{0<=n<=A} prod_j (nu_j^2 - (1+2n)^2/9) / T^2.
cplx weight_polynomial(const SpectralPoint& nu, double T, int A);
double h_T_eval(const SpectralPoint& nu, const WeightParams& params);

/// (3 / (256 pi^5)) prod_j 3 nu_j tan(3 pi nu_j / 2). Throws PoleError.
cplx spec_density(const SpectralPoint& nu);

}  // namespace gl3
