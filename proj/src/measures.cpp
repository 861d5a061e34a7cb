#include "gl3/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "gl3/arith.hpp"
#include "gl3/errors.hpp"
#include "gl3/random.hpp"

namespace gl3 {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

}  // namespace

TorusPoint::TorusPoint(double theta1, double theta2) : theta1_(reduce_angle(theta1)), theta2_(reduce_angle(theta2)) {}

double TorusPoint::theta3() const noexcept { return reduce_angle(-theta1_ - theta2_); }

MeasureSpec MeasureSpec::plancherel(std::int64_t p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("MeasureSpec: Plancherel measure needs a prime p");
  return MeasureSpec{Kind::Plancherel, p};
}

QuadratureGrid::QuadratureGrid(int resolution) : k_(resolution) {
  if (resolution < 8) throw std::invalid_argument("QuadratureGrid: resolution must be at least 8");
}

double QuadratureGrid::step() const noexcept { return kTwoPi / k_; }

DensityEvaluator::DensityEvaluator(const MeasureSpec& spec) : spec_(spec), scale_(0), q_(0), bound_(0) {
  const double base = 1.0 / (24.0 * std::numbers::pi * std::numbers::pi);
  if (spec.kind == MeasureSpec::Kind::SatoTate) {
    scale_ = base;
    // prod |x_l - x_j|^2 peaks at 27 (cube roots of unity).
    bound_ = 27.0 * base * (1.0 + 1e-9);
  } else {
    if (spec.p < 2) throw std::invalid_argument("DensityEvaluator: Plancherel measure needs p >= 2");
    q_ = 1.0 / static_cast<double>(spec.p);
    scale_ = base * weyl_poincare(q_);
    // Each factor |1 - z|^2 / |1 - q z|^2 is decreasing in Re z, so <= 4/(1+q)^2;
    // alternatively the numerator product is <= 27 and each denominator >= (1-q)^2.
    const double a = 64.0 / std::pow(1.0 + q_, 6);
    const double b = 27.0 / std::pow(1.0 - q_, 6);
    bound_ = scale_ * std::min(a, b) * (1.0 + 1e-9);
  }
}

double DensityEvaluator::operator()(double theta1, double theta2) const noexcept {
  // Pairwise angle differences theta_l - theta_j, l < j, with theta3 = -theta1 - theta2.
  const double c12 = std::cos(theta1 - theta2);
  const double c13 = std::cos(2.0 * theta1 + theta2);
  const double c23 = std::cos(theta1 + 2.0 * theta2);
  const double v = (2.0 - 2.0 * c12) * (2.0 - 2.0 * c13) * (2.0 - 2.0 * c23);
  if (spec_.kind == MeasureSpec::Kind::SatoTate) return scale_ * v;
  const double qq = 1.0 + q_ * q_;
  const double den = (qq - 2.0 * q_ * c12) * (qq - 2.0 * q_ * c13) * (qq - 2.0 * q_ * c23);
  return scale_ * v / den;
}

double density(const MeasureSpec& spec, const TorusPoint& pt) {
  return DensityEvaluator(spec)(pt.theta1(), pt.theta2());
}

cplx integrate(const MeasureSpec& spec, const TorusFunction& f, const QuadratureGrid& grid) {
  const DensityEvaluator dens(spec);
  const int k = grid.resolution();
  cplx sum = 0.0;
  for (int i = 0; i < k; ++i) {
    const double t1 = grid.node(i);
    cplx row = 0.0;
    for (int j = 0; j < k; ++j) {
      const double t2 = grid.node(j);
      const double w = dens(t1, t2);
      if (w == 0.0) continue;
      row += w * f(TorusPoint(t1, t2));
    }
    sum += row;
  }
  return sum * grid.weight();
}

cplx integrate_to_tolerance(const MeasureSpec& spec, const TorusFunction& f, double tol, int start,
                            int max_resolution) {
  int k = start;
  cplx prev = integrate(spec, f, QuadratureGrid(k));
  while (2 * k <= max_resolution) {
    k *= 2;
    const cplx next = integrate(spec, f, QuadratureGrid(k));
    if (std::abs(next - prev) <= tol) return next;
    prev = next;
  }
  throw ConvergenceError("quadrature did not stabilise within tolerance up to K = " + std::to_string(max_resolution));
}

namespace {

void fill_chunk(const DensityEvaluator& dens, std::uint64_t seed, std::size_t chunk, TorusPoint* out,
                std::size_t n) {
  Rng rng(derive_seed(seed, chunk));
  const double bound = dens.bound();
  std::size_t filled = 0;
  while (filled < n) {
    const double t1 = rng.uniform(0.0, kTwoPi);
    const double t2 = rng.uniform(0.0, kTwoPi);
    const double u = rng.uniform() * bound;
    const double d = dens(t1, t2);
    if (d > bound) throw EnvelopeError("sample: density exceeds rejection envelope");
    if (u < d) out[filled++] = TorusPoint(t1, t2);
  }
}

}  // namespace

std::vector<TorusPoint> sample(const MeasureSpec& spec, std::size_t count, std::uint64_t seed, unsigned workers) {
  if (count < 1) throw std::invalid_argument("sample: count must be at least 1");
  const DensityEvaluator dens(spec);
  std::vector<TorusPoint> out(count, TorusPoint(0.0, 0.0));
  const std::size_t chunks = (count + kSampleChunk - 1) / kSampleChunk;
  auto run = [&](std::size_t first, std::size_t stride) {
    for (std::size_t c = first; c < chunks; c += stride) {
      const std::size_t begin = c * kSampleChunk;
      fill_chunk(dens, seed, c, out.data() + begin, std::min(kSampleChunk, count - begin));
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(chunks)));
  if (workers == 1) {
    run(0, 1);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        run(w, workers);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

namespace {

struct LevelSetWalker {
  const DensityEvaluator& dens;
  const std::function<double(double, double)>& g;
  double lo, hi;
  LevelSetMass result;

  bool inside(double t1, double t2) const {
    const double v = g(t1, t2);
    return v >= lo && v <= hi;
  }

  void cell(double c1, double c2, double half, int level) {
    const bool centre = inside(c1, c2);
    const bool mixed = inside(c1 - half, c2 - half) != centre || inside(c1 + half, c2 - half) != centre ||
                       inside(c1 - half, c2 + half) != centre || inside(c1 + half, c2 + half) != centre;
    if (mixed && level < 2) {
      constexpr int kSplit = 4;
      const double sub = 2.0 * half / kSplit;
      for (int a = 0; a < kSplit; ++a) {
        for (int b = 0; b < kSplit; ++b) {
          cell(c1 - half + (a + 0.5) * sub, c2 - half + (b + 0.5) * sub, sub / 2, level + 1);
        }
      }
      return;
    }
    const double m = dens(c1, c2) * 4.0 * half * half;
    if (centre) result.mass += m;
    if (mixed) result.uncertainty += m;
  }
};

}  // namespace

LevelSetMass level_set_mass(const MeasureSpec& spec, const std::function<double(double, double)>& g, double lo,
                            double hi, const QuadratureGrid& grid) {
  const DensityEvaluator dens(spec);
  LevelSetWalker walker{dens, g, lo, hi, {}};
  const int k = grid.resolution();
  const double half = grid.step() / 2;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) walker.cell(grid.node(i), grid.node(j), half, 0);
  }
  return walker.result;
}

SpectralPoint SpectralPoint::from_langlands(const std::array<cplx, 3>& alpha) {
  return {(alpha[0] - alpha[1]) / 3.0, (alpha[1] - alpha[2]) / 3.0};
}

double SpectralPoint::norm() const noexcept {
  double s = 0;
  for (const auto& a : langlands()) s += std::norm(a);
  return std::sqrt(s);
}

WeightParams::WeightParams(double T_, SpectralPoint nu0_, double eta_, int A_) : T(T_), nu0(nu0_), eta(eta_), A(A_) {
  if (!(T > 1.0)) throw std::invalid_argument("WeightParams: T must exceed 1");
  if (!(eta > 0.0 && eta < 0.1)) throw std::invalid_argument("WeightParams: eta must lie in (0, 1/10)");
  if (A < 1) throw std::invalid_argument("WeightParams: A must be at least 1");
  if (nu0.nu1.real() != 0.0 || nu0.nu2.real() != 0.0) {
    throw std::invalid_argument("WeightParams: nu0 must be purely imaginary");
  }
}

cplx psi(const SpectralPoint& nu) {
  const auto n = nu.nus();
  return std::exp(3.0 * (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]));
}

cplx weight_polynomial(const SpectralPoint& nu, double T, int A) {
  const auto n = nu.nus();
  const double t2 = T * T;
  cplx prod = 1.0;
  for (int k = 0; k <= A; ++k) {
    const double shift = (1.0 + 2.0 * k) * (1.0 + 2.0 * k) / 9.0;
    for (const auto& v : n) prod *= (v * v - shift) / t2;
  }
  return prod;
}

double h_T_eval(const SpectralPoint& nu, const WeightParams& params) {
  const auto alpha = nu.langlands();
  const auto alpha0 = params.nu0.langlands();
  const double scale = std::pow(params.T, 1.0 - params.eta);
  cplx sum = 0.0;
  for (const auto& w : weyl_group()) {
    const auto wa = w.apply(alpha);
    std::array<cplx, 3> d;
    for (int i = 0; i < 3; ++i) d[i] = (wa[i] - params.T * alpha0[i]) / scale;
    sum += psi(SpectralPoint::from_langlands(d));
  }
  // |P * sum|^2; equals P^2 sum^2 whenever both are real (imaginary nu).
  return std::norm(weight_polynomial(nu, params.T, params.A) * sum);
}

cplx spec_density(const SpectralPoint& nu) {
  cplx prod = 3.0 / (256.0 * std::pow(std::numbers::pi, 5));
  for (const auto& v : nu.nus()) {
    const cplx arg = 1.5 * std::numbers::pi * v;
    if (std::abs(std::cos(arg)) < 1e-12) throw PoleError("spec_density: nu_j at an odd multiple of 1/3");
    prod *= 3.0 * v * std::tan(arg);
  }
  return prod;
}

}  // namespace gl3
