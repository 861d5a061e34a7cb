#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gl3/errors.hpp"
#include "gl3/measures.hpp"
#include "gl3/qpoly.hpp"
#include "gl3/sato_tate.hpp"
#include "support.hpp"

using namespace gl3;
using testing::two_pi;

namespace {

const double kPi = std::numbers::pi;

cplx one(const TorusPoint&) { return 1.0; }

double s11(const TorusPoint& t) { return schur_eval({1, 1}, t.satake()).real(); }

// Weighted quadrature nodes (value, weight) of S_{1,1} under the measure.
std::vector<std::pair<double, double>> quadrature_law(const MeasureSpec& spec, int K) {
  const QuadratureGrid g(K);
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(K) * K);
  for (int i = 0; i < K; ++i) {
    for (int j = 0; j < K; ++j) {
      const TorusPoint t(g.node(i), g.node(j));
      out.emplace_back(s11(t), density(spec, t) * g.weight());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double ks_distance(std::vector<double> samples, const std::vector<std::pair<double, double>>& law) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double total = 0;
  for (const auto& [v, w] : law) total += w;
  double worst = 0, cdf = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    while (k < law.size() && law[k].first <= samples[i]) cdf += law[k++].second / total;
    worst = std::max({worst, std::abs(cdf - (i + 1) / n), std::abs(cdf - i / n)});
  }
  return worst;
}

}  // namespace

TEST_CASE("TorusPoint reduces angles") {
  const TorusPoint t(-kPi / 2, 5 * kPi);
  CHECK(t.theta1() == doctest::Approx(1.5 * kPi));
  CHECK(t.theta2() == doctest::Approx(kPi));
  CHECK(t.theta1() >= 0);
  CHECK(t.theta2() < two_pi());
  CHECK(std::abs(std::polar(1.0, t.theta3()) * std::polar(1.0, t.theta1()) * std::polar(1.0, t.theta2()) - 1.0) <
        1e-14);
  CHECK_THROWS(MeasureSpec::plancherel(1));
  CHECK_THROWS(QuadratureGrid(4));
}

TEST_CASE("density examples") {
  CHECK(density(MeasureSpec::sato_tate(), TorusPoint(0, 0)) == 0.0);
  CHECK(density(MeasureSpec::plancherel(3), TorusPoint(1.0, 1.0)) == 0.0);
  CHECK(density(MeasureSpec::plancherel(3), TorusPoint(0.4, two_pi() - 0.8)) == 0.0);

  // Pairwise |e^{ia} - e^{ib}|^2 at the cube roots of unity.
  const cplx w1 = std::polar(1.0, 2 * kPi / 3), w2 = std::polar(1.0, -2 * kPi / 3), w3 = 1.0;
  const double v = std::norm(w1 - w2) * std::norm(w1 - w3) * std::norm(w2 - w3);
  CHECK(v == doctest::Approx(27.0).epsilon(1e-14));
  CHECK(density(MeasureSpec::sato_tate(), TorusPoint(2 * kPi / 3, -2 * kPi / 3)) ==
        doctest::Approx(27.0 / (24 * kPi * kPi)).epsilon(1e-13));

  // Plancherel density against its literal product form.
  Rng rng(2);
  for (std::int64_t p : {2, 5, 101}) {
    const double q = 1.0 / p;
    for (int i = 0; i < 20; ++i) {
      const double a = rng.uniform(0.0, two_pi()), b = rng.uniform(0.0, two_pi());
      const std::array<cplx, 3> z{std::polar(1.0, a), std::polar(1.0, b), std::polar(1.0, -a - b)};
      double ratio = 1;
      for (int l = 0; l < 3; ++l) {
        for (int j = l + 1; j < 3; ++j) ratio *= std::norm((z[l] - q * z[j]) / (z[l] - z[j]));
      }
      const double c = (1 - q * q) * (1 - q * q * q) / (6 * (1 - q) * (1 - q));
      const double literal = c / ratio / (4 * kPi * kPi);
      CHECK(density(MeasureSpec::plancherel(p), TorusPoint(a, b)) == doctest::Approx(literal).epsilon(1e-11));
    }
  }
}

TEST_CASE("integrate examples") {
  CHECK(std::abs(integrate(MeasureSpec::sato_tate(), one, QuadratureGrid(64)) - 1.0) <= 1e-10);
  CHECK(std::abs(integrate(MeasureSpec::plancherel(2), one, QuadratureGrid(64)) - 1.0) <= 1e-8);
  auto f = [](const TorusPoint& t) { return cplx(std::norm(schur_eval({1, 0}, t.satake()))); };
  const cplx k64 = integrate(MeasureSpec::sato_tate(), f, QuadratureGrid(64));
  const cplx k128 = integrate(MeasureSpec::sato_tate(), f, QuadratureGrid(128));
  CHECK(std::abs(k64 - 1.0) <= 1e-8);
  CHECK(std::abs(k64 - k128) <= 1e-12);

  const cplx tight = integrate_to_tolerance(MeasureSpec::plancherel(7), f, 1e-12);
  CHECK(std::abs(tight - (1.0 + 1.0 / 7.0 + 1.0 / 49.0)) < 1e-10);
}

TEST_CASE("sample examples") {
  const auto a = sample(MeasureSpec::plancherel(5), 5000, 42);
  const auto b = sample(MeasureSpec::plancherel(5), 5000, 42, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].theta1() == b[i].theta1());
    CHECK(a[i].theta2() == b[i].theta2());
  }
  const auto c = sample(MeasureSpec::plancherel(5), 5000, 43);
  CHECK(c[0].theta1() != a[0].theta1());

  const auto pl = sample(MeasureSpec::plancherel(5), 100000, 1);
  double mean = 0, sq = 0;
  for (const auto& t : pl) {
    const double v = s11(t);
    mean += v;
    sq += v * v;
  }
  const double n = static_cast<double>(pl.size());
  mean /= n;
  const double stderr_ = std::sqrt((sq / n - mean * mean) / n);
  CHECK(std::abs(mean - 0.24) <= 3 * stderr_);

  const auto st = sample(MeasureSpec::sato_tate(), 100000, 2);
  cplx m10 = 0;
  for (const auto& t : st) m10 += schur_eval({1, 0}, t.satake());
  m10 /= static_cast<double>(st.size());
  const double se = 1.0 / std::sqrt(static_cast<double>(st.size()));  // E|S_{1,0}|^2 = 1
  CHECK(std::abs(m10.real()) <= 3 * se);
  CHECK(std::abs(m10.imag()) <= 3 * se);
}

TEST_CASE("weyl_poincare examples") {
  CHECK(weyl_poincare(0.0) == 1.0);
  CHECK(weyl_poincare(1.0) == 6.0);
  QPolynomial counted;
  std::array<int, 3> perm{0, 1, 2};
  do {
    int inversions = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    counted += QPolynomial::monomial(inversions);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(counted == QPolynomial({1, 2, 2, 1}));
  CHECK(weyl_poincare() == counted);
  CHECK(weyl_poincare(0.5) == doctest::Approx(counted(0.5)));
}

TEST_CASE("h_T examples") {
  const WeightParams params(100.0, SpectralPoint{cplx(0, 0.3), cplx(0, 0.5)});
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const SpectralPoint nu{cplx(rng.uniform(-1, 1), rng.uniform(-80, 80)), cplx(rng.uniform(-1, 1), rng.uniform(-80, 80))};
    CHECK(h_T_eval(nu, params) >= 0.0);
    const SpectralPoint im{cplx(0, rng.uniform(-80, 80)), cplx(0, rng.uniform(-80, 80))};
    const double base = h_T_eval(im, params);
    for (const auto& w : weyl_group()) {
      const auto moved = SpectralPoint::from_langlands(w.apply(im.langlands()));
      CHECK(h_T_eval(moved, params) == doctest::Approx(base).epsilon(1e-9));
    }
  }

  const SpectralPoint center{params.T * params.nu0.nu1, params.T * params.nu0.nu2};
  const double peak = h_T_eval(center, params);
  CHECK(peak > 0.0);
  const double radius = 10.0 * std::pow(params.T, 1.0 - params.eta);
  // Unit imaginary direction in the Langlands norm.
  const SpectralPoint dir{cplx(0, 1.0), cplx(0, 0.0)};
  const double scale = radius / dir.norm();
  const SpectralPoint far{center.nu1 + scale * dir.nu1, center.nu2 + scale * dir.nu2};
  const SpectralPoint diff{far.nu1 - center.nu1, far.nu2 - center.nu2};
  CHECK(diff.norm() == doctest::Approx(radius));
  CHECK(h_T_eval(far, params) <= 1e-6 * peak);

  CHECK_THROWS(WeightParams(1.0, SpectralPoint{}));
  CHECK_THROWS(WeightParams(10.0, SpectralPoint{}, 0.2));
  CHECK_THROWS(WeightParams(10.0, SpectralPoint{cplx(0.1, 1), cplx(0, 1)}));
}

TEST_CASE("spec_density examples") {
  const SpectralPoint nu{cplx(0.2, 1.1), cplx(-0.1, 0.4)};
  const cplx base = spec_density(nu);
  const auto n = nu.nus();
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& p : perms) CHECK(std::abs(spec_density({n[p[0]], n[p[1]]}) - base) < 1e-12 * std::abs(base));

  // At nu = i y each factor is -3|y| tanh(3 pi |y| / 2).
  const double t1 = std::tanh(1.5 * kPi), t3 = std::tanh(3.0 * kPi);
  const double frozen = -0.0020672142529507666;
  const double via_tanh = 3.0 / (256.0 * std::pow(kPi, 5)) * (-3.0 * t1) * (-3.0 * t1) * (-6.0 * t3);
  const cplx at_ii = spec_density({cplx(0, 1), cplx(0, 1)});
  CHECK(std::abs(at_ii.imag()) < 1e-18);
  CHECK(at_ii.real() == doctest::Approx(via_tanh).epsilon(1e-13));
  CHECK(at_ii.real() == doctest::Approx(frozen).epsilon(1e-12));
  // dnu1 dnu2 = -dt1 dt2 on the imaginary axis, so the spectral measure is positive there.
  CHECK(-at_ii.real() > 0.0);

  CHECK_THROWS_AS(spec_density({cplx(1.0 / 3.0, 0), cplx(0, 1)}), PoleError);
}

TEST_CASE("property: mass one") {
  CHECK(std::abs(integrate(MeasureSpec::sato_tate(), one, QuadratureGrid(64)) - 1.0) <= 1e-8);
  for (std::int64_t p : {2, 3, 5, 7, 101}) {
    CHECK(std::abs(integrate(MeasureSpec::plancherel(p), one, QuadratureGrid(64)) - 1.0) <= 1e-8);
  }
}

TEST_CASE("property: Schur orthonormality under the Sato-Tate measure") {
  const QuadratureGrid grid(64);
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      for (int c = 0; c <= 2; ++c) {
        for (int d = 0; d <= 2; ++d) {
          const cplx g = integrate(
              MeasureSpec::sato_tate(),
              [&](const TorusPoint& t) {
                const auto s = t.satake();
                return schur_eval({a, b}, s) * std::conj(schur_eval({c, d}, s));
              },
              grid);
          CHECK(std::abs(g - ((a == c && b == d) ? 1.0 : 0.0)) <= 1e-7);
        }
      }
    }
  }
}

TEST_CASE("property: Weyl invariance of the densities") {
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const std::array<double, 3> th{rng.uniform(0, two_pi()), rng.uniform(0, two_pi()), 0.0};
    const std::array<double, 3> full{th[0], th[1], -th[0] - th[1]};
    for (const auto& spec : {MeasureSpec::sato_tate(), MeasureSpec::plancherel(3)}) {
      const double base = density(spec, TorusPoint(full[0], full[1]));
      for (const auto& w : weyl_group()) {
        const auto m = w.apply(full);
        CHECK(std::abs(density(spec, TorusPoint(m[0], m[1])) - base) <= 1e-12);
      }
    }
  }
}

TEST_CASE("property: Plancherel converges to Sato-Tate") {
  const QuadratureGrid g32(32);
  double previous = INFINITY;
  for (std::int64_t p : {2, 11, 101, 1009}) {
    double worst = 0;
    for (int i = 0; i < 32; ++i) {
      for (int j = 0; j < 32; ++j) {
        const TorusPoint t(g32.node(i), g32.node(j));
        worst = std::max(worst, std::abs(density(MeasureSpec::plancherel(p), t) - density(MeasureSpec::sato_tate(), t)));
      }
    }
    CHECK(worst < previous);
    previous = worst;
  }
  const QuadratureGrid g(128);
  double sup = 0;
  for (int cell = 0; cell < 9; ++cell) {
    const auto pl = level_set_mass(MeasureSpec::plancherel(1009), adjoint_value, -1.0 + cell, cell, g);
    const auto st = level_set_mass(MeasureSpec::sato_tate(), adjoint_value, -1.0 + cell, cell, g);
    sup = std::max(sup, std::abs(pl.mass - st.mass));
  }
  CHECK(sup <= 0.02);
}

TEST_CASE("property: sampler matches the quadrature law of S_{1,1}") {
  const auto spec = MeasureSpec::plancherel(5);
  const auto pts = sample(spec, 100000, 7);
  std::vector<double> values;
  values.reserve(pts.size());
  for (const auto& t : pts) values.push_back(s11(t));
  const double ks = ks_distance(values, quadrature_law(spec, 512));
  CHECK(ks <= 0.01);
}

TEST_CASE("level_set_mass covers the full range") {
  const auto all = level_set_mass(MeasureSpec::plancherel(2), adjoint_value, -1.0, 8.0, QuadratureGrid(64));
  CHECK(all.mass == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(all.uncertainty == 0.0);
}
