#include <doctest.h>

#include <cmath>

#include "gl3/kl_poly.hpp"
#include "gl3/sato_tate.hpp"
#include "support.hpp"

using namespace gl3;

namespace {

WInvariantLaurent laurent(std::initializer_list<std::pair<const IndexPair, Rational>> init) {
  return WInvariantLaurent(std::map<IndexPair, Rational>(init));
}

cplx e1_of(const SatakeTriple& x) { return x[0] + x[1] + x[2]; }
cplx e2_of(const SatakeTriple& x) { return x[0] * x[1] + x[1] * x[2] + x[2] * x[0]; }

double binom(int n, int k) { return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)); }

}  // namespace

TEST_CASE("schur_to_epoly examples") {
  CHECK(schur_to_epoly(1, 0) == EPoly::e1());
  CHECK(schur_to_epoly(0, 1) == EPoly::e2());
  CHECK(schur_to_epoly(1, 1) == EPoly::e1() * EPoly::e2() - EPoly::constant(1));
  CHECK(schur_to_epoly(0, 0) == EPoly::constant(1));

  // (a1 + a2)(a2 + a3)(a3 + a1) = e1 e2 - e3 expanded at random points.
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto x = testing::random_tempered(rng);
    const cplx direct = (x[0] + x[1]) * (x[1] + x[2]) * (x[2] + x[0]);
    CHECK(std::abs(schur_to_epoly(1, 1).eval(x) - direct) < 1e-13);
  }
  CHECK_THROWS(schur_to_epoly(13, 12));
}

TEST_CASE("expand_in_schur examples") {
  CHECK(expand_in_schur(EPoly::e1()) == laurent({{{1, 0}, 1}}));
  CHECK(expand_in_schur(EPoly::e1().pow(2)) == laurent({{{2, 0}, 1}, {{0, 1}, 1}}));
  const EPoly f = (EPoly::e1() * EPoly::e2() - EPoly::constant(1)).pow(2);
  CHECK(expand_in_schur(f) == laurent({{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}, {{3, 0}, 1}, {{0, 3}, 1}}));

  Rng rng(12);
  const EPoly g = EPoly::monomial(3, 2, Rational(2, 7)) - EPoly::monomial(1, 4, 5) + EPoly::constant(Rational(1, 3));
  const auto gx = expand_in_schur(g);
  for (int i = 0; i < 20; ++i) {
    const auto x = testing::random_tempered(rng);
    CHECK(std::abs(gx.eval(x) - g.eval(x)) <= 1e-9 * std::max(1.0, std::abs(g.eval(x))));
  }
}

TEST_CASE("bernstein_coeffs examples") {
  CHECK(bernstein_coeffs(0) == laurent({{{0, 0}, 1}}));
  const auto b1 = bernstein_coeffs(1);
  CHECK(b1 == laurent({{{0, 0}, Rational(1, 9)}, {{1, 1}, Rational(1, 9)}}));
  CHECK(b1.l1_norm() == Rational(2, 9));
  for (int l = 0; l <= 10; ++l) CHECK(bernstein_coeffs(l).l1_norm() <= 1);
  CHECK_THROWS(bernstein_coeffs(13));
}

TEST_CASE("bernstein_approx examples") {
  for (int n : {1, 5, 80, 300}) {
    const std::vector<double> ones(n + 1, 1.0);
    for (double x : {0.0, 0.13, 0.5, 0.99, 1.0}) CHECK(bernstein_approx(ones, x) == doctest::Approx(1.0).epsilon(1e-12));
  }
  std::vector<double> lin(11);
  for (int j = 0; j <= 10; ++j) lin[j] = j / 10.0;
  CHECK(std::abs(bernstein_approx(lin, 0.3) - 0.3) <= 1e-12);

  // Direct binomial sum as an oracle for small n.
  std::vector<double> sq(21);
  for (int j = 0; j <= 20; ++j) sq[j] = (j / 20.0) * (j / 20.0);
  double direct = 0;
  for (int j = 0; j <= 20; ++j) direct += sq[j] * binom(20, j) * std::pow(0.4, j) * std::pow(0.6, 20 - j);
  CHECK(bernstein_approx(sq, 0.4) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(direct == doctest::Approx(0.16 + 0.4 * 0.6 / 20).epsilon(1e-12));

  // Support [0.2, 0.8] in x is [0.8, 6.2] in y = 9x - 1; plateau [0.3, 0.7] is [1.7, 5.3].
  const PlateauWeight bump(1.7, 5.3, 0.9, PlateauWeight::Kind::Outer);
  CHECK(bump(0.15) == 0.0);
  CHECK(bump(0.5) == 1.0);
  CHECK(bump(0.3) == 1.0);
  CHECK(bump(0.85) == 0.0);
  CHECK(bump(0.2) <= 1e-12);
  double previous = INFINITY;
  for (int n = 64; n <= 1024; n *= 2) {
    std::vector<double> w(n + 1);
    for (int j = 0; j <= n; ++j) w[j] = bump(static_cast<double>(j) / n);
    double err = 0;
    for (int k = 0; k <= 400; ++k) {
      const double x = k / 400.0;
      err = std::max(err, std::abs(bernstein_approx(w, x) - bump(x)));
    }
    CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("plateau weights") {
  const PlateauWeight outer(0.0, 2.0, 0.5, PlateauWeight::Kind::Outer);
  const PlateauWeight inner(0.0, 2.0, 0.5, PlateauWeight::Kind::Inner);
  double worst_slope = 0;
  for (int k = 0; k < 10000; ++k) {
    const double y = -1.0 + 4.0 * k / 10000.0, h = 1e-6;
    CHECK(inner.at_coefficient(y) <= outer.at_coefficient(y));
    CHECK(outer.at_coefficient(y) >= ((y >= 0.0 && y <= 2.0) ? 1.0 : 0.0));
    CHECK(inner.at_coefficient(y) <= ((y >= 0.0 && y <= 2.0) ? 1.0 : 0.0));
    worst_slope = std::max(worst_slope, std::abs(outer.at_coefficient(y + h) - outer.at_coefficient(y)) / h);
  }
  CHECK(worst_slope <= 3.0 / 0.5);
  CHECK_THROWS(PlateauWeight(0.0, 1.0, 0.6, PlateauWeight::Kind::Inner));
}

TEST_CASE("effective_st_compare examples") {
  const auto full = effective_st_compare(2, 2000, -1.0, 8.0, 3);
  CHECK(full.empirical == 1.0);
  CHECK(full.mass == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(full.diff <= 1e-10);

  const auto r = effective_st_compare(5, 100000, 0.0, 8.0, 17);
  CHECK(r.samples == 100000);
  CHECK(r.diff <= 0.01);

  const auto dist = sample_adjoint(2, 5000, 9);
  const auto left = effective_st_compare(dist, -1.0, 0.0);
  const auto right = effective_st_compare(dist, 0.0, 8.0);
  CHECK(std::abs(left.mass + right.mass - 1.0) <= left.mass_uncertainty + right.mass_uncertainty + 1e-10);
  CHECK_THROWS(effective_st_compare(dist, -2.0, 0.0));
  CHECK_THROWS(effective_st_compare(2, 50, -1.0, 8.0, 1));
}

TEST_CASE("bernstein budget diagnostics") {
  const auto b = bernstein_budget(2, 1e12);
  CHECK(b.n >= 1);
  CHECK(b.delta == doctest::Approx(std::pow(static_cast<double>(b.n), -0.2)));
  CHECK(b.bernstein_term > 0);
  CHECK(b.spectral_term > 0);
}

TEST_CASE("property: Schur round trip") {
  for (int l1 = 0; l1 <= 8; ++l1) {
    for (int l2 = 0; l1 + l2 <= 8; ++l2) CHECK(expand_in_schur(schur_to_epoly(l1, l2)) == laurent({{{l1, l2}, 1}}));
  }
}

TEST_CASE("property: Schur-basis and EPoly evaluation agree") {
  Rng rng(71);
  std::vector<WInvariantLaurent> elements;
  for (int k = 0; k < 10; ++k) {
    std::map<IndexPair, Rational> c;
    for (int t = 0; t < 4; ++t) {
      const int a = static_cast<int>(rng.next_u64() % 5), b = static_cast<int>(rng.next_u64() % 5);
      c[{a, b}] += Rational(static_cast<long long>(rng.next_u64() % 19) - 9, 1 + static_cast<long long>(rng.next_u64() % 7));
    }
    elements.emplace_back(c);
  }
  for (int i = 0; i < 50; ++i) {
    const auto x = testing::random_tempered(rng);
    for (const auto& f : elements) {
      const cplx s = f.eval(x), e = to_epoly(f).eval(x);
      CHECK(std::abs(s - e) <= 1e-9 * std::max(1.0, std::abs(s)));
    }
    CHECK(std::abs(EPoly::e1().eval(x) - e1_of(x)) < 1e-14);
    CHECK(std::abs(EPoly::e2().eval(x) - e2_of(x)) < 1e-14);
  }
}

TEST_CASE("property: expectation identity through Kato") {
  for (std::int64_t p : {2, 5}) {
    const double q = 1.0 / static_cast<double>(p);
    for (int l = 0; l <= 5; ++l) {
      double lhs = 0;
      const auto alpha = bernstein_coeffs(l);
      for (const auto& [idx, a] : alpha.coeffs()) {
        lhs += a.convert_to<double>() * lusztig_q_analog(aleph(idx.second, idx.first), Weight(0, 0, 0))(q);
      }
      const cplx rhs = integrate_to_tolerance(
          MeasureSpec::plancherel(p),
          [l](const TorusPoint& t) {
            return cplx(std::pow((schur_eval({1, 1}, t.satake()).real() + 1.0) / 9.0, l));
          },
          1e-12);
      CHECK(std::abs(lhs - rhs.real()) <= 1e-6);
    }
  }
}

TEST_CASE("property: adjoint range") {
  Rng rng(99);
  for (int i = 0; i < 20000; ++i) {
    const auto x = testing::random_tempered(rng);
    const double v = schur_eval({1, 1}, x).real();
    CHECK(v >= -1.0 - 1e-10);
    CHECK(v <= 8.0 + 1e-10);
  }
  const auto dist = sample_adjoint(3, 2000, 1);
  for (double v : dist.samples) {
    CHECK(v >= -1.0);
    CHECK(v <= 8.0);
  }
}
