#include "gl3/kl_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "gl3/arith.hpp"

namespace gl3 {

Weight::Weight(int a, int b, int c) {
  const int m = std::min({a, b, c});
  c_ = {a - m, b - m, c - m};
}

std::optional<std::array<int, 3>> Weight::sum_zero() const {
  if (!in_root_lattice()) return std::nullopt;
  const int shift = (c_[0] + c_[1] + c_[2]) / 3;
  return std::array<int, 3>{c_[0] - shift, c_[1] - shift, c_[2] - shift};
}

Weight operator+(const Weight& a, const Weight& b) {
  return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]};
}

Weight operator-(const Weight& a, const Weight& b) {
  return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]};
}

Weight operator*(int k, const Weight& a) { return {k * a.c_[0], k * a.c_[1], k * a.c_[2]}; }

Weight aleph(int l2, int l1) {
  if (l1 < 0 || l2 < 0) throw std::invalid_argument("aleph: coefficients must be non-negative");
  return l1 * weights::lambda1() + l2 * weights::lambda2();
}

QPolynomial kostant_partition(const Weight& beta) {
  const auto rep = beta.sum_zero();
  if (!rep) return {};
  const auto [b1, b2, b3] = *rep;
  // beta = n1 (1,-1,0) + n2 (0,1,-1) + n3 (1,0,-1): n1 = b1 - n3, n2 = -b3 - n3.
  QPolynomial out;
  for (int n3 = 0; n3 <= b1 && n3 <= -b3; ++n3) {
    const int n1 = b1 - n3;
    const int n2 = -b3 - n3;
    out += QPolynomial::monomial(n1 + n2 + n3);
  }
  (void)b2;
  return out;
}

QPolynomial lusztig_q_analog(const Weight& lambda, const Weight& beta) {
  const Weight shifted = lambda + weights::rho();
  const Weight target = beta + weights::rho();
  QPolynomial out;
  for (const auto& w : weyl_group()) {
    const auto term = kostant_partition(shifted.permuted(w) - target);
    if (w.sign() > 0) out += term;
    else out -= term;
  }
  return out;
}

KatoResult kato_check(int l1, int l2, std::int64_t p, const QuadratureGrid& grid) {
  if (l1 < 0 || l2 < 0 || l1 > 6 || l2 > 6) throw std::invalid_argument("kato_check: l1, l2 must lie in [0, 6]");
  if (!is_prime(p)) throw std::invalid_argument("kato_check: p must be prime");
  KatoResult r;
  r.lhs = lusztig_q_analog(aleph(l2, l1), Weight{})(1.0 / static_cast<double>(p));
  const ExponentPair pair(l1, l2);
  const auto spec = MeasureSpec::plancherel(p);
  r.rhs = integrate_to_tolerance(
              spec, [&](const TorusPoint& pt) { return schur_eval(pair, pt.satake()); }, 1e-12,
              grid.resolution(), 1024)
              .real();
  r.diff = std::abs(r.lhs - r.rhs);
  return r;
}

}  // namespace gl3
