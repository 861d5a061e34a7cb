#include "gl3/dirichlet.hpp"

#include <algorithm>
#include <array>
#include <vector>
#include <cmath>
#include <stdexcept>

#include "gl3/arith.hpp"
#include "gl3/errors.hpp"

namespace gl3 {

void DirichletPolynomial::add_term(DirichletIndex n, cplx a) {
  if (n == 0) throw std::invalid_argument("DirichletPolynomial: index must be positive");
  terms_[n] += a;
}

cplx DirichletPolynomial::coeff(DirichletIndex n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

DirichletIndex DirichletPolynomial::min_index() const {
  if (terms_.empty()) throw std::logic_error("DirichletPolynomial: empty support");
  return terms_.begin()->first;
}

DirichletIndex DirichletPolynomial::max_index() const {
  if (terms_.empty()) throw std::logic_error("DirichletPolynomial: empty support");
  return terms_.rbegin()->first;
}

double DirichletPolynomial::weighted_l2() const {
  long double s = 0;
  for (const auto& [n, a] : terms_) s += std::norm(a) / static_cast<long double>(n);
  return static_cast<double>(s);
}

DirichletPolynomial operator*(const DirichletPolynomial& a, const DirichletPolynomial& b) {
  DirichletPolynomial out("(" + a.range_ + ") * (" + b.range_ + ")");
  for (const auto& [n, x] : a.terms_) {
    for (const auto& [m, y] : b.terms_) {
      DirichletIndex nm;
      if (__builtin_mul_overflow(n, m, &nm)) throw OverflowError("Dirichlet convolution index overflow");
      out.terms_[nm] += x * y;
    }
  }
  return out;
}

cplx dirichlet_eval(const DirichletPolynomial& poly, cplx s) {
  cplx sum = 0.0;
  for (const auto& [n, a] : poly.terms()) {
    const double logn = static_cast<double>(std::log(static_cast<long double>(n)));
    sum += a * std::exp(-s * logn);
  }
  return sum;
}

namespace {

// Coefficients of (a x - a x^2 + x^3)^2 on x^2 .. x^6.
std::array<cplx, 5> squared_local_factor(cplx a) {
  return {a * a, -2.0 * a * a, a * a + 2.0 * a, -2.0 * a, 1.0};
}

}  // namespace

MKD build_MKD(const CoefficientTable& table, std::int64_t X, std::int64_t M) {
  if (X < 1 || M < 1) throw std::invalid_argument("build_MKD: X and M must be positive");
  MKD out{DirichletPolynomial("m in [" + std::to_string(M) + ", " + std::to_string(2 * M) + "]"),
          DirichletPolynomial(), DirichletPolynomial("squarefree d <= " + std::to_string(2 * M))};
  for (std::int64_t m = M; m <= 2 * M; ++m) out.M.add_term(static_cast<DirichletIndex>(m), table.at(m, 1));

  // X/3M <= k <= 3X/M in integers.
  const std::int64_t k0 = (X + 3 * M - 1) / (3 * M);
  const std::int64_t k1 = (3 * X) / M;
  out.K.set_range("k in [" + std::to_string(k0) + ", " + std::to_string(k1) + "]");
  for (std::int64_t k = std::max<std::int64_t>(k0, 1); k <= k1; ++k) out.K.add_term(static_cast<DirichletIndex>(k), table.at(k, 1));

  const FactorSieve sieve(2 * M);
  for (std::int64_t d = 1; d <= 2 * M; ++d) {
    const int mu = sieve.mobius(d);
    if (mu == 0) continue;
    std::map<DirichletIndex, cplx> partial{{1, cplx(static_cast<double>(mu))}};
    for (auto [p, e] : sieve.factorize(d)) {
      const auto f = squared_local_factor(table.at(p, 1));
      std::map<DirichletIndex, cplx> next;
      for (const auto& [n, c] : partial) {
        DirichletIndex pk = static_cast<DirichletIndex>(p) * static_cast<DirichletIndex>(p);
        for (int k = 2; k <= 6; ++k) {
          next[n * pk] += c * f[k - 2];
          pk *= static_cast<DirichletIndex>(p);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [n, c] : partial) out.D.add_term(n, c);
  }
  return out;
}

cplx evaluate_D_product(const CoefficientTable& table, std::int64_t M, cplx s) {
  const FactorSieve sieve(2 * M);
  cplx sum = 0.0;
  for (std::int64_t d = 1; d <= 2 * M; ++d) {
    const int mu = sieve.mobius(d);
    if (mu == 0) continue;
    cplx prod = static_cast<double>(mu);
    for (auto [p, e] : sieve.factorize(d)) {
      const cplx x = std::exp(-s * std::log(static_cast<double>(p)));
      const cplx a = table.at(p, 1);
      const cplx f = a * x - a * x * x + x * x * x;
      prod *= f * f;
    }
    sum += prod;
  }
  return sum;
}

EulerCheck euler_factor_check(const PrimeLocalData& local, cplx s, int J) {
  if (s.real() < 1.1) throw std::invalid_argument("euler_factor_check: need Re s >= 1.1");
  if (J < 20) throw std::invalid_argument("euler_factor_check: need J >= 20");
  const auto& sat = local.satake();
  const cplx x = std::exp(-s * std::log(static_cast<double>(local.p())));
  const auto h = complete_homogeneous(sat.e1(), sat.e2(), J);  // A(p^j, 1) = h_j
  const cplx a = sat.e1();
  const cplx a_dual = sat.e2();

  EulerCheck r;
  cplx xj = 1.0;
  cplx shifted = 0.0;
  for (int j = 0; j <= J; ++j) {
    r.series += h[j] * xj;
    if (j < J) shifted += h[j + 1] * xj;
    xj *= x;
  }
  r.closed = 1.0 / (1.0 - a * x + a_dual * x * x - x * x * x);
  r.ratio_identity_residual = std::abs(shifted / r.series - (a - a_dual * x + x * x));

  // |h_j| <= C(j+2, 2) rho^j with rho the largest modulus.
  double rho = 0;
  for (const auto& v : sat.alpha()) rho = std::max(rho, std::abs(v));
  const double z = rho * std::abs(x);
  double tail = 0, zj = std::pow(z, J + 1);
  for (int j = J + 1; j <= J + 2000 && zj > 0; ++j) {
    tail += 0.5 * (j + 1.0) * (j + 2.0) * zj;
    zj *= z;
  }
  r.tail_bound = z < 1.0 ? tail : INFINITY;
  r.tail_warning = !(r.tail_bound <= 1e-12);
  return r;
}

MvtResult mvt_ratio(const DirichletPolynomial& poly, std::int64_t N, double T) {
  if (N < 1) throw std::invalid_argument("mvt_ratio: N must be positive");
  if (!(T >= 1.0)) throw std::invalid_argument("mvt_ratio: T must be at least 1");
  MvtResult r;
  if (poly.empty()) return r;
  if (poly.min_index() < static_cast<DirichletIndex>(N) || poly.max_index() > static_cast<DirichletIndex>(2 * N)) {
    throw std::invalid_argument("mvt_ratio: support must lie in [N, 2N]");
  }

  const double cap = N > 1 ? std::min(0.01, 1.0 / (10.0 * std::log(static_cast<double>(N)))) : 0.01;
  auto intervals = static_cast<std::int64_t>(std::ceil(2.0 * T / cap));
  if (intervals % 4 != 0) intervals += 4 - intervals % 4;
  const double h = 2.0 * T / static_cast<double>(intervals);

  struct Term {
    cplx base;   // a_n n^{-1/2}
    double logn;
    cplx step;   // n^{-ih}
  };
  std::vector<Term> terms;
  for (const auto& [n, a] : poly.terms()) {
    const double logn = static_cast<double>(std::log(static_cast<long double>(n)));
    terms.push_back({a * std::exp(-0.5 * logn), logn, std::polar(1.0, -h * logn)});
  }

  std::vector<cplx> cur(terms.size());
  auto reseed = [&](std::int64_t k) {
    const double t = -T + h * static_cast<double>(k);
    for (std::size_t i = 0; i < terms.size(); ++i) cur[i] = terms[i].base * std::polar(1.0, -t * terms[i].logn);
  };

  double fine = 0, coarse = 0;
  for (std::int64_t k = 0; k <= intervals; ++k) {
    if (k % 256 == 0) reseed(k);
    cplx f = 0.0;
    for (const auto& v : cur) f += v;
    const double val = std::norm(f);
    const double wf = (k == 0 || k == intervals) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    fine += wf * val;
    if (k % 2 == 0) {
      const std::int64_t kc = k / 2;
      const double wc = (k == 0 || k == intervals) ? 1.0 : (kc % 2 == 1 ? 4.0 : 2.0);
      coarse += wc * val;
    }
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] *= terms[i].step;
  }
  r.lhs = fine * h / 3.0;
  const double coarse_val = coarse * 2.0 * h / 3.0;
  r.convergence_warning = std::abs(coarse_val - r.lhs) > 1e-6 * std::max(1.0, std::abs(r.lhs));
  r.rhs = (static_cast<double>(N) + T) * poly.weighted_l2();
  r.ratio = r.rhs > 0 ? r.lhs / r.rhs : 0.0;
  return r;
}

}  // namespace gl3
