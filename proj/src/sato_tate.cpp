#include "gl3/sato_tate.hpp"

#include <algorithm>
#include <boost/math/special_functions/lambert_w.hpp>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gl3/arith.hpp"

namespace gl3 {

EPoly EPoly::constant(const Rational& c) { return monomial(0, 0, c); }

EPoly EPoly::monomial(int a, int b, const Rational& c) {
  EPoly p;
  p.add_term(a, b, c);
  return p;
}

Rational EPoly::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void EPoly::add_term(int a, int b, const Rational& c) {
  if (a < 0 || b < 0) throw std::invalid_argument("EPoly: negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

EPoly& EPoly::operator+=(const EPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
  return *this;
}

EPoly& EPoly::operator-=(const EPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
  return *this;
}

EPoly& EPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

EPoly operator*(const EPoly& a, const EPoly& b) {
  EPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  }
  return out;
}

EPoly EPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("EPoly::pow: negative exponent");
  EPoly result = constant(1);
  EPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

cplx EPoly::eval(const SatakeTriple& x) const {
  const cplx e1 = x.e1(), e2 = x.e2();
  cplx sum = 0.0;
  for (const auto& [k, c] : terms_) {
    sum += static_cast<double>(c) * std::pow(e1, k.first) * std::pow(e2, k.second);
  }
  return sum;
}

std::string EPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (k.first > 0) os << "*e1^" << k.first;
    if (k.second > 0) os << "*e2^" << k.second;
  }
  return os.str();
}

WInvariantLaurent::WInvariantLaurent(std::map<IndexPair, Rational> coeffs) : coeffs_(std::move(coeffs)) {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

Rational WInvariantLaurent::coeff(int l1, int l2) const {
  auto it = coeffs_.find({l1, l2});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational WInvariantLaurent::l1_norm() const {
  Rational s = 0;
  for (const auto& [k, c] : coeffs_) s += abs(c);
  return s;
}

cplx WInvariantLaurent::eval(const SatakeTriple& x) const {
  cplx sum = 0.0;
  for (const auto& [k, c] : coeffs_) sum += static_cast<double>(c) * schur_eval(ExponentPair(k.first, k.second), x);
  return sum;
}

std::string WInvariantLaurent::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (!first) os << ", ";
    first = false;
    os << "(" << k.first << "," << k.second << "): " << c;
  }
  os << "}";
  return os.str();
}

namespace {

std::vector<EPoly> complete_homogeneous_epoly(int n) {
  std::vector<EPoly> h(static_cast<std::size_t>(n) + 1);
  h[0] = EPoly::constant(1);
  for (int k = 1; k <= n; ++k) {
    EPoly v = EPoly::e1() * h[k - 1];
    if (k >= 2) v -= EPoly::e2() * h[k - 2];
    if (k >= 3) v += h[k - 3];
    h[k] = std::move(v);
  }
  return h;
}

EPoly schur_from(const std::vector<EPoly>& h, int l1, int l2) {
  const int top = l1 + l2;
  if (l2 == 0) return h[top];
  return h[top] * h[l2] - h[top + 1] * h[l2 - 1];
}

constexpr int kMaxSchurDegree = 24;

}  // namespace

EPoly schur_to_epoly(int l1, int l2) {
  if (l1 < 0 || l2 < 0) throw std::invalid_argument("schur_to_epoly: negative index");
  if (l1 + l2 > kMaxSchurDegree) throw std::invalid_argument("schur_to_epoly: l1 + l2 exceeds 24");
  return schur_from(complete_homogeneous_epoly(l1 + l2 + 1), l1, l2);
}

WInvariantLaurent expand_in_schur(const EPoly& f) {
  int max_deg = 0;
  for (const auto& [k, c] : f.terms()) max_deg = std::max(max_deg, k.first + 2 * k.second);
  const auto h = complete_homogeneous_epoly(max_deg + 1);

  std::map<IndexPair, Rational> out;
  EPoly rest = f;
  while (!rest.is_zero()) {
    // Leading term: largest a + 2b, ties broken by the smallest b.
    auto lead = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
      const int d = it->first.first + 2 * it->first.second;
      const int dl = lead->first.first + 2 * lead->first.second;
      if (d > dl || (d == dl && it->first.second < lead->first.second)) lead = it;
    }
    const auto [a, b] = lead->first;
    if (a + b > kMaxSchurDegree) throw std::invalid_argument("expand_in_schur: degree exceeds Schur guard");
    const Rational c = lead->second;
    out[{a, b}] += c;
    rest -= schur_from(h, a, b) * c;
  }
  return WInvariantLaurent(std::move(out));
}

EPoly to_epoly(const WInvariantLaurent& f) {
  EPoly out;
  for (const auto& [k, c] : f.coeffs()) out += schur_to_epoly(k.first, k.second) * c;
  return out;
}

WInvariantLaurent bernstein_coeffs(int l) {
  if (l < 0 || l > 12) throw std::invalid_argument("bernstein_coeffs: l must lie in [0, 12]");
  Rational scale = 1;
  for (int i = 0; i < l; ++i) scale /= 9;
  // S_{1,1} + 1 = e1 e2.
  return expand_in_schur(EPoly::monomial(l, l, scale));
}

double bernstein_approx(std::span<const double> w_samples, double x) {
  if (w_samples.size() < 2) throw std::invalid_argument("bernstein_approx: need n >= 1");
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("bernstein_approx: x must lie in [0, 1]");
  const auto n = static_cast<int>(w_samples.size()) - 1;
  if (x == 0.0) return w_samples.front();
  if (x == 1.0) return w_samples.back();
  double sum = 0.0;
  if (n <= 60) {
    double binom = 1.0;  // C(n, j)
    for (int j = 0; j <= n; ++j) {
      sum += w_samples[j] * binom * std::pow(x, j) * std::pow(1.0 - x, n - j);
      binom = binom * (n - j) / (j + 1);
    }
    return sum;
  }
  const double lx = std::log(x), l1x = std::log1p(-x);
  const double lgn = std::lgamma(n + 1.0);
  for (int j = 0; j <= n; ++j) {
    const double lb = lgn - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0);
    sum += w_samples[j] * std::exp(lb + j * lx + (n - j) * l1x);
  }
  return sum;
}

PlateauWeight::PlateauWeight(double a, double b, double delta, Kind kind) {
  if (!(delta > 0.0) || !(a < b)) throw std::invalid_argument("PlateauWeight: need a < b and delta > 0");
  if (kind == Kind::Outer) {
    lo0_ = a - delta, lo1_ = a, hi1_ = b, hi0_ = b + delta;
  } else {
    if (2 * delta > b - a) throw std::invalid_argument("PlateauWeight: inner plateau needs delta < (b - a)/2");
    lo0_ = a, lo1_ = a + delta, hi1_ = b - delta, hi0_ = b;
  }
}

double PlateauWeight::at_coefficient(double y) const {
  auto smooth = [](double t) { return t * t * (3.0 - 2.0 * t); };
  if (y <= lo0_ || y >= hi0_) return 0.0;
  if (y >= lo1_ && y <= hi1_) return 1.0;
  if (y < lo1_) return smooth((y - lo0_) / (lo1_ - lo0_));
  return smooth((hi0_ - y) / (hi0_ - hi1_));
}

double PlateauWeight::operator()(double x) const { return at_coefficient(9.0 * x - 1.0); }

double adjoint_value(double theta1, double theta2) {
  const cplx e1 = std::polar(1.0, theta1) + std::polar(1.0, theta2) + std::polar(1.0, -theta1 - theta2);
  return std::clamp(std::norm(e1) - 1.0, -1.0, 8.0);
}

EmpiricalDistribution sample_adjoint(std::int64_t p, std::size_t count, std::uint64_t seed) {
  EmpiricalDistribution dist;
  dist.p = p;
  dist.seed = seed;
  const auto pts = sample(MeasureSpec::plancherel(p), count, seed);
  dist.samples.reserve(pts.size());
  for (const auto& pt : pts) dist.samples.push_back(adjoint_value(pt.theta1(), pt.theta2()));
  return dist;
}

StCompare effective_st_compare(const EmpiricalDistribution& dist, double lo, double hi, const QuadratureGrid& grid) {
  if (!(lo <= hi) || lo < -1.0 || hi > 8.0) throw std::invalid_argument("effective_st_compare: need [lo, hi] in [-1, 8]");
  if (dist.samples.size() < 100) throw std::invalid_argument("effective_st_compare: need at least 100 samples");
  StCompare r;
  r.p = dist.p;
  r.lo = lo;
  r.hi = hi;
  r.samples = dist.samples.size();
  const auto hits = std::count_if(dist.samples.begin(), dist.samples.end(), [&](double v) { return v >= lo && v <= hi; });
  r.empirical = static_cast<double>(hits) / static_cast<double>(r.samples);
  const auto m = level_set_mass(MeasureSpec::plancherel(dist.p), adjoint_value, lo, hi, grid);
  r.mass = m.mass;
  r.mass_uncertainty = m.uncertainty;
  r.diff = std::abs(r.empirical - r.mass);
  return r;
}

StCompare effective_st_compare(std::int64_t p, std::size_t n_samples, double lo, double hi, std::uint64_t seed,
                               const QuadratureGrid& grid) {
  if (n_samples < 100) throw std::invalid_argument("effective_st_compare: need at least 100 samples");
  return effective_st_compare(sample_adjoint(p, n_samples, seed), lo, hi, grid);
}

BernsteinBudget bernstein_budget(std::int64_t p, double T, int A, double eta_prime) {
  if (!is_prime(p) || !(T > 1.0) || A < 1) throw std::invalid_argument("bernstein_budget: invalid parameters");
  const double l2p = std::log(2.0 * static_cast<double>(p));
  const double arg = 5.0 * std::pow(T, 5.0 / 3.0 - 5.0 * eta_prime) * l2p;
  BernsteinBudget b;
  b.n = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(boost::math::lambert_w0(arg) / (8.0 * A * l2p))));
  const double n = static_cast<double>(b.n);
  b.delta = std::pow(n, -0.2);
  b.bernstein_term = std::pow(n, -1.0 / 3.0) * std::pow(b.delta, -2.0 / 3.0);
  b.spectral_term = std::exp(n * l2p - (1.0 / 3.0 - eta_prime) * std::log(T));
  b.delta_term = b.delta;
  return b;
}

}  // namespace gl3
