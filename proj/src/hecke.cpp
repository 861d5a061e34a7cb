#include "gl3/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "gl3/arith.hpp"
#include "gl3/errors.hpp"

namespace gl3 {

SatakeTriple::SatakeTriple(cplx a1, cplx a2, cplx a3) : alpha_{a1, a2, a3}, tempered_(true) {
  if (std::abs(a1 * a2 * a3 - 1.0) > kTolerance) {
    throw std::invalid_argument("SatakeTriple: product of parameters must be 1");
  }
  for (const auto& a : alpha_) {
    if (std::abs(std::abs(a) - 1.0) > kTolerance) tempered_ = false;
  }
}

SatakeTriple SatakeTriple::from_angles(double theta1, double theta2) {
  const cplx x1 = std::polar(1.0, theta1);
  const cplx x2 = std::polar(1.0, theta2);
  return SatakeTriple(x1, x2, std::conj(x1 * x2));
}

ExponentPair::ExponentPair(int b1, int b2) : beta1(b1), beta2(b2) {
  if (b1 < 0 || b2 < 0) throw std::invalid_argument("ExponentPair: exponents must be non-negative");
}

PrimeLocalData::PrimeLocalData(std::int64_t p, SatakeTriple satake) : p_(p), satake_(satake) {
  if (!is_prime(p)) throw std::invalid_argument("PrimeLocalData: " + std::to_string(p) + " is not prime");
}

std::vector<cplx> complete_homogeneous(cplx e1, cplx e2, int n) {
  std::vector<cplx> h(static_cast<std::size_t>(std::max(n, 0)) + 1);
  h[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    cplx v = e1 * h[k - 1];
    if (k >= 2) v -= e2 * h[k - 2];
    if (k >= 3) v += h[k - 3];
    h[k] = v;
  }
  return h;
}

cplx schur_eval(ExponentPair pair, const SatakeTriple& x) {
  const int top = pair.beta1 + pair.beta2;
  const int mid = pair.beta2;
  const auto h = complete_homogeneous(x.e1(), x.e2(), top + 1);
  // det [[h_top, h_{top+1}], [h_{mid-1}, h_mid]]
  if (mid == 0) return h[top];
  return h[top] * h[mid] - h[top + 1] * h[mid - 1];
}

LocalCoefficients coeff_from_satake(const PrimeLocalData& local, int max_exp) {
  if (max_exp < 0) throw std::invalid_argument("coeff_from_satake: max_exp must be >= 0");
  LocalCoefficients out;
  const auto& x = local.satake();
  const auto h = complete_homogeneous(x.e1(), x.e2(), 2 * max_exp + 1);
  for (int a = 0; a <= max_exp; ++a) {
    for (int b = 0; b <= max_exp; ++b) {
      const int top = a + b;
      out[{a, b}] = b == 0 ? h[top] : h[top] * h[b] - h[top + 1] * h[b - 1];
    }
  }
  out[{0, 0}] = 1.0;
  return out;
}

CoefficientTable::CoefficientTable(std::int64_t bound_m, std::int64_t bound_n, std::vector<cplx> entries,
                                   std::vector<PrimeLocalData> locals)
    : bound_m_(bound_m), bound_n_(bound_n), entries_(std::move(entries)), locals_(std::move(locals)) {
  if (bound_m < 1 || bound_n < 1) throw std::invalid_argument("CoefficientTable: bounds must be positive");
  if (entries_.size() != static_cast<std::size_t>(bound_m * bound_n)) {
    throw std::invalid_argument("CoefficientTable: entry count does not match bounds");
  }
}

cplx CoefficientTable::at(std::int64_t m, std::int64_t n) const {
  if (!contains(m, n)) throw OutOfBoundsError(m, n);
  return entries_[static_cast<std::size_t>((m - 1) * bound_n_ + (n - 1))];
}

const PrimeLocalData& CoefficientTable::local(std::int64_t p) const {
  auto it = std::find_if(locals_.begin(), locals_.end(), [p](const auto& l) { return l.p() == p; });
  if (it == locals_.end()) throw MissingPrimeError(p);
  return *it;
}

namespace {

int max_exponent(std::int64_t p, std::int64_t bound) {
  int e = 0;
  for (std::int64_t v = p; v <= bound; v *= p) ++e;
  return e;
}

}  // namespace

CoefficientTable extend_multiplicative(std::span<const PrimeLocalData> locals, std::int64_t bound_m,
                                       std::int64_t bound_n) {
  if (bound_m < 1 || bound_n < 1) throw std::invalid_argument("extend_multiplicative: bounds must be positive");
  const std::int64_t bound = std::max(bound_m, bound_n);

  std::unordered_map<std::int64_t, std::size_t> by_prime;
  for (std::size_t i = 0; i < locals.size(); ++i) by_prime.emplace(locals[i].p(), i);

  // Per-prime dense blocks A(p^a, p^b), (em+1) x (en+1).
  struct Block {
    int em, en;
    std::vector<cplx> v;
    cplx get(int a, int b) const { return v[static_cast<std::size_t>(a * (en + 1) + b)]; }
  };
  std::unordered_map<std::int64_t, Block> blocks;
  std::vector<PrimeLocalData> used;
  for (auto p : primes_up_to(bound)) {
    auto it = by_prime.find(p);
    if (it == by_prime.end()) throw MissingPrimeError(p);
    const auto& local = locals[it->second];
    used.push_back(local);
    Block blk{max_exponent(p, bound_m), max_exponent(p, bound_n), {}};
    const auto& x = local.satake();
    const auto h = complete_homogeneous(x.e1(), x.e2(), blk.em + blk.en + 1);
    blk.v.resize(static_cast<std::size_t>((blk.em + 1) * (blk.en + 1)));
    for (int a = 0; a <= blk.em; ++a) {
      for (int b = 0; b <= blk.en; ++b) {
        const int top = a + b;
        blk.v[static_cast<std::size_t>(a * (blk.en + 1) + b)] =
            b == 0 ? h[top] : h[top] * h[b] - h[top + 1] * h[b - 1];
      }
    }
    blk.v[0] = 1.0;
    blocks.emplace(p, std::move(blk));
  }

  const FactorSieve sieve(bound);
  std::vector<std::vector<std::pair<std::int64_t, int>>> fac_n(static_cast<std::size_t>(bound_n) + 1);
  for (std::int64_t n = 1; n <= bound_n; ++n) fac_n[n] = sieve.factorize(n);

  std::vector<cplx> entries(static_cast<std::size_t>(bound_m * bound_n));
  for (std::int64_t m = 1; m <= bound_m; ++m) {
    const auto fm = sieve.factorize(m);
    for (std::int64_t n = 1; n <= bound_n; ++n) {
      const auto& fn = fac_n[n];
      cplx value = 1.0;
      std::size_t i = 0, j = 0;
      while (i < fm.size() || j < fn.size()) {
        std::int64_t p;
        int a = 0, b = 0;
        if (j == fn.size() || (i < fm.size() && fm[i].first < fn[j].first)) {
          p = fm[i].first;
          a = fm[i++].second;
        } else if (i == fm.size() || fn[j].first < fm[i].first) {
          p = fn[j].first;
          b = fn[j++].second;
        } else {
          p = fm[i].first;
          a = fm[i++].second;
          b = fn[j++].second;
        }
        value *= blocks.at(p).get(a, b);
      }
      entries[static_cast<std::size_t>((m - 1) * bound_n + (n - 1))] = value;
    }
  }
  return CoefficientTable(bound_m, bound_n, std::move(entries), std::move(used));
}

double hecke_residual(const CoefficientTable& table, std::int64_t m, std::int64_t m1, std::int64_t m2) {
  if (m < 1 || m1 < 1 || m2 < 1) throw std::invalid_argument("hecke_residual: indices must be positive");
  cplx sum = 0.0;
  for (auto c1 : divisors(m)) {
    if (m1 % c1 != 0) continue;
    const auto rest = m / c1;
    for (auto c2 : divisors(rest)) {
      if (m2 % c2 != 0) continue;
      const auto c3 = rest / c2;
      sum += table.at(m1 * c3 / c1, m2 * c1 / c2);
    }
  }
  return std::abs(table.at(m, 1) * table.at(m1, m2) - sum);
}

cplx mobius_expand(const CoefficientTable& table, std::int64_t m1, std::int64_t m2) {
  if (m1 < 1 || m2 < 1) throw std::invalid_argument("mobius_expand: indices must be positive");
  if (!table.contains(m1, m2)) throw OutOfBoundsError(m1, m2);
  cplx sum = 0.0;
  for (auto d : divisors(std::gcd(m1, m2))) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    sum += static_cast<double>(mu) * table.at(m1 / d, 1) * table.at(1, m2 / d);
  }
  return sum;
}

GL2FormData GL2FormData::from_pairs(std::vector<std::pair<std::int64_t, double>> pairs) {
  GL2FormData g;
  g.ramanujan = std::all_of(pairs.begin(), pairs.end(), [](const auto& pr) { return std::abs(pr.second) <= 2.0; });
  g.pairs = std::move(pairs);
  return g;
}

std::vector<PrimeLocalData> sym2_lift(const GL2FormData& g) {
  std::vector<std::int64_t> bad;
  for (const auto& [p, lambda] : g.pairs) {
    if (!(std::abs(lambda) <= 2.0)) bad.push_back(p);
  }
  if (!bad.empty()) throw NonTemperedError(std::move(bad));

  std::vector<PrimeLocalData> out;
  out.reserve(g.pairs.size());
  for (const auto& [p, lambda] : g.pairs) {
    // lambda = 2 cos(theta); beta = e^{i theta}. theta = 0 at lambda = 2, pi at lambda = -2.
    const double theta = std::acos(std::clamp(lambda / 2.0, -1.0, 1.0));
    const cplx b2 = std::polar(1.0, 2.0 * theta);
    out.emplace_back(p, SatakeTriple(b2, 1.0, std::conj(b2)));
  }
  return out;
}

GL2FormData delta_gl2_data(const TauSeries& tau, std::int64_t bound) {
  if (bound > static_cast<std::int64_t>(tau.tau.size())) {
    throw std::invalid_argument("delta_gl2_data: tau series shorter than requested bound");
  }
  std::vector<std::pair<std::int64_t, double>> pairs;
  for (auto p : primes_up_to(bound)) pairs.emplace_back(p, tau.normalized[p - 1]);
  return GL2FormData::from_pairs(std::move(pairs));
}

CoefficientTable sym2_delta_table(std::int64_t bound_m) {
  const auto tau = ramanujan_tau(std::max<std::int64_t>(bound_m, 2));
  const auto locals = sym2_lift(delta_gl2_data(tau, bound_m));
  return extend_multiplicative(locals, bound_m, 1);
}

}  // namespace gl3
