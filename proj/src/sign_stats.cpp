#include "gl3/sign_stats.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gl3/arith.hpp"

namespace gl3 {

SignChangeReport count_sign_changes(const RealSequence& seq, double zero_tol) {
  if (zero_tol < 0) throw std::invalid_argument("count_sign_changes: zero_tol must be >= 0");
  SignChangeReport r;
  std::size_t last = 0;  // 1-based index of the previous nonzero entry
  int last_sign = 0;
  for (std::size_t i = 1; i <= seq.size(); ++i) {
    const double v = seq.at(i);
    if (std::abs(v) <= zero_tol) {
      ++r.zeros;
      continue;
    }
    const int s = v > 0 ? 1 : -1;
    (s > 0 ? r.positives : r.negatives)++;
    if (last_sign != 0 && s != last_sign) r.positions.emplace_back(last, i);
    last = i;
    last_sign = s;
  }
  r.changes = r.positions.size();
  return r;
}

ShortIntervalConfig::ShortIntervalConfig(std::int64_t X_, std::int64_t H_, std::int64_t M_, double theta_,
                                         double delta_)
    : X(X_), H(H_), M(M_), theta(theta_), delta(delta_) {
  if (M < 1 || !(M < H) || H > X) throw std::invalid_argument("ShortIntervalConfig: need 1 <= M < H <= X");
}

ShortSums short_interval_sums(const CoefficientTable& table, const ShortIntervalConfig& cfg, std::int64_t x) {
  ShortSums r;
  cplx sum = 0.0;
  for (std::int64_t m = cfg.M; m <= 2 * cfg.M; ++m) {
    const std::int64_t k0 = (x + m - 1) / m;
    const std::int64_t k1 = (x + cfg.H) / m;
    for (std::int64_t k = k0; k <= k1; ++k) {
      if (std::gcd(m, k) != 1) continue;
      const cplx a = table.at(m * k, 1);
      sum += a;
      r.S2 += std::abs(a);
      ++r.terms;
    }
  }
  r.S1 = std::abs(sum);
  return r;
}

ScanReport interval_change_scan(const CoefficientTable& table, const ShortIntervalConfig& cfg, double zero_tol) {
  ScanReport r;
  r.X = cfg.X;
  r.H = cfg.H;
  r.M = cfg.M;
  const std::int64_t stride = std::max<std::int64_t>(1, cfg.H / 4);
  std::int64_t last_counted_end = -1;
  std::int64_t disjoint = 0;
  for (std::int64_t x = cfg.X; x <= 2 * cfg.X; x += stride) {
    ++r.total_x;
    int prev = 0;
    bool change = false;
    for (std::int64_t m = x; m <= x + cfg.H; ++m) {
      const double v = table.at(m, 1).real();
      if (std::abs(v) <= zero_tol) continue;
      const int s = v > 0 ? 1 : -1;
      if (prev != 0 && s != prev) {
        change = true;
        break;
      }
      prev = s;
    }
    if (change) {
      ++r.with_change;
      if (x > last_counted_end) {
        ++disjoint;
        last_counted_end = x + cfg.H;
      }
    }
    const auto sums = short_interval_sums(table, cfg, x);
    const double slack = 1e-12 * std::max(1.0, sums.S2);
    if (sums.S1 > sums.S2 + slack) ++r.comparator_violations;
    if (sums.S1 < sums.S2 - slack) ++r.strict_comparator;
  }
  r.lower_bound_estimate = static_cast<double>(disjoint);
  return r;
}

RealSequence coefficient_sequence(const CoefficientTable& table, std::int64_t X, CoefficientFamily which) {
  RealSequence seq;
  seq.label = which == CoefficientFamily::A_m1 ? "A(m,1)" : "A(m,m)";
  seq.values.reserve(static_cast<std::size_t>(X));
  for (std::int64_t m = 1; m <= X; ++m) {
    seq.values.push_back((which == CoefficientFamily::A_m1 ? table.at(m, 1) : table.at(m, m)).real());
  }
  return seq;
}

NonVanishing nonvanishing_density(const CoefficientTable& table, std::int64_t X, CoefficientFamily which,
                                  double zero_tol) {
  const auto seq = coefficient_sequence(table, X, which);
  NonVanishing r;
  std::size_t nonzero = 0;
  for (double v : seq.values)
    if (std::abs(v) > zero_tol) ++nonzero;
  r.lhs = static_cast<double>(nonzero) / static_cast<double>(X);
  r.rhs = 1.0;
  for (auto p : primes_up_to(X)) {
    if (std::abs(seq.at(static_cast<std::size_t>(p))) <= zero_tol) r.rhs *= 1.0 - 1.0 / static_cast<double>(p);
  }
  r.ratio = r.lhs / r.rhs;
  return r;
}

double partial_sum_abs(const CoefficientTable& table, std::int64_t X) {
  double s = 0.0;
  for (std::int64_t m = 1; m <= X; ++m) s += std::abs(table.at(m, 1));
  return s;
}

double prime_power_abs_sum(const CoefficientTable& table, std::int64_t X) {
  double s = 0.0;
  for (auto p : primes_up_to(2 * X)) {
    for (std::int64_t q = p; q <= 2 * X; q *= p) {
      if (q >= X) s += std::abs(table.at(q, 1));
    }
  }
  return s;
}

double rankin_selberg_ratio(const CoefficientTable& table, std::int64_t X) {
  double s = 0.0;
  for (std::int64_t m = 1; m <= X; ++m) s += std::norm(table.at(m, 1));
  return s / static_cast<double>(X);
}

SignBalance sign_balance(const CoefficientTable& table, std::int64_t X, CoefficientFamily which, double zero_tol) {
  const auto rep = count_sign_changes(coefficient_sequence(table, X, which), zero_tol);
  SignBalance b;
  const auto nonzero = rep.positives + rep.negatives;
  if (nonzero == 0) return b;
  b.pos_frac = static_cast<double>(rep.positives) / static_cast<double>(nonzero);
  b.neg_frac = static_cast<double>(rep.negatives) / static_cast<double>(nonzero);
  return b;
}

}  // namespace gl3
