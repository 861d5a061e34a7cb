#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gl3/hecke.hpp"

namespace gl3 {

/// a(1..X); values[i] holds a(i+1).
struct RealSequence {
  std::vector<double> values;
  std::string label;

  std::size_t size() const noexcept { return values.size(); }
  double at(std::size_t i) const { return values.at(i - 1); }
};

struct SignChangeReport {
  std::size_t changes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> positions;  // 1-based (i, j)
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t zeros = 0;
};

/// Sign changes within the subsequence of entries with |a| > zero_tol.
SignChangeReport count_sign_changes(const RealSequence& seq, double zero_tol = 1e-12);

/// M < H <= X. theta and delta are carried as report metadata only.
struct ShortIntervalConfig {
  std::int64_t X, H, M;
  double theta = 0.6;
  double delta = 0.0;

  ShortIntervalConfig(std::int64_t X, std::int64_t H, std::int64_t M, double theta = 0.6, double delta = 0.0);
};

struct ShortSums {
  double S1 = 0;  // |sum A(mk,1)|
  double S2 = 0;  // sum |A(mk,1)|
  std::size_t terms = 0;
};

/// Bilinear sums over x <= mk <= x + H, M <= m <= 2M, gcd(m, k) = 1.
ShortSums short_interval_sums(const CoefficientTable& table, const ShortIntervalConfig& cfg, std::int64_t x);

struct ScanReport {
  std::int64_t X = 0, H = 0, M = 0;
  std::int64_t total_x = 0;
  std::int64_t with_change = 0;
  double lower_bound_estimate = 0;  // disjoint changed intervals
  std::int64_t strict_comparator = 0;  // x with S1 < S2
  std::int64_t comparator_violations = 0;  // x with S1 > S2 (must stay 0)
};

/// Scans x over [X, 2X] with stride max(1, H/4).
ScanReport interval_change_scan(const CoefficientTable& table, const ShortIntervalConfig& cfg,
                                double zero_tol = 1e-12);

enum class CoefficientFamily { A_m1, A_mm };

/// Real parts of A(m,1) or A(m,m) for m = 1..X.
RealSequence coefficient_sequence(const CoefficientTable& table, std::int64_t X, CoefficientFamily which);

struct NonVanishing {
  double lhs = 0;    // #{m <= X : coefficient != 0} / X
  double rhs = 0;    // prod over primes p <= X with vanishing coefficient of (1 - 1/p)
  double ratio = 0;
};

NonVanishing nonvanishing_density(const CoefficientTable& table, std::int64_t X, CoefficientFamily which,
                                  double zero_tol = 1e-12);

/// sum_{m <= X} |A(m,1)|.
double partial_sum_abs(const CoefficientTable& table, std::int64_t X);
/// sum over l and primes p with p^l in [X, 2X] of |A(p^l,1)|.
double prime_power_abs_sum(const CoefficientTable& table, std::int64_t X);
/// sum_{m <= X} |A(m,1)|^2 / X.
double rankin_selberg_ratio(const CoefficientTable& table, std::int64_t X);

struct SignBalance {
  double pos_frac = 0;
  double neg_frac = 0;
};

SignBalance sign_balance(const CoefficientTable& table, std::int64_t X, CoefficientFamily which,
                         double zero_tol = 1e-12);

/// (a^2 - 3a)/4, a minorant of 1_{a<0} on [-1, 3].
inline double negativity_detector_self_dual(double a) { return (a * a - 3.0 * a) / 4.0; }
/// (a^2 - 8a)/9, a minorant of 1_{a<0} on [-1, 8].
inline double negativity_detector_adjoint(double a) { return (a * a - 8.0 * a) / 9.0; }

}  // namespace gl3
