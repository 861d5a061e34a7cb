#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "gl3/arith.hpp"
#include "gl3/hecke.hpp"
#include "gl3/random.hpp"

namespace testing {

using gl3::cplx;

inline double two_pi() { return 2.0 * std::numbers::pi; }

inline gl3::SatakeTriple random_tempered(gl3::Rng& rng) {
  return gl3::SatakeTriple::from_angles(rng.uniform(0.0, two_pi()), rng.uniform(0.0, two_pi()));
}

inline gl3::SatakeTriple random_self_dual(gl3::Rng& rng) {
  return gl3::SatakeTriple::from_angles(rng.uniform(0.0, two_pi()), 0.0);
}

inline std::vector<gl3::PrimeLocalData> random_locals(std::int64_t bound, gl3::Rng& rng, bool self_dual = false) {
  std::vector<gl3::PrimeLocalData> out;
  for (auto p : gl3::primes_up_to(bound)) out.emplace_back(p, self_dual ? random_self_dual(rng) : random_tempered(rng));
  return out;
}

inline std::vector<gl3::PrimeLocalData> degenerate_locals(std::int64_t bound) {
  std::vector<gl3::PrimeLocalData> out;
  for (auto p : gl3::primes_up_to(bound)) out.emplace_back(p, gl3::SatakeTriple(1.0, 1.0, 1.0));
  return out;
}

// Bialternant det(x_j^{lambda_i + 3 - i}) / det(x_j^{3 - i}) for lambda = (b1 + b2, b2, 0).
inline cplx vandermonde_ratio(int b1, int b2, cplx x1, cplx x2, cplx x3) {
  auto det3 = [](int e1, int e2, int e3, cplx a, cplx b, cplx c) {
    auto pw = [](cplx z, int e) { return std::pow(z, e); };
    return pw(a, e1) * (pw(b, e2) * pw(c, e3) - pw(b, e3) * pw(c, e2)) -
           pw(b, e1) * (pw(a, e2) * pw(c, e3) - pw(a, e3) * pw(c, e2)) +
           pw(c, e1) * (pw(a, e2) * pw(b, e3) - pw(a, e3) * pw(b, e2));
  };
  return det3(b1 + b2 + 2, b2 + 1, 0, x1, x2, x3) / det3(2, 1, 0, x1, x2, x3);
}

// Weyl dimension of partition (b1 + b2, b2, 0).
inline double weyl_dimension(int b1, int b2) { return (b1 + 1.0) * (b2 + 1.0) * (b1 + b2 + 2.0) / 2.0; }

}  // namespace testing
