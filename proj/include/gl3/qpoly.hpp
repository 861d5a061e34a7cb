#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gl3 {

/// Integer polynomial in a formal variable q; coeffs[k] multiplies q^k.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(std::initializer_list<std::int64_t> coeffs);
  explicit QPolynomial(std::vector<std::int64_t> coeffs);

  static QPolynomial monomial(int power, std::int64_t coeff = 1);

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int k) const noexcept {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0;
  }

  /// Horner in long double.
  double operator()(double q) const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial operator-() const;
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// Element of the Weyl group S3 acting on coordinate triples.
struct WeylElement {
  std::array<int, 3> perm;  // (w.x)[i] = x[perm[i]]
  int length;               // number of inversions

  template <typename T>
  std::array<T, 3> apply(const std::array<T, 3>& x) const {
    return {x[perm[0]], x[perm[1]], x[perm[2]]};
  }
  int sign() const noexcept { return length % 2 == 0 ? 1 : -1; }
};

const std::array<WeylElement, 6>& weyl_group();

/// sum over W of q^length(w) = 1 + 2q + 2q^2 + q^3.
QPolynomial weyl_poincare();
double weyl_poincare(double q);

}  // namespace gl3
