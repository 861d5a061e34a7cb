#include "gl3/qpoly.hpp"

#include <algorithm>

namespace gl3 {

QPolynomial::QPolynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

QPolynomial::QPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(int power, std::int64_t coeff) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(power) + 1, 0);
  c[power] = coeff;
  return QPolynomial(std::move(c));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

double QPolynomial::operator()(double q) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + static_cast<long double>(*it);
  return static_cast<double>(acc);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) { return *this += -rhs; }

QPolynomial QPolynomial::operator-() const {
  QPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(c));
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto c = coeffs_[k];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const auto a = c < 0 ? -c : c;
    if (k == 0 || a != 1) s += std::to_string(a);
    if (k >= 1) s += "q";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

const std::array<WeylElement, 6>& weyl_group() {
  static const std::array<WeylElement, 6> group = [] {
    std::array<WeylElement, 6> g{};
    std::array<int, 3> perm{0, 1, 2};
    std::size_t i = 0;
    do {
      int inv = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          if (perm[a] > perm[b]) ++inv;
      g[i++] = WeylElement{perm, inv};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return g;
  }();
  return group;
}

QPolynomial weyl_poincare() {
  QPolynomial w;
  for (const auto& e : weyl_group()) w += QPolynomial::monomial(e.length);
  return w;
}

double weyl_poincare(double q) { return weyl_poincare()(q); }

}  // namespace gl3
