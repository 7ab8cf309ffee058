#pragma once

#include <vector>

#include "lext/qpoly.hpp"

namespace lext {

/// Power series in x truncated after x^order, with QPolynomial coefficients.
/// All arithmetic is exact modulo x^(order+1).
class XSeries {
 public:
  explicit XSeries(int order);
  XSeries(int order, std::vector<QPolynomial> coefficients);

  int order() const { return order_; }
  const QPolynomial& operator[](int s) const { return coefficients_[s]; }
  QPolynomial& operator[](int s) { return coefficients_[s]; }
  const std::vector<QPolynomial>& coefficients() const { return coefficients_; }

  friend XSeries operator+(const XSeries& a, const XSeries& b);
  friend XSeries operator-(const XSeries& a, const XSeries& b);
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  friend bool operator==(const XSeries&, const XSeries&) = default;

  /// a / b. The constant coefficient of b must be the constant 1 or -1;
  /// anything else throws ParameterError.
  friend XSeries divide(const XSeries& a, const XSeries& b);

 private:
  int order_;
  std::vector<QPolynomial> coefficients_;
};

}  // namespace lext
