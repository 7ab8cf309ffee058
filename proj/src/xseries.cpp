#include "lext/xseries.hpp"

#include <algorithm>

namespace lext {

XSeries::XSeries(int order) : order_(order) {
  if (order < 0) throw ParameterError("truncation order must be >= 0");
  coefficients_.resize(static_cast<std::size_t>(order) + 1);
}

XSeries::XSeries(int order, std::vector<QPolynomial> coefficients) : XSeries(order) {
  const auto kept = std::min(coefficients.size(), coefficients_.size());
  std::move(coefficients.begin(), coefficients.begin() + static_cast<long>(kept),
            coefficients_.begin());
}

namespace {

int common_order(const XSeries& a, const XSeries& b) { return std::min(a.order(), b.order()); }

}  // namespace

XSeries operator+(const XSeries& a, const XSeries& b) {
  XSeries out(common_order(a, b));
  for (int s = 0; s <= out.order(); ++s) out[s] = a[s] + b[s];
  return out;
}

XSeries operator-(const XSeries& a, const XSeries& b) {
  XSeries out(common_order(a, b));
  for (int s = 0; s <= out.order(); ++s) out[s] = a[s] - b[s];
  return out;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  XSeries out(common_order(a, b));
  for (int s = 0; s <= out.order(); ++s)
    for (int i = 0; i <= s; ++i) out[s] += a[i] * b[s - i];
  return out;
}

XSeries divide(const XSeries& a, const XSeries& b) {
  const QPolynomial& lead = b[0];
  const bool unit = lead == QPolynomial(1L) || lead == QPolynomial(-1L);
  if (!unit) throw ParameterError("series divisor needs constant term +-1, got " + lead.to_string());
  XSeries out(common_order(a, b));
  // a = out * b, solved coefficient by coefficient.
  for (int s = 0; s <= out.order(); ++s) {
    QPolynomial rest = a[s];
    for (int i = 0; i < s; ++i) rest -= out[i] * b[s - i];
    out[s] = rest * lead;  // lead is its own inverse
  }
  return out;
}

}  // namespace lext
