#include "lext/qpoly.hpp"

namespace lext {

QLaurent to_laurent(const QPolynomial& p) {
  QLaurent out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

QPolynomial to_polynomial(const QLaurent& p) {
  QPolynomial out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

QLaurent reciprocal_substitution(const QPolynomial& p) {
  QLaurent out;
  for (const auto& [e, c] : p.terms()) out.add_term(-e, c);
  return out;
}

QPolynomial divide_exact(const QPolynomial& num, const QPolynomial& den) {
  if (den.is_zero()) throw InconsistencyError("division by the zero polynomial");
  const long den_degree = den.degree();
  const BigInt& lead = den.terms().rbegin()->second;
  QPolynomial remainder = num;
  QPolynomial quotient;
  while (!remainder.is_zero() && remainder.degree() >= den_degree) {
    const long e = remainder.degree() - den_degree;
    const BigInt& top = remainder.terms().rbegin()->second;
    if (top % lead != 0) break;
    const QPolynomial step = QPolynomial::monomial(e, top / lead);
    quotient += step;
    remainder -= step * den;
  }
  if (!remainder.is_zero())
    throw InconsistencyError("non-exact division: (" + num.to_string() + ") / (" +
                             den.to_string() + ") leaves remainder " + remainder.to_string());
  return quotient;
}

QPolynomial one_plus_q_pow(unsigned n) {
  QPolynomial out;
  for (unsigned k = 0; k <= n; ++k) out.add_term(static_cast<long>(k), binomial(n, k));
  return out;
}

}  // namespace lext
