#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lext/bigint.hpp"
#include "lext/errors.hpp"

namespace lext {

/// Exact sparse polynomial in q with integer coefficients. The canonical form
/// stores no zero coefficients. With `Laurent` false every operation that
/// would produce a negative exponent throws InconsistencyError.
template <bool Laurent>
class BasicQPoly {
 public:
  using Terms = std::map<long, BigInt>;

  BasicQPoly() = default;
  BasicQPoly(long constant) { add_term(0, constant); }  // NOLINT: implicit scalar promotion
  BasicQPoly(const BigInt& constant) { add_term(0, constant); }  // NOLINT

  static BasicQPoly monomial(long exponent, const BigInt& coefficient = 1) {
    BasicQPoly p;
    p.add_term(exponent, coefficient);
    return p;
  }

  /// From (exponent, coefficient) pairs; repeated exponents accumulate.
  static BasicQPoly from_terms(const std::vector<std::pair<long, BigInt>>& terms) {
    BasicQPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Highest exponent; zero polynomial reports 0.
  long degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  long lowest_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

  BigInt at_one() const {
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
  }

  void add_term(long exponent, const BigInt& coefficient) {
    if (coefficient == 0) return;
    if constexpr (!Laurent) {
      if (exponent < 0)
        throw InconsistencyError("negative exponent q^" + std::to_string(exponent) +
                                 " in a plain polynomial");
    }
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Multiplication by q^shift.
  BasicQPoly shifted(long shift) const {
    BasicQPoly out;
    for (const auto& [e, c] : terms_) out.add_term(e + shift, c);
    return out;
  }

  BasicQPoly& operator+=(const BasicQPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  BasicQPoly& operator-=(const BasicQPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }
  BasicQPoly& operator*=(const BasicQPoly& rhs) { return *this = *this * rhs; }

  friend BasicQPoly operator+(BasicQPoly lhs, const BasicQPoly& rhs) { return lhs += rhs; }
  friend BasicQPoly operator-(BasicQPoly lhs, const BasicQPoly& rhs) { return lhs -= rhs; }
  friend BasicQPoly operator-(const BasicQPoly& p) { return BasicQPoly() - p; }
  friend BasicQPoly operator*(const BasicQPoly& lhs, const BasicQPoly& rhs) {
    BasicQPoly out;
    for (const auto& [ea, ca] : lhs.terms_)
      for (const auto& [eb, cb] : rhs.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  BasicQPoly pow(unsigned exponent) const {
    BasicQPoly result(1L);
    for (unsigned i = 0; i < exponent; ++i) result *= *this;
    return result;
  }

  friend bool operator==(const BasicQPoly&, const BasicQPoly&) = default;

  /// Ascending exponents, "c*q^e" terms joined by " + ", "1*" and "q^0" omitted.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      if (e == 0) {
        out += c.str();
      } else if (c == 1) {
        out += "q^" + std::to_string(e);
      } else if (c == -1) {
        out += "-q^" + std::to_string(e);
      } else {
        out += c.str() + "*q^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

using QPolynomial = BasicQPoly<false>;
using QLaurent = BasicQPoly<true>;

QLaurent to_laurent(const QPolynomial& p);
/// Throws InconsistencyError if any exponent is negative.
QPolynomial to_polynomial(const QLaurent& p);
/// p(1/q).
QLaurent reciprocal_substitution(const QPolynomial& p);

/// Exact quotient num/den. Throws InconsistencyError when den does not divide
/// num over the integers.
QPolynomial divide_exact(const QPolynomial& num, const QPolynomial& den);

/// (1 + q)^n expanded.
QPolynomial one_plus_q_pow(unsigned n);

}  // namespace lext
