#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lext/bigint.hpp"
#include "lext/permutation.hpp"
#include "lext/poset.hpp"
#include "lext/qpoly.hpp"
#include "lext/report.hpp"
#include "lext/xseries.hpp"

namespace lext {

/// Sum of q^inv over the extensions of `poset` that avoid `tau`.
QPolynomial inv_polynomial(const LabeledPoset& poset, const Permutation& tau);

// ---- 1243-avoiding extensions of the 3 x t rectangle ----

/// q^(3(t^2-t+1)) (1 - q^(2t-1) - 2q^(2t) + q^(3t-1) + q^(3t)) / ((1-q)(1-q^2)),
/// reduced by exact division.
QPolynomial thm2_closed_form(int t);
/// sum_{i=1..t} sum_{j=i+1..2t} q^(3t^2-3t+i+j).
QPolynomial thm2_double_sum(int t);

/// Positions of t+1 and 1 in a member pi of N_{3,t}(1243): pi(i+1) = t+1 and
/// pi(j+1) = 1, plus the structural facts the counting argument relies on.
struct Thm2Structure {
  int i;
  int j;
  bool ranges_hold;        // 1 <= i <= t and i < j <= 2t
  bool removal_word_holds; // deleting 1 and t+1 leaves (2t+1..3t)(t+2..2t)(2..t)
  bool inversions_hold;    // inv(pi) == 3t^2 - 3t + i + j
  bool all() const { return ranges_hold && removal_word_holds && inversions_hold; }
};

/// Throws ValidationError unless pi is a 1243-avoiding extension of N_{3,t}.
Thm2Structure thm2_structure(const Permutation& pi, int t);

// ---- 2143-avoiding extensions of the s x 2 rectangle ----

/// q^((2s-1)(s-1)) (1+q)^(s-1).
QPolynomial thm3_closed_form(int s);

/// The odd i in {1,3,..,2s-3} such that i+3 precedes i in pi, ascending.
/// Throws ValidationError unless pi is a 2143-avoiding extension of N_{s,2}.
std::vector<int> thm3_eta(const Permutation& pi, int s);

// ---- 2143-avoiding extensions of the s x 3 rectangle ----

/// F_0 = F_1 = 1, F_s = (1 + r + 2r^2) F_{s-1} + r^3 F_{s-2}.
QPolynomial fs_polynomial(int s);
/// F_0..F_{s_max}.
std::vector<QPolynomial> fs_sequence(int s_max);

/// q^(9 C(s,2)) F_s(1/q), computed through a Laurent intermediate.
QPolynomial thm4_closed_form(int s);

/// H_l(q) from H_1 = 1 and
/// H_l = q^(9(l-1)-1) (1+q) N_{l-1,3}(2143)(q) + q^(9(l-1)-2) H_{l-1}(q).
QPolynomial h_polynomial(int l);
/// H_l(q) by enumerating the members of N_{l,3}(2143) with pi(2) = 3l-1.
QPolynomial h_polynomial_direct(int l);

/// Outcome of checking the five-way prefix partition of N_{s,3}(2143).
struct Thm4Partition {
  int s;
  std::array<std::vector<Permutation>, 5> parts;  // J_1..J_5
  Report report;
};

/// Prefixes defining J_1..J_5 for the given s >= 2.
std::array<std::vector<int>, 5> thm4_prefixes(int s);

Thm4Partition verify_thm4_partition(int s);

// ---- the bivariate series and its coefficient diagonals ----

/// (1 - (q + 2q^2) x) / (1 - (1 + q + 2q^2) x - q^3 x^2) expanded to x^order.
XSeries a_series_expand(int order);

enum class Diagonal { q3, two_s_minus_2, s_minus_1, s, s_plus_1, s_plus_2 };

inline constexpr std::array<Diagonal, 6> kAllDiagonals = {
    Diagonal::q3, Diagonal::two_s_minus_2, Diagonal::s_minus_1,
    Diagonal::s,  Diagonal::s_plus_1,      Diagonal::s_plus_2};

/// Exponent e read from F_s for this diagonal.
long diagonal_exponent(Diagonal kind, int s);
std::string_view diagonal_name(Diagonal kind);
std::optional<Diagonal> parse_diagonal(std::string_view name);
/// The OEIS sequence the diagonal is asserted to match.
std::string_view diagonal_oeis_id(Diagonal kind);

/// ([q^e] F_s) for s = 2..s_max.
std::vector<BigInt> diagonal_coefficients(Diagonal kind, int s_max);

/// Coefficients c_0..c_order of x (1 - 2x + x^2 + x^3) / (1 - 2x)^2.
std::vector<BigInt> bullet2_series(int order);
/// Compares bullet2_series against the 2s-2 diagonal for s = 2..s_max.
Report bullet2_gf_check(int s_max);

}  // namespace lext
