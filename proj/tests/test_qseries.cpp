#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lext/errors.hpp"
#include "lext/poset.hpp"
#include "lext/qpoly.hpp"
#include "lext/theorems.hpp"
#include "lext/xseries.hpp"

using namespace lext;

namespace {

QPolynomial poly(std::vector<std::pair<long, BigInt>> terms) { return QPolynomial::from_terms(terms); }

QPolynomial random_poly(std::mt19937& rng, int max_degree) {
  QPolynomial p;
  for (int e = 0; e <= max_degree; ++e) p.add_term(e, static_cast<long>(rng() % 7) - 3);
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const QPolynomial a = poly({{0, 1}, {1, 1}});
  CHECK(a * a == poly({{0, 1}, {1, 2}, {2, 1}}));
  CHECK(a.pow(3) == one_plus_q_pow(3));
  CHECK(a - a == QPolynomial());
  CHECK((a - a).is_zero());
  CHECK(a.shifted(4) == poly({{4, 1}, {5, 1}}));
  CHECK(one_plus_q_pow(5).at_one() == 32);
  CHECK(one_plus_q_pow(0) == QPolynomial(1L));
  CHECK(poly({{3, 2}, {7, -1}}).degree() == 7);
  CHECK(poly({{3, 2}, {7, -1}}).lowest_exponent() == 3);
  CHECK(poly({{3, 2}, {3, -2}}).terms().empty());
  CHECK_THROWS_AS(QPolynomial::monomial(-1), InconsistencyError);
  CHECK_THROWS_AS(a.shifted(-1), InconsistencyError);
  CHECK(QLaurent::monomial(-2).shifted(2) == QLaurent(1L));
}

TEST_CASE("polynomial printing") {
  CHECK(QPolynomial().to_string() == "0");
  CHECK(poly({{9, 1}, {10, 1}, {11, 2}, {12, 1}}).to_string() == "q^9 + q^10 + 2*q^11 + q^12");
  CHECK(poly({{0, 3}, {2, -1}, {4, -5}}).to_string() == "3 + -q^2 + -5*q^4");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(rng, 6), b = random_poly(rng, 5), c = random_poly(rng, 4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a * b).at_one() == a.at_one() * b.at_one());
    if (!b.is_zero()) CHECK(divide_exact(a * b, b) == a);
  }
}

TEST_CASE("exact division") {
  CHECK(divide_exact(one_plus_q_pow(4), one_plus_q_pow(1)) == one_plus_q_pow(3));
  CHECK(divide_exact(poly({{0, -1}, {3, 1}}), poly({{0, -1}, {1, 1}})) == poly({{0, 1}, {1, 1}, {2, 1}}));
  CHECK_THROWS_AS(divide_exact(poly({{0, 1}, {2, 1}}), poly({{0, 1}, {1, 1}})), InconsistencyError);
  CHECK_THROWS_AS(divide_exact(poly({{0, 1}}), QPolynomial()), std::exception);
}

TEST_CASE("Laurent conversions") {
  const QPolynomial p = poly({{0, 1}, {1, 1}, {2, 2}, {3, 1}});
  const QLaurent r = reciprocal_substitution(p);
  CHECK(r.lowest_exponent() == -3);
  CHECK(to_polynomial(r.shifted(3)) == poly({{0, 1}, {1, 2}, {2, 1}, {3, 1}}));
  CHECK_THROWS_AS(to_polynomial(r), InconsistencyError);
  CHECK(to_polynomial(to_laurent(p)) == p);
}

TEST_CASE("truncated x-series") {
  XSeries one(4), x(4);
  one[0] = 1;
  x[1] = 1;
  const XSeries geometric = divide(one, one - x);
  for (int s = 0; s <= 4; ++s) CHECK(geometric[s] == QPolynomial(1L));
  CHECK(divide(one, one - x) * (one - x) == one);
  XSeries two(4);
  two[0] = 2;
  CHECK_THROWS_AS(divide(one, two), ParameterError);
  XSeries negated(4);
  negated[0] = -1;
  CHECK(divide(one, negated)[0] == QPolynomial(-1L));
}

TEST_CASE("1243 closed form") {
  CHECK(thm2_closed_form(2) == poly({{9, 1}, {10, 1}, {11, 2}, {12, 1}}));
  for (int t = 1; t <= 5; ++t) {
    CHECK(thm2_closed_form(t) == thm2_double_sum(t));
    CHECK(thm2_closed_form(t) == inv_polynomial(rectangular_poset(3, t), Permutation{1, 2, 4, 3}));
  }
}

TEST_CASE("1243 member structure") {
  for (int t = 3; t <= 4; ++t) {
    for (const auto& pi : list_linear_extensions(rectangular_poset(3, t), PatternSet{Permutation{1, 2, 4, 3}})) {
      const auto st = thm2_structure(pi, t);
      CHECK(st.all());
      CHECK(inversions(pi) == 3L * t * t - 3L * t + st.i + st.j);
    }
  }
  CHECK_THROWS_AS(thm2_structure(Permutation{1, 2, 3, 4, 5, 6, 7, 8, 9}, 3), ValidationError);
}

TEST_CASE("2143 on two columns") {
  CHECK(thm3_closed_form(1) == QPolynomial(1L));
  CHECK(thm3_closed_form(2) == poly({{3, 1}, {4, 1}}));
  for (int s = 1; s <= 5; ++s)
    CHECK(thm3_closed_form(s) == inv_polynomial(rectangular_poset(s, 2), Permutation{2, 1, 4, 3}));
}

TEST_CASE("F_s recurrence") {
  CHECK(fs_polynomial(0) == QPolynomial(1L));
  CHECK(fs_polynomial(1) == QPolynomial(1L));
  CHECK(fs_polynomial(2) == poly({{0, 1}, {1, 1}, {2, 2}, {3, 1}}));
  const std::vector<int> at_one = {1, 1, 5, 21, 89, 377};
  for (int s = 0; s <= 5; ++s) CHECK(fs_polynomial(s).at_one() == at_one[s]);
  CHECK_THROWS_AS(fs_polynomial(-1), ParameterError);
}

TEST_CASE("2143 on three columns") {
  CHECK(thm4_closed_form(2) == poly({{6, 1}, {7, 2}, {8, 1}, {9, 1}}));
  for (int s = 1; s <= 4; ++s)
    CHECK(thm4_closed_form(s) == inv_polynomial(rectangular_poset(s, 3), Permutation{2, 1, 4, 3}));
  for (int l = 1; l <= 3; ++l) CHECK(h_polynomial(l) == h_polynomial_direct(l));
  CHECK(h_polynomial_direct(2) == poly({{7, 1}, {8, 1}, {9, 1}}));
}

TEST_CASE("five-way partition") {
  for (int s = 2; s <= 3; ++s) {
    const auto result = verify_thm4_partition(s);
    CHECK(result.report.passed());
    for (const auto& line : result.report.checks) {
      CAPTURE(line.label);
      CHECK(line.passed);
    }
  }
  const auto prefixes = thm4_prefixes(2);
  CHECK(prefixes[0] == std::vector<int>{4, 5, 6});
  CHECK(prefixes[4] == std::vector<int>{4, 5, 1, 2, 6});
}

TEST_CASE("series expansion agrees with the recurrence") {
  const auto expanded = a_series_expand(8);
  const auto f = fs_sequence(8);
  for (int s = 0; s <= 8; ++s) CHECK(expanded[s] == f[s]);
}

TEST_CASE("coefficient diagonals") {
  CHECK(diagonal_coefficients(Diagonal::q3, 6) == std::vector<BigInt>{1, 6, 16, 32, 55});
  CHECK(diagonal_coefficients(Diagonal::two_s_minus_2, 6) == std::vector<BigInt>{2, 5, 13, 32, 76});
  CHECK(diagonal_coefficients(Diagonal::s_plus_1, 7) == std::vector<BigInt>{1, 5, 21, 84, 330, 1287});
  CHECK(diagonal_coefficients(Diagonal::s_plus_2, 4) == std::vector<BigInt>{0, 2, 13});
  CHECK(diagonal_name(Diagonal::two_s_minus_2) == "2s-2");
  CHECK(parse_diagonal("s+1") == Diagonal::s_plus_1);
  CHECK_FALSE(parse_diagonal("s+3").has_value());
  CHECK(diagonal_oeis_id(Diagonal::s_plus_1) == "A002054");
  CHECK(bullet2_gf_check(12).passed());
  const auto b = bullet2_series(8);
  for (int n = 4; n <= 8; ++n) CHECK(b[n] == (BigInt(1) << (n - 4)) * (3 * n + 1));
}
