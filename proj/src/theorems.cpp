#include "lext/theorems.hpp"

#include <algorithm>
#include <set>

#include "lext/errors.hpp"

namespace lext {

namespace {

const PatternSet& pattern_1243() {
  static const PatternSet set{Permutation{1, 2, 4, 3}};
  return set;
}

const PatternSet& pattern_2143() {
  static const PatternSet set{Permutation{2, 1, 4, 3}};
  return set;
}

QPolynomial q_pow(long e) { return QPolynomial::monomial(e); }

void require_class_member(const Permutation& pi, const LabeledPoset& poset,
                          const PatternSet& patterns, const std::string& what) {
  if (!poset.is_linear_extension(pi) || !avoids_all(pi, patterns))
    throw ValidationError(pi.to_string() + " is not in " + what);
}

// Positions (1-indexed) of every value.
std::vector<int> positions_of(const Permutation& pi) {
  std::vector<int> pos(static_cast<std::size_t>(pi.size()) + 1);
  for (int p = 1; p <= pi.size(); ++p) pos[pi(p)] = p;
  return pos;
}

Permutation remove_values(const Permutation& pi, int lo, int hi) {
  std::vector<int> kept;
  for (int v : pi.entries())
    if (v < lo || v > hi) kept.push_back(v);
  return Permutation(std::move(kept));
}

bool has_prefix(const Permutation& pi, const std::vector<int>& prefix) {
  if (pi.size() < static_cast<int>(prefix.size())) return false;
  return std::equal(prefix.begin(), prefix.end(), pi.entries().begin());
}

QPolynomial polynomial_of(const std::vector<Permutation>& members) {
  QPolynomial out;
  for (const auto& p : members) out.add_term(static_cast<long>(inversions(p)), 1);
  return out;
}

}  // namespace

QPolynomial inv_polynomial(const LabeledPoset& poset, const Permutation& tau) {
  return inversion_polynomial(poset, PatternSet{tau});
}

QPolynomial thm2_closed_form(int t) {
  if (t < 1) throw ParameterError("t must be >= 1");
  const long tl = t;
  QPolynomial numerator = QPolynomial::from_terms(
      {{0, 1}, {2 * tl - 1, -1}, {2 * tl, -2}, {3 * tl - 1, 1}, {3 * tl, 1}});
  numerator = numerator.shifted(3 * (tl * tl - tl + 1));
  const QPolynomial denominator = QPolynomial::from_terms({{0, 1}, {1, -1}, {2, -1}, {3, 1}});
  return divide_exact(numerator, denominator);
}

QPolynomial thm2_double_sum(int t) {
  if (t < 1) throw ParameterError("t must be >= 1");
  QPolynomial out;
  const long base = 3L * t * t - 3L * t;
  for (int i = 1; i <= t; ++i)
    for (int j = i + 1; j <= 2 * t; ++j) out.add_term(base + i + j, 1);
  return out;
}

Thm2Structure thm2_structure(const Permutation& pi, int t) {
  if (t < 1) throw ParameterError("t must be >= 1");
  require_class_member(pi, rectangular_poset(3, t), pattern_1243(),
                       "N_{3," + std::to_string(t) + "}(1243)");
  const auto pos = positions_of(pi);
  Thm2Structure out{};
  out.i = pos[t + 1] - 1;
  out.j = pos[1] - 1;
  out.ranges_hold = 1 <= out.i && out.i <= t && out.i < out.j && out.j <= 2 * t;

  std::vector<int> rest;
  for (int v : pi.entries())
    if (v != 1 && v != t + 1) rest.push_back(v);
  std::vector<int> expected;
  for (int v = 2 * t + 1; v <= 3 * t; ++v) expected.push_back(v);
  for (int v = t + 2; v <= 2 * t; ++v) expected.push_back(v);
  for (int v = 2; v <= t; ++v) expected.push_back(v);
  out.removal_word_holds = rest == expected;

  const long expected_inv = 3L * t * t - 3L * t + out.i + out.j;
  out.inversions_hold = inversions(pi) == expected_inv;
  return out;
}

QPolynomial thm3_closed_form(int s) {
  if (s < 1) throw ParameterError("s must be >= 1");
  return one_plus_q_pow(static_cast<unsigned>(s - 1)).shifted(static_cast<long>(2 * s - 1) * (s - 1));
}

std::vector<int> thm3_eta(const Permutation& pi, int s) {
  if (s < 1) throw ParameterError("s must be >= 1");
  require_class_member(pi, rectangular_poset(s, 2), pattern_2143(),
                       "N_{" + std::to_string(s) + ",2}(2143)");
  const auto pos = positions_of(pi);
  std::vector<int> out;
  for (int i = 1; i <= 2 * s - 3; i += 2)
    if (pos[i + 3] < pos[i]) out.push_back(i);
  return out;
}

QPolynomial fs_polynomial(int s) {
  if (s < 0) throw ParameterError("s must be >= 0");
  return fs_sequence(s)[static_cast<std::size_t>(s)];
}

std::vector<QPolynomial> fs_sequence(int s_max) {
  if (s_max < 0) throw ParameterError("s must be >= 0");
  const QPolynomial linear = QPolynomial::from_terms({{0, 1}, {1, 1}, {2, 2}});
  const QPolynomial cubic = q_pow(3);
  std::vector<QPolynomial> f{QPolynomial(1L), QPolynomial(1L)};
  for (int s = 2; s <= s_max; ++s) f.push_back(linear * f[s - 1] + cubic * f[s - 2]);
  f.resize(static_cast<std::size_t>(s_max) + 1);
  return f;
}

QPolynomial thm4_closed_form(int s) {
  if (s < 1) throw ParameterError("s must be >= 1");
  const long shift = 9L * s * (s - 1) / 2;
  const QLaurent laurent = reciprocal_substitution(fs_polynomial(s)).shifted(shift);
  return to_polynomial(laurent);
}

QPolynomial h_polynomial(int l) {
  if (l < 1) throw ParameterError("l must be >= 1");
  QPolynomial h(1L);
  for (int s = 2; s <= l; ++s) {
    const long base = 9L * (s - 1);
    h = (q_pow(base - 1) * one_plus_q_pow(1) * thm4_closed_form(s - 1)) + h.shifted(base - 2);
  }
  return h;
}

namespace {

std::vector<Permutation> h_members(int l) {
  std::vector<Permutation> out;
  linear_extensions(rectangular_poset(l, 3), pattern_2143(), [&](const Permutation& p) {
    if (p.size() >= 2 && p(2) == 3 * l - 1) out.push_back(p);
  });
  return out;
}

}  // namespace

QPolynomial h_polynomial_direct(int l) {
  if (l < 1) throw ParameterError("l must be >= 1");
  return polynomial_of(h_members(l));
}

std::array<std::vector<int>, 5> thm4_prefixes(int s) {
  if (s < 2) throw ParameterError("s must be >= 2");
  const int a = 3 * s - 2, b = 3 * s - 1, c = 3 * s, d = 3 * s - 5, e = 3 * s - 4;
  return {{{a, b, c}, {a, b, d, c}, {a, d, b, c}, {a, d, b, e, c}, {a, b, d, e, c}}};
}

Thm4Partition verify_thm4_partition(int s) {
  if (s < 2) throw ParameterError("s must be >= 2");
  Thm4Partition result{s, {}, {}};
  Report& report = result.report;
  const std::string tag = "s=" + std::to_string(s) + " ";

  const auto members = list_linear_extensions(rectangular_poset(s, 3), pattern_2143());
  const auto prefixes = thm4_prefixes(s);

  // (a) every member has exactly one of the five prefixes.
  std::string partition_failure;
  for (const auto& pi : members) {
    int hits = 0;
    for (std::size_t k = 0; k < 5; ++k) {
      if (has_prefix(pi, prefixes[k])) {
        ++hits;
        result.parts[k].push_back(pi);
      }
    }
    if (hits != 1 && partition_failure.empty())
      partition_failure = pi.to_string() + " lies in " + std::to_string(hits) + " parts";
  }
  report.add(tag + "J1..J5 partition the class", partition_failure.empty(),
             partition_failure.empty() ? std::to_string(members.size()) + " members"
                                       : partition_failure);

  // (b) removal of the three largest labels: bijections with the stated shifts.
  const auto smaller = list_linear_extensions(rectangular_poset(s - 1, 3), pattern_2143());
  const auto smaller_h = h_members(s - 1);
  const std::set<Permutation> smaller_set(smaller.begin(), smaller.end());
  const std::set<Permutation> smaller_h_set(smaller_h.begin(), smaller_h.end());
  const long base = 9L * (s - 1);
  const std::array<long, 5> shifts{base, base - 1, base - 2, base - 3, base - 2};
  const QPolynomial n_prev = polynomial_of(smaller);
  const QPolynomial h_prev = polynomial_of(smaller_h);
  for (std::size_t k = 0; k < 5; ++k) {
    const auto& target = k < 3 ? smaller_set : smaller_h_set;
    const std::string name = "J" + std::to_string(k + 1);
    std::set<Permutation> image;
    std::string failure;
    for (const auto& pi : result.parts[k]) {
      const Permutation reduced = remove_values(pi, 3 * s - 2, 3 * s);
      if (!target.count(reduced) && failure.empty())
        failure = pi.to_string() + " maps outside the target";
      if (!image.insert(reduced).second && failure.empty())
        failure = pi.to_string() + " collides with another member";
      if (inversions(pi) - inversions(reduced) != shifts[k] && failure.empty())
        failure = pi.to_string() + " loses " + std::to_string(inversions(pi) - inversions(reduced)) +
                  " inversions, expected " + std::to_string(shifts[k]);
    }
    if (failure.empty() && image.size() != target.size())
      failure = "image has " + std::to_string(image.size()) + " of " +
                std::to_string(target.size()) + " targets";
    report.add(tag + name + " removal bijection", failure.empty(), failure);

    const QPolynomial lhs = polynomial_of(result.parts[k]);
    const QPolynomial rhs = (k < 3 ? n_prev : h_prev).shifted(shifts[k]);
    report.add(tag + name + " inversion identity", lhs == rhs,
               lhs == rhs ? lhs.to_string() : lhs.to_string() + " != " + rhs.to_string());
  }

  // (c) the two recurrences as polynomial identities.
  const QPolynomial n_now = polynomial_of(members);
  const auto h_now_members = h_members(s);
  const QPolynomial h_now = polynomial_of(h_now_members);
  const QPolynomial eq2 = q_pow(base - 2) * QPolynomial::from_terms({{0, 1}, {1, 1}, {2, 1}}) * n_prev +
                          q_pow(base - 3) * one_plus_q_pow(1) * h_prev;
  report.add(tag + "class recurrence", n_now == eq2,
             n_now == eq2 ? n_now.to_string() : n_now.to_string() + " != " + eq2.to_string());
  const QPolynomial eq3 = q_pow(base - 1) * one_plus_q_pow(1) * n_prev + q_pow(base - 2) * h_prev;
  report.add(tag + "H recurrence", h_now == eq3,
             h_now == eq3 ? h_now.to_string() : h_now.to_string() + " != " + eq3.to_string());

  // (d) J1, J2, J5 partition H_s.
  std::set<Permutation> union_125;
  for (std::size_t k : {0u, 1u, 4u}) union_125.insert(result.parts[k].begin(), result.parts[k].end());
  const std::set<Permutation> h_set(h_now_members.begin(), h_now_members.end());
  const std::size_t summed = result.parts[0].size() + result.parts[1].size() + result.parts[4].size();
  const bool h_ok = union_125 == h_set && summed == h_set.size();
  report.add(tag + "J1, J2, J5 partition H_s", h_ok,
             std::to_string(summed) + " members vs |H_s| = " + std::to_string(h_set.size()));
  return result;
}

XSeries a_series_expand(int order) {
  XSeries numerator(order);
  numerator[0] = QPolynomial(1L);
  if (order >= 1) numerator[1] = -QPolynomial::from_terms({{1, 1}, {2, 2}});
  XSeries denominator(order);
  denominator[0] = QPolynomial(1L);
  if (order >= 1) denominator[1] = -QPolynomial::from_terms({{0, 1}, {1, 1}, {2, 2}});
  if (order >= 2) denominator[2] = -q_pow(3);
  return divide(numerator, denominator);
}

long diagonal_exponent(Diagonal kind, int s) {
  switch (kind) {
    case Diagonal::q3: return 3;
    case Diagonal::two_s_minus_2: return 2L * s - 2;
    case Diagonal::s_minus_1: return s - 1;
    case Diagonal::s: return s;
    case Diagonal::s_plus_1: return s + 1;
    case Diagonal::s_plus_2: return s + 2;
  }
  throw ParameterError("unknown diagonal");
}

std::string_view diagonal_name(Diagonal kind) {
  switch (kind) {
    case Diagonal::q3: return "q3";
    case Diagonal::two_s_minus_2: return "2s-2";
    case Diagonal::s_minus_1: return "s-1";
    case Diagonal::s: return "s";
    case Diagonal::s_plus_1: return "s+1";
    case Diagonal::s_plus_2: return "s+2";
  }
  return "?";
}

std::optional<Diagonal> parse_diagonal(std::string_view name) {
  for (Diagonal d : kAllDiagonals)
    if (diagonal_name(d) == name) return d;
  return std::nullopt;
}

std::string_view diagonal_oeis_id(Diagonal kind) {
  switch (kind) {
    case Diagonal::q3: return "A134465";
    case Diagonal::two_s_minus_2: return "A098156";
    case Diagonal::s_minus_1: return "A116914";
    case Diagonal::s: return "A072547";
    case Diagonal::s_plus_1: return "A002054";
    case Diagonal::s_plus_2: return "A127531";
  }
  return "";
}

std::vector<BigInt> diagonal_coefficients(Diagonal kind, int s_max) {
  if (s_max < 2) throw ParameterError("s_max must be >= 2");
  const auto f = fs_sequence(s_max);
  std::vector<BigInt> out;
  for (int s = 2; s <= s_max; ++s) out.push_back(f[s].coefficient(diagonal_exponent(kind, s)));
  return out;
}

std::vector<BigInt> bullet2_series(int order) {
  XSeries numerator(order);
  const std::array<long, 5> num{0, 1, -2, 1, 1};
  for (int s = 0; s <= std::min(order, 4); ++s) numerator[s] = QPolynomial(num[s]);
  XSeries denominator(order);
  const std::array<long, 3> den{1, -4, 4};
  for (int s = 0; s <= std::min(order, 2); ++s) denominator[s] = QPolynomial(den[s]);
  const XSeries quotient = divide(numerator, denominator);
  std::vector<BigInt> out;
  for (int s = 0; s <= order; ++s) out.push_back(quotient[s].coefficient(0));
  return out;
}

Report bullet2_gf_check(int s_max) {
  if (s_max < 2) throw ParameterError("s_max must be >= 2");
  const auto series = bullet2_series(s_max);
  const auto diagonal = diagonal_coefficients(Diagonal::two_s_minus_2, s_max);
  Report report;
  for (int s = 2; s <= s_max; ++s) {
    const BigInt& gf = series[static_cast<std::size_t>(s)];
    const BigInt& coeff = diagonal[static_cast<std::size_t>(s - 2)];
    report.add("s=" + std::to_string(s) + " [x^s] GF vs [q^(2s-2)] F_s", gf == coeff,
               gf.str() + (gf == coeff ? " == " : " != ") + coeff.str());
  }
  return report;
}

}  // namespace lext
