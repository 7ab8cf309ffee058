#pragma once

#include <cstddef>

#include "lext/oeis.hpp"
#include "lext/report.hpp"

namespace lext::verify {

struct Defaults {
  static constexpr int thm2_max_t = 6;
  static constexpr int thm2_structure_max_t = 5;
  static constexpr int thm3_max_s = 7;
  static constexpr int thm4_max_s = 5;
  static constexpr int series_order = 10;
  static constexpr int thm5_max_s = 12;
  static constexpr std::size_t thm5_min_overlap = 6;
  static constexpr int claim_max_n = 9;
  static constexpr int suffix_max_n = 200;
  static constexpr int bounds_max_n = 10;
  static constexpr int heap_321_max_n = 12;
};

/// Enumeration vs. closed form vs. double sum for t = 1..max_t, and the
/// positional structure of every class member for t = 3..structure_max_t.
Report thm2(int max_t, int structure_max_t);

/// Closed form and the subset bijection for s = 1..max_s.
Report thm3(int max_s);

/// Closed form for s = 1..max_s, H recurrence vs. enumeration for l = 1..max_s.
Report thm4(int max_s);

/// The five-way partition checks for s = 2..max_s.
Report thm4_partition(int max_s);

/// Series expansion of the bivariate rational function vs. the recurrence.
Report series(int order);

/// The six coefficient diagonals against OEIS data, plus the rational
/// generating function of the 2s-2 diagonal.
Report thm5(const oeis::Client& client, int max_s, std::size_t min_overlap);

/// Direct sums of a heap reading on the first ceil((n-1)/k) vertices with any
/// permutation are heap readings; the suffix is an antichain.
Report claim(int max_n, int suffix_max_n);

/// Injection and product inequalities for k in {2,3}, T in {{321},{2143}},
/// and the 4^n / 2^(n-1) bounds for binary heaps avoiding 321. The product
/// inequality is asserted only for sum-indecomposable T (2143 = 21 (+) 21 is
/// reported as a note).
Report bounds(int max_n, int heap_321_max_n);

}  // namespace lext::verify
