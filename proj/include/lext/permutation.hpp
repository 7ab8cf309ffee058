#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lext/bigint.hpp"

namespace lext {

/// A permutation of {1..n} in one-line notation. Positions are 1-indexed
/// through operator(); entries() exposes the underlying word.
class Permutation {
 public:
  Permutation() = default;

  /// Throws ValidationError unless `entries` is a bijection onto {1..n}.
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries);

  static Permutation identity(int n);

  /// Accepts "5 3 1 6 4 2", "5,3,1,6,4,2", "5-3-1" or, when every entry is a
  /// single digit, the compact form "531642".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  int operator()(int position) const { return entries_[position - 1]; }
  std::span<const int> entries() const { return entries_; }

  Permutation reversed() const;

  /// Space-separated entries.
  std::string to_string() const;
  /// Digits run together ("531642"); only meaningful when n <= 9.
  std::string to_compact() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

bool is_bijection(std::span<const int> word);

namespace detail {

// Precomputed matching order for one pattern: for pattern element j, the
// earlier pattern elements whose values bound it from below and above.
struct PatternPlan {
  std::vector<int> values;
  std::vector<int> lower;  // index k < j with the largest values[k] < values[j], or -1
  std::vector<int> upper;  // index k < j with the smallest values[k] > values[j], or -1

  explicit PatternPlan(std::span<const int> pattern);
};

bool occurs(std::span<const int> word, const PatternPlan& plan);
bool occurs_ending_at_last(std::span<const int> word, const PatternPlan& plan);

}  // namespace detail

/// True iff some subsequence of `word` is order-isomorphic to `pattern`.
/// `word` may be any sequence of distinct integers.
bool contains(std::span<const int> word, std::span<const int> pattern);
bool contains(const Permutation& sigma, const Permutation& tau);

/// Canonical, deduplicated list of patterns ordered by length, then
/// lexicographically.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<Permutation> patterns);
  PatternSet(std::initializer_list<Permutation> patterns);

  /// Comma-separated list of patterns, e.g. "321" or "1243,2143".
  static PatternSet parse(std::string_view text);

  const std::vector<Permutation>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  std::size_t size() const { return patterns_.size(); }

  /// The pattern 1 is present: every nonempty word contains it.
  bool has_trivial_pattern() const { return has_trivial_; }
  bool all_sum_indecomposable() const;

  bool avoided_by(std::span<const int> word) const;

  /// Assuming word[0..size-2] avoids every pattern, reports whether appending
  /// the last element created an occurrence. Used for prefix pruning.
  bool last_element_completes_occurrence(std::span<const int> word) const;

  std::string to_string() const;

 private:
  std::vector<Permutation> patterns_;
  std::vector<detail::PatternPlan> plans_;
  bool has_trivial_ = false;
};

bool avoids_all(const Permutation& sigma, const PatternSet& patterns);

std::int64_t inversions(std::span<const int> word);
inline std::int64_t inversions(const Permutation& sigma) { return inversions(sigma.entries()); }

Permutation direct_sum(const Permutation& lambda, const Permutation& mu);
bool is_sum_indecomposable(const Permutation& sigma);

/// Streams Av_n(T) in lexicographic order.
void enumerate_avoiders(int n, const PatternSet& patterns,
                        const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> list_avoiders(int n, const PatternSet& patterns);
BigInt count_avoiders(int n, const PatternSet& patterns);

BigInt catalan(unsigned n);

}  // namespace lext
