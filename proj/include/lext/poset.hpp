#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lext/bigint.hpp"
#include "lext/permutation.hpp"
#include "lext/qpoly.hpp"

namespace lext {

enum class PosetFamily { kary_tree, rectangular };

/// How a linear extension is turned into a permutation.
///  - listing: the labels in the order the extension visits them.
///  - canonical_order: position i holds the visit time of the i-th element
///    of a stored element order (the heap reading).
enum class ReadingConvention { listing, canonical_order };

using Cover = std::pair<int, int>;  // (a, b): a is covered by b

/// A poset on the labels 1..n given by its cover relation. Immutable after
/// construction. The constructor checks that the covers are acyclic and
/// transitively reduced.
class LabeledPoset {
 public:
  LabeledPoset(int n, std::vector<Cover> covers, PosetFamily family, std::vector<int> params,
               ReadingConvention reading, std::vector<int> element_order = {});

  int size() const { return n_; }
  const std::vector<Cover>& covers() const { return covers_; }
  PosetFamily family() const { return family_; }
  const std::vector<int>& params() const { return params_; }
  ReadingConvention reading() const { return reading_; }
  const std::vector<int>& element_order() const { return element_order_; }

  const std::vector<int>& upper_covers(int a) const { return up_[a]; }
  const std::vector<int>& lower_covers(int b) const { return down_[b]; }

  /// a <= b in the partial order.
  bool less_equal(int a, int b) const;
  bool comparable(int a, int b) const { return less_equal(a, b) || less_equal(b, a); }

  /// Every element of `prefix` has all of its lower covers earlier in it.
  bool is_order_ideal_listing(std::span<const int> prefix) const;

  /// Checks that `pi`, read with this poset's convention, is a linear extension.
  bool is_linear_extension(const Permutation& pi) const;

  /// "poset <family> <params> n=<n>" followed by one "a<b" line per cover.
  std::string dump() const;

 private:
  int n_;
  std::vector<Cover> covers_;
  PosetFamily family_;
  std::vector<int> params_;
  ReadingConvention reading_;
  std::vector<int> element_order_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
};

/// Parent of breadth-first vertex i >= 2 in a complete k-ary tree.
inline int kary_parent(int i, int k) { return (i - 2) / k + 1; }

/// The complete k-ary tree on n vertices, elements numbered breadth-first.
LabeledPoset complete_kary_tree(int n, int k);

/// Level sizes of the complete k-ary tree on n vertices, root first.
std::vector<int> kary_level_sizes(int n, int k);

/// Canonical label of grid element (row, column) in the s x t rectangle.
inline int rectangular_label(int s, int t, int row, int column) { return t * (s - row) + column; }

/// The product of an s-chain and a t-chain under the canonical labeling.
LabeledPoset rectangular_poset(int s, int t);

/// Streams every linear extension whose reading avoids `patterns`. Prefixes
/// that already contain a pattern are pruned. Minimal elements (listing) or
/// candidate values (canonical order) are tried in increasing order.
void linear_extensions(const LabeledPoset& poset, const PatternSet& patterns,
                       const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> list_linear_extensions(const LabeledPoset& poset,
                                                const PatternSet& patterns = {});
BigInt count_linear_extensions(const LabeledPoset& poset, const PatternSet& patterns = {});
/// Sum of q^inv(pi) over the avoiding extensions.
QPolynomial inversion_polynomial(const LabeledPoset& poset, const PatternSet& patterns = {});

/// (st)! / product of hook lengths of the s x t rectangle.
BigInt hook_count_rect(int s, int t);
/// n! / product of subtree sizes of the complete k-ary tree.
BigInt hook_count_tree(int n, int k);

/// Vertices v_{m+1}..v_n of the n-vertex complete k-ary tree are pairwise
/// incomparable.
bool suffix_incomparable(int n, int k, int m);

}  // namespace lext
