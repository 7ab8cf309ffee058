#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lext/bigint.hpp"
#include "lext/permutation.hpp"

namespace lext {

/// A k-ary heap: the complete k-ary tree on n vertices together with its
/// breadth-first reading sigma, where sigma(i) is the label of vertex v_i.
class KaryHeap {
 public:
  /// Throws ValidationError if sigma violates the heap property.
  KaryHeap(Permutation sigma, int k);

  int size() const { return sigma_.size(); }
  int arity() const { return k_; }
  const Permutation& reading() const { return sigma_; }

 private:
  Permutation sigma_;
  int k_;
};

/// sigma(parent(i)) < sigma(i) for every i >= 2.
bool is_heap_permutation(const Permutation& sigma, int k);

/// Streams the breadth-first readings of heaps in H_n^k(T), lexicographically.
void enumerate_heaps(int n, int k, const PatternSet& patterns,
                     const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> list_heaps(int n, int k, const PatternSet& patterns = {});
BigInt count_heaps(int n, int k, const PatternSet& patterns = {});

/// ceil((n-1)/k), the parent index of v_n. Vertices after it are leaves.
int split_index(int n, int k);

/// Checks that lambda (+) mu is a heap reading. Throws ParameterError unless
/// |lambda| == split_index(|lambda| + |mu|, k), and ValidationError unless
/// lambda is itself a heap reading.
bool verify_direct_sum_claim(const Permutation& lambda, const Permutation& mu, int k);

struct GrowthRow {
  int n;
  BigInt count;
  double root;  // count^(1/n)
};

struct GrowthTable {
  int k;
  PatternSet patterns;
  std::vector<GrowthRow> rows;

  /// "n,count,b_n" header, then one row per n with b_n to 6 decimals.
  std::string to_csv() const;
};

GrowthTable growth_table(int k, const PatternSet& patterns, int n_max);

/// count^(1/n) in floating point; 0 for a zero count.
double nth_root(const BigInt& count, int n);

}  // namespace lext
