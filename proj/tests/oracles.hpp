#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// shares code with the pruned searches it checks: containment scans every
// index subset, classes are filtered out of all n! permutations, and heaps
// come from filtering S_n by the parent rule.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "lext/permutation.hpp"
#include "lext/poset.hpp"

namespace oracle {

using Word = std::vector<int>;

// Standardization: the permutation order-isomorphic to `w`.
inline Word standardize(const Word& w) {
  Word idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return w[a] < w[b]; });
  Word out(w.size());
  for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<int>(r) + 1;
  return out;
}

// Number of index subsets of `w` order-isomorphic to `pattern`.
inline std::int64_t occurrences(const Word& w, const Word& pattern) {
  const std::size_t n = w.size(), m = pattern.size();
  if (m > n) return 0;
  std::vector<char> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(m), 1);
  std::int64_t count = 0;
  do {
    Word sub;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) sub.push_back(w[i]);
    if (standardize(sub) == pattern) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

inline bool contains(const Word& w, const Word& pattern) { return occurrences(w, pattern) > 0; }

inline std::int64_t inversion_pairs(const Word& w) { return occurrences(w, {2, 1}); }

inline std::vector<Word> all_permutations(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline bool avoids(const Word& w, const std::vector<Word>& patterns) {
  for (const auto& p : patterns)
    if (contains(w, p)) return false;
  return true;
}

inline std::vector<Word> avoiders(int n, const std::vector<Word>& patterns) {
  std::vector<Word> out;
  for (auto& w : all_permutations(n))
    if (avoids(w, patterns)) out.push_back(w);
  return out;
}

// Listing-convention extensions: every label ordering respecting the covers.
inline std::vector<Word> listing_extensions(int n, const std::vector<lext::Cover>& covers) {
  std::vector<Word> out;
  for (auto& w : all_permutations(n)) {
    Word pos(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) pos[w[i]] = i;
    bool ok = true;
    for (const auto& [a, b] : covers) ok = ok && pos[a] < pos[b];
    if (ok) out.push_back(w);
  }
  return out;
}

// Heap readings of the complete k-ary tree: parent of 1-indexed i is
// floor((i-2)/k)+1, written here as a plain loop over children instead.
inline std::vector<Word> heaps(int n, int k) {
  std::vector<Word> out;
  for (auto& w : all_permutations(n)) {
    bool ok = true;
    for (int parent = 1; parent <= n && ok; ++parent)
      for (int c = k * (parent - 1) + 2; c <= std::min(n, k * parent + 1); ++c)
        ok = ok && w[parent - 1] < w[c - 1];
    if (ok) out.push_back(w);
  }
  return out;
}

inline Word random_permutation(int n, std::mt19937& rng) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

inline std::vector<Word> to_words(const std::vector<lext::Permutation>& ps) {
  std::vector<Word> out;
  for (const auto& p : ps) out.emplace_back(p.entries().begin(), p.entries().end());
  return out;
}

}  // namespace oracle
