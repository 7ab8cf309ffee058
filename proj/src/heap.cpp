#include "lext/heap.hpp"

#include <cmath>
#include <cstdio>

#include "lext/errors.hpp"
#include "lext/poset.hpp"

namespace lext {

namespace {

void require_arity(int k) {
  if (k < 2) throw ParameterError("arity k must be >= 2");
}

// Breadth-first backtracking over heap readings. A value is admissible at
// vertex i when it exceeds the parent's label and leaves enough larger
// unused labels for the rest of the subtree.
class HeapSearch {
 public:
  HeapSearch(int n, int k, const PatternSet& patterns)
      : n_(n), k_(k), patterns_(patterns), used_(static_cast<std::size_t>(n) + 1, 0),
        descendants_(static_cast<std::size_t>(n) + 1, 0) {
    for (int i = n; i >= 2; --i) descendants_[kary_parent(i, k)] += descendants_[i] + 1;
    word_.reserve(static_cast<std::size_t>(n));
  }

  template <class Leaf>
  void run(Leaf&& leaf) {
    if (n_ > 0 && patterns_.has_trivial_pattern()) return;
    descend(leaf);
  }

  const std::vector<int>& word() const { return word_; }

 private:
  template <class Leaf>
  void descend(Leaf& leaf) {
    const int i = static_cast<int>(word_.size()) + 1;
    if (i > n_) {
      leaf();
      return;
    }
    const int floor = i == 1 ? 0 : word_[kary_parent(i, k_) - 1];
    int free_above = 0;
    for (int u = floor + 1; u <= n_; ++u) free_above += !used_[u];
    for (int v = floor + 1; v <= n_; ++v) {
      if (used_[v]) continue;
      --free_above;  // unused labels strictly above v
      if (free_above < descendants_[i]) break;
      word_.push_back(v);
      if (!patterns_.last_element_completes_occurrence(word_)) {
        used_[v] = 1;
        descend(leaf);
        used_[v] = 0;
      }
      word_.pop_back();
    }
  }

  int n_;
  int k_;
  const PatternSet& patterns_;
  std::vector<char> used_;
  std::vector<int> descendants_;
  std::vector<int> word_;
};

}  // namespace

KaryHeap::KaryHeap(Permutation sigma, int k) : sigma_(std::move(sigma)), k_(k) {
  if (!is_heap_permutation(sigma_, k_))
    throw ValidationError("not a " + std::to_string(k_) + "-ary heap reading: " +
                          sigma_.to_string());
}

bool is_heap_permutation(const Permutation& sigma, int k) {
  require_arity(k);
  for (int i = 2; i <= sigma.size(); ++i)
    if (sigma(kary_parent(i, k)) > sigma(i)) return false;
  return true;
}

void enumerate_heaps(int n, int k, const PatternSet& patterns,
                     const std::function<void(const Permutation&)>& visit) {
  require_arity(k);
  if (n < 1) throw ParameterError("heap size n must be >= 1");
  HeapSearch search(n, k, patterns);
  search.run([&] { visit(Permutation(search.word())); });
}

std::vector<Permutation> list_heaps(int n, int k, const PatternSet& patterns) {
  std::vector<Permutation> out;
  enumerate_heaps(n, k, patterns, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

BigInt count_heaps(int n, int k, const PatternSet& patterns) {
  require_arity(k);
  if (n < 1) throw ParameterError("heap size n must be >= 1");
  HeapSearch search(n, k, patterns);
  std::uint64_t count = 0;
  search.run([&] { ++count; });
  return BigInt(count);
}

int split_index(int n, int k) {
  require_arity(k);
  if (n < 1) throw ParameterError("n must be >= 1");
  return (n - 1 + k - 1) / k;
}

bool verify_direct_sum_claim(const Permutation& lambda, const Permutation& mu, int k) {
  const int n = lambda.size() + mu.size();
  const int m = split_index(n, k);
  if (lambda.size() != m)
    throw ParameterError("lambda has length " + std::to_string(lambda.size()) +
                         " but split_index(" + std::to_string(n) + "," + std::to_string(k) +
                         ") = " + std::to_string(m));
  if (!is_heap_permutation(lambda, k))
    throw ValidationError("lambda is not a heap reading: " + lambda.to_string());
  return is_heap_permutation(direct_sum(lambda, mu), k);
}

double nth_root(const BigInt& count, int n) {
  if (count <= 0 || n < 1) return 0.0;
  return std::exp(std::log(count.convert_to<double>()) / n);
}

GrowthTable growth_table(int k, const PatternSet& patterns, int n_max) {
  require_arity(k);
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
  GrowthTable table{k, patterns, {}};
  for (int n = 1; n <= n_max; ++n) {
    BigInt count = count_heaps(n, k, patterns);
    const double root = nth_root(count, n);
    table.rows.push_back({n, std::move(count), root});
  }
  return table;
}

std::string GrowthTable::to_csv() const {
  std::string out = "n,count,b_n\n";
  char buf[64];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", row.root);
    out += std::to_string(row.n) + "," + row.count.str() + "," + buf + "\n";
  }
  return out;
}

}  // namespace lext
