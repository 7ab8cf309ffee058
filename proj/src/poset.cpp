#include "lext/poset.hpp"

#include <algorithm>
#include <sstream>

#include "lext/errors.hpp"

namespace lext {

LabeledPoset::LabeledPoset(int n, std::vector<Cover> covers, PosetFamily family,
                           std::vector<int> params, ReadingConvention reading,
                           std::vector<int> element_order)
    : n_(n),
      covers_(std::move(covers)),
      family_(family),
      params_(std::move(params)),
      reading_(reading),
      element_order_(std::move(element_order)),
      up_(static_cast<std::size_t>(n) + 1),
      down_(static_cast<std::size_t>(n) + 1) {
  if (n_ < 0) throw ParameterError("poset size must be >= 0");
  std::sort(covers_.begin(), covers_.end());
  if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end())
    throw ValidationError("duplicate cover");
  for (const auto& [a, b] : covers_) {
    if (a < 1 || a > n_ || b < 1 || b > n_ || a == b)
      throw ValidationError("cover out of range: " + std::to_string(a) + "<" + std::to_string(b));
    up_[a].push_back(b);
    down_[b].push_back(a);
  }
  if (reading_ == ReadingConvention::canonical_order) {
    if (element_order_.empty()) {
      element_order_.resize(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) element_order_[i] = i + 1;
    }
    if (static_cast<int>(element_order_.size()) != n_ || !is_bijection(element_order_))
      throw ValidationError("element order must list every element once");
  }

  // Acyclic: Kahn's algorithm consumes every element.
  std::vector<int> indegree(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& [a, b] : covers_) ++indegree[b];
  std::vector<int> queue;
  for (int v = 1; v <= n_; ++v)
    if (indegree[v] == 0) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int b : up_[queue[head]])
      if (--indegree[b] == 0) queue.push_back(b);
  if (static_cast<int>(queue.size()) != n_) throw ValidationError("cover relation has a cycle");

  // Transitively reduced: no cover a<b is implied by a longer chain.
  for (const auto& [a, b] : covers_) {
    for (int c : up_[a]) {
      if (c != b && less_equal(c, b))
        throw ValidationError("cover " + std::to_string(a) + "<" + std::to_string(b) +
                              " is implied by transitivity");
    }
  }
}

bool LabeledPoset::less_equal(int a, int b) const {
  if (a == b) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  std::vector<int> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : up_[x]) {
      if (y == b) return true;
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return false;
}

bool LabeledPoset::is_order_ideal_listing(std::span<const int> prefix) const {
  std::vector<char> placed(static_cast<std::size_t>(n_) + 1, 0);
  for (int x : prefix) {
    if (x < 1 || x > n_ || placed[x]) return false;
    for (int a : down_[x])
      if (!placed[a]) return false;
    placed[x] = 1;
  }
  return true;
}

bool LabeledPoset::is_linear_extension(const Permutation& pi) const {
  if (pi.size() != n_) return false;
  if (reading_ == ReadingConvention::listing) return is_order_ideal_listing(pi.entries());
  std::vector<int> time(static_cast<std::size_t>(n_) + 1, 0);
  for (int i = 0; i < n_; ++i) time[element_order_[i]] = pi.entries()[i];
  for (const auto& [a, b] : covers_)
    if (time[a] >= time[b]) return false;
  return true;
}

std::string LabeledPoset::dump() const {
  std::ostringstream out;
  out << "poset ";
  if (family_ == PosetFamily::rectangular) {
    out << "rectangular s=" << params_.at(0) << ",t=" << params_.at(1);
  } else {
    out << "kary_tree k=" << params_.at(0);
  }
  out << " n=" << n_ << '\n';
  for (const auto& [a, b] : covers_) out << a << '<' << b << '\n';
  return out.str();
}

std::vector<int> kary_level_sizes(int n, int k) {
  std::vector<int> sizes;
  long width = 1;
  long remaining = n;
  while (remaining > 0) {
    const long level = std::min(width, remaining);
    sizes.push_back(static_cast<int>(level));
    remaining -= level;
    width *= k;
  }
  return sizes;
}

LabeledPoset complete_kary_tree(int n, int k) {
  if (k < 2) throw ParameterError("arity k must be >= 2");
  if (n < 1) throw ParameterError("tree size n must be >= 1");
  std::vector<Cover> covers;
  covers.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 2; i <= n; ++i) covers.emplace_back(kary_parent(i, k), i);
  return LabeledPoset(n, std::move(covers), PosetFamily::kary_tree, {k},
                      ReadingConvention::canonical_order);
}

LabeledPoset rectangular_poset(int s, int t) {
  if (s < 1 || t < 1) throw ParameterError("rectangular poset needs s >= 1 and t >= 1");
  std::vector<Cover> covers;
  for (int i = 1; i <= s; ++i) {
    for (int j = 1; j <= t; ++j) {
      const int here = rectangular_label(s, t, i, j);
      if (i < s) covers.emplace_back(here, rectangular_label(s, t, i + 1, j));
      if (j < t) covers.emplace_back(here, rectangular_label(s, t, i, j + 1));
    }
  }
  return LabeledPoset(s * t, std::move(covers), PosetFamily::rectangular, {s, t},
                      ReadingConvention::listing);
}

namespace {

// Depth-first extension search. `on_leaf(word, inv)` fires for each avoiding
// extension, where `word` is the reading and `inv` its inversion number.
class ExtensionSearch {
 public:
  ExtensionSearch(const LabeledPoset& poset, const PatternSet& patterns)
      : poset_(poset), patterns_(patterns), n_(poset.size()) {
    word_.reserve(static_cast<std::size_t>(n_));
  }

  template <class Leaf>
  void run(Leaf&& leaf) {
    if (n_ > 0 && patterns_.has_trivial_pattern()) return;
    if (poset_.reading() == ReadingConvention::listing) {
      pending_.assign(static_cast<std::size_t>(n_) + 1, 0);
      placed_.assign(static_cast<std::size_t>(n_) + 1, 0);
      for (const auto& [a, b] : poset_.covers()) ++pending_[b];
      listing(leaf, 0);
    } else {
      prepare_canonical();
      canonical(leaf, 0);
    }
  }

 private:
  template <class Leaf>
  void listing(Leaf& leaf, std::int64_t inv) {
    if (static_cast<int>(word_.size()) == n_) {
      leaf(word_, inv);
      return;
    }
    for (int x = 1; x <= n_; ++x) {
      if (placed_[x] || pending_[x] != 0) continue;
      std::int64_t added = 0;
      for (int y = x + 1; y <= n_; ++y) added += placed_[y];
      word_.push_back(x);
      if (!patterns_.last_element_completes_occurrence(word_)) {
        placed_[x] = 1;
        for (int b : poset_.upper_covers(x)) --pending_[b];
        listing(leaf, inv + added);
        for (int b : poset_.upper_covers(x)) ++pending_[b];
        placed_[x] = 0;
      }
      word_.pop_back();
    }
  }

  void prepare_canonical() {
    const auto size = static_cast<std::size_t>(n_) + 1;
    time_.assign(size, 0);
    used_.assign(size, 0);
    above_.assign(size, {});
    below_.assign(size, {});
    for (int a = 1; a <= n_; ++a) {
      for (int b = 1; b <= n_; ++b) {
        if (a != b && poset_.less_equal(a, b)) {
          above_[a].push_back(b);
          below_[b].push_back(a);
        }
      }
    }
  }

  template <class Leaf>
  void canonical(Leaf& leaf, std::int64_t inv) {
    const int position = static_cast<int>(word_.size());
    if (position == n_) {
      leaf(word_, inv);
      return;
    }
    const int element = poset_.element_order()[position];
    int lo = 1;
    int hi = n_;
    int open_above = 0;
    int open_below = 0;
    for (int b : above_[element]) {
      if (time_[b]) hi = std::min(hi, time_[b] - 1);
      else ++open_above;
    }
    for (int a : below_[element]) {
      if (time_[a]) lo = std::max(lo, time_[a] + 1);
      else ++open_below;
    }
    for (int v = lo; v <= hi; ++v) {
      if (used_[v]) continue;
      int free_below = 0;
      int free_above = 0;
      std::int64_t added = 0;
      for (int u = 1; u <= n_; ++u) {
        if (u == v || used_[u]) {
          if (used_[u] && u > v) ++added;
          continue;
        }
        if (u < v) ++free_below;
        else ++free_above;
      }
      if (free_above < open_above || free_below < open_below) continue;
      word_.push_back(v);
      if (!patterns_.last_element_completes_occurrence(word_)) {
        used_[v] = 1;
        time_[element] = v;
        canonical(leaf, inv + added);
        time_[element] = 0;
        used_[v] = 0;
      }
      word_.pop_back();
    }
  }

  const LabeledPoset& poset_;
  const PatternSet& patterns_;
  int n_;
  std::vector<int> word_;
  std::vector<int> pending_;
  std::vector<char> placed_;
  std::vector<int> time_;
  std::vector<char> used_;
  std::vector<std::vector<int>> above_;
  std::vector<std::vector<int>> below_;
};

}  // namespace

void linear_extensions(const LabeledPoset& poset, const PatternSet& patterns,
                       const std::function<void(const Permutation&)>& visit) {
  ExtensionSearch search(poset, patterns);
  search.run([&](const std::vector<int>& word, std::int64_t) { visit(Permutation(word)); });
}

std::vector<Permutation> list_linear_extensions(const LabeledPoset& poset,
                                                const PatternSet& patterns) {
  std::vector<Permutation> out;
  linear_extensions(poset, patterns, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

BigInt count_linear_extensions(const LabeledPoset& poset, const PatternSet& patterns) {
  ExtensionSearch search(poset, patterns);
  std::uint64_t count = 0;
  search.run([&](const std::vector<int>&, std::int64_t) { ++count; });
  return BigInt(count);
}

QPolynomial inversion_polynomial(const LabeledPoset& poset, const PatternSet& patterns) {
  ExtensionSearch search(poset, patterns);
  std::vector<std::uint64_t> by_inversions;
  search.run([&](const std::vector<int>&, std::int64_t inv) {
    if (static_cast<std::size_t>(inv) >= by_inversions.size())
      by_inversions.resize(static_cast<std::size_t>(inv) + 1, 0);
    ++by_inversions[static_cast<std::size_t>(inv)];
  });
  QPolynomial out;
  for (std::size_t e = 0; e < by_inversions.size(); ++e)
    out.add_term(static_cast<long>(e), BigInt(by_inversions[e]));
  return out;
}

BigInt hook_count_rect(int s, int t) {
  if (s < 1 || t < 1) throw ParameterError("rectangle needs s >= 1 and t >= 1");
  BigInt hooks = 1;
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= t; ++j) hooks *= (s - i) + (t - j) + 1;
  return factorial(static_cast<unsigned>(s * t)) / hooks;
}

BigInt hook_count_tree(int n, int k) {
  if (k < 2) throw ParameterError("arity k must be >= 2");
  if (n < 1) throw ParameterError("tree size n must be >= 1");
  std::vector<long> subtree(static_cast<std::size_t>(n) + 1, 1);
  for (int i = n; i >= 2; --i) subtree[kary_parent(i, k)] += subtree[i];
  BigInt product = 1;
  for (int i = 1; i <= n; ++i) product *= subtree[i];
  return factorial(static_cast<unsigned>(n)) / product;
}

bool suffix_incomparable(int n, int k, int m) {
  if (k < 2) throw ParameterError("arity k must be >= 2");
  if (n < 1 || m < 0 || m > n) throw ParameterError("need n >= 1 and 0 <= m <= n");
  // In a rooted tree, u < w iff u is a proper ancestor of w.
  // Ancestors have smaller breadth-first indices, so only the parent matters.
  for (int w = std::max(m + 1, 2); w <= n; ++w)
    if (kary_parent(w, k) > m) return false;
  return true;
}

}  // namespace lext
