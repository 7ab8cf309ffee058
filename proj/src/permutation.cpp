#include "lext/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "lext/errors.hpp"

namespace lext {

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

bool is_bijection(std::span<const int> word) {
  const auto n = static_cast<int>(word.size());
  std::vector<char> seen(word.size() + 1, 0);
  for (int v : word) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  if (!is_bijection(entries_)) {
    std::ostringstream msg;
    msg << "not a permutation of {1.." << entries_.size() << "}:";
    for (int v : entries_) msg << ' ' << v;
    throw ValidationError(msg.str());
  }
}

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::vector<int>(entries)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> entries;
  const bool has_separator = text.find_first_of(" ,-\t") != std::string_view::npos;
  if (!has_separator) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ValidationError("bad character in permutation: '" + std::string(text) + "'");
      entries.push_back(c - '0');
    }
    return Permutation(std::move(entries));
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::string_view(" ,-\t").find(text[i]) != std::string_view::npos) ++i;
    if (i == text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{})
      throw ValidationError("bad entry in permutation: '" + std::string(text) + "'");
    entries.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(entries));
}

Permutation Permutation::reversed() const {
  std::vector<int> w(entries_.rbegin(), entries_.rend());
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::string Permutation::to_compact() const {
  std::string out;
  for (int v : entries_) out += std::to_string(v);
  return out;
}

namespace detail {

PatternPlan::PatternPlan(std::span<const int> pattern)
    : values(pattern.begin(), pattern.end()),
      lower(pattern.size(), -1),
      upper(pattern.size(), -1) {
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      if (values[k] < values[j] && (lower[j] < 0 || values[k] > values[lower[j]]))
        lower[j] = static_cast<int>(k);
      if (values[k] > values[j] && (upper[j] < 0 || values[k] < values[upper[j]]))
        upper[j] = static_cast<int>(k);
    }
  }
}

namespace {

// Depth-first subsequence matching. When `anchor` >= 0 the final pattern
// element is pinned to that position.
bool match(std::span<const int> word, const PatternPlan& plan, std::size_t j,
           std::size_t start, int anchor, std::vector<std::size_t>& chosen) {
  const std::size_t m = plan.values.size();
  if (j == m) return true;
  const std::size_t remaining = m - j;
  std::size_t last;
  if (anchor >= 0) {
    if (j + 1 == m) {
      start = std::max(start, static_cast<std::size_t>(anchor));
      last = static_cast<std::size_t>(anchor);
    } else {
      if (static_cast<std::size_t>(anchor) < remaining - 1) return false;
      last = static_cast<std::size_t>(anchor) - (remaining - 1);
    }
  } else {
    if (word.size() < remaining) return false;
    last = word.size() - remaining;
  }
  for (std::size_t p = start; p <= last && p < word.size(); ++p) {
    const int w = word[p];
    if (plan.lower[j] >= 0 && w < word[chosen[plan.lower[j]]]) continue;
    if (plan.upper[j] >= 0 && w > word[chosen[plan.upper[j]]]) continue;
    chosen[j] = p;
    if (match(word, plan, j + 1, p + 1, anchor, chosen)) return true;
  }
  return false;
}

}  // namespace

bool occurs(std::span<const int> word, const PatternPlan& plan) {
  if (plan.values.empty()) return true;
  std::vector<std::size_t> chosen(plan.values.size());
  return match(word, plan, 0, 0, -1, chosen);
}

bool occurs_ending_at_last(std::span<const int> word, const PatternPlan& plan) {
  if (word.empty()) return false;
  if (plan.values.empty()) return true;
  std::vector<std::size_t> chosen(plan.values.size());
  return match(word, plan, 0, 0, static_cast<int>(word.size()) - 1, chosen);
}

}  // namespace detail

bool contains(std::span<const int> word, std::span<const int> pattern) {
  return detail::occurs(word, detail::PatternPlan(pattern));
}

bool contains(const Permutation& sigma, const Permutation& tau) {
  if (tau.empty()) throw ValidationError("pattern must have length >= 1");
  return contains(sigma.entries(), tau.entries());
}

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
  for (const auto& p : patterns_)
    if (p.empty()) throw ValidationError("pattern must have length >= 1");
  std::sort(patterns_.begin(), patterns_.end(), [](const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
  plans_.reserve(patterns_.size());
  for (const auto& p : patterns_) {
    plans_.emplace_back(p.entries());
    if (p.size() == 1) has_trivial_ = true;
  }
}

PatternSet::PatternSet(std::initializer_list<Permutation> patterns)
    : PatternSet(std::vector<Permutation>(patterns)) {}

PatternSet PatternSet::parse(std::string_view text) {
  std::vector<Permutation> out;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find(',', begin);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(begin, end - begin);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) out.push_back(Permutation::parse(token));
    begin = end + 1;
  }
  return PatternSet(std::move(out));
}

bool PatternSet::all_sum_indecomposable() const {
  return std::all_of(patterns_.begin(), patterns_.end(),
                     [](const Permutation& p) { return is_sum_indecomposable(p); });
}

bool PatternSet::avoided_by(std::span<const int> word) const {
  for (const auto& plan : plans_)
    if (detail::occurs(word, plan)) return false;
  return true;
}

bool PatternSet::last_element_completes_occurrence(std::span<const int> word) const {
  for (const auto& plan : plans_)
    if (detail::occurs_ending_at_last(word, plan)) return true;
  return false;
}

std::string PatternSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i) out += ',';
    const auto& p = patterns_[i];
    out += p.size() <= 9 ? p.to_compact() : p.to_string();
  }
  return out;
}

bool avoids_all(const Permutation& sigma, const PatternSet& patterns) {
  return patterns.avoided_by(sigma.entries());
}

std::int64_t inversions(std::span<const int> word) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++count;
  return count;
}

Permutation direct_sum(const Permutation& lambda, const Permutation& mu) {
  std::vector<int> w(lambda.entries().begin(), lambda.entries().end());
  const int shift = lambda.size();
  for (int v : mu.entries()) w.push_back(v + shift);
  return Permutation(std::move(w));
}

bool is_sum_indecomposable(const Permutation& sigma) {
  if (sigma.empty()) throw ValidationError("sum indecomposability needs n >= 1");
  int prefix_max = 0;
  for (int l = 1; l < sigma.size(); ++l) {
    prefix_max = std::max(prefix_max, sigma(l));
    if (prefix_max == l) return false;
  }
  return true;
}

namespace {

class AvoiderSearch {
 public:
  AvoiderSearch(int n, const PatternSet& patterns)
      : n_(n), patterns_(patterns), used_(static_cast<std::size_t>(n) + 1, 0) {
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
    if (static_cast<int>(word_.size()) == n_) {
      leaf();
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_[v]) continue;
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
  const PatternSet& patterns_;
  std::vector<char> used_;
  std::vector<int> word_;
};

}  // namespace

void enumerate_avoiders(int n, const PatternSet& patterns,
                        const std::function<void(const Permutation&)>& visit) {
  if (n < 0) throw ParameterError("n must be >= 0");
  AvoiderSearch search(n, patterns);
  search.run([&] { visit(Permutation(search.word())); });
}

std::vector<Permutation> list_avoiders(int n, const PatternSet& patterns) {
  std::vector<Permutation> out;
  enumerate_avoiders(n, patterns, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

BigInt count_avoiders(int n, const PatternSet& patterns) {
  if (n < 0) throw ParameterError("n must be >= 0");
  AvoiderSearch search(n, patterns);
  std::uint64_t count = 0;
  search.run([&] { ++count; });
  return BigInt(count);
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace lext
