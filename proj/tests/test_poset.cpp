#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lext/errors.hpp"
#include "lext/poset.hpp"
#include "oracles.hpp"

using namespace lext;

TEST_CASE("rectangular labeling and covers") {
  CHECK(rectangular_label(3, 2, 1, 1) == 5);
  CHECK(rectangular_label(3, 2, 3, 2) == 2);
  const auto p = rectangular_poset(2, 2);
  CHECK(p.size() == 4);
  CHECK(p.reading() == ReadingConvention::listing);
  CHECK(p.dump() == "poset rectangular s=2,t=2 n=4\n1<2\n3<1\n3<4\n4<2\n");
  CHECK(p.less_equal(3, 2));
  CHECK_FALSE(p.comparable(1, 4));
  CHECK_THROWS_AS(rectangular_poset(0, 2), ParameterError);
  CHECK_THROWS_AS(rectangular_poset(2, 0), ParameterError);
}

TEST_CASE("poset construction rejects bad cover sets") {
  using F = PosetFamily;
  using R = ReadingConvention;
  CHECK_THROWS_AS(LabeledPoset(3, {{1, 2}, {2, 1}}, F::rectangular, {}, R::listing), ValidationError);
  CHECK_THROWS_AS(LabeledPoset(3, {{1, 2}, {2, 3}, {1, 3}}, F::rectangular, {}, R::listing),
                  ValidationError);
  CHECK_THROWS_AS(LabeledPoset(3, {{1, 4}}, F::rectangular, {}, R::listing), ValidationError);
  CHECK_THROWS_AS(LabeledPoset(3, {{1, 2}, {1, 2}}, F::rectangular, {}, R::listing), ValidationError);
  CHECK_NOTHROW(LabeledPoset(3, {{1, 2}, {1, 3}}, F::rectangular, {}, R::listing));
}

TEST_CASE("N_{3,2} extensions avoiding 1243") {
  const auto p = rectangular_poset(3, 2);
  const auto words = oracle::to_words(list_linear_extensions(p, PatternSet{Permutation{1, 2, 4, 3}}));
  const std::vector<oracle::Word> expected = {
      {5, 3, 1, 6, 4, 2}, {5, 3, 6, 1, 4, 2}, {5, 3, 6, 4, 1, 2}, {5, 6, 3, 1, 4, 2}, {5, 6, 3, 4, 1, 2}};
  CHECK(words == expected);
  CHECK(inversion_polynomial(p, PatternSet{Permutation{1, 2, 4, 3}}) ==
        QPolynomial::from_terms({{9, 1}, {10, 1}, {11, 2}, {12, 1}}));
  CHECK(count_linear_extensions(p) == 5);
}

TEST_CASE("N_{2,3} and N_{2,2} avoiding 2143") {
  const PatternSet t{Permutation{2, 1, 4, 3}};
  const auto words = oracle::to_words(list_linear_extensions(rectangular_poset(2, 3), t));
  const std::vector<oracle::Word> expected = {
      {4, 1, 5, 2, 6, 3}, {4, 1, 5, 6, 2, 3}, {4, 5, 1, 2, 6, 3}, {4, 5, 1, 6, 2, 3}, {4, 5, 6, 1, 2, 3}};
  CHECK(words == expected);
  CHECK(inversion_polynomial(rectangular_poset(2, 3), t) ==
        QPolynomial::from_terms({{6, 1}, {7, 2}, {8, 1}, {9, 1}}));
  CHECK(inversion_polynomial(rectangular_poset(2, 2), t) == QPolynomial::from_terms({{3, 1}, {4, 1}}));
  CHECK(count_linear_extensions(rectangular_poset(3, 3)) == 42);
  CHECK(count_linear_extensions(rectangular_poset(3, 3), t) == 21);
}

TEST_CASE("rectangle extensions match the brute-force filter") {
  const std::vector<oracle::Word> patterns = {{2, 1, 4, 3}, {1, 2, 4, 3}, {3, 2, 1}, {1, 3, 2}};
  for (int s = 1; s <= 3; ++s) {
    for (int t = 1; s * t <= 9; ++t) {
      const auto p = rectangular_poset(s, t);
      const auto all = oracle::listing_extensions(p.size(), p.covers());
      CHECK(oracle::to_words(list_linear_extensions(p)) == all);
      for (const auto& pat : patterns) {
        std::vector<oracle::Word> filtered;
        for (const auto& w : all)
          if (!oracle::contains(w, pat)) filtered.push_back(w);
        CHECK(oracle::to_words(list_linear_extensions(p, PatternSet{Permutation(pat)})) == filtered);
      }
    }
  }
}

TEST_CASE("pruning is sound on random small posets") {
  // Random posets on at most 8 elements, every pattern of
  // length at most 3 plus a few of length 4.
  std::mt19937 rng(31337);
  std::vector<oracle::Word> patterns;
  for (int len = 1; len <= 3; ++len)
    for (auto& w : oracle::all_permutations(len)) patterns.push_back(w);
  for (auto& w : oracle::all_permutations(4))
    if (rng() % 4 == 0) patterns.push_back(w);

  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 6;
    // Random DAG over a random labeling, then transitive reduction.
    const auto labels = oracle::random_permutation(n, rng);
    std::vector<std::vector<char>> less(n + 1, std::vector<char>(n + 1, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) less[labels[i]][labels[j]] = 1;
    for (int m = 1; m <= n; ++m)
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          if (less[a][m] && less[m][b]) less[a][b] = 1;
    std::vector<Cover> covers;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        if (!less[a][b]) continue;
        bool direct = true;
        for (int m = 1; m <= n && direct; ++m) direct = !(less[a][m] && less[m][b]);
        if (direct) covers.emplace_back(a, b);
      }
    const LabeledPoset poset(n, covers, PosetFamily::rectangular, {}, ReadingConvention::listing);
    const auto all = oracle::listing_extensions(n, poset.covers());
    CHECK(count_linear_extensions(poset) == all.size());
    for (const auto& pat : patterns) {
      std::vector<oracle::Word> filtered;
      for (const auto& w : all)
        if (!oracle::contains(w, pat)) filtered.push_back(w);
      CAPTURE(trial);
      CHECK(oracle::to_words(list_linear_extensions(poset, PatternSet{Permutation(pat)})) == filtered);
    }
  }
}

TEST_CASE("linear extension membership") {
  const auto p = rectangular_poset(3, 2);
  CHECK(p.is_linear_extension(Permutation{5, 3, 1, 6, 4, 2}));
  CHECK(p.is_linear_extension(Permutation{5, 6, 3, 4, 1, 2}));
  CHECK_FALSE(p.is_linear_extension(Permutation{3, 5, 1, 6, 4, 2}));
  CHECK(p.is_order_ideal_listing(std::vector<int>{5, 3}));
  CHECK_FALSE(p.is_order_ideal_listing(std::vector<int>{3}));
  for (const auto& pi : list_linear_extensions(rectangular_poset(3, 3))) CHECK(rectangular_poset(3, 3).is_linear_extension(pi));
}

TEST_CASE("complete k-ary trees") {
  CHECK(kary_parent(2, 2) == 1);
  CHECK(kary_parent(3, 2) == 1);
  CHECK(kary_parent(4, 2) == 2);
  CHECK(kary_parent(12, 2) == 6);
  CHECK(kary_parent(5, 3) == 2);
  CHECK(kary_level_sizes(12, 2) == std::vector<int>{1, 2, 4, 5});
  CHECK(kary_level_sizes(13, 3) == std::vector<int>{1, 3, 9});
  const auto tree = complete_kary_tree(12, 2);
  CHECK(tree.reading() == ReadingConvention::canonical_order);
  CHECK(tree.covers().size() == 11);
  CHECK(tree.dump().rfind("poset kary_tree k=2 n=12\n", 0) == 0);
  CHECK(tree.less_equal(1, 12));
  CHECK_FALSE(tree.comparable(7, 12));
  CHECK_THROWS_AS(complete_kary_tree(5, 1), ParameterError);
}

TEST_CASE("tree extensions in canonical order are heap readings") {
  for (int k : {2, 3}) {
    for (int n = 1; n <= 7; ++n) {
      const auto tree = complete_kary_tree(n, k);
      CHECK(oracle::to_words(list_linear_extensions(tree)) == oracle::heaps(n, k));
      std::vector<oracle::Word> filtered;
      for (const auto& w : oracle::heaps(n, k))
        if (!oracle::contains(w, {3, 2, 1})) filtered.push_back(w);
      CHECK(oracle::to_words(list_linear_extensions(tree, PatternSet{Permutation{3, 2, 1}})) == filtered);
    }
  }
}

TEST_CASE("hook-length oracles") {
  CHECK(hook_count_rect(3, 2) == 5);
  CHECK(hook_count_rect(3, 3) == 42);
  CHECK(hook_count_rect(5, 3) == 6006);
  CHECK(hook_count_rect(1, 7) == 1);
  CHECK(hook_count_tree(3, 2) == 2);
  CHECK(hook_count_tree(7, 2) == 80);
  CHECK(hook_count_tree(1, 3) == 1);
  for (int s = 1; s <= 3; ++s)
    for (int t = 1; s * t <= 8; ++t)
      CHECK(hook_count_rect(s, t) == oracle::listing_extensions(s * t, rectangular_poset(s, t).covers()).size());
  for (int n = 1; n <= 8; ++n) CHECK(hook_count_tree(n, 2) == oracle::heaps(n, 2).size());
}

TEST_CASE("suffix antichain") {
  CHECK(suffix_incomparable(12, 2, 6));
  CHECK_FALSE(suffix_incomparable(12, 2, 5));
  CHECK(suffix_incomparable(1, 2, 0));
  CHECK(suffix_incomparable(2, 2, 1));
  CHECK_THROWS_AS(suffix_incomparable(5, 1, 2), ParameterError);
  // Against the relation itself.
  for (int k : {2, 3}) {
    for (int n = 1; n <= 20; ++n) {
      const auto tree = complete_kary_tree(n, k);
      for (int m = 0; m <= n; ++m) {
        bool anti = true;
        for (int a = m + 1; a <= n; ++a)
          for (int b = a + 1; b <= n; ++b) anti = anti && !tree.comparable(a, b);
        CHECK(suffix_incomparable(n, k, m) == anti);
      }
    }
  }
}
