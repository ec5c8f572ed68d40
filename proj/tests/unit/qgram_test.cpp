#include <gtest/gtest.h>

#include <random>

#include "mawcmp/qgram.hpp"
#include "oracle.hpp"

using namespace mawcmp;

TEST(Catalog, Abaab) {
  const QgramIndex index("abaab");
  const auto cat = unique_factor_catalog(index);
  EXPECT_EQ(cat.h, 2u);
  ASSERT_TRUE(cat.t.has_value());
  EXPECT_EQ(*cat.t, 2u);
  EXPECT_EQ(cat.infixes_t, (std::vector<Interval>{{1, 2}, {2, 3}}));
  EXPECT_EQ(cat.infixes_t1, (std::vector<Interval>{{1, 3}}));
  EXPECT_EQ(cat.shortest_unique_prefix, 3u);
  EXPECT_EQ(cat.shortest_unique_suffix, 3u);
}

TEST(Catalog, NoUniqueInfix) {
  const auto cat = unique_factor_catalog(QgramIndex("aab"));
  EXPECT_FALSE(cat.t.has_value());
  EXPECT_THROW(unique_factor_catalog(QgramIndex("a")), Error);
}

TEST(TestFactor, Abaab) {
  const QgramIndex index("abaab");
  EXPECT_FALSE(test_factor(index, 1, 3));  // baa
  EXPECT_TRUE(test_factor(index, 2, 4));   // aab, prefix of aaba
  for (std::size_t i = 0; i + 1 < 5; ++i) EXPECT_TRUE(test_factor(index, i, i + 1));
}

TEST(Bounds, Abaab) {
  const QgramIndex index("abaab");
  const auto cat = unique_factor_catalog(index);
  EXPECT_EQ(infix_bound(index, cat), 2u);
  EXPECT_EQ(prefix_bound(index, cat, 2), 2u);
  EXPECT_EQ(suffix_bound(index, cat, 2), 2u);
}

TEST(Bounds, Unary) {
  const QgramIndex index("aaa");
  const auto cat = unique_factor_catalog(index);
  EXPECT_FALSE(cat.t.has_value());
  EXPECT_EQ(infix_bound(index, cat), 3u);
  EXPECT_EQ(prefix_bound(index, cat, 3), 3u);
}

TEST(Bounds, PrefixLoopSkippedWhenQIsSmall) {
  const QgramIndex index("abaab");
  const auto cat = unique_factor_catalog(index);
  EXPECT_EQ(prefix_bound(index, cat, 1), 1u);
}

TEST(Bounds, InfixFallbackIsTPlusOne) {
  // Search for a word whose unique infixes of length t and t+1 all pass.
  bool found = false;
  for (std::size_t len = 4; len <= 10 && !found; ++len) {
    for (const auto& w : oracle::all_words("ab", len)) {
      const QgramIndex index(w);
      const auto cat = unique_factor_catalog(index);
      if (!cat.t) continue;
      if (infix_bound(index, cat) == *cat.t + 1) {
        found = true;
        EXPECT_LE(compute_q(w), *cat.t + 1);
        break;
      }
    }
  }
  EXPECT_TRUE(found);
}

TEST(ComputeQ, Examples) {
  EXPECT_EQ(compute_q("abaab"), 2u);
  EXPECT_EQ(compute_q("aaa"), 3u);
  EXPECT_EQ(compute_q("ab"), 1u);
  EXPECT_EQ(oracle::brute_force_q("abaab"), 2u);
  EXPECT_EQ(oracle::brute_force_q("aaa"), 3u);
  EXPECT_EQ(oracle::brute_force_q("ab"), 1u);
  EXPECT_EQ(compute_q("abaab", Alphabet("abc")), 2u);
  EXPECT_THROW(compute_q("a"), Error);
  EXPECT_THROW(compute_q("ab", Alphabet("a")), Error);
}

TEST(ComputeQ, OracleEquivalenceExhaustiveBinary) {
  for (std::size_t len = 2; len <= 11; ++len)
    for (const auto& w : oracle::all_words("ab", len)) ASSERT_EQ(compute_q(w), oracle::brute_force_q(w)) << w;
}

TEST(ComputeQ, OracleEquivalenceRandom) {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 80; ++trial) {
    const auto w = oracle::random_word(rng, trial % 2 ? "ab" : "abc", 2 + rng() % 100);
    ASSERT_EQ(compute_q(w), oracle::brute_force_q(w)) << w;
  }
}

TEST(ComputeQ, CatalogMatchesScansAndBoundsHold) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 150; ++trial) {
    const auto w = oracle::random_word(rng, trial % 2 ? "ab" : "abc", 2 + rng() % 40);
    const auto report = qgram_report(w);
    EXPECT_EQ(report.h, oracle::naive_h(w)) << w;
    EXPECT_EQ(report.t, oracle::naive_t(w)) << w;
    EXPECT_GE(report.q + 1, report.h);
    if (report.t) EXPECT_LE(report.q, *report.t + 1);
  }
}

TEST(TestFactor, AgreesWithFactorClosureAndPrefixCriterion) {
  for (std::size_t len = 2; len <= 10; ++len) {
    for (const auto& w : oracle::all_words("ab", len)) {
      const QgramIndex index(w);
      const auto maws = oracle::brute_force_maws(w, Alphabet(w));
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          const auto f = w.substr(i, j - i + 1);
          if (oracle::occurrences(w, f).size() != 1) continue;
          ASSERT_EQ(test_factor(index, i, j), oracle::in_factor_closure(maws, f)) << w << " [" << i << "," << j << "]";
          // Prefix side alone against the explicit occurrence criterion.
          const Index v = index.forward().locate(i + 1, j).node();
          const bool prefix_side = index.forward().branching(v) ||
                                   static_cast<std::size_t>(index.forward().first_occurrence(v)) <= i;
          ASSERT_EQ(prefix_side, oracle::prefix_criterion(w, i, j)) << w << " [" << i << "," << j << "]";
        }
      }
    }
  }
}
