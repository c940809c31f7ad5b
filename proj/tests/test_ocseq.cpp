#include <gtest/gtest.h>

#include "closedz/factorize.hpp"
#include "closedz/ocseq.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace closedz;

TEST(Oc, TribonacciTable) {
  auto s = bonacci_stream(3);
  EXPECT_EQ(to_string(s.prefix(24)), golden::tribonacci_prefix);
  EXPECT_EQ(oc(s, 24).to_string(), golden::tribonacci_oc);
}

TEST(Oc, SingleLetterAndErrors) {
  auto s = bonacci_stream(2);
  EXPECT_EQ(oc(s, 1).to_string(), "1");
  EXPECT_EQ(oc("2"_w, 1).to_string(), "1");
  EXPECT_THROW(oc("01"_w, 0), std::invalid_argument);
  EXPECT_THROW(oc("01"_w, 3), std::out_of_range);
}

TEST(Oc, MatchesOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto const w = oracle::random_word(rng, 2 + trial % 3, 1 + rng() % 80);
    ASSERT_EQ(oc(w, w.size()).bits, oracle::oc_bits(w, w.size()));
  }
}

TEST(Runs, Examples) {
  auto s = bonacci_stream(3);
  auto const seq = oc(s, 24);
  EXPECT_EQ(runs_of_ones(seq), (std::vector<std::size_t>{1, 1, 2, 4, 4}));
  EXPECT_TRUE(last_run_truncated(seq));
  oc_sequence const tail{{1, 0, 0}};
  EXPECT_EQ(runs_of_ones(tail), (std::vector<std::size_t>{1}));
  EXPECT_FALSE(last_run_truncated(tail));
}

TEST(Runs, FibonacciShiftedReading) {
  auto s = bonacci_stream(2);
  auto const seq = oc(s, 5000);
  auto runs = runs_of_ones(seq);
  if (last_run_truncated(seq)) runs.pop_back();
  ASSERT_GE(runs.size(), 10u);
  EXPECT_EQ(runs[0], 1u);
  for (std::size_t i = 1; i < runs.size(); ++i) {
    EXPECT_EQ(runs[i], family_length(2, family::bonacci, static_cast<int>(i) - 1)) << i;
  }
}

TEST(Classify, Examples) {
  auto const a = classify_prefix(3, 4);
  EXPECT_EQ(a.n_of_w, 3);
  EXPECT_EQ(a.kind, prefix_kind::type2);
  EXPECT_FALSE(a.closed());
  auto const b = classify_prefix(3, 6);
  EXPECT_EQ(b.n_of_w, 3);
  EXPECT_EQ(b.kind, prefix_kind::type1);
  for (int m = 2; m <= 5; ++m) {
    EXPECT_EQ(classify_prefix(m, 1).kind, prefix_kind::single_letter);
    EXPECT_TRUE(classify_prefix(m, 1).closed());
  }
  EXPECT_THROW(classify_prefix(3, 0), std::invalid_argument);
}

TEST(Classify, AgreesWithClosedness) {
  for (int m = 2; m <= 5; ++m) {
    auto const text = oracle::bonacci_prefix(m, 400);
    for (std::size_t len = 1; len <= text.size(); ++len) {
      ASSERT_EQ(classify_prefix(m, len).closed(), oracle::is_closed(word_view(text).first(len)))
          << "m=" << m << " length " << len;
    }
  }
}

TEST(TribonacciClosedForm, Prefix) {
  EXPECT_EQ(tribonacci_oc_closed_form(24).to_string(), golden::tribonacci_oc);
  auto s = bonacci_stream(3);
  EXPECT_EQ(tribonacci_oc_closed_form(3000), oc(s, 3000));
}
