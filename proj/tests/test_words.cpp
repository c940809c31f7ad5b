#include <gtest/gtest.h>

#include "closedz/word.hpp"
#include "oracles.hpp"

using namespace closedz;

namespace {

using sizes = std::vector<std::size_t>;

// Calls f on every word over A_m of length len.
template <class F>
void each_word(int m, std::size_t len, F&& f) {
  word w(len, 0);
  while (true) {
    f(word_view(w));
    std::size_t i = 0;
    while (i < len && w[i] == m - 1) w[i++] = 0;
    if (i == len) return;
    ++w[i];
  }
}

}  // namespace

TEST(Serialization, LettersAndDigits) {
  EXPECT_EQ(to_string(word{0, 9, 10, 35}), "09az");
  EXPECT_EQ(parse_word("09az"), (word{0, 9, 10, 35}));
  EXPECT_EQ(to_string(word{}), "");
  EXPECT_THROW(parse_word("0A"), std::invalid_argument);
  EXPECT_THROW(parse_word("012", 2), std::invalid_argument);
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse("0"_w), "0"_w);
  EXPECT_EQ(reverse("0102"_w), "2010"_w);
  EXPECT_EQ(reverse("010"_w), "010"_w);
}

TEST(Palindrome, Examples) {
  EXPECT_TRUE(is_palindrome("0102010"_w));
  EXPECT_FALSE(is_palindrome("01"_w));
  EXPECT_TRUE(is_palindrome("10100101"_w));
  EXPECT_TRUE(is_palindrome(word{}));
}

TEST(PalindromicClosure, Examples) {
  EXPECT_EQ(palindromic_closure("010"_w), "010"_w);
  EXPECT_EQ(palindromic_closure("0102"_w), "0102010"_w);
  EXPECT_EQ(palindromic_closure("0123"_w), "0123210"_w);
  EXPECT_EQ(palindromic_closure(word{}), word{});
}

TEST(PalindromicClosure, ExhaustiveShortestAndIdempotent) {
  for (int m = 2; m <= 3; ++m) {
    for (std::size_t len = 0; len <= (m == 2 ? 12u : 8u); ++len) {
      each_word(m, len, [&](word_view w) {
        auto const c = palindromic_closure(w);
        ASSERT_EQ(c, oracle::palindromic_closure(w)) << to_string(w);
        ASSERT_EQ(palindromic_closure(c), c);
      });
    }
  }
}

TEST(Occurrences, Examples) {
  EXPECT_EQ(occurrences("01001"_w, "01"_w), (sizes{1, 4}));
  EXPECT_EQ(count_occurrences("01001"_w, "01"_w), 2u);
  EXPECT_EQ(occurrences("000"_w, "00"_w), (sizes{1, 2}));
  EXPECT_EQ(occurrences("0102010"_w, "010"_w), (sizes{1, 5}));
  EXPECT_THROW(occurrences("01"_w, word{}), std::invalid_argument);
  EXPECT_TRUE(occurrences("01"_w, "011"_w).empty());
}

TEST(Borders, Examples) {
  EXPECT_EQ(border_lengths("01001"_w), (sizes{2}));
  EXPECT_TRUE(border_lengths("01"_w).empty());
  EXPECT_EQ(border_lengths("00100"_w), (sizes{1, 2}));
}

TEST(Closed, Examples) {
  EXPECT_TRUE(is_closed("01001"_w));
  EXPECT_TRUE(is_closed("0"_w));
  EXPECT_FALSE(is_closed("01"_w));
  EXPECT_THROW(is_closed(word{}), std::invalid_argument);
}

TEST(ClosedBorder, Examples) {
  EXPECT_EQ(closed_border("01001"_w), std::optional<word>("01"_w));
  EXPECT_EQ(closed_border("00100"_w), std::optional<word>("00"_w));
  EXPECT_EQ(closed_border("0102"_w), std::nullopt);
  EXPECT_THROW(closed_border("0"_w), std::invalid_argument);
}

// Every word of length 2..16 over A_2 and 2..10 over A_3: the three readings
// of closedness coincide and the doubly occurring border is unique.
TEST(Closed, ExhaustiveEquivalence) {
  for (int m = 2; m <= 3; ++m) {
    for (std::size_t len = 2; len <= (m == 2 ? 16u : 10u); ++len) {
      each_word(m, len, [&](word_view w) {
        bool some = false;
        std::size_t twice = 0;
        for (std::size_t b : oracle::border_lengths(w)) {
          if (oracle::count(w, w.first(b)) == 2) {
            some = true;
            ++twice;
          }
        }
        std::size_t const lb = longest_border(w);
        bool const longest = lb > 0 && oracle::count(w, w.first(lb)) == 2;
        ASSERT_EQ(is_closed(w), some) << to_string(w);
        ASSERT_EQ(some, longest) << to_string(w);
        ASSERT_LE(twice, 1u) << to_string(w);
        ASSERT_EQ(closed_border(w), oracle::closed_border(w)) << to_string(w);
      });
    }
  }
}

TEST(ClosedPrefixScanner, MatchesIsClosed) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto const w = oracle::random_word(rng, 2 + trial % 3, 1 + rng() % 60);
    closed_prefix_scanner scan;
    for (std::size_t i = 0; i < w.size(); ++i) {
      ASSERT_EQ(scan.push(w[i]), is_closed(word_view(w).first(i + 1))) << to_string(w) << " at " << i + 1;
    }
  }
}

TEST(ReturnWords, Examples) {
  auto const trib = parse_word("010201001020101020100102010201001020101020100102");
  auto const r = return_words(trib, "010"_w);
  std::set<word> const got(r.begin(), r.end());
  EXPECT_EQ(got, (std::set<word>{"010"_w, "01"_w, "0102"_w}));

  EXPECT_EQ(return_words("01001010010"_w, "0"_w), (std::vector<word>{"01"_w, "0"_w}));
  EXPECT_EQ(return_words("00100"_w, "00"_w), (std::vector<word>{"001"_w}));
  EXPECT_THROW(return_words("0102"_w, "2"_w), std::invalid_argument);
}

TEST(ReturnWords, MatchOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto const host = oracle::random_word(rng, 2, 40);
    auto const v = oracle::random_word(rng, 2, 1 + rng() % 3);
    if (oracle::count(host, v) < 2) continue;
    ASSERT_EQ(return_words(host, v), oracle::return_words(host, v));
  }
}

TEST(WordOps, PrefixSuffixStrip) {
  EXPECT_TRUE(is_prefix("01"_w, "010"_w));
  EXPECT_FALSE(is_prefix("1"_w, "010"_w));
  EXPECT_TRUE(is_suffix("10"_w, "010"_w));
  EXPECT_EQ(strip_prefix("0"_w, "0102"_w), "102"_w);
  EXPECT_EQ(strip_suffix("0102"_w, "2"_w), "010"_w);
  EXPECT_THROW(strip_prefix("1"_w, "0102"_w), std::invalid_argument);
  EXPECT_EQ(concat({"01"_w, "02"_w}), "0102"_w);
  EXPECT_EQ(palindromic_prefix_lengths("0102010"_w), (sizes{1, 3, 7}));
}
