#include <gtest/gtest.h>

#include "closedz/factorize.hpp"
#include "closedz/mbonacci.hpp"
#include "oracles.hpp"

using namespace closedz;

namespace {

std::vector<std::string> strings(factorization const& f) {
  std::vector<std::string> out;
  for (auto const& w : f.factors) out.push_back(to_string(w));
  return out;
}

// Stream factorization versus the oracle run on a finite prefix: every
// complete oracle factor must agree.
void expect_stream_matches_oracle(int m, scheme kind, std::size_t prefix_len) {
  auto const text = oracle::bonacci_prefix(m, prefix_len);
  auto const want = oracle::greedy(text, kind);
  std::size_t const full = want.factors.size() - (want.complete ? 0 : 1);
  ASSERT_GE(full, 5u);
  auto stream = bonacci_stream(m);
  auto const got = kind == scheme::z    ? z_factorize(stream, full)
                   : kind == scheme::cz ? closed_z_factorize(stream, full)
                                        : palindromic_z_factorize(stream, full);
  ASSERT_EQ(got.factors.size(), full);
  for (std::size_t i = 0; i < full; ++i) {
    EXPECT_EQ(got.factors[i], want.factors[i]) << "m=" << m << " factor " << i;
  }
  auto const finite = kind == scheme::z    ? z_factorize(text)
                      : kind == scheme::cz ? closed_z_factorize(text)
                                           : palindromic_z_factorize(text);
  EXPECT_EQ(finite, want);
}

}  // namespace

TEST(ZFactorize, FibonacciStreamGivesSingularWords) {
  auto s = bonacci_stream(2);
  auto const f = z_factorize(s, 7);
  EXPECT_EQ(strings(f), (std::vector<std::string>{"0", "1", "00", "101", "00100", "10100101", "0010010100100"}));
  EXPECT_TRUE(f.complete);
  EXPECT_EQ(f.kind, scheme::z);
}

TEST(ZFactorize, SingleLetter) {
  auto const f = z_factorize("0"_w);
  EXPECT_EQ(strings(f), (std::vector<std::string>{"0"}));
  EXPECT_TRUE(f.complete);
}

TEST(ZFactorize, TruncatedFiniteSourceIsFlagged) {
  auto const f = z_factorize("0101"_w);
  EXPECT_EQ(strings(f), (std::vector<std::string>{"0", "1", "01"}));
  EXPECT_FALSE(f.complete);
  auto const g = z_factorize("010201"_w, 4);
  EXPECT_EQ(g.concatenated(), "0102"_w);
}

TEST(ZFactorize, TribonacciMatchesOracle) {
  for (int m = 2; m <= 4; ++m) expect_stream_matches_oracle(m, scheme::z, 300);
}

TEST(ClosedZFactorize, Tribonacci) {
  auto s = bonacci_stream(3);
  EXPECT_EQ(strings(closed_z_factorize(s, 6)),
            (std::vector<std::string>{"0", "1", "020", "1001", "02010102", "010010201020100"}));
}

TEST(ClosedZFactorize, Fibonacci) {
  auto s = bonacci_stream(2);
  EXPECT_EQ(strings(closed_z_factorize(s, 6)), (std::vector<std::string>{"0", "1", "00", "101", "00100", "10100101"}));
}

// The fifth factor, z_4.
TEST(ClosedZFactorize, FiveBonacciFifthFactor) {
  auto s = bonacci_stream(5);
  auto const f = closed_z_factorize(s, 6);
  EXPECT_EQ(to_string(f.factors[4]), "0201040102");
  EXPECT_EQ(to_string(f.factors[5]), "0103010201001020103");
}

TEST(ClosedZFactorize, StreamMatchesOracle) {
  for (int m = 2; m <= 5; ++m) expect_stream_matches_oracle(m, scheme::cz, 300);
}

TEST(PalindromicZFactorize, StreamMatchesOracle) {
  for (int m = 2; m <= 3; ++m) {
    auto const text = oracle::bonacci_prefix(m, 400);
    auto const want = oracle::greedy(text, scheme::pz);
    ASSERT_GE(want.factors.size(), 9u);
    auto s = bonacci_stream(m);
    auto const got = palindromic_z_factorize(s, 8);
    for (std::size_t i = 0; i < 8; ++i) {
      EXPECT_EQ(got.factors[i], want.factors[i]) << "m=" << m << " factor " << i;
    }
  }
}

TEST(PalindromicZFactorize, LengthRecurrences) {
  auto s2 = bonacci_stream(2);
  auto const l2 = palindromic_z_factorize(s2, 16).lengths();
  for (std::size_t n = 2; n < l2.size(); ++n) {
    EXPECT_EQ(l2[n], l2[n - 1] + l2[n - 2]) << n;
  }
  auto s3 = bonacci_stream(3);
  auto const l3 = palindromic_z_factorize(s3, 16).lengths();
  for (std::size_t n = 3; n < l3.size(); ++n) {
    long long const want = static_cast<long long>(l3[n - 1] + l3[n - 2] + l3[n - 3]) + (n % 2 == 0 ? 1 : -1);
    EXPECT_EQ(static_cast<long long>(l3[n]), want) << n;
  }
}

TEST(CFactorize, Examples) {
  EXPECT_EQ(strings(c_factorize("0"_w)), (std::vector<std::string>{"0"}));
  EXPECT_EQ(strings(c_factorize("00"_w)), (std::vector<std::string>{"0", "0"}));
  auto const w = "0100101001001"_w;
  EXPECT_EQ(c_factorize(w).factors, oracle::crochemore(w).factors);
  EXPECT_THROW(c_factorize(word{}), std::invalid_argument);
}

TEST(ClosedCFactorize, Examples) {
  for (auto mode : {cc_mode::longest_closed, cc_mode::alternative}) {
    EXPECT_EQ(strings(closed_c_factorize("0"_w, mode)), (std::vector<std::string>{"0"}));
    EXPECT_EQ(strings(closed_c_factorize("00"_w, mode)), (std::vector<std::string>{"0", "0"}));
  }
  auto const trib = oracle::bonacci_prefix(3, 200);
  EXPECT_EQ(closed_c_factorize(trib, cc_mode::longest_closed).factors,
            oracle::closed_crochemore(trib, false).factors);
  EXPECT_EQ(closed_c_factorize(trib, cc_mode::alternative).factors, oracle::closed_crochemore(trib, true).factors);
  EXPECT_THROW(closed_c_factorize(word{}), std::invalid_argument);
}

TEST(Factorization, InvariantsOnStreams) {
  for (int m = 2; m <= 5; ++m) {
    auto s = bonacci_stream(m);
    for (auto kind : {scheme::z, scheme::cz, scheme::pz}) {
      auto const f = kind == scheme::z    ? z_factorize(s, 12)
                     : kind == scheme::cz ? closed_z_factorize(s, 12)
                                          : palindromic_z_factorize(s, 12);
      auto const text = f.concatenated();
      EXPECT_TRUE(is_prefix(text, s.prefix(text.size())));
      std::size_t pos = 0;
      for (auto const& u : f.factors) {
        ASSERT_FALSE(u.empty());
        if (kind == scheme::cz) EXPECT_TRUE(is_closed(u));
        if (kind == scheme::pz) EXPECT_TRUE(is_palindrome(u));
        pos += u.size();
        EXPECT_EQ(count_occurrences(word_view(text).first(pos), u), 1u);
      }
    }
  }
}

TEST(Factorization, StreamCapThrows) {
  auto s = bonacci_stream(3);
  EXPECT_THROW(closed_z_factorize(s, 30, 1000), std::length_error);
}

TEST(Factorization, SchemeNames) {
  for (auto k : {scheme::z, scheme::cz, scheme::pz, scheme::c, scheme::cc}) {
    EXPECT_EQ(parse_scheme(to_string(k)), k);
  }
  EXPECT_THROW(parse_scheme("lz"), std::invalid_argument);
}
