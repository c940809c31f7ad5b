#include <gtest/gtest.h>

#include <thread>

#include "closedz/mbonacci.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace closedz;

TEST(Families, FibonacciTable) {
  for (int n = -1; n <= 5; ++n) {
    EXPECT_EQ(to_string(fibonacci_word(n)), golden::fibonacci[n + 1]) << n;
  }
}

TEST(Families, SingularTable) {
  for (int n = -2; n <= 5; ++n) {
    EXPECT_EQ(to_string(singular_word(n)), golden::singular[n + 2]) << n;
  }
  EXPECT_THROW(singular_word(-3), std::out_of_range);
}

TEST(Families, BonacciTable) {
  for (auto const& row : golden::bonacci) {
    for (int n = 0; n < static_cast<int>(row.cells.size()); ++n) {
      EXPECT_EQ(to_string(bonacci_word(row.m, n)), row.cells[n]) << row.m << "," << n;
    }
  }
  EXPECT_EQ(bonacci_word(3, -1), "2"_w);
  EXPECT_THROW(bonacci_word(3, -2), std::out_of_range);
}

TEST(Families, PalindromicPrefixTable) {
  for (auto const& row : golden::palindromic_prefix) {
    for (int n = 1; n <= static_cast<int>(row.cells.size()); ++n) {
      EXPECT_EQ(to_string(palindromic_prefix(row.m, n)), row.cells[n - 1]) << row.m << "," << n;
    }
  }
  EXPECT_THROW(palindromic_prefix(3, 0), std::out_of_range);
}

TEST(Families, ClosedFactorTable) {
  for (auto const& row : golden::closed_factor) {
    for (int n = 0; n < static_cast<int>(row.cells.size()); ++n) {
      EXPECT_EQ(to_string(closed_z_factor(row.m, n)), row.cells[n]) << row.m << "," << n;
    }
  }
}

TEST(Families, ResidueMarks) {
  for (auto const& row : golden::residue_or_empty) {
    for (int n = 0; n < static_cast<int>(row.cells.size()); ++n) {
      EXPECT_EQ(to_string(mod_marks(row.m, n).residue_or_empty), row.cells[n]) << row.m << "," << n;
    }
  }
  auto const a = mod_marks(3, 3);
  EXPECT_EQ(a.residue, 0);
  EXPECT_EQ(a.residue_or_empty, word{});
  EXPECT_EQ(a.zero_if_divisible, "0"_w);
  auto const b = mod_marks(5, 4);
  EXPECT_EQ(b.residue, 4);
  EXPECT_EQ(b.residue_or_empty, "4"_w);
  EXPECT_EQ(b.zero_if_divisible, word{});
  EXPECT_EQ(mod_marks(2, 0).residue_or_empty, word{});
}

TEST(Families, SpecExamples) {
  EXPECT_EQ(bonacci_word(3, 5), "010201001020101020100102"_w);
  EXPECT_EQ(bonacci_word(4, 3), "01020103"_w);
  EXPECT_EQ(palindromic_prefix(3, 5), "01020100102010"_w);
  EXPECT_EQ(palindromic_prefix(5, 6), "0102010301020104010201030102010"_w);
  EXPECT_EQ(palindromic_prefix(4, 1), word{});
  EXPECT_EQ(singular_word(4), "10100101"_w);
  EXPECT_EQ(singular_word(5), "0010010100100"_w);
  EXPECT_EQ(singular_word(1), "00"_w);
  EXPECT_EQ(closed_z_factor(4, 5), "010301020101020103"_w);
  EXPECT_EQ(closed_z_factor(3, 4), "02010102"_w);
  EXPECT_EQ(closed_z_prefix(3, 0), word{});
  EXPECT_EQ(closed_z_prefix(2, 3), "0100"_w);
  EXPECT_EQ(closed_z_prefix(3, 4), "010201001"_w);
  EXPECT_EQ(closed_z_prefix(3, 4), oracle::bonacci_prefix(3, 9));
  EXPECT_EQ(ladder_gap(3, 3), "20"_w);
  EXPECT_EQ(ladder_gap(4, 4), "3010"_w);
  for (int m = 2; m <= 5; ++m) {
    EXPECT_EQ(ladder_gap(m, 2), "1"_w);
  }
  EXPECT_THROW(ladder_gap(3, 1), std::out_of_range);
}

TEST(Families, SingularNeedsBinaryAlphabet) {
  EXPECT_THROW(family_word(3, family::singular, 2), std::invalid_argument);
}

TEST(Families, Lengths) {
  EXPECT_EQ(family_length(2, family::bonacci, 5), 13u);
  std::vector<std::uint64_t> const trib{1, 2, 4, 7, 13, 24};
  for (int n = 0; n < 6; ++n) {
    EXPECT_EQ(family_length(3, family::bonacci, n), trib[n]);
  }
  EXPECT_EQ(family_length(3, family::closed_factor, 5), 15u);
  for (int m = 2; m <= 5; ++m) {
    for (int n = 0; n <= 16; ++n) {
      ASSERT_EQ(family_length(m, family::bonacci, n), bonacci_word(m, n).size());
      ASSERT_EQ(family_length(m, family::closed_factor, n), closed_z_factor(m, n).size()) << m << "," << n;
      ASSERT_EQ(family_length(m, family::closed_prefix, n), closed_z_prefix(m, n).size());
      ASSERT_EQ(family_length(m, family::palindromic_prefix, n + 1), palindromic_prefix(m, n + 1).size());
      if (n >= 2) ASSERT_EQ(family_length(m, family::ladder_gap, n), ladder_gap(m, n).size());
    }
  }
  EXPECT_THROW(family_length(3, family::closed_factor, -1), std::out_of_range);
}

TEST(Families, PalindromicPrefixesOfFixedPoint) {
  for (int m = 2; m <= 5; ++m) {
    auto const pals = oracle::palindromic_prefixes(m, family_length(m, family::palindromic_prefix, 12));
    for (int n = 1; n <= 12; ++n) {
      ASSERT_EQ(palindromic_prefix(m, n), pals[n - 1]) << m << "," << n;
    }
  }
}

TEST(Families, ClosedFormAgreesWithRecursion) {
  for (int m = 2; m <= 5; ++m) {
    for (int n = 0; n <= 16; ++n) {
      ASSERT_EQ(closed_z_factor(m, n), closed_z_factor_by_recursion(m, n)) << m << "," << n;
      ASSERT_EQ(closed_z_prefix(m, n), closed_z_prefix_by_recursion(m, n)) << m << "," << n;
    }
  }
}

TEST(Families, SingularIsShiftedClosedFactor) {
  for (int n = 0; n <= 18; ++n) {
    ASSERT_EQ(closed_z_factor(2, n), singular_word(n - 1));
  }
}

TEST(Families, ConcurrentReadersSeeOneValue) {
  std::vector<std::thread> pool;
  std::vector<word const*> seen(8);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] { seen[t] = &closed_z_factor(5, 17); });
  }
  for (auto& th : pool) th.join();
  for (auto* p : seen) {
    EXPECT_EQ(*p, *seen[0]);
  }
}
