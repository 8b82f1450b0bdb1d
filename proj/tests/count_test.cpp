#include "firreg/count.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>
#include <vector>

namespace {

using firreg::binomial;
using firreg::Count;
using firreg::factorial;
using Big = boost::multiprecision::cpp_int;

// Pascal's triangle by repeated addition, independent of binomial().
auto pascal_rows(int n) -> std::vector<std::vector<Big>> {
  std::vector<std::vector<Big>> rows(n + 1);
  for (int i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, 1);
    for (int k = 1; k < i; ++k)
      rows[i][k] = rows[i - 1][k - 1] + rows[i - 1][k];
  }
  return rows;
}

TEST(Count, DefaultIsZero) {
  EXPECT_TRUE(Count{}.is_zero());
  EXPECT_EQ(Count{}.str(), "0");
}

TEST(Count, ParseAndPrintRoundTrip) {
  for (const char *s : {"0", "1", "18446744073709551616", "340282366920938463463374607431768211457"})
    EXPECT_EQ(Count::parse(s).str(), s);
  EXPECT_THROW(Count::parse("-3"), std::invalid_argument);
  EXPECT_THROW(Count::parse("12x"), std::invalid_argument);
}

TEST(Count, FromU128) {
  const unsigned __int128 v = (static_cast<unsigned __int128>(1) << 100) + 7;
  EXPECT_EQ(Count::from_u128(v).str(), "1267650600228229401496703205383");
}

TEST(Count, ArithmeticAndOrdering) {
  Count a{5};
  Count b{7};
  EXPECT_EQ(a + b, Count{12});
  EXPECT_EQ(a * b, Count{35});
  EXPECT_LT(a, b);
  EXPECT_GT(b, a);
  EXPECT_NE(a, b);
  a += b;
  EXPECT_EQ(a, Count{12});
  a *= Count{3};
  EXPECT_EQ(a, Count{36});
}

TEST(Count, CheckedSubtraction) {
  EXPECT_EQ(checked_sub(Count{10}, Count{3}), Count{7});
  EXPECT_EQ(checked_sub(Count{3}, Count{3}), Count{0});
  EXPECT_THROW(checked_sub(Count{3}, Count{4}), std::domain_error);
}

TEST(Count, ExactDivision) {
  EXPECT_EQ(divide_exact(Count{12}, Count{4}), Count{3});
  EXPECT_THROW(divide_exact(Count{13}, Count{4}), std::logic_error);
  EXPECT_THROW(divide_exact(Count{13}, Count{0}), std::logic_error);
}

TEST(Count, FitsU64) {
  EXPECT_TRUE(Count{~0ULL}.fits_u64());
  EXPECT_EQ(Count{~0ULL}.to_u64(), ~0ULL);
  const Count big = Count{~0ULL} + Count{1};
  EXPECT_FALSE(big.fits_u64());
  EXPECT_THROW((void)big.to_u64(), std::overflow_error);
}

TEST(Count, StreamOutput) {
  std::ostringstream os;
  os << Count{1224};
  EXPECT_EQ(os.str(), "1224");
}

TEST(Factorial, RecurrenceAgainstDirectProduct) {
  Big direct = 1;
  EXPECT_EQ(factorial(0), Count{1});
  for (std::uint64_t n = 1; n <= 40; ++n) {
    direct *= n;
    EXPECT_EQ(factorial(n).str(), direct.str()) << n;
    EXPECT_EQ(factorial(n), Count{n} * factorial(n - 1));
  }
}

TEST(Binomial, KnownValues) {
  EXPECT_EQ(binomial(50, 2), Count{1225});
  EXPECT_EQ(binomial(51, 1), Count{51});
  EXPECT_EQ(binomial(0, 0), Count{1});
  EXPECT_EQ(binomial(5, 7), Count{0});
  EXPECT_EQ(binomial(5, -1), Count{0});
  EXPECT_EQ(binomial(-2, 0), Count{0});
}

TEST(BinomialProperty, MatchesPascalTriangle) {
  const auto rows = pascal_rows(60);
  for (int n = 0; n <= 60; ++n)
    for (int k = 0; k <= n; ++k)
      ASSERT_EQ(binomial(n, k).str(), rows[n][k].str()) << n << "," << k;
}

TEST(BinomialProperty, PascalRuleAndSymmetry) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      ASSERT_EQ(binomial(n, k), binomial(n, n - k)) << n << "," << k;
      if (k >= 1) {
        ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << "," << k;
      }
    }
  }
}

TEST(BinomialProperty, RowSumsArePowersOfTwo) {
  for (std::int64_t n = 0; n <= 60; ++n) {
    Count sum;
    for (std::int64_t k = 0; k <= n; ++k)
      sum += binomial(n, k);
    Big p = 1;
    p <<= n;
    ASSERT_EQ(sum.str(), p.str()) << n;
  }
}

}  // namespace
