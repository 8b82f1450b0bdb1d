#include "firreg/condition.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

namespace {

using namespace firreg;
using Big = boost::multiprecision::cpp_int;

auto fact(long n) -> Big {
  Big r = 1;
  for (long i = 2; i <= n; ++i)
    r *= i;
  return r;
}

auto choose(long n, long k) -> Big {
  if (n < 0 || k < 0 || k > n)
    return 0;
  return fact(n) / (fact(k) * fact(n - k));
}

// Same value as choose(), via the falling factorial; used where n is large.
auto choose_falling(long n, long k) -> Big {
  if (n < 0 || k < 0 || k > n)
    return 0;
  Big num = 1;
  for (long i = 0; i < k; ++i)
    num *= n - i;
  return num / fact(k);
}

// The condition written directly from its definition.
auto oracle_condition(long n, long t, long l) -> bool {
  if (t == 1)
    return Big(l) > (fact(n) + 1) * (n - 1);
  if (l <= 2 * t)
    return false;
  if (l < 200)
    return choose(l - 2, n - 2) > fact(n) * choose(l - 1, n - t - 1);
  return choose_falling(l - 2, n - 2) > fact(n) * choose_falling(l - 1, n - t - 1);
}

// For l > n the t >= 2 inequality is equivalent to P(l) > 0 with
// P(x) = (x-n+1)...(x-n+t) - n!(n-2)!/(n-t-1)! (x-1).
auto polynomial_sign_positive(long n, long t, long l) -> bool {
  Big prod = 1;
  for (long k = 1; k <= t; ++k)
    prod *= (l - n + k);
  const Big coeff = fact(n) * fact(n - 2) / fact(n - t - 1);
  return prod - coeff * (l - 1) > 0;
}

TEST(Condition, SmallestInstances) {
  EXPECT_EQ(min_l(3, 1), 15U);
  EXPECT_EQ(min_l(4, 1), 76U);
  EXPECT_EQ(min_l(4, 2), 52U);
}

TEST(Condition, DecisiveMarginForC4) {
  const auto r = check_condition(4, 2, 52);
  ASSERT_TRUE(r.holds);
  EXPECT_EQ(r.branch, ConditionBranch::kGeneral);
  EXPECT_EQ(r.decisive.lhs, Count{1225});
  EXPECT_EQ(r.decisive.rhs, Count{1224});
  ASSERT_TRUE(r.scale_clause.has_value());
  EXPECT_TRUE(r.scale_clause->holds);
  EXPECT_FALSE(check_condition(4, 2, 51).holds);
}

TEST(Condition, PendantBranchBoundary) {
  const auto r = check_condition(3, 1, 15);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.branch, ConditionBranch::kPendant);
  EXPECT_EQ(r.decisive.rhs, Count{14});
  EXPECT_FALSE(r.scale_clause.has_value());
  EXPECT_FALSE(check_condition(3, 1, 14).holds);
}

TEST(Condition, RejectsBadPairs) {
  EXPECT_THROW(check_condition(3, 2, 20), PreconditionError);
  EXPECT_THROW(check_condition(4, 0, 20), PreconditionError);
  EXPECT_THROW(min_l(2, 1), PreconditionError);
}

TEST(ConditionProperty, AgreesWithDefinitionForSmallN) {
  for (long n = 3; n <= 7; ++n)
    for (long t = 1; t <= n - 2; ++t)
      for (long l = 1; l <= 400; ++l)
        ASSERT_EQ(check_condition(n, t, l).holds, oracle_condition(n, t, l)) << n << "," << t << "," << l;
}

TEST(ConditionProperty, BinomialFormsAgree) {
  for (long n = 0; n <= 150; ++n)
    for (long k = -1; k <= n + 1; ++k)
      ASSERT_EQ(choose(n, k), choose_falling(n, k));
}

TEST(ConditionProperty, MinLIsLeastAndMatchesPolynomialForm) {
  for (long n = 3; n <= 7; ++n) {
    for (long t = 1; t <= n - 2; ++t) {
      const auto l = static_cast<long>(min_l(n, t));
      ASSERT_TRUE(oracle_condition(n, t, l));
      for (long k = 1; k < l && k < 20000; ++k)
        ASSERT_FALSE(oracle_condition(n, t, k)) << n << "," << t << "," << k;
      if (t >= 2 && l > n) {
        ASSERT_TRUE(polynomial_sign_positive(n, t, l));
      }
    }
  }
}

TEST(ConditionProperty, PendantBranchIsMonotone) {
  for (std::size_t n = 3; n <= 7; ++n) {
    const std::size_t l0 = min_l(n, 1);
    for (std::size_t l = l0; l < l0 + 200; ++l)
      ASSERT_TRUE(check_condition(n, 1, l).holds);
  }
}

TEST(ConditionProperty, GeneralBranchHoldsOnWindowAfterMinimum) {
  for (std::size_t n = 4; n <= 7; ++n)
    for (std::size_t t = 2; t <= n - 2; ++t) {
      const std::size_t l0 = min_l(n, t);
      for (std::size_t l = l0; l <= l0 + 50; ++l)
        ASSERT_TRUE(check_condition(n, t, l).holds) << n << "," << t << "," << l;
    }
}

TEST(ConditionProperty, LemmaThirteenFollows) {
  for (std::size_t n = 3; n <= 7; ++n)
    for (std::size_t t = 1; t + 2 <= n; ++t)
      for (std::size_t l : enumerate_valid_l(n, t, 30))
        for (const auto &s : check_lemma13(n, t, l))
          ASSERT_TRUE(s.holds) << n << "," << t << "," << l << ": " << s.expression;
}

TEST(Condition, LemmaThirteenNeedsTheCondition) { EXPECT_THROW(check_lemma13(4, 2, 51), PreconditionError); }

TEST(Condition, EnumerateValidL) {
  EXPECT_EQ(enumerate_valid_l(3, 1, 3), (std::vector<std::size_t>{15, 16, 17}));
}

}  // namespace
