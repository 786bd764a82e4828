#include <gtest/gtest.h>

#include <random>

#include "hyperperm/exact.hpp"

using namespace hyperperm;

TEST(Exact, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(7, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Exact, RationalPowerZeroToZeroIsOne) {
  EXPECT_EQ(rpow(BigRational(0), 0), 1);
  EXPECT_EQ(rpow(BigRational(2), -3), BigRational(1, 8));
  EXPECT_THROW(rpow(BigRational(0), -1), std::domain_error);
}

TEST(Exact, IntegerRootFloor) {
  EXPECT_EQ(iroot_floor(BigCount(26), 3), 2);
  EXPECT_EQ(iroot_floor(BigCount(27), 3), 3);
  EXPECT_EQ(iroot_floor(BigCount(0), 5), 0);
  const BigCount big = ipow(BigCount(12345), 7);
  EXPECT_EQ(iroot_floor(big, 7), 12345);
  EXPECT_EQ(iroot_floor(big - 1, 7), 12344);
}

TEST(Exact, RootProductMergesEqualBases) {
  RootProduct rp;
  rp.multiply(24, 1, 4);
  rp.multiply(24, 1, 4);
  ASSERT_EQ(rp.factors().size(), 1U);
  EXPECT_EQ(rp.factors()[0].num, 1U);
  EXPECT_EQ(rp.factors()[0].den, 2U);
  EXPECT_EQ(rp.clearing_exponent(), 2U);
  EXPECT_EQ(rp.raised(2), 24);
}

TEST(Exact, CompareAgainstSquareRoot) {
  RootProduct rp;
  rp.multiply(24, 1, 2);  // about 4.899
  EXPECT_EQ(compare_exact(4, rp).order, std::strong_ordering::less);
  EXPECT_EQ(compare_exact(5, rp).order, std::strong_ordering::greater);
  RootProduct sq;
  sq.multiply(25, 1, 2);
  EXPECT_EQ(compare_exact(5, sq).order, std::strong_ordering::equal);
}

TEST(Exact, ZeroProduct) {
  RootProduct rp;
  rp.multiply(7, 1, 3);
  rp.multiply(0, 1, 1);
  const auto c = compare_exact(0, rp);
  EXPECT_EQ(c.order, std::strong_ordering::equal);
  EXPECT_EQ(compare_exact(1, rp).order, std::strong_ordering::greater);
}

TEST(Exact, RecordedSidesReproduceOrder) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    RootProduct rp;
    const int factors = 1 + static_cast<int>(rng() % 4);
    for (int f = 0; f < factors; ++f) {
      const std::uint64_t r = 1 + rng() % 9;
      rp.multiply(factorial(r), 1, r);
    }
    const BigCount x = rng() % 200;
    const auto c = compare_exact(x, rp);
    EXPECT_EQ(compare3(c.lhs, c.rhs), c.order);
    // agree with a decimal estimate away from ties
    const double approx = static_cast<double>(rp.approx());
    const double xd = static_cast<double>(x);
    if (xd < approx * 0.999) {
      EXPECT_EQ(c.order, std::strong_ordering::less);
    }
    if (xd > approx * 1.001) {
      EXPECT_EQ(c.order, std::strong_ordering::greater);
    }
  }
}

TEST(Exact, LargeExponentsUseBracket) {
  // prod over distinct r of r!^(1/r) for r = 40..60: the lcm power is huge
  RootProduct rp;
  for (std::uint64_t r = 40; r <= 60; ++r) rp.multiply(factorial(r), 1, r);
  const Decimal approx = rp.approx();
  const BigCount below(static_cast<BigCount>(approx * Decimal(0.99)));
  const BigCount above(static_cast<BigCount>(approx * Decimal(1.01)));
  const auto lo = compare_exact(below, rp);
  const auto hi = compare_exact(above, rp);
  EXPECT_EQ(lo.order, std::strong_ordering::less);
  EXPECT_EQ(hi.order, std::strong_ordering::greater);
  EXPECT_EQ(compare3(lo.lhs, lo.rhs), lo.order);
  EXPECT_EQ(compare3(hi.lhs, hi.rhs), hi.order);
}

TEST(Exact, DisplayIsFinite) {
  EXPECT_EQ(display(Decimal(6)), "6");
  EXPECT_NE(display(Decimal("1e300")).find("e+300"), std::string::npos);
}
