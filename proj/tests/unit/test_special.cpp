#include "pacs/special.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

namespace pacs {
namespace {

TEST(Laguerre, LowOrders) {
  EXPECT_DOUBLE_EQ(laguerre(LaguerreOrder(0), 7.3), 1.0);
  EXPECT_DOUBLE_EQ(laguerre(LaguerreOrder(1), 2.0), -1.0);
  EXPECT_DOUBLE_EQ(laguerre(LaguerreOrder(2), -1.0), 3.5);
}

TEST(Laguerre, MatchesExplicitSum) {
  // L_m(x) = sum_j C(m, j) (-x)^j / j!
  for (int m = 0; m <= 12; ++m) {
    for (double x : {-3.0, -0.4, 0.0, 0.9, 2.5, 6.0}) {
      double sum = 0.0;
      double binom = 1.0;
      double fact = 1.0;
      for (int j = 0; j <= m; ++j) {
        if (j > 0) {
          binom *= static_cast<double>(m - j + 1) / j;
          fact *= j;
        }
        sum += binom * std::pow(-x, j) / fact;
      }
      EXPECT_NEAR(laguerre(LaguerreOrder(m), x), sum, 1e-9 * std::max(1.0, std::abs(sum)))
          << "m=" << m << " x=" << x;
    }
  }
}

TEST(Laguerre, RejectsNonFinite) {
  EXPECT_THROW(laguerre(LaguerreOrder(3), std::numeric_limits<double>::quiet_NaN()),
               std::domain_error);
  EXPECT_THROW(laguerre(LaguerreOrder(3), std::numeric_limits<double>::infinity()),
               std::domain_error);
}

TEST(LaguerreOrder, Range) {
  EXPECT_THROW(LaguerreOrder(-1), std::domain_error);
  EXPECT_THROW(LaguerreOrder(kMaxLaguerreOrder + 1), std::domain_error);
  EXPECT_EQ(LaguerreOrder(kMaxLaguerreOrder).value(), kMaxLaguerreOrder);
}

TEST(StrengthParam, OverlapRoundTrip) {
  EXPECT_THROW(StrengthParam(-0.1), std::domain_error);
  EXPECT_THROW(StrengthParam::from_overlap(0.0), std::domain_error);
  EXPECT_THROW(StrengthParam::from_overlap(1.5), std::domain_error);
  EXPECT_DOUBLE_EQ(StrengthParam::from_overlap(1.0).alpha2(), 0.0);
  const StrengthParam s = StrengthParam::from_overlap(0.5);
  EXPECT_NEAR(s.alpha2(), std::log(2.0) / 2.0, 1e-15);
  EXPECT_NEAR(s.p(), 0.5, 1e-15);
}

TEST(Kappa, Examples) {
  EXPECT_DOUBLE_EQ(kappa(LaguerreOrder(0), StrengthParam(1.7)), 1.0);
  EXPECT_NEAR(kappa(LaguerreOrder(1), StrengthParam(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(kappa(LaguerreOrder(1), StrengthParam(2.0)), -1.0 / 3.0, 1e-15);
}

TEST(Kappa, BoundedAndUnitAtOrigin) {
  for (int m = 0; m <= 20; ++m) {
    EXPECT_DOUBLE_EQ(kappa(LaguerreOrder(m), StrengthParam(0.0)), 1.0);
    for (double a = 0.01; a < 30.0; a *= 1.3) {
      EXPECT_LE(std::abs(kappa(LaguerreOrder(m), StrengthParam(a))), 1.0 + 1e-12);
    }
  }
}

TEST(BinaryEntropy, Examples) {
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_NEAR(binary_entropy(2.0 / 3.0), std::log2(3.0) - 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(binary_entropy(2.0 / 3.0), 0.9182958, 1e-7);
}

TEST(BinaryEntropy, SymmetricAndGuarded) {
  for (double x = 0.0; x <= 1.0; x += 0.01) {
    EXPECT_NEAR(binary_entropy(x), binary_entropy(1.0 - x), 1e-14);
  }
  EXPECT_EQ(binary_entropy(-5e-13), 0.0);
  EXPECT_EQ(binary_entropy(1.0 + 5e-13), 0.0);
  EXPECT_THROW(binary_entropy(-1e-6), std::domain_error);
  EXPECT_THROW(binary_entropy(1.001), std::domain_error);
  EXPECT_THROW(binary_entropy(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST(Overlap, Examples) {
  EXPECT_NEAR(pacs_overlap(LaguerreOrder(0), StrengthParam(1.0)), std::exp(-2.0), 1e-15);
  EXPECT_NEAR(pacs_overlap(LaguerreOrder(1), StrengthParam(1.0)), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(pacs_overlap(LaguerreOrder(2), StrengthParam(0.0)), 1.0);
}

TEST(KappaSmallAlpha, Examples) {
  EXPECT_DOUBLE_EQ(kappa_small_alpha(LaguerreOrder(3), StrengthParam(0.0)), 1.0);
  EXPECT_NEAR(kappa_small_alpha(LaguerreOrder(1), StrengthParam(0.01)), 0.98, 1e-15);
  EXPECT_NEAR(kappa_small_alpha(LaguerreOrder(2), StrengthParam(0.01)), 0.96, 1e-15);
  EXPECT_LT(std::abs(kappa(LaguerreOrder(2), StrengthParam(0.01)) -
                     kappa_small_alpha(LaguerreOrder(2), StrengthParam(0.01))),
            1e-3);
  EXPECT_THROW(kappa_small_alpha(LaguerreOrder(1), StrengthParam(0.2)), std::domain_error);
}

}  // namespace
}  // namespace pacs
