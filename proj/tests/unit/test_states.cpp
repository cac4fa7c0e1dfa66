#include "pacs/states.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace pacs {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void expect_valid_density(const XStateDensity& rho) {
  EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
  EXPECT_GE(rho.eigenvalues()[0], -1e-10);
  const auto d = rho.dense();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      EXPECT_NEAR(std::abs(d[r][c] - std::conj(d[c][r])), 0.0, 1e-12);
    }
  }
}

TEST(ModeAmplitudes, Mode1) {
  const auto far = mode1_amplitudes(ModelParams(40.0, 3, Parity::even));
  EXPECT_NEAR(far.c_plus, kInvSqrt2, 1e-12);
  EXPECT_NEAR(far.c_minus, kInvSqrt2, 1e-12);

  for (int m = 0; m < 5; ++m) {
    const auto origin = mode1_amplitudes(ModelParams(0.0, m, Parity::even));
    EXPECT_DOUBLE_EQ(origin.c_plus, 1.0);
    EXPECT_DOUBLE_EQ(origin.c_minus, 0.0);
  }

  // kappa_1(1) = 0 makes the two photon-added states orthogonal.
  const auto mid = mode1_amplitudes(ModelParams(1.0, 1, Parity::even));
  EXPECT_NEAR(mid.c_plus, kInvSqrt2, 1e-15);
  EXPECT_NEAR(mid.c_minus, kInvSqrt2, 1e-15);
}

TEST(ModeAmplitudes, Mode23) {
  const auto zero = mode23_amplitudes(StrengthParam(0.0));
  EXPECT_DOUBLE_EQ(zero.c_plus, 1.0);
  EXPECT_DOUBLE_EQ(zero.c_minus, 0.0);

  const auto far = mode23_amplitudes(StrengthParam(40.0));
  EXPECT_NEAR(far.c_plus, kInvSqrt2, 1e-12);
  EXPECT_NEAR(far.c_minus, kInvSqrt2, 1e-12);

  const auto half = mode23_amplitudes(StrengthParam::from_overlap(0.5));
  EXPECT_NEAR(half.c_plus, std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_NEAR(half.c_minus, 0.5, 1e-15);
}

TEST(ModeAmplitudes, UnitNorm) {
  for (int m = 0; m < 6; ++m) {
    for (double a = 0.0; a < 6.0; a += 0.173) {
      const auto q = mode1_amplitudes(ModelParams(a, m, Parity::even));
      EXPECT_NEAR(q.c_plus * q.c_plus + q.c_minus * q.c_minus, 1.0, 1e-14);
    }
  }
}

TEST(BellState, ParitySelection) {
  const auto even = bell_state(ModelParams(0.7, 2, Parity::even));
  EXPECT_EQ(even.coefficients[0][1], 0.0);
  EXPECT_EQ(even.coefficients[1][0], 0.0);

  const auto odd = bell_state(ModelParams(0.7, 2, Parity::odd));
  EXPECT_EQ(odd.coefficients[0][0], 0.0);
  EXPECT_EQ(odd.coefficients[1][1], 0.0);
}

TEST(BellState, LargeAlphaIsMaximallyEntangled) {
  const auto b = bell_state(ModelParams(20.0, 0, Parity::even));
  EXPECT_NEAR(std::norm(b.amplitude(0, 0)), 0.5, 1e-12);
  EXPECT_NEAR(std::norm(b.amplitude(1, 1)), 0.5, 1e-12);
}

TEST(BellState, Normalized) {
  for (Parity k : {Parity::even, Parity::odd}) {
    for (int m = 0; m < 5; ++m) {
      for (double a : {0.01, 0.3, 1.0, 4.0}) {
        EXPECT_NEAR(bell_state(ModelParams(a, m, k)).norm2(), 1.0, 1e-13);
      }
    }
  }
}

TEST(BellState, LimitRegimeRejected) {
  EXPECT_THROW(bell_state(ModelParams(0.0, 1, Parity::odd)), LimitRegimeError);
  EXPECT_THROW(ghz_rho12(ModelParams(1e-9, 0, Parity::odd)), LimitRegimeError);
  EXPECT_NO_THROW(ghz_rho12(ModelParams(0.0, 0, Parity::even)));
}

TEST(GhzDensities, ValidOverGrid) {
  for (Parity k : {Parity::even, Parity::odd}) {
    for (int m = 0; m < 5; ++m) {
      for (double a = 0.01; a <= 4.0; a += 0.13) {
        const ModelParams p(a, m, k);
        expect_valid_density(ghz_rho12(p));
        expect_valid_density(ghz_rho23(p));
        EXPECT_NEAR(ghz_split_1_23(p).norm2(), 1.0, 1e-13);
      }
    }
  }
}

TEST(GhzDensities, M0CollapseRho23EqualsRho12) {
  for (Parity k : {Parity::even, Parity::odd}) {
    for (double a : {0.05, 0.5, 1.0, 3.0}) {
      const auto r12 = ghz_rho12(ModelParams(a, 0, k)).dense();
      const auto r23 = ghz_rho23(ModelParams(a, 0, k)).dense();
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) EXPECT_NEAR(std::abs(r12[r][c] - r23[r][c]), 0.0, 1e-12);
      }
    }
  }
}

TEST(GhzDensities, EvenOriginIsPureProduct) {
  const auto rho = ghz_rho12(ModelParams(0.0, 2, Parity::even));
  EXPECT_NEAR(rho.purity(), 1.0, 1e-14);
  EXPECT_NEAR(rho.diagonal(0), 1.0, 1e-14);
}

TEST(GhzDensities, LargeAlphaIsClassicalMixtureOfCoherentPairs) {
  // Rotate from the cat basis to |alpha>, |-alpha> on each qubit.
  const auto rho = ghz_rho12(ModelParams(20.0, 2, Parity::even)).dense();
  const double h[2][2] = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
  auto hh = [&](int r, int c) { return h[r / 2][c / 2] * h[r % 2][c % 2]; };
  const double expected[4] = {0.5, 0.0, 0.0, 0.5};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      std::complex<double> v = 0.0;
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) v += hh(r, i) * rho[i][j] * hh(j, c);
      }
      EXPECT_NEAR(std::abs(v - (r == c ? expected[r] : 0.0)), 0.0, 1e-8) << r << "," << c;
    }
  }
}

TEST(GhzSplit, EvenParityZeros) {
  const auto s = ghz_split_1_23(ModelParams(0.8, 1, Parity::even));
  EXPECT_EQ(s.coefficients[0][1], 0.0);
  EXPECT_EQ(s.coefficients[1][0], 0.0);
}

TEST(XStateDensity, RejectsInvalidInput) {
  EXPECT_THROW(XStateDensity({0.5, 0.5, 0.5, 0.0}, 0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(XStateDensity({0.5, 0.0, 0.0, 0.5}, 0.9, 0.0), std::invalid_argument);
  XStateDensity::Dense bad{};
  bad[0][0] = 1.0;
  bad[0][1] = 0.1;
  bad[1][0] = 0.1;
  EXPECT_THROW(XStateDensity::from_dense(bad), std::invalid_argument);
}

TEST(XStateDensity, EigenvaluesOfBellMixture) {
  const XStateDensity rho({0.5, 0.0, 0.0, 0.5}, 0.5, 0.0);
  const auto ev = rho.eigenvalues();
  EXPECT_NEAR(ev[3], 1.0, 1e-15);
  EXPECT_NEAR(ev[0] + ev[1] + ev[2], 0.0, 1e-15);
  EXPECT_NEAR(rho.purity(), 1.0, 1e-15);
}

TEST(Normalizations, ClosedForms) {
  const ModelParams p(0.6, 2, Parity::odd);
  const double kap = kappa(p.m, p.s);
  EXPECT_NEAR(ghz_normalization(p), 1.0 / std::sqrt(2.0 - 2.0 * kap * std::exp(-6.0 * 0.6)), 1e-15);
  EXPECT_NEAR(bell_normalization(p), 1.0 / std::sqrt(2.0 - 2.0 * kap * std::exp(-4.0 * 0.6)), 1e-15);
}

}  // namespace
}  // namespace pacs
