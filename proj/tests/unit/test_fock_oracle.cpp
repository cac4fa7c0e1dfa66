#include "pacs/fock_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pacs/correlations.hpp"

namespace pacs::oracle {
namespace {

using linalg::Matrix;

DensityMatrix two_qubit(const std::vector<Complex>& psi) { return DensityMatrix::projector({2, 2}, psi); }

TEST(CoherentVector, VacuumAndPoisson) {
  const auto vac = coherent_vector(0.0, 10);
  EXPECT_EQ(vac.amplitudes[0], Complex(1.0));
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(vac.amplitudes[n], Complex(0.0));

  const auto one = coherent_vector(1.0, 30);
  double fact = 1.0;
  for (int n = 0; n <= 30; ++n) {
    if (n > 0) fact *= n;
    EXPECT_NEAR(one.amplitudes[n].real(), std::exp(-0.5) / std::sqrt(fact), 1e-15) << n;
  }
  EXPECT_NEAR(one.norm2(), 1.0, 1e-14);
}

TEST(CoherentVector, TruncationTooSmall) {
  EXPECT_THROW(coherent_vector(3.0, 8), TruncationError);
}

TEST(AddPhotons, VacuumToFockState) {
  const auto out = add_photons(coherent_vector(0.0, 6), 3);
  EXPECT_NEAR(std::abs(out.state.amplitudes[3]), 1.0, 1e-15);
  EXPECT_NEAR(out.raw_norm2, 6.0, 1e-12);  // ||(a^+)^3 |0>||^2 = 3!
  EXPECT_NEAR(out.state.norm2(), 1.0, 1e-15);
}

TEST(AddPhotons, NoHeadroom) {
  EXPECT_THROW(add_photons(coherent_vector(0.0, 2), 3), TruncationError);
}

TEST(TruncationRule, Formula) {
  EXPECT_EQ(truncation_nmax(ModelParams(0.0, 0, Parity::even)), 20);
  EXPECT_EQ(truncation_nmax(ModelParams(4.0, 2, Parity::even)), 46);
}

TEST(DensityMatrixOps, TraceEverythingIsOne) {
  const auto rho = build_tripartite(ModelParams(0.8, 1, Parity::even), 40);
  const auto scalar = partial_trace(rho, {});
  ASSERT_EQ(scalar.dimension(), 1u);
  EXPECT_NEAR(scalar(0, 0).real(), 1.0, 1e-13);
  EXPECT_THROW(partial_trace(rho, {0, 0}), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, {5}), std::invalid_argument);
  EXPECT_THROW(DensityMatrix({2, 2}, Matrix(3, 3)), std::invalid_argument);
}

TEST(Entropy, PureAndMaximallyMixed) {
  EXPECT_NEAR(von_neumann_entropy(two_qubit({1.0, 0.0, 0.0, 0.0})), 0.0, 1e-14);
  Matrix half(2, 2);
  half(0, 0) = 0.5;
  half(1, 1) = 0.5;
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix({2}, half)), 1.0, 1e-15);
}

TEST(Wootters, BellAndProduct) {
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(wootters_concurrence(two_qubit({r, 0.0, 0.0, r})), 1.0, 1e-12);
  EXPECT_NEAR(wootters_concurrence(two_qubit({0.6, 0.8, 0.0, 0.0})), 0.0, 1e-12);
  EXPECT_THROW(wootters_concurrence(DensityMatrix::projector({2}, {1.0, 0.0})), std::invalid_argument);
}

TEST(Wootters, PureStateFormula) {
  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> psi(4);
    double norm = 0.0;
    for (auto& c : psi) {
      c = Complex(g(rng), g(rng));
      norm += std::norm(c);
    }
    for (auto& c : psi) c /= std::sqrt(norm);
    const double expected = 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
    EXPECT_NEAR(wootters_concurrence(two_qubit(psi)), expected, 1e-10);
  }
}

TEST(Wootters, TwoQubitPureProjectors) {
  for (Parity k : {Parity::even, Parity::odd}) {
    for (double a : {0.05, 0.7, 2.5}) {
      const TwoQubitPure b = bell_state(ModelParams(a, 2, k));
      const auto v = b.vector();
      const double expected = 2.0 * std::abs(v[0] * v[3] - v[1] * v[2]);
      EXPECT_NEAR(wootters_concurrence(two_qubit({v.begin(), v.end()})), expected, 1e-10);
    }
  }
}

TEST(Discord, ProductAndBell) {
  EXPECT_NEAR(discord_numeric(two_qubit({0.6, 0.8, 0.0, 0.0}), Side::first), 0.0, 1e-9);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(discord_numeric(two_qubit({r, 0.0, 0.0, r}), Side::second), 1.0, 1e-9);
}

TEST(Discord, ConditionalEntropyBounded) {
  const auto rho = partial_trace(build_tripartite(ModelParams(0.4, 1, Parity::odd), 40), {0, 1});
  const auto best = discord_search(rho, Side::first);
  for (double th = 0.0; th <= M_PI; th += 0.3) {
    for (double ph = 0.0; ph < 2 * M_PI; ph += 0.5) {
      EXPECT_GE(conditional_entropy(rho, Side::first, {th, ph}), best.min_conditional_entropy - 1e-12);
    }
  }
}

TEST(BuildTripartite, ReproducesClosedFormDensities) {
  for (Parity k : {Parity::even, Parity::odd}) {
    for (int m = 0; m <= 4; ++m) {
      for (double a : {0.1, 0.9, 2.3, 4.0}) {
        const ModelParams p(a, m, k);
        const auto rho = build_tripartite(p, truncation_nmax(p));
        EXPECT_TRUE(rho.is_valid());
        const auto r12 = partial_trace(rho, {0, 1});
        const auto r23 = partial_trace(rho, {1, 2});
        const auto c12 = ghz_rho12(p).dense();
        const auto c23 = ghz_rho23(p).dense();
        for (std::size_t r = 0; r < 4; ++r) {
          for (std::size_t c = 0; c < 4; ++c) {
            EXPECT_NEAR(std::abs(r12(r, c) - c12[r][c]), 0.0, 1e-8);
            EXPECT_NEAR(std::abs(r23(r, c) - c23[r][c]), 0.0, 1e-8);
          }
        }
      }
    }
  }
}

TEST(BuildTripartite, SmallAlphaOddIsWState) {
  const ModelParams p(1e-4, 0, Parity::odd);
  const auto state = build_tripartite_state(p, truncation_nmax(p));
  // |100>, |010>, |001>
  const Complex overlap = (state.amplitudes[4] + state.amplitudes[2] + state.amplitudes[1]) / std::sqrt(3.0);
  EXPECT_GE(std::norm(overlap), 1.0 - 1e-3);
}

TEST(BuildTripartite, OddOriginRejected) {
  EXPECT_THROW(build_tripartite(ModelParams(0.0, 1, Parity::odd), 30), LimitRegimeError);
  EXPECT_THROW(build_bipartite(ModelParams(0.0, 1, Parity::odd), 30), LimitRegimeError);
}

TEST(BuildTripartite, FockAmplitudeNormalized) {
  const ModelParams p(0.6, 1, Parity::even);
  const int n = truncation_nmax(p);
  const auto state = build_tripartite_state(p, n);
  double total = 0.0;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      for (int c = 0; c <= n; ++c) total += std::norm(state.fock_amplitude(a, b, c));
    }
  }
  EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(Verify, SpecPoints) {
  for (const ModelParams& p : {ModelParams(1.0, 0, Parity::even), ModelParams(0.3, 3, Parity::odd),
                               ModelParams(20.0, 0, Parity::even)}) {
    const auto rec = verify(p);
    EXPECT_TRUE(rec.passed()) << rec.worst().field << " " << rec.worst().deviation;
    EXPECT_LE(rec.max_entropy_deviation(), 1e-8);
    EXPECT_LE(rec.max_discord_deviation(), 1e-3);
  }
}

TEST(Verify, SignedDeviationAndBounds) {
  const auto rec = verify(ModelParams(0.7, 2, Parity::odd), std::nullopt, {1e-30, 1e-30});
  EXPECT_FALSE(rec.passed());
  for (const auto& f : rec.fields) EXPECT_DOUBLE_EQ(f.deviation, f.closed_form - f.oracle);
}

TEST(Verify, LimitRegimeRejected) {
  EXPECT_THROW(verify(ModelParams(0.0, 0, Parity::odd)), LimitRegimeError);
}

}  // namespace
}  // namespace pacs::oracle
