#include "pacs/linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace pacs::linalg {
namespace {

Matrix random_hermitian(std::size_t n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = Complex(g(rng), g(rng));
  }
  return a + a.adjoint();
}

TEST(Jacobi, ReconstructsRandomHermitian) {
  std::mt19937 rng(7);
  for (std::size_t n : {1u, 2u, 4u, 8u, 12u}) {
    const Matrix h = random_hermitian(n, rng);
    const EigenSystem es = jacobi_eigen(h);
    ASSERT_EQ(es.values.size(), n);
    EXPECT_TRUE(std::is_sorted(es.values.begin(), es.values.end()));

    Matrix lambda(n, n);
    for (std::size_t i = 0; i < n; ++i) lambda(i, i) = es.values[i];
    const Matrix back = es.vectors * lambda * es.vectors.adjoint();
    EXPECT_LT(max_abs(back - h), 1e-12 * (1.0 + max_abs(h))) << "n=" << n;
    EXPECT_LT(max_abs(es.vectors.adjoint() * es.vectors - Matrix::identity(n)), 1e-13);
  }
}

TEST(Jacobi, Deterministic) {
  std::mt19937 rng(3);
  const Matrix h = random_hermitian(6, rng);
  EXPECT_EQ(eigenvalues(h), eigenvalues(h));
}

TEST(Jacobi, RejectsNonSquare) { EXPECT_THROW(jacobi_eigen(Matrix(2, 3)), std::invalid_argument); }

TEST(PsdSqrt, SquaresBack) {
  std::mt19937 rng(11);
  const Matrix h = random_hermitian(5, rng);
  const Matrix psd = h * h;
  const Matrix root = psd_sqrt(psd);
  EXPECT_LT(max_abs(root * root - psd), 1e-11 * max_abs(psd));
  EXPECT_LT(hermiticity_error(root), 1e-12);
}

TEST(SingularValues, DiagonalAndUnitary) {
  Matrix d(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = Complex(0.0, -2.0);
  d(2, 2) = 0.5;
  auto sv = singular_values(d);
  std::sort(sv.begin(), sv.end());
  ASSERT_EQ(sv.size(), 3u);
  EXPECT_NEAR(sv[0], 0.5, 1e-14);
  EXPECT_NEAR(sv[1], 2.0, 1e-14);
  EXPECT_NEAR(sv[2], 3.0, 1e-14);
}

}  // namespace
}  // namespace pacs::linalg
