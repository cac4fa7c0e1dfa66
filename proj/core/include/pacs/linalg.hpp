#pragma once

// Small dense complex matrices and a cyclic Jacobi eigensolver for Hermitian
// matrices. Intended for dimensions up to ~16.

#include <complex>
#include <cstddef>
#include <vector>

namespace pacs::linalg {

using Complex = std::complex<double>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix adjoint() const;
  Matrix conjugate() const;
  Complex trace() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Complex s, const Matrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Largest |a(i,j)|.
double max_abs(const Matrix& a);

/// max |a(i,j) - conj(a(j,i))|.
double hermiticity_error(const Matrix& a);

struct EigenSystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column j pairs with values[j]
};

/// Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations
/// (row-wise sweep order, deterministic).
EigenSystem jacobi_eigen(const Matrix& hermitian);

std::vector<double> eigenvalues(const Matrix& hermitian);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues below clamp * max(eigenvalue) are treated as zero.
Matrix psd_sqrt(const Matrix& hermitian, double clamp = 64.0 * 2.220446049250313e-16);

/// Singular values (descending) via the Hermitian dilation [[0, A], [A^H, 0]].
std::vector<double> singular_values(const Matrix& a);

}  // namespace pacs::linalg
