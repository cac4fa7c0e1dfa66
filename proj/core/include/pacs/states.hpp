#pragma once

// Encoded qubit states of the photon-added quasi-Bell and quasi-GHZ family.
//
// Basis convention: |00>, |01>, |10>, |11> with the first-listed mode as the
// left factor. Logical |0> is the even cat combination, |1> the odd one, so
//   |m, +-alpha> = c_plus |0> +- c_minus |1>.
// All amplitudes are real; exp(i k pi) is carried as the sign of Parity.

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include "pacs/special.hpp"

namespace pacs {

enum class Parity { even, odd };

/// cos(k pi): +1 for even, -1 for odd.
constexpr double parity_sign(Parity k) noexcept {
  return k == Parity::even ? 1.0 : -1.0;
}

/// Below this alpha2 an odd state is treated as its alpha -> 0 limit.
inline constexpr double kLimitRegimeAlpha2 = 1e-8;

struct ModelParams {
  StrengthParam s;
  LaguerreOrder m;
  Parity k;

  ModelParams(double alpha2, int m_photons, Parity parity)
      : s(alpha2), m(m_photons), k(parity) {}
  ModelParams(StrengthParam strength, LaguerreOrder order, Parity parity)
      : s(strength), m(order), k(parity) {}

  double alpha2() const noexcept { return s.alpha2(); }
  /// True at the odd alpha -> 0 point where the normalization vanishes.
  bool in_limit_regime() const noexcept {
    return k == Parity::odd && s.alpha2() < kLimitRegimeAlpha2;
  }
};

/// Raised when a closed form is requested at the degenerate odd alpha -> 0
/// point; callers should use the w_limit_* operations instead.
class LimitRegimeError : public std::domain_error {
 public:
  explicit LimitRegimeError(const std::string& what) : std::domain_error(what) {}
};

struct QubitAmplitudes {
  double c_plus;
  double c_minus;
};

/// Normalized pure two-qubit state N * sum_ij C_ij |i>|j>.
struct TwoQubitPure {
  using Coefficients = std::array<std::array<std::complex<double>, 2>, 2>;

  Coefficients coefficients{};
  double normalization = 1.0;

  std::complex<double> amplitude(int i, int j) const {
    return normalization * coefficients[i][j];
  }
  /// Amplitudes flattened in |00>,|01>,|10>,|11> order.
  std::array<std::complex<double>, 4> vector() const;
  double norm2() const;
};

/// Two-qubit density matrix supported on the diagonal and anti-diagonal only.
/// Storage keeps the four diagonal entries plus rho(0,3) and rho(1,2); the
/// remaining anti-diagonal entries are their conjugates.
class XStateDensity {
 public:
  using Dense = std::array<std::array<std::complex<double>, 4>, 4>;

  XStateDensity(std::array<double, 4> diagonal, std::complex<double> outer,
                std::complex<double> inner);

  /// Builds from a dense matrix, throwing if any off-support entry exceeds tol
  /// or the invariants fail.
  static XStateDensity from_dense(const Dense& rho, double tol = 1e-12);

  double diagonal(int i) const { return diag_[i]; }
  std::complex<double> outer() const noexcept { return outer_; }  // rho(0,3)
  std::complex<double> inner() const noexcept { return inner_; }  // rho(1,2)

  std::complex<double> operator()(int row, int col) const;
  Dense dense() const;

  double trace() const noexcept;
  double purity() const noexcept;
  /// Ascending eigenvalues from the two 2x2 blocks.
  std::array<double, 4> eigenvalues() const;

 private:
  std::array<double, 4> diag_;
  std::complex<double> outer_;
  std::complex<double> inner_;
};

QubitAmplitudes mode1_amplitudes(const ModelParams& p);
QubitAmplitudes mode23_amplitudes(StrengthParam s);

/// Photon-added quasi-Bell state in the (mode 1) x (mode 2) cat basis.
TwoQubitPure bell_state(const ModelParams& p);

/// rho_12 (= rho_13) of the photon-added quasi-GHZ state.
XStateDensity ghz_rho12(const ModelParams& p);
/// rho_23 of the photon-added quasi-GHZ state, mode 2 as the left factor.
XStateDensity ghz_rho23(const ModelParams& p);
/// Pure 1|(23) bipartition with mode 1 on the left and the (23) cat pair on
/// the right.
TwoQubitPure ghz_split_1_23(const ModelParams& p);

/// Quasi-GHZ normalization C_k(alpha, m) = (2 + 2 kappa e^{-6 a} cos k pi)^{-1/2}.
double ghz_normalization(const ModelParams& p);
/// Quasi-Bell normalization N_k(alpha, m) = (2 + 2 kappa e^{-4 a} cos k pi)^{-1/2}.
double bell_normalization(const ModelParams& p);

}  // namespace pacs
