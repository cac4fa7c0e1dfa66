#include "pacs/states.hpp"

#include <algorithm>
#include <cmath>

namespace pacs {

namespace {

constexpr double kAmplitudeGuard = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;

double guarded_sqrt(double x, const char* what) {
  if (x < -kAmplitudeGuard) {
    throw std::logic_error(std::string(what) + ": negative radicand (overlap bound violated)");
  }
  return std::sqrt(std::max(x, 0.0));
}

QubitAmplitudes amplitudes_for_overlap(double overlap, double one_minus_overlap) {
  return {guarded_sqrt(0.5 * (1.0 + overlap), "c_plus"),
          guarded_sqrt(0.5 * one_minus_overlap, "c_minus")};
}

void require_regular(const ModelParams& p, const char* op) {
  if (p.in_limit_regime()) {
    throw LimitRegimeError(std::string(op) +
                           ": odd state at alpha2 < 1e-8 has vanishing norm; "
                           "use the w_limit operations");
  }
}

using Vec4 = std::array<double, 4>;

// Components of |L,+> |R,+> + sign * |L,-> |R,->. With |X,+-> = c+|0> +- c-|1>
// the second product equals (-1)^(i+j) times the first, so entries of the
// wrong parity vanish exactly.
Vec4 cat_pair(const QubitAmplitudes& left, const QubitAmplitudes& right, double sign) {
  const std::array<double, 2> l{left.c_plus, left.c_minus};
  const std::array<double, 2> r{right.c_plus, right.c_minus};
  Vec4 v{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double flip = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      v[2 * i + j] = l[i] * r[j] * (1.0 + sign * flip);
    }
  }
  return v;
}

// weight_plus |v+><v+| + weight_minus |v-><v-|, rescaled to unit trace.
XStateDensity mixture(const Vec4& plus, double weight_plus, const Vec4& minus,
                      double weight_minus) {
  XStateDensity::Dense rho{};
  double trace = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const double value = weight_plus * plus[r] * plus[c] + weight_minus * minus[r] * minus[c];
      rho[r][c] = value;
      if (r == c) trace += value;
    }
  }
  for (auto& row : rho) {
    for (auto& entry : row) entry /= trace;
  }
  return XStateDensity::from_dense(rho);
}

TwoQubitPure pure_from_pair(const QubitAmplitudes& left, const QubitAmplitudes& right,
                            double sign) {
  const Vec4 v = cat_pair(left, right, sign);
  TwoQubitPure out;
  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.coefficients[i][j] = v[2 * i + j];
      sum += v[2 * i + j] * v[2 * i + j];
    }
  }
  out.normalization = 1.0 / std::sqrt(sum);
  return out;
}

}  // namespace

std::array<std::complex<double>, 4> TwoQubitPure::vector() const {
  return {amplitude(0, 0), amplitude(0, 1), amplitude(1, 0), amplitude(1, 1)};
}

double TwoQubitPure::norm2() const {
  double s = 0.0;
  for (const auto& a : vector()) s += std::norm(a);
  return s;
}

XStateDensity::XStateDensity(std::array<double, 4> diagonal, std::complex<double> outer,
                             std::complex<double> inner)
    : diag_(diagonal), outer_(outer), inner_(inner) {
  if (std::abs(trace() - 1.0) > kTraceTol) {
    throw std::invalid_argument("XStateDensity: trace differs from 1");
  }
  if (eigenvalues()[0] < -kPsdTol) {
    throw std::invalid_argument("XStateDensity: not positive semidefinite");
  }
}

XStateDensity XStateDensity::from_dense(const Dense& rho, double tol) {
  for (int r = 0; r < 4; ++r) {
    if (std::abs(rho[r][r].imag()) > tol) {
      throw std::invalid_argument("XStateDensity: complex diagonal entry");
    }
    for (int c = 0; c < 4; ++c) {
      const bool on_support = (r == c) || (r + c == 3);
      if (!on_support && std::abs(rho[r][c]) > tol) {
        throw std::invalid_argument("XStateDensity: entry outside X support");
      }
      if (std::abs(rho[r][c] - std::conj(rho[c][r])) > tol) {
        throw std::invalid_argument("XStateDensity: not Hermitian");
      }
    }
  }
  return XStateDensity({rho[0][0].real(), rho[1][1].real(), rho[2][2].real(), rho[3][3].real()},
                       rho[0][3], rho[1][2]);
}

std::complex<double> XStateDensity::operator()(int row, int col) const {
  if (row == col) return diag_[row];
  if (row == 0 && col == 3) return outer_;
  if (row == 3 && col == 0) return std::conj(outer_);
  if (row == 1 && col == 2) return inner_;
  if (row == 2 && col == 1) return std::conj(inner_);
  return 0.0;
}

XStateDensity::Dense XStateDensity::dense() const {
  Dense d{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) d[r][c] = (*this)(r, c);
  }
  return d;
}

double XStateDensity::trace() const noexcept {
  return diag_[0] + diag_[1] + diag_[2] + diag_[3];
}

double XStateDensity::purity() const noexcept {
  double s = 0.0;
  for (double d : diag_) s += d * d;
  return s + 2.0 * std::norm(outer_) + 2.0 * std::norm(inner_);
}

std::array<double, 4> XStateDensity::eigenvalues() const {
  auto block = [](double a, double d, std::complex<double> z) {
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(z));
    return std::array<double, 2>{mean - radius, mean + radius};
  };
  const auto o = block(diag_[0], diag_[3], outer_);
  const auto i = block(diag_[1], diag_[2], inner_);
  std::array<double, 4> ev{o[0], o[1], i[0], i[1]};
  std::sort(ev.begin(), ev.end());
  return ev;
}

QubitAmplitudes mode1_amplitudes(const ModelParams& p) {
  const double overlap = pacs_overlap(p.m, p.s);
  return amplitudes_for_overlap(overlap, 1.0 - overlap);
}

QubitAmplitudes mode23_amplitudes(StrengthParam s) {
  const double a = s.alpha2();
  return amplitudes_for_overlap(std::exp(-2.0 * a), -std::expm1(-2.0 * a));
}

double bell_normalization(const ModelParams& p) {
  const double a = p.alpha2();
  const double inv2 = 2.0 + 2.0 * kappa(p.m, p.s) * std::exp(-4.0 * a) * parity_sign(p.k);
  return 1.0 / std::sqrt(inv2);
}

double ghz_normalization(const ModelParams& p) {
  const double a = p.alpha2();
  const double inv2 = 2.0 + 2.0 * kappa(p.m, p.s) * std::exp(-6.0 * a) * parity_sign(p.k);
  return 1.0 / std::sqrt(inv2);
}

TwoQubitPure bell_state(const ModelParams& p) {
  require_regular(p, "bell_state");
  return pure_from_pair(mode1_amplitudes(p), mode23_amplitudes(p.s), parity_sign(p.k));
}

XStateDensity ghz_rho12(const ModelParams& p) {
  require_regular(p, "ghz_rho12");
  const auto left = mode1_amplitudes(p);
  const auto right = mode23_amplitudes(p.s);
  const double sign = parity_sign(p.k);
  const double q = std::exp(-2.0 * p.alpha2());
  const double one_minus_q = -std::expm1(-2.0 * p.alpha2());
  // Tracing out mode 3 weights |B> and Z|B> by (1 +- <-alpha|alpha>)/2.
  return mixture(cat_pair(left, right, sign), 0.5 * (1.0 + q), cat_pair(left, right, -sign),
                 0.5 * one_minus_q);
}

XStateDensity ghz_rho23(const ModelParams& p) {
  require_regular(p, "ghz_rho23");
  const auto cat = mode23_amplitudes(p.s);
  const double sign = parity_sign(p.k);
  const double overlap = pacs_overlap(p.m, p.s);
  // Tracing out mode 1 weights the m = 0 quasi-Bell pair by (1 +- kappa e^{-2a})/2.
  return mixture(cat_pair(cat, cat, sign), 0.5 * (1.0 + overlap), cat_pair(cat, cat, -sign),
                 0.5 * (1.0 - overlap));
}

TwoQubitPure ghz_split_1_23(const ModelParams& p) {
  require_regular(p, "ghz_split_1_23");
  const double a = p.alpha2();
  // (23) cat pair: |alpha,alpha> and |-alpha,-alpha> overlap by e^{-4a}.
  const auto pair = amplitudes_for_overlap(std::exp(-4.0 * a), -std::expm1(-4.0 * a));
  return pure_from_pair(mode1_amplitudes(p), pair, parity_sign(p.k));
}

}  // namespace pacs
