#pragma once

// Scalar special functions and entropy primitives shared by the closed forms.

#include <stdexcept>

namespace pacs {

inline constexpr int kMaxLaguerreOrder = 64;

/// Number of photons added to the first mode. Construction enforces
/// 0 <= m <= kMaxLaguerreOrder.
class LaguerreOrder {
 public:
  explicit LaguerreOrder(int m);
  int value() const noexcept { return m_; }
  friend bool operator==(LaguerreOrder, LaguerreOrder) = default;

 private:
  int m_;
};

/// Coherent strength |alpha|^2 >= 0. The overlap p = exp(-2|alpha|^2) is
/// always derived, never stored.
class StrengthParam {
 public:
  explicit StrengthParam(double alpha2);
  /// Inverse of p(): alpha2 = -ln(p)/2, p in (0, 1].
  static StrengthParam from_overlap(double p);

  double alpha2() const noexcept { return alpha2_; }
  double p() const noexcept;
  friend bool operator==(StrengthParam, StrengthParam) = default;

 private:
  double alpha2_;
};

/// L_m(x) by the three-term recurrence.
double laguerre(LaguerreOrder m, double x);

/// kappa_m = L_m(alpha2) / L_m(-alpha2). |kappa_m| <= 1 and kappa_m(0) = 1.
double kappa(LaguerreOrder m, StrengthParam s);

/// H(x) = -x log2 x - (1-x) log2(1-x). Inputs within 1e-12 of [0,1] are
/// clamped; anything further out throws std::domain_error.
double binary_entropy(double x);

/// <-alpha,m|alpha,m> = exp(-2 alpha2) * kappa_m.
double pacs_overlap(LaguerreOrder m, StrengthParam s);

/// First-order expansion 1 - 2 m alpha2, valid for alpha2 < kSmallAlphaWindow.
inline constexpr double kSmallAlphaWindow = 0.05;
double kappa_small_alpha(LaguerreOrder m, StrengthParam s);

}  // namespace pacs
