#include "pacs/special.hpp"

#include <cmath>
#include <string>

namespace pacs {

namespace {
constexpr double kEntropyGuard = 1e-12;
}

LaguerreOrder::LaguerreOrder(int m) : m_(m) {
  if (m < 0 || m > kMaxLaguerreOrder) {
    throw std::domain_error("photon number m=" + std::to_string(m) +
                            " outside [0, " +
                            std::to_string(kMaxLaguerreOrder) + "]");
  }
}

StrengthParam::StrengthParam(double alpha2) : alpha2_(alpha2) {
  if (!std::isfinite(alpha2) || alpha2 < 0.0) {
    throw std::domain_error("alpha2 must be finite and non-negative");
  }
}

StrengthParam StrengthParam::from_overlap(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::domain_error("overlap p must lie in (0, 1]");
  }
  return StrengthParam(p == 1.0 ? 0.0 : -0.5 * std::log(p));
}

double StrengthParam::p() const noexcept { return std::exp(-2.0 * alpha2_); }

double laguerre(LaguerreOrder order, double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("laguerre: non-finite argument");
  }
  const int m = order.value();
  double prev = 1.0;
  if (m == 0) return prev;
  double cur = 1.0 - x;
  for (int n = 1; n < m; ++n) {
    const double next = ((2.0 * n + 1.0 - x) * cur - n * prev) / (n + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double kappa(LaguerreOrder m, StrengthParam s) {
  const double a = s.alpha2();
  // L_m(-a) is a sum of positive terms, so the ratio is always defined.
  return laguerre(m, a) / laguerre(m, -a);
}

double binary_entropy(double x) {
  if (!(x >= -kEntropyGuard && x <= 1.0 + kEntropyGuard)) {
    throw std::domain_error("binary_entropy: argument " + std::to_string(x) +
                            " outside [0,1]");
  }
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double pacs_overlap(LaguerreOrder m, StrengthParam s) {
  return s.p() * kappa(m, s);
}

double kappa_small_alpha(LaguerreOrder m, StrengthParam s) {
  if (s.alpha2() >= kSmallAlphaWindow) {
    throw std::domain_error("kappa_small_alpha: alpha2 outside small-alpha window");
  }
  return 1.0 - 2.0 * m.value() * s.alpha2();
}

}  // namespace pacs
