#include "pacs/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace pacs {

namespace {

constexpr double kConcurrenceGuard = 1e-12;

// Exponentials shared by every closed form at one parameter point.
struct Terms {
  double kappa;  // kappa_m(alpha2)
  double sign;   // cos(k pi)
  double q;      // e^{-2a}
  double q2;     // e^{-4a}
  double q3;     // e^{-6a}
  double one_minus_q2;  // 1 - e^{-4a}
  double one_minus_q4;  // 1 - e^{-8a}
  double den;           // 1 + kappa e^{-6a} cos(k pi)
};

Terms terms_for(const ModelParams& p, const char* op) {
  if (p.in_limit_regime()) {
    throw LimitRegimeError(std::string(op) +
                           ": odd state at alpha2 < 1e-8; use w_limit_report");
  }
  const double a = p.alpha2();
  Terms t{};
  t.kappa = kappa(p.m, p.s);
  t.sign = parity_sign(p.k);
  t.q = std::exp(-2.0 * a);
  t.q2 = std::exp(-4.0 * a);
  t.q3 = std::exp(-6.0 * a);
  t.one_minus_q2 = -std::expm1(-4.0 * a);
  t.one_minus_q4 = -std::expm1(-8.0 * a);
  t.den = 1.0 + t.kappa * t.q3 * t.sign;
  return t;
}

double entanglement_from_radicand(double radicand) {
  return binary_entropy(0.5 + 0.5 * std::sqrt(std::max(radicand, 0.0)));
}

double e23(const Terms& t) {
  const double x = t.kappa * t.q * t.one_minus_q2 / t.den;
  return entanglement_from_radicand(1.0 - x * x);
}

double e13(const Terms& t) {
  const double x2 = t.q2 * (1.0 - t.kappa * t.kappa * t.q2) * t.one_minus_q2 / (t.den * t.den);
  return entanglement_from_radicand(1.0 - x2);
}

double s1(const Terms& t) {
  return binary_entropy(0.5 * (1.0 + t.kappa * t.q) * (1.0 + t.q2 * t.sign) / t.den);
}
double s12(const Terms& t) {
  return binary_entropy(0.5 * (1.0 + t.kappa * t.q2 * t.sign) * (1.0 + t.q) / t.den);
}
double s2(const Terms& t) {
  return binary_entropy(0.5 * (1.0 + t.q) * (1.0 + t.kappa * t.q2 * t.sign) / t.den);
}
double s23(const Terms& t) {
  return binary_entropy(0.5 * (1.0 + t.q2 * t.sign) * (1.0 + t.kappa * t.q) / t.den);
}

double d12(const Terms& t) { return s1(t) - s12(t) + e23(t); }
double d23(const Terms& t) { return s2(t) - s23(t) + e13(t); }
double d1_23(const Terms& t) {
  return binary_entropy(0.5 + 0.5 * (t.kappa * t.q + t.q2 * t.sign) / t.den);
}

using Field = std::optional<double> CorrelationReport::*;

constexpr std::array<std::pair<std::string_view, Field>, 16> kFields{{
    {"S1", &CorrelationReport::S1},
    {"S2", &CorrelationReport::S2},
    {"S12", &CorrelationReport::S12},
    {"S23", &CorrelationReport::S23},
    {"C12_conc", &CorrelationReport::C12_conc},
    {"C23_conc", &CorrelationReport::C23_conc},
    {"C13_conc", &CorrelationReport::C13_conc},
    {"C1_23_conc", &CorrelationReport::C1_23_conc},
    {"E12", &CorrelationReport::E12},
    {"E23", &CorrelationReport::E23},
    {"E13", &CorrelationReport::E13},
    {"E1_23", &CorrelationReport::E1_23},
    {"D12", &CorrelationReport::D12},
    {"D23", &CorrelationReport::D23},
    {"D1_23", &CorrelationReport::D1_23},
    {"Delta123", &CorrelationReport::Delta123},
}};

constexpr std::array<std::string_view, 16> kFieldNames = [] {
  std::array<std::string_view, 16> names{};
  for (std::size_t i = 0; i < kFields.size(); ++i) names[i] = kFields[i].first;
  return names;
}();

}  // namespace

double eof_from_concurrence(double c) {
  if (!(c >= 0.0 && c <= 1.0 + kConcurrenceGuard)) {
    throw std::domain_error("eof_from_concurrence: concurrence " + std::to_string(c) +
                            " outside [0,1]");
  }
  return entanglement_from_radicand(1.0 - c * c);
}

double bell_concurrence(const ModelParams& p) {
  const Terms t = terms_for(p, "bell_concurrence");
  return std::sqrt(t.one_minus_q2) * std::sqrt(1.0 - t.kappa * t.kappa * t.q2) /
         (1.0 + t.kappa * t.q2 * t.sign);
}

double bell_eof(const ModelParams& p) {
  const Terms t = terms_for(p, "bell_eof");
  return binary_entropy(0.5 + t.q * (1.0 + t.kappa * t.sign) /
                                  (2.0 + 2.0 * t.kappa * t.q2 * t.sign));
}

double w_bell_concurrence_limit(LaguerreOrder m) {
  const double n = m.value();
  return 2.0 * std::sqrt(n + 1.0) / (n + 2.0);
}

Entropies entropies(const ModelParams& p) {
  const Terms t = terms_for(p, "entropies");
  return {s1(t), s2(t), s12(t), s23(t)};
}

GhzConcurrences ghz_concurrences(const ModelParams& p) {
  const Terms t = terms_for(p, "ghz_concurrences");
  const double k2q2 = t.kappa * t.kappa * t.q2;
  return {
      std::abs(t.kappa) * t.q * t.one_minus_q2 / t.den,
      t.q * std::sqrt((1.0 - k2q2) * t.one_minus_q2) / t.den,
      std::sqrt((1.0 - k2q2) * t.one_minus_q4) / t.den,
  };
}

double discord_12(const ModelParams& p) { return d12(terms_for(p, "discord_12")); }
double discord_23(const ModelParams& p) { return d23(terms_for(p, "discord_23")); }
double discord_1_23(const ModelParams& p) { return d1_23(terms_for(p, "discord_1_23")); }

double deficit(const ModelParams& p) {
  const Terms t = terms_for(p, "deficit");
  return d1_23(t) - 2.0 * d12(t);
}

std::optional<double> CorrelationReport::field(std::string_view name) const {
  for (const auto& [key, member] : kFields) {
    if (key == name) return this->*member;
  }
  throw std::invalid_argument("unknown report field '" + std::string(name) + "'");
}

std::span<const std::string_view> report_field_names() { return kFieldNames; }

bool is_report_field(std::string_view name) {
  return std::find(kFieldNames.begin(), kFieldNames.end(), name) != kFieldNames.end();
}

CorrelationReport w_limit_report(LaguerreOrder m) {
  const double n = m.value();
  const double h_two = binary_entropy(2.0 / (n + 3.0));
  const double h_lead = binary_entropy((n + 2.0) / (n + 3.0));
  const double h_e23 = binary_entropy(0.5 + 0.5 * std::sqrt((n + 1.0) * (n + 5.0)) / (n + 3.0));
  const double h_e13 = binary_entropy(0.5 + 0.5 * std::sqrt(n * n + 2.0 * n + 5.0) / (n + 3.0));

  CorrelationReport r{.params = ModelParams(StrengthParam(0.0), m, Parity::odd)};
  r.limit_regime = true;
  r.E12 = binary_entropy((n + 1.0) / (n + 2.0));
  r.C12_conc = w_bell_concurrence_limit(m);
  r.D12 = h_two - h_lead + h_e23;
  r.D23 = h_lead - h_two + h_e13;
  r.D1_23 = h_two;
  r.E1_23 = r.D1_23;
  r.Delta123 = 2.0 * h_lead - 2.0 * h_e23 - h_two;
  return r;
}

CorrelationReport report(const ModelParams& p) {
  if (p.in_limit_regime()) return w_limit_report(p.m);

  const Terms t = terms_for(p, "report");
  const auto conc = ghz_concurrences(p);

  CorrelationReport r{.params = p};
  r.S1 = s1(t);
  r.S2 = s2(t);
  r.S12 = s12(t);
  r.S23 = s23(t);
  r.C12_conc = bell_concurrence(p);
  r.C23_conc = conc.C23;
  r.C13_conc = conc.C13;
  r.C1_23_conc = conc.C1_23;
  r.E12 = bell_eof(p);
  r.E23 = e23(t);
  r.E13 = e13(t);
  r.D12 = *r.S1 - *r.S12 + *r.E23;
  r.D23 = *r.S2 - *r.S23 + *r.E13;
  r.D1_23 = d1_23(t);
  r.E1_23 = r.D1_23;
  r.Delta123 = *r.D1_23 - 2.0 * *r.D12;
  return r;
}

std::optional<double> ThresholdResult::alpha2() const {
  if (roots.empty()) return std::nullopt;
  return roots.back();
}

std::optional<double> ThresholdResult::p() const {
  if (roots.empty()) return std::nullopt;
  return std::exp(-2.0 * roots.back());
}

ThresholdResult violation_threshold(LaguerreOrder m, Parity k) {
  constexpr int kScanPoints = 200;
  constexpr double kLo = 1e-6;
  constexpr double kHi = 2.0;
  constexpr double kRootTol = 1e-7;

  auto f = [&](double a) { return deficit(ModelParams(StrengthParam(a), m, k)); };

  ThresholdResult result{m, k, {}};
  const double ratio = std::log(kHi / kLo) / (kScanPoints - 1);
  double prev_x = kLo;
  double prev_f = f(prev_x);
  for (int i = 1; i < kScanPoints; ++i) {
    const double x = (i == kScanPoints - 1) ? kHi : kLo * std::exp(ratio * i);
    const double fx = f(x);
    if ((prev_f < 0.0) != (fx < 0.0)) {
      double lo = prev_x;
      double hi = x;
      const bool lo_negative = prev_f < 0.0;
      while (hi - lo > kRootTol) {
        const double mid = 0.5 * (lo + hi);
        if ((f(mid) < 0.0) == lo_negative) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      result.roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_f = fx;
  }
  return result;
}

Peak locate_peak(const std::function<double(double)>& f, double lo, double hi,
                 int coarse_points) {
  if (!(lo < hi) || coarse_points < 3) {
    throw std::invalid_argument("locate_peak: need lo < hi and at least 3 coarse points");
  }
  const double step = (hi - lo) / (coarse_points - 1);
  int best = 0;
  double best_value = f(lo);
  for (int i = 1; i < coarse_points; ++i) {
    const double v = f(lo + step * i);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }

  double a = lo + step * std::max(best - 1, 0);
  double b = lo + step * std::min(best + 1, coarse_points - 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-10) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  const double fx = f(x);
  if (fx >= best_value) return {x, fx};
  return {lo + step * best, best_value};
}

}  // namespace pacs
