#pragma once

// Closed-form correlation measures of the photon-added quasi-Bell and
// quasi-GHZ coherent states. All entropies are in bits.

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pacs/states.hpp"

namespace pacs {

/// E = H(1/2 + sqrt(1 - c^2)/2) for c in [0, 1 + 1e-12].
double eof_from_concurrence(double c);

double bell_concurrence(const ModelParams& p);
double bell_eof(const ModelParams& p);
/// 2 sqrt(m+1) / (m+2): concurrence of the odd quasi-Bell state as alpha -> 0.
double w_bell_concurrence_limit(LaguerreOrder m);

struct Entropies {
  double S1;
  double S2;
  double S12;
  double S23;
};
Entropies entropies(const ModelParams& p);

struct GhzConcurrences {
  double C23;
  double C13;
  double C1_23;
};
GhzConcurrences ghz_concurrences(const ModelParams& p);

/// D12 = S1 - S12 + E23, measurement on mode 1.
double discord_12(const ModelParams& p);
/// D23 = S2 - S23 + E13, measurement on mode 2.
double discord_23(const ModelParams& p);
/// D_{1|23} = E_{1|23} of the pure tripartite state.
double discord_1_23(const ModelParams& p);
/// Delta123 = D_{1|23} - D12 - D13 with D13 = D12.
double deficit(const ModelParams& p);

struct CorrelationReport {
  ModelParams params;
  bool limit_regime = false;

  std::optional<double> S1{}, S2{}, S12{}, S23{};
  std::optional<double> C12_conc{}, C23_conc{}, C13_conc{}, C1_23_conc{};
  std::optional<double> E12{}, E23{}, E13{}, E1_23{};
  std::optional<double> D12{}, D23{}, D1_23{};
  std::optional<double> Delta123{};

  /// Field by its public name ("S1", "C12_conc", "Delta123", ...). Throws
  /// std::invalid_argument for unknown names.
  std::optional<double> field(std::string_view name) const;
};

/// Every CorrelationReport field name, in CSV column order.
std::span<const std::string_view> report_field_names();
bool is_report_field(std::string_view name);

/// Analytic alpha -> 0 limits of the odd states. Only fields with a known
/// closed-form limit are populated.
CorrelationReport w_limit_report(LaguerreOrder m);

/// All closed forms at one point; dispatches to w_limit_report in the limit
/// regime.
CorrelationReport report(const ModelParams& p);

struct ThresholdResult {
  LaguerreOrder m;
  Parity k;
  /// Every sign change of the deficit found on (1e-6, 2], ascending.
  std::vector<double> roots;

  bool monogamous_everywhere() const noexcept { return roots.empty(); }
  /// Upper edge of the violation region (largest root).
  std::optional<double> alpha2() const;
  std::optional<double> p() const;
};

/// Scans the deficit on a 200-point log grid over [1e-6, 2] and bisects each
/// bracket to |d alpha2| <= 1e-7.
ThresholdResult violation_threshold(LaguerreOrder m, Parity k);

struct Peak {
  double alpha2;
  double value;
};

/// Argmax of f over [lo, hi]: coarse scan of `coarse_points` followed by
/// golden-section refinement around the best sample.
Peak locate_peak(const std::function<double(double)>& f, double lo = 0.01, double hi = 4.0,
                 int coarse_points = 400);

}  // namespace pacs
