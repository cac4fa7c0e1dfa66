#pragma once

// Command implementations behind the `pacs` executable: parameter sweeps,
// figure presets, oracle verification runs and monogamy thresholds.

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pacs/correlations.hpp"
#include "pacs/fock_oracle.hpp"

namespace pacs::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kVerificationFailure = 2,
  kIoError = 3,
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Axis { alpha2, p };

struct SweepSpec {
  Axis axis = Axis::alpha2;
  double start = 0.01;
  double stop = 4.0;
  int steps = 400;
  std::vector<int> m_list{0, 1, 2, 3};
  std::vector<Parity> k_list{Parity::even};
  std::vector<std::string> quantities;
  std::string output = "-";  // "-" is stdout

  /// Throws UsageError for an empty or inverted range, unknown fields or bad lists.
  void validate() const;
  /// steps evenly spaced values from start to stop inclusive.
  std::vector<double> axis_values() const;
};

struct SweepRow {
  double alpha2;
  double p;
  int m;
  Parity k;
  std::vector<std::optional<double>> values;  // one per requested quantity
};

/// Rows sorted by (k, m, axis value).
std::vector<SweepRow> evaluate_sweep(const SweepSpec& spec);

/// Shortest round-trip text: 17 significant digits, "nan" for absent values.
std::string format_value(std::optional<double> value);

void write_sweep_csv(const SweepSpec& spec, std::ostream& out);
/// Writes to spec.output (or stdout). Throws IoError if the file cannot be
/// opened.
void run_sweep(const SweepSpec& spec);

struct FigurePreset {
  std::string_view id;
  std::string_view quantity;
  Parity k;
  std::string_view caption;

  SweepSpec spec(std::string output = "-") const;
};

std::span<const FigurePreset> figure_presets();
/// Throws UsageError for an unknown id.
const FigurePreset& figure_preset(std::string_view id);
/// Plain gnuplot script that plots `csv_path`.
std::string plot_script(const FigurePreset& preset, std::string_view csv_path);

struct VerifyGrid {
  std::vector<double> alpha2;
  std::vector<int> m_list;
  std::vector<Parity> k_list;
  std::optional<int> nmax_override;
  oracle::VerifyBounds bounds;

  /// alpha2 in {0.1, 0.2, ..., 4.0}, m in 0..4, k in {0, 1}.
  static VerifyGrid defaults();
};

struct VerifySummary {
  std::vector<oracle::VerificationRecord> records;
  bool all_passed() const;
};

VerifySummary run_verify(const VerifyGrid& grid);
void write_verify_csv(const VerifySummary& summary, std::ostream& out);

/// Human-readable threshold record, one key=value per line.
std::string format_threshold(const ThresholdResult& result);

/// Parses "0", "1", "even", "odd".
Parity parse_parity(std::string_view text);

/// Entry point used by the executable; returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pacs::cli
