#include "pacs/cli/commands.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"

namespace pacs::cli {

namespace {

int parity_index(Parity k) { return k == Parity::even ? 0 : 1; }

template <typename Fn>
void with_output(const std::string& path, Fn&& write) {
  if (path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

constexpr std::array<FigurePreset, 8> kPresets{{
    {"fig1", "E12", Parity::even, "entanglement of formation E12, k=0"},
    {"fig2", "E12", Parity::odd, "entanglement of formation E12, k=1"},
    {"fig3", "D12", Parity::even, "quantum discord D12, k=0"},
    {"fig4", "D23", Parity::even, "quantum discord D23, k=0"},
    {"fig5", "D12", Parity::odd, "quantum discord D12, k=1"},
    {"fig6", "D23", Parity::odd, "quantum discord D23, k=1"},
    {"fig7", "Delta123", Parity::even, "discord monogamy deficit Delta123, k=0"},
    {"fig8", "Delta123", Parity::odd, "discord monogamy deficit Delta123, k=1"},
}};

std::vector<Parity> parse_parities(const std::vector<std::string>& items) {
  std::vector<Parity> out;
  for (const auto& s : items) out.push_back(parse_parity(s));
  return out;
}

}  // namespace

Parity parse_parity(std::string_view text) {
  if (text == "0" || text == "even") return Parity::even;
  if (text == "1" || text == "odd") return Parity::odd;
  throw UsageError("parity must be 0, 1, even or odd (got '" + std::string(text) + "')");
}

void SweepSpec::validate() const {
  if (!(start < stop)) throw UsageError("sweep: --start must be below --stop");
  if (steps < 2) throw UsageError("sweep: --steps must be at least 2");
  if (axis == Axis::p && !(start > 0.0 && stop <= 1.0)) {
    throw UsageError("sweep: p axis must satisfy 0 < start < stop <= 1");
  }
  if (axis == Axis::alpha2 && start < 0.0) throw UsageError("sweep: alpha2 must be non-negative");
  if (m_list.empty() || k_list.empty()) throw UsageError("sweep: empty --m or --k list");
  for (int m : m_list) {
    if (m < 0 || m > kMaxLaguerreOrder) throw UsageError("sweep: m out of range");
  }
  if (quantities.empty()) throw UsageError("sweep: no --quantities requested");
  for (const auto& q : quantities) {
    if (!is_report_field(q)) throw UsageError("sweep: unknown quantity '" + q + "'");
  }
}

std::vector<double> SweepSpec::axis_values() const {
  std::vector<double> values(static_cast<std::size_t>(steps));
  const double width = stop - start;
  for (int i = 0; i < steps; ++i) {
    values[static_cast<std::size_t>(i)] =
        (i == steps - 1) ? stop : start + width * static_cast<double>(i) / (steps - 1);
  }
  return values;
}

std::vector<SweepRow> evaluate_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<Parity> ks = spec.k_list;
  std::sort(ks.begin(), ks.end(), [](Parity a, Parity b) { return parity_index(a) < parity_index(b); });
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  std::vector<int> ms = spec.m_list;
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

  const auto axis = spec.axis_values();
  std::vector<SweepRow> rows;
  rows.reserve(ks.size() * ms.size() * axis.size());
  for (Parity k : ks) {
    for (int m : ms) {
      for (double x : axis) {
        const StrengthParam s =
            spec.axis == Axis::alpha2 ? StrengthParam(x) : StrengthParam::from_overlap(x);
        const CorrelationReport r = report(ModelParams(s, LaguerreOrder(m), k));
        SweepRow row{s.alpha2(), spec.axis == Axis::p ? x : s.p(), m, k, {}};
        for (const auto& q : spec.quantities) row.values.push_back(r.field(q));
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string format_value(std::optional<double> value) {
  if (!value || std::isnan(*value)) return "nan";
  return fmt::format("{:.17g}", *value);
}

void write_sweep_csv(const SweepSpec& spec, std::ostream& out) {
  const auto rows = evaluate_sweep(spec);
  std::string header = "alpha2,p,m,k";
  for (const auto& q : spec.quantities) header += "," + q;
  out << header << '\n';
  for (const auto& row : rows) {
    std::string line = fmt::format("{},{},{},{}", format_value(row.alpha2), format_value(row.p),
                                   row.m, parity_index(row.k));
    for (const auto& v : row.values) {
      line += ',';
      line += format_value(v);
    }
    out << line << '\n';
  }
}

void run_sweep(const SweepSpec& spec) {
  spec.validate();
  with_output(spec.output, [&](std::ostream& os) { write_sweep_csv(spec, os); });
}

SweepSpec FigurePreset::spec(std::string output) const {
  SweepSpec s;
  s.axis = Axis::alpha2;
  s.start = 0.01;
  s.stop = 4.0;
  s.steps = 400;
  s.m_list = {0, 1, 2, 3};
  s.k_list = {k};
  s.quantities = {std::string(quantity)};
  s.output = std::move(output);
  return s;
}

std::span<const FigurePreset> figure_presets() { return kPresets; }

const FigurePreset& figure_preset(std::string_view id) {
  for (const auto& p : kPresets) {
    if (p.id == id) return p;
  }
  throw UsageError("unknown figure id '" + std::string(id) + "' (expected fig1..fig8)");
}

std::string plot_script(const FigurePreset& preset, std::string_view csv_path) {
  std::ostringstream os;
  os << "# gnuplot script for " << preset.id << ": " << preset.caption << "\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set xlabel '|alpha|^2'\n"
     << "set ylabel '" << preset.quantity << "'\n"
     << "plot for [m=0:3] '" << csv_path << "' using (column(\"m\")==m ? $1 : 1/0):5 "
     << "with lines title sprintf('m=%d', m)\n";
  return os.str();
}

VerifyGrid VerifyGrid::defaults() {
  VerifyGrid g;
  for (int i = 1; i <= 40; ++i) g.alpha2.push_back(0.1 * i);
  g.m_list = {0, 1, 2, 3, 4};
  g.k_list = {Parity::even, Parity::odd};
  return g;
}

bool VerifySummary::all_passed() const {
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.passed(); });
}

VerifySummary run_verify(const VerifyGrid& grid) {
  VerifySummary summary;
  for (Parity k : grid.k_list) {
    for (int m : grid.m_list) {
      for (double a : grid.alpha2) {
        const ModelParams p(StrengthParam(a), LaguerreOrder(m), k);
        summary.records.push_back(oracle::verify(p, grid.nmax_override, grid.bounds));
      }
    }
  }
  return summary;
}

void write_verify_csv(const VerifySummary& summary, std::ostream& out) {
  out << "alpha2,m,k,nmax,max_entropy_dev,max_discord_dev,worst_field,worst_dev,pass\n";
  for (const auto& r : summary.records) {
    const auto& worst = r.worst();
    out << fmt::format("{},{},{},{},{},{},{},{},{}\n", format_value(r.params.alpha2()),
                       r.params.m.value(), parity_index(r.params.k), r.nmax,
                       format_value(r.max_entropy_deviation()), format_value(r.max_discord_deviation()),
                       worst.field, format_value(worst.deviation), r.passed() ? 1 : 0);
  }
}

std::string format_threshold(const ThresholdResult& result) {
  std::string out = fmt::format("m={}\nk={}\n", result.m.value(), parity_index(result.k));
  if (result.monogamous_everywhere()) {
    out += "result=monogamous everywhere\n";
    return out;
  }
  out += fmt::format("alpha2*={}\np*={}\n", format_value(result.alpha2()), format_value(result.p()));
  if (result.roots.size() > 1) {
    std::string roots;
    for (double r : result.roots) roots += (roots.empty() ? "" : ";") + format_value(r);
    out += "roots=" + roots + "\n";
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum correlations in photon-added quasi-Bell and quasi-GHZ coherent states"};
  app.require_subcommand(1);

  SweepSpec sweep;
  std::string axis_name = "alpha2";
  std::vector<std::string> sweep_k{"0"};
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate closed forms over a parameter grid, write CSV");
  sweep_cmd->add_option("--axis", axis_name, "alpha2 or p")->check(CLI::IsMember({"alpha2", "p"}));
  sweep_cmd->add_option("--start", sweep.start, "First axis value");
  sweep_cmd->add_option("--stop", sweep.stop, "Last axis value");
  sweep_cmd->add_option("--steps", sweep.steps, "Number of axis values (>= 2)");
  sweep_cmd->add_option("--m", sweep.m_list, "Photon numbers, comma separated")->delimiter(',');
  sweep_cmd->add_option("--k", sweep_k, "Parities (0/1/even/odd), comma separated")->delimiter(',');
  sweep_cmd->add_option("--quantities", sweep.quantities, "Report fields, comma separated")
      ->delimiter(',')
      ->required();
  sweep_cmd->add_option("--out", sweep.output, "Output CSV path ('-' for stdout)");

  std::string figure_id;
  std::string figure_out;
  std::string figure_script;
  auto* figure_cmd = app.add_subcommand("figure", "Emit the CSV data of a figure preset (fig1..fig8)");
  figure_cmd->add_option("id", figure_id, "Figure id")->required();
  figure_cmd->add_option("--out", figure_out, "Output CSV path (default <id>.csv)");
  figure_cmd->add_option("--plot-script", figure_script, "Also write a gnuplot script here");

  VerifyGrid grid = VerifyGrid::defaults();
  double verify_start = 0.1;
  double verify_stop = 4.0;
  int verify_steps = 40;
  std::vector<std::string> verify_k{"0", "1"};
  std::optional<double> tolerance;
  std::string verify_out = "-";
  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against the Fock-space oracle");
  verify_cmd->add_option("--start", verify_start, "First alpha2");
  verify_cmd->add_option("--stop", verify_stop, "Last alpha2");
  verify_cmd->add_option("--steps", verify_steps, "Number of alpha2 values");
  verify_cmd->add_option("--m", grid.m_list, "Photon numbers, comma separated")->delimiter(',');
  verify_cmd->add_option("--k", verify_k, "Parities, comma separated")->delimiter(',');
  verify_cmd->add_option("--nmax-override", grid.nmax_override, "Fock truncation to use instead of the rule");
  verify_cmd->add_option("--tolerance", tolerance, "Single bound replacing both default bounds");
  verify_cmd->add_option("--out", verify_out, "Output CSV path ('-' for stdout)");

  int threshold_m = 0;
  std::string threshold_k = "1";
  auto* threshold_cmd = app.add_subcommand("threshold", "Locate the alpha2 where the discord deficit changes sign");
  threshold_cmd->add_option("--m", threshold_m, "Photon number");
  threshold_cmd->add_option("--k", threshold_k, "Parity (0/1/even/odd)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*sweep_cmd) {
      sweep.axis = axis_name == "p" ? Axis::p : Axis::alpha2;
      sweep.k_list = parse_parities(sweep_k);
      if (sweep.output == "-") {
        sweep.validate();
        write_sweep_csv(sweep, out);
      } else {
        run_sweep(sweep);
      }
    } else if (*figure_cmd) {
      const FigurePreset& preset = figure_preset(figure_id);
      const std::string path = figure_out.empty() ? std::string(preset.id) + ".csv" : figure_out;
      const SweepSpec spec = preset.spec(path);
      if (path == "-") {
        write_sweep_csv(spec, out);
      } else {
        run_sweep(spec);
      }
      if (!figure_script.empty()) {
        with_output(figure_script, [&](std::ostream& os) { os << plot_script(preset, path); });
      }
    } else if (*verify_cmd) {
      if (verify_steps < 1 || !(verify_start > 0.0) || verify_stop < verify_start) {
        throw UsageError("verify: need 0 < start <= stop and steps >= 1");
      }
      grid.alpha2.clear();
      for (int i = 0; i < verify_steps; ++i) {
        grid.alpha2.push_back(verify_steps == 1 ? verify_start
                              : (i == verify_steps - 1)
                                  ? verify_stop
                                  : verify_start + (verify_stop - verify_start) * i / (verify_steps - 1));
      }
      grid.k_list = parse_parities(verify_k);
      if (tolerance) grid.bounds = {*tolerance, *tolerance};
      const VerifySummary summary = run_verify(grid);
      if (verify_out == "-") {
        write_verify_csv(summary, out);
      } else {
        with_output(verify_out, [&](std::ostream& os) { write_verify_csv(summary, os); });
      }
      const auto failures = std::count_if(summary.records.begin(), summary.records.end(),
                                          [](const auto& r) { return !r.passed(); });
      err << fmt::format("verify: {} points, {} failing\n", summary.records.size(), failures);
      return failures == 0 ? kSuccess : kVerificationFailure;
    } else if (*threshold_cmd) {
      const auto result = violation_threshold(LaguerreOrder(threshold_m), parse_parity(threshold_k));
      out << format_threshold(result);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace pacs::cli
