#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace invlab {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr const char* kReportSchemaVersion = "1";

// Grid of truncation radii vs sup-norm errors on a compact set, with a
// fitted rate and a threshold verdict.
struct ConvergenceReport {
  std::string function_id;
  std::string engine;
  std::vector<double> box_lo, box_hi;
  double grid_h = 0.0;
  int grid_points = 0;
  std::vector<double> R_values;
  std::vector<double> sup_errors;
  std::optional<double> fitted_rate;  // p in error ~ c R^{-p}
  double threshold = 0.0;
  double grid_gap_correction = 0.0;  // Hoelder-based gap term added to the threshold
  bool uniform_verdict = false;
};

// error ~ c R^{-p} least-squares fit on the upper half of the sweep.
std::optional<double> fit_rate(const std::vector<double>& R, const std::vector<double>& err);

struct ReportRow {
  double R = 0.0;
  double sup_error = 0.0;
  int grid_points = 0;
  std::string engine;
};

struct ReportRecord {
  std::string schema_version = kReportSchemaVersion;
  std::string experiment_kind;
  std::string function_id;
  std::string engine;
  std::string config_echo;  // canonical config text
  std::string config_hash;  // fnv1a-64 of config_echo, hex
  std::vector<ReportRow> rows;
  std::optional<double> fitted_rate;
  std::string verdict;  // pass | fail | contrast
  std::map<std::string, double> metrics;
  std::uint64_t seed = 0;
  std::string library_version = kLibraryVersion;
  double runtime_seconds = 0.0;  // emitted only with timings enabled
};

std::string format_double(double v);  // fixed 17-significant-digit formatting
std::uint64_t fnv1a64(const std::string& s);

// CSV columns exactly "R,sup_error,grid_points,engine".
void emit_report_csv(const ReportRecord& rec, std::ostream& os);
void emit_report_json(const ReportRecord& rec, std::ostream& os, bool with_timings = false);
ReportRecord parse_report_json(std::istream& is);

void write_report_file(const ReportRecord& rec, const std::string& path, const std::string& format,
                       bool with_timings = false);

}  // namespace invlab
