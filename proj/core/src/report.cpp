#include "invlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace invlab {

std::optional<double> fit_rate(const std::vector<double>& R, const std::vector<double>& err) {
  if (R.size() != err.size() || R.size() < 4) return std::nullopt;
  // Upper half of the sweep; early-R transients pollute the fit.
  std::size_t start = R.size() / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = start; i < R.size(); ++i) {
    if (!(err[i] > 0.0)) continue;
    double lx = std::log(R[i]), ly = std::log(err[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m < 2) return std::nullopt;
  double denom = m * sxx - sx * sx;
  if (std::abs(denom) < 1e-30) return std::nullopt;
  double slope = (m * sxy - sx * sy) / denom;
  return -slope;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void emit_report_csv(const ReportRecord& rec, std::ostream& os) {
  os << "R,sup_error,grid_points,engine\n";
  for (const auto& row : rec.rows)
    os << format_double(row.R) << ',' << format_double(row.sup_error) << ',' << row.grid_points
       << ',' << row.engine << '\n';
}

namespace {

nlohmann::json to_json(const ReportRecord& rec, bool with_timings) {
  nlohmann::json j;
  j["schema_version"] = rec.schema_version;
  j["experiment_kind"] = rec.experiment_kind;
  j["function_id"] = rec.function_id;
  j["engine"] = rec.engine;
  j["config_echo"] = rec.config_echo;
  j["config_hash"] = rec.config_hash;
  j["verdict"] = rec.verdict;
  j["seed"] = rec.seed;
  j["library_version"] = rec.library_version;
  if (rec.fitted_rate) j["fitted_rate"] = format_double(*rec.fitted_rate);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rec.rows) {
    nlohmann::json row;
    row["R"] = format_double(r.R);
    row["sup_error"] = format_double(r.sup_error);
    row["grid_points"] = r.grid_points;
    row["engine"] = r.engine;
    rows.push_back(row);
  }
  j["rows"] = rows;
  nlohmann::json metrics;
  for (const auto& [k, v] : rec.metrics) metrics[k] = format_double(v);
  j["metrics"] = metrics;
  if (with_timings) j["runtime_seconds"] = format_double(rec.runtime_seconds);
  return j;
}

}  // namespace

void emit_report_json(const ReportRecord& rec, std::ostream& os, bool with_timings) {
  os << to_json(rec, with_timings).dump(2) << '\n';
}

ReportRecord parse_report_json(std::istream& is) {
  nlohmann::json j;
  is >> j;
  ReportRecord rec;
  rec.schema_version = j.at("schema_version").get<std::string>();
  rec.experiment_kind = j.at("experiment_kind").get<std::string>();
  rec.function_id = j.at("function_id").get<std::string>();
  rec.engine = j.at("engine").get<std::string>();
  rec.config_echo = j.at("config_echo").get<std::string>();
  rec.config_hash = j.at("config_hash").get<std::string>();
  rec.verdict = j.at("verdict").get<std::string>();
  rec.seed = j.at("seed").get<std::uint64_t>();
  rec.library_version = j.at("library_version").get<std::string>();
  if (j.contains("fitted_rate")) rec.fitted_rate = std::stod(j["fitted_rate"].get<std::string>());
  for (const auto& row : j.at("rows")) {
    ReportRow r;
    r.R = std::stod(row.at("R").get<std::string>());
    r.sup_error = std::stod(row.at("sup_error").get<std::string>());
    r.grid_points = row.at("grid_points").get<int>();
    r.engine = row.at("engine").get<std::string>();
    rec.rows.push_back(r);
  }
  if (j.contains("metrics"))
    for (auto it = j["metrics"].begin(); it != j["metrics"].end(); ++it)
      rec.metrics[it.key()] = std::stod(it.value().get<std::string>());
  if (j.contains("runtime_seconds"))
    rec.runtime_seconds = std::stod(j["runtime_seconds"].get<std::string>());
  return rec;
}

void write_report_file(const ReportRecord& rec, const std::string& path, const std::string& format,
                       bool with_timings) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_report_file: cannot open " + path);
  if (format == "csv")
    emit_report_csv(rec, os);
  else if (format == "json")
    emit_report_json(rec, os, with_timings);
  else
    throw std::domain_error("write_report_file: unknown format '" + format + "'");
}

}  // namespace invlab
