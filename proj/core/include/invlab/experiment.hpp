#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "invlab/quadrature.hpp"
#include "invlab/report.hpp"

namespace invlab {

class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// One experiment = one human-editable config file: '[section]' headers,
// 'key = value' lines, '#' comments.  See docs/config.md for the schema.
struct ExperimentConfig {
  // [experiment]
  std::string kind;                // fourier_uniform | laplace_inversion | laplace_bridge |
                                   // cesaro_compare | semigroup_inversion | tail_bound |
                                   // kernel_bound | riemann_lebesgue
  std::string function_id;
  std::string engine = "radial";   // radial | direct | decomposed | bromwich | cesaro
  std::string mode = "with_zero";  // semigroup: with_zero | plain

  // [domain]
  std::vector<double> lo{-1.0}, hi{1.0};  // compact box (fourier)
  double a = 0.0, b = 1.0;                // time interval (laplace/semigroup)
  int grid_per_dim = 9;
  int grid_points = 81;

  // [sweep]
  std::vector<double> R_sweep{16, 32, 64, 128, 256};

  // [laplace]
  double omega = 0.0;
  double alpha = 1.0;
  double alpha_prime = 0.5;

  // [kernel]
  int kernel_n = 1;

  // [tolerances]
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  double threshold = 1e-3;

  // [output]
  std::string out_path;
  std::string format = "json";

  // [run]
  std::uint64_t seed = 12345;
  int jobs = 0;
  int sphere_resolution = 24;

  QuadratureConfig quad() const {
    QuadratureConfig q;
    q.abs_tol = abs_tol;
    q.rel_tol = rel_tol;
    return q;
  }
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// Canonical serialization: hash input and the config echo in reports.
std::string canonical_text(const ExperimentConfig& cfg);

// Validates, runs, and fills a record (report not yet written to disk).
ReportRecord run_experiment(const ExperimentConfig& cfg);

// Expected verdict for (entry, kind) from the catalog; empty when the
// catalog declares nothing.
std::string expected_verdict(const std::string& function_id, const std::string& kind);

}  // namespace invlab
