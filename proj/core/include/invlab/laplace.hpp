#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "invlab/fourier.hpp"
#include "invlab/report.hpp"
#include "invlab/test_function.hpp"

namespace invlab {

// Laplace transform of F at lambda by semi-infinite quadrature with the
// tail truncated analytically from the declared growth bound.
CVec laplace_transform(const TestFunction& F, Complex lambda, const QuadratureConfig& cfg);

// Evaluable transform with a write-once cache over contour nodes; either a
// closed form or a numeric wrapper over a TestFunction.
class TransformHandle {
 public:
  TransformHandle() = default;
  static TransformHandle closed_form(std::function<CVec(Complex)> fn, double omega0, int d);
  static TransformHandle numeric(const TestFunction& F, const QuadratureConfig& cfg);

  CVec eval(Complex lambda) const;
  double omega0() const { return omega0_; }
  int dim() const { return d_; }
  const std::string& source() const { return source_; }

 private:
  std::function<CVec(Complex)> fn_;
  double omega0_ = 0.0;
  int d_ = 1;
  std::string source_ = "closed-form";
  struct Cache {
    std::mutex mu;
    std::map<std::pair<double, double>, CVec> values;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

struct BromwichConfig {
  double omega = 0.0;
  double R = 16.0;
  std::vector<double> t_grid;
  QuadratureConfig quad;
  int jobs = 0;
};

struct BromwichOutput {
  std::vector<Vec> values;     // real parts, aligned with t_grid
  double imag_residue = 0.0;   // sup over t of || Im part ||
  double error_est = 0.0;      // summed panel estimates, worst t
  long evaluations = 0;
};

// (1/2 pi) int_{-R}^{R} e^{(omega + i k) t} T(omega + i k) dk on a shared
// panel layout over the whole t grid (transform values cached per node).
BromwichOutput bromwich_partial(const TransformHandle& T, const BromwichConfig& cfg);

// Cesaro mean (1/R) int_0^R [partial at r] dr realized as the
// Fejer-reweighted single integral with weight (1 - |k|/R).
BromwichOutput cesaro_partial_grid(const TransformHandle& T, const BromwichConfig& cfg);
Vec cesaro_partial(const TransformHandle& T, double omega, double R, double t,
                   const QuadratureConfig& quad);

// Brute-force realization of the iterated Cesaro integral (outer quadrature
// over r of inner partials); oracle for the Fejer reweighting equivalence.
Vec cesaro_partial_iterated(const TransformHandle& T, double omega, double R, double t,
                            const QuadratureConfig& quad);

struct BridgeRow {
  double t = 0.0;
  double difference = 0.0;  // || bromwich - e^{omega t} * 1-D Fourier partial of F~ ||
};

// Executable equivalence between the Bromwich partial integral and the 1-D
// Fourier partial sum of F~(s) = e^{-omega s} F(s) 1_{s>=0}.
std::vector<BridgeRow> fourier_laplace_bridge(const TestFunction& F, double omega, double R,
                                              const std::vector<double>& t_grid,
                                              const QuadratureConfig& cfg);

// Builds the one-sided damped extension F~ as a 1-D TestFunction.
TestFunction damped_extension(const TestFunction& F, double omega);

struct LaplaceExperimentOpts {
  int grid_points = 81;
  double threshold = 1e-2;
  bool cesaro = false;
  QuadratureConfig quad;
  int jobs = 0;
};

// Sup over the t grid of || partial inversion - F(t) || per R.  The t = 0
// endpoint is included only when the entry declares F(0) = 0; otherwise the
// grid starts at a = 0.25 (b - a0) per the documented start rule.
ConvergenceReport laplace_inversion_experiment(const TestFunction& F, double a, double b,
                                               double omega, const std::vector<double>& R_values,
                                               const LaplaceExperimentOpts& opts);

// Laplace-side t grid respecting the F(0) = 0 rule.
std::vector<double> laplace_time_grid(const TestFunction& F, double a, double b, int points);

}  // namespace invlab
