#pragma once

#include <functional>
#include <vector>

#include "invlab/cutoff.hpp"
#include "invlab/dirichlet.hpp"
#include "invlab/report.hpp"
#include "invlab/test_function.hpp"

namespace invlab {

// Constants C_j(n) of the odd/even reduction of the radial partial sum to
// one- and two-dimensional kernel forms (cutoff corrections collected in
// the third piece):
//   odd n = 2k+1:
//     S_R(F)(x) = sum_{j=0..k} C_j int (sin(Rr)/pi) r^{j-1} (d/dr)^j (F_bar eta_R) dr + tail
//   even n = 2k:
//     S_R(F)(x) = sum_{j=0..k-1} C_j int R J1(Rr) r^j (d/dr)^j (F_bar eta_R) dr + tail
struct DecompositionPlan {
  int n = 1;
  int k = 0;
  bool odd = true;
  std::vector<double> constants;
  std::vector<Rat> exact;
  SmoothCutoff cutoff{6};

  int deriv_count() const { return static_cast<int>(constants.size()) - 1; }
};

// Builds the constants by the two-step recursion from the n = 1 / n = 2
// base forms and validates them against the numerical identity on a
// Gaussian profile.  1 <= n <= 9.
DecompositionPlan derive_constants(int n);

// omega_{n-1} int_0^T r^{n-1} D_n^R(r) F_bar_x(r) dr with the truncation T
// taken from the declared majorant.  For n = 1 this reduces to
// (1/pi) int sin(Rs)/s F(x+s) ds.
Vec partial_sum_radial(const TestFunction& F, const Point& x, double R, const SphereRule& rule,
                       const QuadratureConfig& cfg);

// Frequency-side engine via ball_integral of the closed-form transform
// (n <= 3).  imag_residue, when given, receives the norm of the imaginary
// part (diagnostic; should be at quadrature level for real F).
Vec partial_sum_direct(const TestFunction& F, const Point& x, double R, const QuadratureConfig& cfg,
                       double* imag_residue = nullptr);

struct Decomposition {
  Vec head;      // I_R : leading 1-D/2-D kernel term
  Vec middle;    // II_R : derivative terms, j >= 1
  Vec tail;      // III_R : cutoff corrections + kernel tail
  Vec sum() const { return Vec(head + middle + tail); }
};

Decomposition decompose_partial_sum(const TestFunction& F, const Point& x, double R,
                                    const DecompositionPlan& plan, const SphereRule& rule,
                                    const QuadratureConfig& cfg);

struct TailBoundRow {
  double R = 0.0;
  double sup_tail = 0.0;  // sup_x || int D_n F_bar (1 - eta_R) r^{n-1} dr ||
  double ratio = 0.0;     // sup_tail * R / ||F||_L1
};

std::vector<TailBoundRow> tail_bound_check(const TestFunction& F, const Box& K,
                                           const std::vector<double>& R_sweep,
                                           const DecompositionPlan& plan, const SphereRule& rule,
                                           const QuadratureConfig& cfg, int grid_per_dim);

enum class InversionEngine { Radial, Direct, Decomposed };

struct ExperimentOpts {
  int grid_per_dim = 17;
  double threshold = 1e-3;
  int sphere_resolution = 24;
  QuadratureConfig quad;
  int jobs = 0;  // 0 = default_jobs()
};

ConvergenceReport uniform_inversion_experiment(const TestFunction& F, const Box& K,
                                               const std::vector<double>& R_values,
                                               InversionEngine engine, const ExperimentOpts& opts);

struct RiemannLebesgueRow {
  double R = 0.0;
  double osc_sup = 0.0;      // sup_t || int sin(Rs) F(t,s) ds ||
  double modulus_sup = 0.0;  // sup_t int || F(t,s) - F(t, s + pi/R) || ds
};

// The computable content of the uniform Riemann-Lebesgue lemma: reports
// both sides per R; the oscillatory side is bounded by half the
// translation modulus (plus quadrature error).
std::vector<RiemannLebesgueRow> riemann_lebesgue_uniform_check(
    const std::function<Vec(double t, double s)>& family, const std::vector<double>& t_grid,
    Interval s_support, const std::vector<double>& R_sweep, const QuadratureConfig& cfg);

std::vector<Point> make_grid(const Box& K, int per_dim);

}  // namespace invlab
