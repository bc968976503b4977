#include "invlab/fourier.hpp"

#include <cmath>
#include <stdexcept>

#include "invlab/parallel.hpp"

namespace invlab {
namespace {

std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// d^j/dr^j e^{-r^2} = (-1)^j H_j(r) e^{-r^2}, H physicists' Hermite.
double gauss_profile_deriv(int j, double r) {
  double h0 = 1.0, h1 = 2.0 * r;
  double h = (j == 0) ? h0 : h1;
  for (int m = 1; m < j; ++m) {
    double h2 = 2.0 * r * h1 - 2.0 * m * h0;
    h0 = h1;
    h1 = h2;
    h = h2;
  }
  double sign = (j % 2) ? -1.0 : 1.0;
  return sign * h * std::exp(-r * r);
}

double form_weight(bool odd, int j, double R, double r) {
  if (odd) {
    if (j == 0) return std::sin(R * r) / (M_PI * r);
    return std::sin(R * r) / M_PI * std::pow(r, j - 1);
  }
  return R * bessel_j1(R * r) * std::pow(r, j);
}

// Cheap envelope of the kernel magnitude used to size window tolerances:
// |D_n^R(r)| r^{n-1} <~ R^{(n-1)/2} r^{(n-3)/2}.
double kernel_amplitude(int n, double R) { return std::pow(R, 0.5 * (n - 1)); }

std::vector<Interval> tail_windows(const TestFunction& F, double kappa, double eps) {
  if (!F.majorant.valid() || !F.majorant.windows)
    throw std::domain_error("tail control requires a declared majorant on " + F.id);
  return F.majorant.windows(eps, kappa, 1e9);
}

}  // namespace

DecompositionPlan derive_constants(int n) {
  if (n < 1 || n > kMaxKernelDim)
    throw std::domain_error("derive_constants: supported dimensions are 1..9");

  DecompositionPlan plan;
  plan.n = n;
  plan.odd = (n % 2 == 1);
  plan.k = plan.odd ? (n - 1) / 2 : n / 2;

  std::vector<Rat> c = plan.odd ? std::vector<Rat>{Rat(2)} : std::vector<Rat>{Rat(1)};
  // Step n' - 2 -> n': C_j' = [(n'-2+j) C_j + C_{j-1}] / (n'-2); the
  // normalization is the surface-measure ratio omega_{n'-1}/(2 pi omega_{n'-3}).
  for (int np = (plan.odd ? 3 : 4); np <= n; np += 2) {
    std::vector<Rat> next(c.size() + 1);
    for (std::size_t j = 0; j < next.size(); ++j) {
      Rat up = (j < c.size()) ? Rat(np - 2 + static_cast<int>(j)) * c[j] : Rat(0);
      Rat carry = (j >= 1) ? c[j - 1] : Rat(0);
      next[j] = (up + carry) / Rat(np - 2);
    }
    c = std::move(next);
  }
  plan.exact = c;
  plan.constants.clear();
  for (const auto& r : c) plan.constants.push_back(r.value());

  // Leading constants are pinned by pointwise inversion: 2 (odd), 1 (even).
  double lead = plan.constants.front();
  if (std::abs(lead - (plan.odd ? 2.0 : 1.0)) > 1e-14)
    throw std::runtime_error("derive_constants: leading constant check failed");

  // Identity check on the Gaussian profile B(r) = e^{-r^2} with cutoff.
  if (n >= 2) {
    const double R = 3.0;
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-11;
    cfg.rel_tol = 1e-11;
    const SmoothCutoff& eta = plan.cutoff;
    auto A_deriv = [&](int j, double r) {
      double s = 0.0;
      for (int i = 0; i <= j; ++i)
        s += static_cast<double>(binom(j, i)) * gauss_profile_deriv(i, r) *
             eta.derivative(j - i, R, r);
      return s;
    };
    double lhs = sphere_surface_measure(n) *
                 integrate_weighted_panels(
                     [&](double r) { return std::pow(r, n - 1) * dirichlet_value(n, R, r); },
                     [&](double r) { return A_deriv(0, r); }, M_PI / R, 0.0, R + 1.0, cfg)
                     .value;
    double rhs = 0.0;
    for (int j = 0; j <= plan.deriv_count(); ++j)
      rhs += plan.constants[j] *
             integrate_weighted_panels([&](double r) { return form_weight(plan.odd, j, R, r); },
                                       [&](double r) { return A_deriv(j, r); }, M_PI / R, 0.0,
                                       R + 1.0, cfg)
                 .value;
    if (std::abs(lhs - rhs) > 1e-7 * (1.0 + std::abs(lhs)))
      throw std::runtime_error("derive_constants: reduction identity check failed");
  }
  return plan;
}

Vec partial_sum_radial(const TestFunction& F, const Point& x, double R, const SphereRule& rule,
                       const QuadratureConfig& cfg) {
  const int n = F.n;
  const double omega = sphere_surface_measure(n);
  const double kappa = x.norm();
  const double eps_w = cfg.abs_tol / std::max(1.0, 4.0 * omega * kernel_amplitude(n, R));
  auto wins = tail_windows(F, kappa, eps_w);

  auto amp = [&](double r) { return spherical_mean(F, x, r, rule); };
  auto weight = [&](double r) { return std::pow(r, n - 1) * dirichlet_value(n, R, r); };
  Vec acc = Vec::Zero(F.d);
  for (const auto& w : wins)
    acc += integrate_weighted_panels(weight, amp, M_PI / R, w.a, w.b, cfg).value;
  return Vec(omega * acc);
}

Vec partial_sum_direct(const TestFunction& F, const Point& x, double R, const QuadratureConfig& cfg,
                       double* imag_residue) {
  if (!F.fourier)
    throw std::domain_error("partial_sum_direct: no closed-form transform on " + F.id);
  CVec v = ball_integral(F.fourier, x, R, cfg, nullptr, F.fourier_freq_hint);
  if (imag_residue) *imag_residue = v.imag().norm();
  return Vec(v.real());
}

Decomposition decompose_partial_sum(const TestFunction& F, const Point& x, double R,
                                    const DecompositionPlan& plan, const SphereRule& rule,
                                    const QuadratureConfig& cfg) {
  const int n = plan.n;
  if (F.n != n) throw std::domain_error("decompose_partial_sum: plan/function dimension mismatch");
  const int J = plan.deriv_count();
  if (J > F.max_deriv && J > 0)
    throw std::domain_error("decompose_partial_sum: insufficient derivative order on " + F.id);
  const double omega = sphere_surface_measure(n);
  const double kappa = x.norm();
  const double eps_w = cfg.abs_tol / std::max(1.0, 4.0 * omega * kernel_amplitude(n, R));
  auto wins = tail_windows(F, kappa, eps_w);
  double t_end = 0.0;
  for (const auto& w : wins) t_end = std::max(t_end, w.b);

  auto fbar = [&](int j, double r) { return spherical_mean_derivative(F, x, r, j, rule); };

  Decomposition out;
  out.head = Vec::Zero(F.d);
  out.middle = Vec::Zero(F.d);
  out.tail = Vec::Zero(F.d);

  for (const auto& w : wins) {
    out.head += plan.constants[0] *
                integrate_weighted_panels([&](double r) { return form_weight(plan.odd, 0, R, r); },
                                          [&](double r) { return fbar(0, r); }, M_PI / R, w.a, w.b,
                                          cfg)
                    .value;
    for (int j = 1; j <= J; ++j)
      out.middle +=
          plan.constants[j] *
          integrate_weighted_panels([&](double r) { return form_weight(plan.odd, j, R, r); },
                                    [&](double r) { return fbar(j, r); }, M_PI / R, w.a, w.b, cfg)
              .value;
  }

  // Cutoff corrections live on [R, t_end]; beyond the majorant windows the
  // neglected mass is below eps_w by construction.
  if (t_end > R) {
    const SmoothCutoff& eta = plan.cutoff;
    auto one_minus_eta_deriv = [&](int m, double r) {
      if (m == 0) return 1.0 - eta.evaluate(R, r);
      return -eta.derivative(m, R, r);
    };
    auto cut_deriv = [&](int j, double r) {
      Vec s = Vec::Zero(F.d);
      for (int i = 0; i <= j; ++i)
        s += static_cast<double>(binom(j, i)) * one_minus_eta_deriv(j - i, r) * fbar(i, r);
      return s;
    };
    out.tail += omega * integrate_weighted_panels(
                            [&](double r) { return std::pow(r, n - 1) * dirichlet_value(n, R, r); },
                            [&](double r) { return cut_deriv(0, r); }, M_PI / R, R, t_end, cfg)
                            .value;
    for (int j = 0; j <= J; ++j)
      out.tail -= plan.constants[j] *
                  integrate_weighted_panels(
                      [&](double r) { return form_weight(plan.odd, j, R, r); },
                      [&](double r) { return cut_deriv(j, r); }, M_PI / R, R, t_end, cfg)
                      .value;
  }
  return out;
}

std::vector<TailBoundRow> tail_bound_check(const TestFunction& F, const Box& K,
                                           const std::vector<double>& R_sweep,
                                           const DecompositionPlan& plan, const SphereRule& rule,
                                           const QuadratureConfig& cfg, int grid_per_dim) {
  auto grid = make_grid(K, grid_per_dim);
  const int n = plan.n;
  const double l1 = l1_norm(F, rule, cfg);
  const SmoothCutoff& eta = plan.cutoff;

  std::vector<TailBoundRow> rows;
  for (double R : R_sweep) {
    double sup = 0.0;
    for (const auto& x : grid) {
      const double kappa = x.norm();
      const double eps_w = cfg.abs_tol / std::max(1.0, 4.0 * kernel_amplitude(n, R));
      auto wins = tail_windows(F, kappa, eps_w);
      double t_end = R;
      for (const auto& w : wins) t_end = std::max(t_end, w.b);
      Vec v = Vec::Zero(F.d);
      if (t_end > R)
        v = integrate_weighted_panels(
                [&](double r) {
                  return std::pow(r, n - 1) * dirichlet_value(n, R, r) *
                         (1.0 - eta.evaluate(R, r));
                },
                [&](double r) { return spherical_mean(F, x, r, rule); }, M_PI / R, R, t_end, cfg)
                .value;
      sup = std::max(sup, v.norm());
    }
    rows.push_back({R, sup, sup * R / l1});
  }
  return rows;
}

std::vector<Point> make_grid(const Box& K, int per_dim) {
  const int n = K.dim();
  if (per_dim < 1) throw std::domain_error("make_grid: per_dim must be >= 1");
  std::vector<Point> pts;
  std::vector<int> idx(n, 0);
  for (;;) {
    Point p(n);
    for (int d = 0; d < n; ++d) {
      double t = (per_dim == 1) ? 0.5 : static_cast<double>(idx[d]) / (per_dim - 1);
      p[d] = K.lo[d] + t * (K.hi[d] - K.lo[d]);
    }
    pts.push_back(p);
    int d = 0;
    while (d < n && ++idx[d] == per_dim) idx[d++] = 0;
    if (d == n) break;
  }
  return pts;
}

ConvergenceReport uniform_inversion_experiment(const TestFunction& F, const Box& K,
                                               const std::vector<double>& R_values,
                                               InversionEngine engine,
                                               const ExperimentOpts& opts) {
  ConvergenceReport rep;
  rep.function_id = F.id;
  rep.engine = engine == InversionEngine::Radial    ? "radial"
               : engine == InversionEngine::Direct  ? "direct"
                                                    : "decomposed";
  const int n = F.n;
  for (int d = 0; d < n; ++d) {
    rep.box_lo.push_back(K.lo[d]);
    rep.box_hi.push_back(K.hi[d]);
  }
  auto grid = make_grid(K, opts.grid_per_dim);
  rep.grid_points = static_cast<int>(grid.size());
  rep.grid_h = (opts.grid_per_dim > 1) ? (K.hi[0] - K.lo[0]) / (opts.grid_per_dim - 1) : 0.0;
  rep.threshold = opts.threshold;
  if (F.holder_alpha && F.holder_const)
    rep.grid_gap_correction =
        *F.holder_const * std::pow(0.5 * rep.grid_h * std::sqrt(double(n)), *F.holder_alpha);

  SphereRule rule = make_sphere_rule(n, opts.sphere_resolution);
  DecompositionPlan plan;
  if (engine == InversionEngine::Decomposed) plan = derive_constants(n);

  for (double R : R_values) {
    std::vector<double> errs(grid.size(), 0.0);
    parallel_for(grid.size(), opts.jobs, [&](std::size_t i) {
      Vec approx;
      switch (engine) {
        case InversionEngine::Radial:
          approx = partial_sum_radial(F, grid[i], R, rule, opts.quad);
          break;
        case InversionEngine::Direct:
          approx = partial_sum_direct(F, grid[i], R, opts.quad);
          break;
        case InversionEngine::Decomposed:
          approx = decompose_partial_sum(F, grid[i], R, plan, rule, opts.quad).sum();
          break;
      }
      errs[i] = (approx - F.value(grid[i])).norm();
    });
    double sup = 0.0;
    for (double e : errs) sup = std::max(sup, e);
    rep.R_values.push_back(R);
    rep.sup_errors.push_back(sup);
  }
  rep.fitted_rate = fit_rate(rep.R_values, rep.sup_errors);
  double best = rep.sup_errors.empty() ? 1e300
                                       : *std::min_element(rep.sup_errors.begin(),
                                                           rep.sup_errors.end());
  rep.uniform_verdict = best <= rep.threshold + rep.grid_gap_correction;
  return rep;
}

std::vector<RiemannLebesgueRow> riemann_lebesgue_uniform_check(
    const std::function<Vec(double t, double s)>& family, const std::vector<double>& t_grid,
    Interval s_support, const std::vector<double>& R_sweep, const QuadratureConfig& cfg) {
  std::vector<RiemannLebesgueRow> rows;
  for (double R : R_sweep) {
    const double shift = M_PI / R;
    RiemannLebesgueRow row;
    row.R = R;
    for (double t : t_grid) {
      Vec osc = integrate_oscillatory([&](double s) { return family(t, s); }, R, s_support.a,
                                      s_support.b, cfg)
                    .value;
      double modulus = integrate_finite(
                           [&](double s) { return (family(t, s) - family(t, s + shift)).norm(); },
                           s_support.a - shift, s_support.b, cfg)
                           .value;
      row.osc_sup = std::max(row.osc_sup, osc.norm());
      row.modulus_sup = std::max(row.modulus_sup, modulus);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace invlab
