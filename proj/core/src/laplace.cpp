#include "invlab/laplace.hpp"

#include <cmath>
#include <stdexcept>

#include "invlab/parallel.hpp"

namespace invlab {
namespace {

// Truncation for int_0^inf e^{-lambda s} F(s) ds with ||F(s)|| <= C e^{w0 s}:
// tail <= C e^{-gap T} / gap.
double laplace_truncation(double gap, double scale, double eps) {
  double T = std::log(std::max(scale, 1e-30) / (eps * gap)) / gap;
  return std::max(T, 1.0);
}

}  // namespace

CVec laplace_transform(const TestFunction& F, Complex lambda, const QuadratureConfig& cfg) {
  if (!F.growth_bound)
    throw std::domain_error("laplace_transform: no declared growth bound on " + F.id);
  double gap = lambda.real() - *F.growth_bound;
  if (!(gap > 0.0))
    throw std::domain_error("laplace_transform: requires Re(lambda) > growth bound");
  double T = laplace_truncation(gap, F.growth_scale, 0.5 * cfg.abs_tol);
  double k = lambda.imag();
  double width = M_PI / std::max({std::abs(k), gap, 1.0});
  auto amp = [&](double s) -> CVec {
    Vec v = F.eval1(s);
    return CVec(std::exp(-lambda.real() * s) *
                (Complex(std::cos(k * s), -std::sin(k * s)) * v.cast<Complex>()));
  };
  return integrate_weighted_panels([](double) { return 1.0; }, amp, width, 0.0, T, cfg).value;
}

TransformHandle TransformHandle::closed_form(std::function<CVec(Complex)> fn, double omega0,
                                             int d) {
  TransformHandle h;
  h.fn_ = std::move(fn);
  h.omega0_ = omega0;
  h.d_ = d;
  h.source_ = "closed-form";
  return h;
}

TransformHandle TransformHandle::numeric(const TestFunction& F, const QuadratureConfig& cfg) {
  if (!F.growth_bound)
    throw std::domain_error("TransformHandle::numeric: no growth bound on " + F.id);
  TransformHandle h;
  TestFunction copy = F;
  QuadratureConfig qc = cfg;
  h.fn_ = [copy, qc](Complex lambda) { return laplace_transform(copy, lambda, qc); };
  h.omega0_ = *F.growth_bound;
  h.d_ = F.d;
  h.source_ = "numeric";
  return h;
}

CVec TransformHandle::eval(Complex lambda) const {
  if (!fn_) throw std::logic_error("TransformHandle: empty handle");
  std::pair<double, double> key{lambda.real(), lambda.imag()};
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->values.find(key);
    if (it != cache_->values.end()) return it->second;
  }
  CVec v = fn_(lambda);
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->values.emplace(key, v);
  return v;
}

namespace {

BromwichOutput contour_partial(const TransformHandle& T, const BromwichConfig& cfg, bool fejer) {
  if (!(cfg.omega > T.omega0()))
    throw std::domain_error("bromwich_partial: requires omega > omega0 of the transform");
  const double R = cfg.R;
  const double t_max = cfg.t_grid.empty()
                           ? 1.0
                           : *std::max_element(cfg.t_grid.begin(), cfg.t_grid.end());

  BromwichOutput out;
  out.values.assign(cfg.t_grid.size(), Vec::Zero(T.dim()));

  double h0 = std::min(1.0, M_PI / std::max(t_max, 1e-9));
  for (int attempt = 0;; ++attempt) {
    long panels = static_cast<long>(std::ceil(2.0 * R / h0));
    double h = 2.0 * R / static_cast<double>(panels);

    // Transform values at all Kronrod nodes, filled in parallel; the cache
    // is write-once per node so the fill order does not matter.
    std::vector<double> ks(static_cast<std::size_t>(panels) * 15);
    for (long p = 0; p < panels; ++p) {
      double a = -R + p * h, mid = a + 0.5 * h, half = 0.5 * h;
      ks[p * 15] = mid;
      for (int i = 0; i < 7; ++i) {
        ks[p * 15 + 1 + 2 * i] = mid + half * detail::kGK_x[i];
        ks[p * 15 + 2 + 2 * i] = mid - half * detail::kGK_x[i];
      }
    }
    std::vector<CVec> tv(ks.size());
    parallel_for(ks.size(), cfg.jobs, [&](std::size_t i) {
      tv[i] = T.eval(Complex(cfg.omega, ks[i]));
    });
    out.evaluations += static_cast<long>(ks.size());

    double worst_err = 0.0, worst_imag = 0.0;
    for (std::size_t ti = 0; ti < cfg.t_grid.size(); ++ti) {
      double t = cfg.t_grid[ti];
      CVec acc = CVec::Zero(T.dim());
      double err = 0.0;
      for (long p = 0; p < panels; ++p) {
        double a = -R + p * h, half = 0.5 * h;
        CVec k15 = CVec::Zero(T.dim());
        CVec g7 = CVec::Zero(T.dim());
        for (int node = 0; node < 15; ++node) {
          double k = ks[p * 15 + node];
          double w = (node == 0) ? detail::kGK_wk[7] : detail::kGK_wk[(node - 1) / 2];
          Complex phase(std::cos(k * t), std::sin(k * t));
          double taper = fejer ? (1.0 - std::abs(k) / R) : 1.0;
          CVec term = (phase * taper) * tv[p * 15 + node];
          k15 += w * term;
          if (node == 0)
            g7 += detail::kGK_wg[3] * term;
          else if (((node - 1) / 2) % 2 == 1)
            g7 += detail::kGK_wg[(node - 1) / 4] * term;
        }
        acc += half * k15;
        err += norm_of(CVec(k15 - g7)) * half;
      }
      double scale = std::exp(cfg.omega * t) / (2.0 * M_PI);
      Vec re = (scale * acc.real()).eval();
      Vec im = (scale * acc.imag()).eval();
      out.values[ti] = re;
      worst_imag = std::max(worst_imag, im.norm());
      worst_err = std::max(worst_err, err * scale);
    }
    out.imag_residue = worst_imag;
    out.error_est = worst_err;
    if (worst_err <= std::max(cfg.quad.abs_tol, 1e-12) * 10.0 || attempt >= 3) break;
    h0 *= 0.5;
  }
  return out;
}

}  // namespace

BromwichOutput bromwich_partial(const TransformHandle& T, const BromwichConfig& cfg) {
  return contour_partial(T, cfg, false);
}

BromwichOutput cesaro_partial_grid(const TransformHandle& T, const BromwichConfig& cfg) {
  return contour_partial(T, cfg, true);
}

Vec cesaro_partial(const TransformHandle& T, double omega, double R, double t,
                   const QuadratureConfig& quad) {
  BromwichConfig cfg;
  cfg.omega = omega;
  cfg.R = R;
  cfg.t_grid = {t};
  cfg.quad = quad;
  return cesaro_partial_grid(T, cfg).values[0];
}

Vec cesaro_partial_iterated(const TransformHandle& T, double omega, double R, double t,
                            const QuadratureConfig& quad) {
  auto inner = [&](double r) -> Vec {
    BromwichConfig cfg;
    cfg.omega = omega;
    cfg.R = std::max(r, 1e-6);
    cfg.t_grid = {t};
    cfg.quad = quad;
    return bromwich_partial(T, cfg).values[0];
  };
  QuadratureConfig outer = quad;
  Vec v = integrate_finite(inner, 0.0, R, outer).value;
  return Vec(v / R);
}

TestFunction damped_extension(const TestFunction& F, double omega) {
  if (F.n != 1) throw std::domain_error("damped_extension: Laplace-side entries are 1-D");
  if (!F.growth_bound) throw std::domain_error("damped_extension: no growth bound on " + F.id);
  double rate = omega - *F.growth_bound;
  if (!(rate > 0.0)) throw std::domain_error("damped_extension: requires omega > omega0");

  TestFunction G;
  G.id = F.id + "~";
  G.n = 1;
  G.d = F.d;
  TestFunction base = F;
  G.value = [base, omega](const Point& p) -> Vec {
    double s = p[0];
    if (s < 0.0) return Vec::Zero(base.d);
    return Vec(std::exp(-omega * s) * base.value(p));
  };
  double scale = F.growth_scale;
  Majorant m;
  m.bound = [rate, scale](double r, double kappa) {
    return scale * std::exp(-rate * std::max(0.0, r - kappa));
  };
  m.l1_tail = [rate, scale](double T, double kappa) {
    return scale * std::exp(-rate * std::max(0.0, T - kappa)) / rate;
  };
  m.windows = [rate, scale](double eps, double kappa, double r_max) {
    double reach = kappa + (std::log(std::max(scale, 1e-30) / (eps * rate)) + 2.0) / rate;
    std::vector<Interval> w{{0.0, std::min(r_max, std::max(reach, 1.0))}};
    return w;
  };
  G.majorant = m;
  return G;
}

std::vector<BridgeRow> fourier_laplace_bridge(const TestFunction& F, double omega, double R,
                                              const std::vector<double>& t_grid,
                                              const QuadratureConfig& cfg) {
  TransformHandle handle = F.laplace
                               ? TransformHandle::closed_form(F.laplace, *F.growth_bound, F.d)
                               : TransformHandle::numeric(F, cfg);
  BromwichConfig bc;
  bc.omega = omega;
  bc.R = R;
  bc.t_grid = t_grid;
  bc.quad = cfg;
  auto lhs = bromwich_partial(handle, bc);

  TestFunction damped = damped_extension(F, omega);
  SphereRule rule = make_sphere_rule(1, 1);
  std::vector<BridgeRow> rows;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    double t = t_grid[i];
    Vec rhs = partial_sum_radial(damped, point1(t), R, rule, cfg);
    rhs *= std::exp(omega * t);
    rows.push_back({t, (lhs.values[i] - rhs).norm()});
  }
  return rows;
}

std::vector<double> laplace_time_grid(const TestFunction& F, double a, double b, int points) {
  double start = a;
  if (a == 0.0 && !F.zero_at_origin) start = 0.25 * (b - a);
  std::vector<double> grid;
  if (points == 1) {
    grid.push_back(start);
    return grid;
  }
  for (int i = 0; i < points; ++i)
    grid.push_back(start + (b - start) * static_cast<double>(i) / (points - 1));
  return grid;
}

ConvergenceReport laplace_inversion_experiment(const TestFunction& F, double a, double b,
                                               double omega, const std::vector<double>& R_values,
                                               const LaplaceExperimentOpts& opts) {
  if (!F.growth_bound) throw std::domain_error("laplace_inversion_experiment: no growth bound");
  TransformHandle handle = F.laplace
                               ? TransformHandle::closed_form(F.laplace, *F.growth_bound, F.d)
                               : TransformHandle::numeric(F, opts.quad);
  auto grid = laplace_time_grid(F, a, b, opts.grid_points);

  ConvergenceReport rep;
  rep.function_id = F.id;
  rep.engine = opts.cesaro ? "cesaro" : "bromwich";
  rep.box_lo = {grid.front()};
  rep.box_hi = {grid.back()};
  rep.grid_points = static_cast<int>(grid.size());
  rep.grid_h = grid.size() > 1 ? grid[1] - grid[0] : 0.0;
  rep.threshold = opts.threshold;

  for (double R : R_values) {
    BromwichConfig bc;
    bc.omega = omega;
    bc.R = R;
    bc.t_grid = grid;
    bc.quad = opts.quad;
    bc.jobs = opts.jobs;
    BromwichOutput out = opts.cesaro ? cesaro_partial_grid(handle, bc)
                                     : bromwich_partial(handle, bc);
    double sup = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      sup = std::max(sup, (out.values[i] - F.eval1(grid[i])).norm());
    rep.R_values.push_back(R);
    rep.sup_errors.push_back(sup);
  }
  rep.fitted_rate = fit_rate(rep.R_values, rep.sup_errors);
  double best =
      rep.sup_errors.empty()
          ? 1e300
          : *std::min_element(rep.sup_errors.begin(), rep.sup_errors.end());
  rep.uniform_verdict = best <= rep.threshold;
  return rep;
}

}  // namespace invlab
