#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "invlab/bessel.hpp"
#include "invlab/types.hpp"

namespace invlab {

struct QuadratureConfig {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_panels = 400000;  // total adaptive segments per call
  bool oscillation_aware = true;
};

template <class T>
struct IntegralResult {
  T value;
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

class quadrature_budget_error : public std::runtime_error {
 public:
  quadrature_budget_error(double estimate, double bound)
      : std::runtime_error("quadrature panel budget exceeded"),
        estimate_norm(estimate),
        error_bound(bound) {}
  double estimate_norm;
  double error_bound;
};

namespace detail {

// Gauss 7 / Kronrod 15 on [-1,1].
inline constexpr double kGK_x[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kGK_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGK_wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
auto gk15(F& f, double a, double b, long& evals) {
  using T = std::decay_t<decltype(f(a))>;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  T v0 = f(mid);
  evals += 15;
  T k15 = kGK_wk[7] * v0;
  T g7 = kGK_wg[3] * v0;
  for (int i = 0; i < 7; ++i) {
    double dx = half * kGK_x[i];
    T vi = f(mid + dx) + f(mid - dx);
    k15 += kGK_wk[i] * vi;
    if (i % 2 == 1) g7 += kGK_wg[i / 2] * vi;
  }
  struct Out {
    T value;
    double err;
  };
  T diff = k15 - g7;
  return Out{T(half * k15), norm_of(diff) * half};
}

}  // namespace detail

// Adaptive Gauss-Kronrod on [a,b], componentwise for vector values.
template <class F>
auto integrate_finite(F&& f, double a, double b, const QuadratureConfig& cfg) {
  using T = std::decay_t<decltype(f(a))>;
  IntegralResult<T> out;
  long evals = 0;
  if (!(a <= b)) throw std::domain_error("integrate_finite: requires a <= b");
  if (a == b) {
    out.value = zero_like(f(a));
    return out;
  }

  struct Seg {
    double a, b;
    T value;
    double err;
  };
  auto first = detail::gk15(f, a, b, evals);
  std::vector<Seg> stack{{a, b, first.value, first.err}};
  T total = first.value;
  double total_err = first.err;
  int panels = 1;

  std::vector<Seg> done;
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    double tol = std::max(cfg.abs_tol, cfg.rel_tol * norm_of(total));
    double local = tol * (s.b - s.a) / (b - a);
    if (s.err <= std::max(local, 1e-300) || (s.b - s.a) < 1e-15 * (b - a)) {
      done.push_back(s);
      continue;
    }
    if (panels >= cfg.max_panels)
      throw quadrature_budget_error(norm_of(total), total_err);
    double m = 0.5 * (s.a + s.b);
    auto l = detail::gk15(f, s.a, m, evals);
    auto r = detail::gk15(f, m, s.b, evals);
    panels += 2;
    total = total - s.value + l.value + r.value;
    total_err = total_err - s.err + l.err + r.err;
    stack.push_back({s.a, m, l.value, l.err});
    stack.push_back({m, s.b, r.value, r.err});
  }

  // Deterministic summation order: left to right.
  std::sort(done.begin(), done.end(), [](const Seg& u, const Seg& v) { return u.a < v.a; });
  T acc = zero_like(total);
  double err = 0.0;
  for (const auto& s : done) {
    acc += s.value;
    err += s.err;
  }
  out.value = acc;
  out.error = err;
  out.evaluations = evals;
  return out;
}

// Integrates weight(r) * amplitude(r) over [a,b] in panels of the given
// width (callers align the width to the oscillation half-period), each
// panel refined adaptively, summed left to right.
template <class W, class F>
auto integrate_weighted_panels(W&& weight, F&& amplitude, double panel_width, double a, double b,
                               const QuadratureConfig& cfg) {
  using T = std::decay_t<decltype(amplitude(b))>;
  auto f = [&](double r) -> T { return weight(r) * amplitude(r); };
  if (!(a <= b)) throw std::domain_error("integrate_weighted_panels: requires a <= b");
  IntegralResult<T> out;
  if (a == b) {
    out.value = zero_like(amplitude(b));
    return out;
  }
  if (!cfg.oscillation_aware || (b - a) <= panel_width) return integrate_finite(f, a, b, cfg);

  long k0 = static_cast<long>(std::ceil(a / panel_width));
  long k1 = static_cast<long>(std::floor(b / panel_width));
  std::vector<double> edges{a};
  for (long k = k0; k <= k1; ++k) {
    double e = k * panel_width;
    if (e > edges.back() + 1e-14 * std::max(1.0, std::abs(e)) && e < b) edges.push_back(e);
  }
  edges.push_back(b);

  const std::size_t n = edges.size() - 1;
  QuadratureConfig panel_cfg = cfg;
  panel_cfg.abs_tol = cfg.abs_tol / static_cast<double>(n);
  panel_cfg.rel_tol = 0.0;
  panel_cfg.max_panels = std::max(64, cfg.max_panels / static_cast<int>(n));

  T acc = zero_like(amplitude(b));
  for (std::size_t i = 0; i < n; ++i) {
    auto p = integrate_finite(f, edges[i], edges[i + 1], panel_cfg);
    acc += p.value;
    out.error += p.error;
    out.evaluations += p.evaluations;
  }
  out.value = acc;
  return out;
}

enum class OscWeight { Sin, Cos, BesselJ0, BesselJ1 };

inline double osc_weight_value(OscWeight w, double R, double r) {
  switch (w) {
    case OscWeight::Sin: return std::sin(R * r);
    case OscWeight::Cos: return std::cos(R * r);
    case OscWeight::BesselJ0: return bessel_j0(R * r);
    case OscWeight::BesselJ1: return bessel_j1(R * r);
  }
  return 0.0;
}

// Integrates weight(R r) * amplitude(r) over [a,b] with panels aligned to
// the half-period grid k*pi/R of the oscillation, each panel refined
// adaptively.  Accuracy is R-independent at fixed cost per oscillation.
template <class F>
auto integrate_oscillatory_weight(OscWeight w, F&& amplitude, double R, double a, double b,
                                  const QuadratureConfig& cfg) {
  return integrate_weighted_panels([w, R](double r) { return osc_weight_value(w, R, r); },
                                   std::forward<F>(amplitude), M_PI / R, a, b, cfg);
}

template <class F>
auto integrate_oscillatory(F&& amplitude, double R, double a, double b,
                           const QuadratureConfig& cfg) {
  return integrate_oscillatory_weight(OscWeight::Sin, std::forward<F>(amplitude), R, a, b, cfg);
}

template <class F>
auto integrate_oscillatory_windows(OscWeight w, F&& amplitude, double R,
                                   const std::vector<Interval>& windows,
                                   const QuadratureConfig& cfg) {
  using T = std::decay_t<decltype(amplitude(1.0))>;
  IntegralResult<T> out;
  bool first = true;
  for (const auto& win : windows) {
    if (!(win.b > win.a)) continue;
    auto p = integrate_oscillatory_weight(w, amplitude, R, win.a, win.b, cfg);
    if (first) {
      out.value = p.value;
      first = false;
    } else {
      out.value += p.value;
    }
    out.error += p.error;
    out.evaluations += p.evaluations;
  }
  if (first) out.value = zero_like(amplitude(windows.empty() ? 1.0 : windows.front().b));
  return out;
}

// Gauss-Legendre nodes/weights on [-1,1] (Golub-Welsch).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Gauss-Gegenbauer: weight (1-x^2)^lambda on [-1,1].
void gauss_gegenbauer(int n, double lambda, std::vector<double>& nodes,
                      std::vector<double>& weights);

}  // namespace invlab
