#include "invlab/sphere.hpp"

#include <cmath>
#include <stdexcept>

namespace invlab {

double sphere_surface_measure(int n) {
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

namespace {

SphereRule circle_rule(int points) {
  SphereRule rule;
  rule.n = 2;
  rule.exact_degree = points - 1;
  double w = 2.0 * M_PI / points;
  for (int i = 0; i < points; ++i) {
    double th = (2.0 * M_PI * i) / points;
    Point p(2);
    p[0] = std::cos(th);
    p[1] = std::sin(th);
    rule.nodes.push_back(p);
    rule.weights.push_back(w);
  }
  return rule;
}

// S^{m} nodes are (t, sqrt(1-t^2) y) with y in S^{m-1} and t
// Gauss-Gegenbauer against the weight (1-t^2)^{(m-2)/2}.
SphereRule extend(const SphereRule& base, int polar_points) {
  int m = base.n;
  SphereRule rule;
  rule.n = m + 1;
  std::vector<double> t, w;
  gauss_gegenbauer(polar_points, 0.5 * (rule.n - 3), t, w);
  rule.exact_degree = std::min(2 * polar_points - 1, base.exact_degree);
  for (int i = 0; i < polar_points; ++i) {
    double s = std::sqrt(std::max(0.0, 1.0 - t[i] * t[i]));
    for (std::size_t j = 0; j < base.nodes.size(); ++j) {
      Point p(rule.n);
      p[0] = t[i];
      for (int d = 0; d < m; ++d) p[d + 1] = s * base.nodes[j][d];
      rule.nodes.push_back(p);
      rule.weights.push_back(w[i] * base.weights[j]);
    }
  }
  return rule;
}

std::vector<Interval> uniform_panels(double a, double b, double width) {
  std::vector<Interval> panels;
  double left = a;
  while (left < b) {
    double right = std::min(b, left + width);
    panels.push_back({left, right});
    left = right;
  }
  return panels;
}

template <class F>
CVec sum_panels(F&& f, const std::vector<Interval>& panels, const QuadratureConfig& cfg,
                const CVec& zero) {
  QuadratureConfig pc = cfg;
  pc.abs_tol = cfg.abs_tol / static_cast<double>(std::max<std::size_t>(1, panels.size()));
  pc.rel_tol = 0.0;
  CVec acc = zero;
  for (const auto& iv : panels) acc += integrate_finite(f, iv.a, iv.b, pc).value;
  return acc;
}

}  // namespace

SphereRule make_sphere_rule(int n, int resolution) {
  if (n < 1 || n > kMaxDim) throw std::domain_error("make_sphere_rule: n must be in [1,5]");
  if (n == 1) {
    SphereRule rule;
    rule.n = 1;
    rule.exact_degree = 1000;  // the two-point mean is exact for every f
    Point plus(1), minus(1);
    plus[0] = 1.0;
    minus[0] = -1.0;
    rule.nodes = {plus, minus};
    rule.weights = {1.0, 1.0};
    return rule;
  }
  int res = std::max(4, resolution);
  SphereRule rule = circle_rule(2 * res);
  for (int dim = 3; dim <= n; ++dim) rule = extend(rule, res);
  return rule;
}

CVec ball_integral(const std::function<CVec(const Point&)>& fhat, const Point& x, double R,
                   const QuadratureConfig& cfg, const SphereRule* rule, double freq_hint) {
  const int n = static_cast<int>(x.size());
  if (n > 3) throw std::domain_error("ball_integral: direct engine supports n <= 3");
  const double norm_factor = std::pow(2.0 * M_PI, -n);
  // e^{i x.k} oscillates along the radial coordinate at rate |x|; fhat
  // contributes its own rate via freq_hint.
  const double rate = std::max(1.0, x.norm() + freq_hint);
  const CVec zero = zero_like(fhat(x));

  if (n == 1) {
    auto f = [&](double k) -> CVec {
      Point p(1);
      p[0] = k;
      return CVec(Complex(std::cos(x[0] * k), std::sin(x[0] * k)) * fhat(p));
    };
    CVec acc = sum_panels(f, uniform_panels(-R, R, M_PI / rate), cfg, zero);
    return CVec(norm_factor * acc);
  }

  const SphereRule* sr = rule;
  SphereRule fallback;
  if (sr == nullptr) {
    fallback = make_sphere_rule(n, n == 2 ? 32 : 24);
    sr = &fallback;
  }
  auto shell = [&](double rho) -> CVec {
    CVec acc = zero;
    Point k(n);
    for (std::size_t i = 0; i < sr->nodes.size(); ++i) {
      k = rho * sr->nodes[i];
      double phase = x.dot(k);
      acc += sr->weights[i] * (Complex(std::cos(phase), std::sin(phase)) * fhat(k));
    }
    return CVec(std::pow(rho, n - 1) * acc);
  };
  CVec acc = sum_panels(shell, uniform_panels(0.0, R, M_PI / rate), cfg, zero);
  return CVec(norm_factor * acc);
}

}  // namespace invlab
