#pragma once

#include <functional>
#include <vector>

#include "invlab/quadrature.hpp"
#include "invlab/types.hpp"

namespace invlab {

// Surface quadrature on S^{n-1}: weights sum to the surface measure
// omega_{n-1}, exact on polynomials restricted to the sphere up to
// exact_degree.
struct SphereRule {
  int n = 1;
  std::vector<Point> nodes;
  std::vector<double> weights;
  int exact_degree = 0;

  double weight_sum() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
  }
};

double sphere_surface_measure(int n);  // omega_{n-1}: 2, 2pi, 4pi, 2pi^2, ...

// resolution ~ points per polar angle; azimuth gets 2*resolution.
// n = 1: the two-point rule {+-1}. 2 <= n <= 5: product Gauss-Gegenbauer x
// equispaced-circle rules.
SphereRule make_sphere_rule(int n, int resolution);

// (1/omega_{n-1}) sum w_i f(x + r omega_i); returns f(x) exactly at r = 0.
template <class F>
auto sphere_mean(F&& f, const Point& x, double r, const SphereRule& rule) {
  using T = std::decay_t<decltype(f(x))>;
  if (x.size() != rule.n) throw std::domain_error("sphere_mean: dimension mismatch");
  if (r == 0.0) return T(f(x));
  T acc = zero_like(f(x));
  Point y(x.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    y = x + r * rule.nodes[i];
    acc += rule.weights[i] * f(y);
  }
  return T(acc / sphere_surface_measure(rule.n));
}

// Truncated inverse transform over the ball |k| <= R of a frequency-side
// function, (2 pi)^{-n} int_{|k|<=R} e^{i x.k} fhat(k) dk.  Direct engine
// for n <= 3.  freq_hint bounds the oscillation rate of fhat itself.
CVec ball_integral(const std::function<CVec(const Point&)>& fhat, const Point& x, double R,
                   const QuadratureConfig& cfg, const SphereRule* rule = nullptr,
                   double freq_hint = 0.0);

}  // namespace invlab
