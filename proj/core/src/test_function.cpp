#include "invlab/test_function.hpp"

#include <cmath>
#include <stdexcept>

namespace invlab {
namespace {

// Enumerate multi-indices of |alpha| = order over n variables, calling
// visit(alpha, multinomial coefficient).
void for_each_multi_index(int n, int order, MultiIndex& alpha, int pos, int left, double coef,
                          const std::function<void(const MultiIndex&, double)>& visit) {
  if (pos == n - 1) {
    alpha[pos] = left;
    double c = coef;
    for (int i = 1; i <= left; ++i) c /= i;
    visit(alpha, c);
    return;
  }
  for (int k = 0; k <= left; ++k) {
    alpha[pos] = k;
    double c = coef;
    for (int i = 1; i <= k; ++i) c /= i;
    for_each_multi_index(n, order, alpha, pos + 1, left - k, c, visit);
  }
}

double ipow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Vec directional_derivative(const TestFunction& F, const Point& omega, const Point& x, int order) {
  if (order == 0) return F.value(x);
  if (order > F.max_deriv || !F.partial)
    throw std::domain_error("directional_derivative: derivative order unavailable on " + F.id);
  Vec acc = Vec::Zero(F.d);
  MultiIndex alpha{};
  double fact = 1.0;
  for (int i = 2; i <= order; ++i) fact *= i;
  for_each_multi_index(F.n, order, alpha, 0, order, fact,
                       [&](const MultiIndex& a, double coef) {
                         double w = coef;
                         for (int i = 0; i < F.n; ++i) w *= ipow(omega[i], a[i]);
                         if (w != 0.0) acc += w * F.partial(a, x);
                       });
  return acc;
}

Vec spherical_mean(const TestFunction& F, const Point& x, double r, const SphereRule& rule) {
  if (rule.n != F.n) throw std::domain_error("spherical_mean: dimension mismatch");
  if (F.radial_profile && x.norm() == 0.0) return vec1(F.radial_profile(0, r));
  return sphere_mean([&](const Point& y) { return F.value(y); }, x, r, rule);
}

Vec spherical_mean_derivative(const TestFunction& F, const Point& x, double r, int order,
                              const SphereRule& rule) {
  if (order == 0) return spherical_mean(F, x, r, rule);
  if (rule.n != F.n) throw std::domain_error("spherical_mean_derivative: dimension mismatch");
  if (F.radial_profile && x.norm() == 0.0) return vec1(F.radial_profile(order, r));
  Vec acc = Vec::Zero(F.d);
  Point y(F.n);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    y = x + r * rule.nodes[i];
    acc += rule.weights[i] * directional_derivative(F, rule.nodes[i], y, order);
  }
  return Vec(acc / sphere_surface_measure(F.n));
}

double l1_norm(const TestFunction& F, const SphereRule& rule, const QuadratureConfig& cfg) {
  if (!F.majorant.valid()) throw std::domain_error("l1_norm: missing majorant on " + F.id);
  Point origin = Point::Zero(F.n);
  auto shell = [&](double r) {
    double s = 0.0;
    Point y(F.n);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      y = origin + r * rule.nodes[i];
      s += rule.weights[i] * F.value(y).norm();
    }
    return std::pow(r, F.n - 1) * s;
  };
  double eps = std::max(cfg.abs_tol * 1e-3, 1e-15);
  auto wins = F.majorant.windows(eps, 0.0, 1e9);
  double total = 0.0;
  for (const auto& w : wins) total += integrate_finite(shell, w.a, w.b, cfg).value;
  return total;
}

Majorant gaussian_majorant(int n, double scale, double shift) {
  Majorant m;
  m.bound = [scale, shift](double r, double kappa) {
    double u = std::max(0.0, r - kappa - shift);
    return scale * std::exp(-u * u);
  };
  m.l1_tail = [n, scale, shift](double T, double kappa) {
    double u = std::max(0.0, T - kappa - shift);
    // int_T^inf r^{n-1} e^{-(r-c)^2} dr <= 2 (T+2)^{n-1} e^{-u^2} for u >= 1
    double poly = std::pow(T + 2.0, n - 1);
    if (u < 1.0) return scale * poly * 2.0;  // crude, only relevant for tiny T
    return 2.0 * scale * poly * std::exp(-u * u);
  };
  m.windows = [scale, shift](double eps, double kappa, double r_max) {
    double u = std::sqrt(std::max(1.0, std::log(std::max(scale, 1e-300) / eps)));
    std::vector<Interval> w{{0.0, std::min(r_max, kappa + shift + u + 1.0)}};
    return w;
  };
  return m;
}

Majorant compact_majorant(int n, double support_radius, double scale) {
  Majorant m;
  m.bound = [scale, support_radius](double r, double kappa) {
    return (r <= support_radius + kappa) ? scale : 0.0;
  };
  m.l1_tail = [n, scale, support_radius](double T, double kappa) {
    double end = support_radius + kappa;
    if (T >= end) return 0.0;
    return scale * (std::pow(end, n) - std::pow(std::max(T, 0.0), n)) / n;
  };
  m.windows = [support_radius](double, double kappa, double r_max) {
    std::vector<Interval> w{{0.0, std::min(r_max, support_radius + kappa)}};
    return w;
  };
  return m;
}

}  // namespace invlab
