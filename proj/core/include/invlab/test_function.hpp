#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "invlab/sphere.hpp"
#include "invlab/types.hpp"

namespace invlab {

using MultiIndex = std::array<int, kMaxDim>;

// Radial majorant descriptor: g bounds sup_{|alpha| <= k, |x| <= kappa}
// ||d^alpha F(x + r omega)||, and the analytic tail/window data lets the
// engines truncate semi-infinite integrals without numerical sniffing.
struct Majorant {
  // envelope value at radius r for compacts of radius kappa
  std::function<double(double r, double kappa)> bound;
  // bound on int_T^inf r^{n-1} g(r) dr
  std::function<double(double T, double kappa)> l1_tail;
  // intervals covering { r in [0, r_max] : g(r) > eps }
  std::function<std::vector<Interval>(double eps, double kappa, double r_max)> windows;

  bool valid() const { return static_cast<bool>(l1_tail); }
};

// Simple envelope exp(-max(0, r - kappa - shift)^2) * scale with Gaussian
// tail algebra; covers the Gaussian-type catalog entries.
Majorant gaussian_majorant(int n, double scale = 1.0, double shift = 0.0);
// Compactly supported within radius s0 (plus the compact's radius).
Majorant compact_majorant(int n, double support_radius, double scale = 1.0);

// Evaluable function R^n -> X ~ R^d with the metadata the experiments need.
struct TestFunction {
  std::string id;
  int n = 1;
  int d = 1;
  int max_deriv = 0;

  std::function<Vec(const Point&)> value;
  // partial derivative for |alpha| <= max_deriv
  std::function<Vec(const MultiIndex&, const Point&)> partial;

  std::optional<double> holder_alpha;
  std::optional<double> holder_const;   // estimated constant on the reference compact
  std::optional<double> growth_bound;   // omega_0 with ||F(t)|| <= growth_scale e^{omega_0 t}
  double growth_scale = 1.0;
  bool zero_at_origin = false;          // F(0) = 0 declared (Laplace-side entries)

  Majorant majorant;

  std::function<CVec(const Point&)> fourier;    // optional closed-form transform
  double fourier_freq_hint = 0.0;               // oscillation rate of fourier
  std::function<CVec(Complex)> laplace;         // optional closed-form Laplace transform

  // Optional exact spherical-mean profile about the origin:
  // radial_profile(j, r) = (d/dr)^j F_bar_0(r).  Used as a fast path when
  // the evaluation point is exactly the origin.
  std::function<double(int, double)> radial_profile;

  Vec eval(const Point& x) const { return value(x); }
  Vec eval1(double t) const { return value(point1(t)); }
};

// (omega . grad)^order F at x, assembled from the declared partials.
Vec directional_derivative(const TestFunction& F, const Point& omega, const Point& x, int order);

// Spherical mean and its r-derivatives (derivatives pulled inside the
// surface integral).
Vec spherical_mean(const TestFunction& F, const Point& x, double r, const SphereRule& rule);
Vec spherical_mean_derivative(const TestFunction& F, const Point& x, double r, int order,
                              const SphereRule& rule);

// ||F||_{L^1} via the radial-shell reduction int r^{n-1} int_S |F| domega dr.
double l1_norm(const TestFunction& F, const SphereRule& rule, const QuadratureConfig& cfg);

}  // namespace invlab
