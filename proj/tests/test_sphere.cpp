#include <doctest.h>

#include <cmath>

#include "invlab/catalog.hpp"
#include "invlab/sphere.hpp"
#include "invlab/test_function.hpp"

using namespace invlab;

TEST_CASE("weights sum to the surface measure") {
  CHECK(sphere_surface_measure(1) == doctest::Approx(2.0));
  CHECK(sphere_surface_measure(2) == doctest::Approx(2.0 * M_PI));
  CHECK(sphere_surface_measure(3) == doctest::Approx(4.0 * M_PI));
  CHECK(sphere_surface_measure(4) == doctest::Approx(2.0 * M_PI * M_PI));
  for (int n = 1; n <= 5; ++n) {
    SphereRule rule = make_sphere_rule(n, 8);
    CHECK(rule.weight_sum() ==
          doctest::Approx(sphere_surface_measure(n)).epsilon(1e-12));
    for (const auto& p : rule.nodes) CHECK(p.norm() == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("exactness on sphere-restricted monomials") {
  // mean of x_i^2 over S^{n-1} is 1/n; mean of odd monomials vanishes;
  // mean of x_1^2 x_2^2 over S^2 is 1/15.
  for (int n : {2, 3, 4, 5}) {
    SphereRule rule = make_sphere_rule(n, 8);
    for (int d = 0; d < n; ++d) {
      double m2 = 0.0, m1 = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        m2 += rule.weights[i] * rule.nodes[i][d] * rule.nodes[i][d];
        m1 += rule.weights[i] * rule.nodes[i][d];
      }
      CHECK(m2 / sphere_surface_measure(n) == doctest::Approx(1.0 / n).epsilon(1e-12));
      CHECK(std::abs(m1) < 1e-12);
    }
  }
  SphereRule s2 = make_sphere_rule(3, 8);
  double m22 = 0.0;
  for (std::size_t i = 0; i < s2.nodes.size(); ++i)
    m22 += s2.weights[i] * std::pow(s2.nodes[i][0] * s2.nodes[i][1], 2);
  CHECK(m22 / sphere_surface_measure(3) == doctest::Approx(1.0 / 15.0).epsilon(1e-12));
}

TEST_CASE("spherical means: 1-D two-point form, constants, radial functions") {
  SphereRule r1 = make_sphere_rule(1, 1);
  auto f = [](const Point& p) { return vec1(std::exp(p[0])); };
  Point x0 = point1(0.3);
  double r = 0.7;
  CHECK(sphere_mean(f, x0, r, r1)[0] ==
        doctest::Approx(0.5 * (std::exp(1.0) + std::exp(-0.4))).epsilon(1e-14));

  SphereRule r3 = make_sphere_rule(3, 10);
  auto c = [](const Point&) { return vec1(3.25); };
  Point y = Point::Zero(3);
  y << 0.2, -0.4, 1.0;
  CHECK(sphere_mean(c, y, 2.0, r3)[0] == doctest::Approx(3.25).epsilon(1e-13));

  TestFunction g3 = gaussian_nd(3);
  CHECK(spherical_mean(g3, Point::Zero(3), 1.3, r3)[0] ==
        doctest::Approx(std::exp(-1.3 * 1.3)).epsilon(1e-12));
  // r = 0 returns the point value exactly
  CHECK(spherical_mean(g3, y, 0.0, r3)[0] == doctest::Approx(std::exp(-y.squaredNorm())));
}

TEST_CASE("spherical mean derivatives") {
  SphereRule r3 = make_sphere_rule(3, 12);
  TestFunction g3 = gaussian_nd(3);
  g3.radial_profile = nullptr;  // force the surface-integral path
  double r = 0.9;
  CHECK(spherical_mean_derivative(g3, Point::Zero(3), r, 1, r3)[0] ==
        doctest::Approx(-2.0 * r * std::exp(-r * r)).epsilon(1e-10));
  // linear functions have zero first-derivative mean by odd symmetry
  TestFunction lin;
  lin.n = 3;
  lin.d = 1;
  lin.max_deriv = 1;
  lin.value = [](const Point& p) { return vec1(2.0 * p[0] - p[2]); };
  lin.partial = [](const MultiIndex& a, const Point&) {
    if (a[0] == 1) return vec1(2.0);
    if (a[2] == 1) return vec1(-1.0);
    return vec1(0.0);
  };
  Point x(3);
  x << 0.3, 0.1, -0.2;
  CHECK(std::abs(spherical_mean_derivative(lin, x, 0.8, 1, r3)[0]) < 1e-13);
  CHECK_THROWS(spherical_mean_derivative(lin, x, 0.8, 2, r3));
}

TEST_CASE("ball integral: Gaussian pair recovers the function value") {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-9;
  TestFunction g1 = gaussian_nd(1);
  CVec v = ball_integral(g1.fourier, point1(0.0), 8.0, cfg);
  CHECK(std::abs(v[0].real() - 1.0) <= 1e-6);
  CHECK(std::abs(v[0].imag()) <= 1e-9);
  CHECK_THROWS(ball_integral(g1.fourier, Point::Zero(4), 4.0, cfg));
  CHECK(std::abs(ball_integral([](const Point&) { return cvec1(0.0); }, point1(0.3), 4.0,
                               cfg)[0]) == 0.0);
}
