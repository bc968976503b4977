#include <doctest.h>

#include <cmath>

#include "invlab/quadrature.hpp"
#include "oracles.hpp"

using namespace invlab;

TEST_CASE("finite integrals: polynomials and sin") {
  QuadratureConfig cfg;
  CHECK(integrate_finite([](double) { return 1.0; }, 0.0, 1.0, cfg).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate_finite([](double x) { return std::sin(x); }, 0.0, M_PI, cfg).value ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("oscillatory: sin(100 s)/s over [0,1] equals Si(100)") {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-11;
  double si100 = oracles::sine_integral(100.0);
  CHECK(std::abs(si100 - 1.56225) < 2e-5);  // the oracle itself, sanity
  double v = integrate_oscillatory([](double s) { return 1.0 / s; }, 100.0, 0.0, 1.0, cfg).value;
  CHECK(std::abs(v - si100) <= 1e-9);
  CHECK(std::abs(v - 1.56226) <= 1e-5);
}

TEST_CASE("oscillatory: half-period pulse and Laplace-of-sine closed form") {
  QuadratureConfig cfg;
  for (double R : {1.0, 8.0, 97.0}) {
    double v = integrate_oscillatory([](double) { return 1.0; }, R, 0.0, M_PI / R, cfg).value;
    CHECK(v == doctest::Approx(2.0 / R).epsilon(1e-10));
  }
  // int_0^inf sin(R r) e^{-r} dr = R/(1+R^2), tail truncated analytically
  for (double R : {1.0, 16.0, 256.0}) {
    double T = std::log(1.0 / 1e-13);
    double v = integrate_oscillatory([](double r) { return std::exp(-r); }, R, 0.0, T, cfg).value;
    CHECK(v == doctest::Approx(R / (1.0 + R * R)).epsilon(1e-9));
  }
}

TEST_CASE("half-line sine kernel tends to pi/2 against 1/s") {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-11;
  double prev_dev = 1.0;
  for (double R : {1e2, 1e3, 1e4}) {
    double v = integrate_oscillatory([](double s) { return 1.0 / s; }, R, 0.0, 1.0, cfg).value;
    double dev = std::abs(v - M_PI / 2.0);
    CHECK(dev < prev_dev);
    prev_dev = dev;
  }
}

TEST_CASE("oscillation-aware equals brute-force refinement for moderate R") {
  QuadratureConfig aware;
  aware.abs_tol = 1e-11;
  QuadratureConfig naive = aware;
  naive.oscillation_aware = false;
  naive.abs_tol = 1e-12;
  for (double R : {7.0, 33.0, 100.0}) {
    auto g = [](double r) { return std::exp(-0.5 * r) * (1.0 + r); };
    double a = integrate_oscillatory(g, R, 0.0, 4.0, aware).value;
    double b = integrate_oscillatory(g, R, 0.0, 4.0, naive).value;
    CHECK(std::abs(a - b) <= 1e-8);
  }
}

TEST_CASE("budget exceeded raises with the partial estimate attached") {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-14;
  cfg.rel_tol = 1e-14;
  cfg.max_panels = 3;
  bool thrown = false;
  try {
    integrate_finite([](double x) { return std::sqrt(std::abs(std::sin(31.0 * x))); }, 0.0, 3.0,
                     cfg);
  } catch (const quadrature_budget_error& e) {
    thrown = true;
    CHECK(e.estimate_norm > 0.0);
    CHECK(e.error_bound > 0.0);
  }
  CHECK(thrown);
}

TEST_CASE("vector-valued integration is componentwise") {
  QuadratureConfig cfg;
  auto f = [](double x) {
    Vec v(2);
    v << x, std::cos(x);
    return v;
  };
  Vec v = integrate_finite(f, 0.0, 1.0, cfg).value;
  CHECK(v[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(v[1] == doctest::Approx(std::sin(1.0)).epsilon(1e-12));
}

TEST_CASE("gauss rules: legendre and gegenbauer moments") {
  std::vector<double> x, w;
  gauss_legendre(12, x, w);
  double m0 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    m0 += w[i];
    m2 += w[i] * x[i] * x[i];
  }
  CHECK(m0 == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(m2 == doctest::Approx(2.0 / 3.0).epsilon(1e-13));

  gauss_gegenbauer(10, 1.0, x, w);  // weight (1 - t^2)
  m0 = 0.0;
  m2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    m0 += w[i];
    m2 += w[i] * x[i] * x[i];
  }
  CHECK(m0 == doctest::Approx(4.0 / 3.0).epsilon(1e-13));   // int (1-t^2) dt
  CHECK(m2 == doctest::Approx(4.0 / 15.0).epsilon(1e-13));  // int t^2 (1-t^2) dt
}
