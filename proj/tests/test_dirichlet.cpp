#include <doctest.h>

#include <cmath>

#include "invlab/dirichlet.hpp"
#include "invlab/quadrature.hpp"

using namespace invlab;

TEST_CASE("1-D closed form") {
  CHECK(dirichlet_1d(1.0, M_PI) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(dirichlet_1d(M_PI, 0.0) == doctest::Approx(1.0));
  CHECK(dirichlet_1d(10.0, 0.1) == doctest::Approx(std::sin(1.0) / (0.1 * M_PI)));
  CHECK(std::abs(dirichlet_1d(10.0, 0.1) - 2.67846) < 1e-4);
}

TEST_CASE("2-D closed form and small-argument limit") {
  CHECK(dirichlet_2d(1.0, 1e-12) == doctest::Approx(1.0 / (4.0 * M_PI)));
  // vanishes at the first positive zero of J1
  CHECK(std::abs(dirichlet_2d(1.0, 3.831705970207512)) < 1e-13);
}

TEST_CASE("n=3 matches the hand-derived closed form") {
  for (double R : {1.0, 2.5, 16.0}) {
    for (double r : {0.3, 1.0, 2.7}) {
      double u = R * r;
      double hand = (std::sin(u) - u * std::cos(u)) / (2.0 * M_PI * M_PI * r * r * r);
      CHECK(dirichlet_nd({3, R}, r) == doctest::Approx(hand).epsilon(1e-12));
    }
  }
  // spot value from the closed form: (n=3, R=1, r=pi) -> 1/(2 pi^4)
  CHECK(dirichlet_nd({3, 1.0}, M_PI) ==
        doctest::Approx(1.0 / (2.0 * std::pow(M_PI, 4))).epsilon(1e-12));
}

TEST_CASE("series branch overlaps the closed form near the cancellation region") {
  for (int n : {3, 4, 5, 7, 9}) {
    const auto& form = dirichlet_form(n);
    for (double u : {0.45, 0.5, 0.55}) {
      double R = 2.0, r = u / R;
      double closed = form.eval(R, r);
      double series = dirichlet_value(n, R, r * (1.0 + 1e-15));
      CHECK(std::abs(closed - series) <= 1e-10 * std::abs(closed));
    }
  }
}

TEST_CASE("normalization: kernel integrates to ~1 over growing balls (n=1,2,3)") {
  // omega_{n-1} int_0^T r^{n-1} D_n^R(r) dr oscillates around 1; test the
  // n=1 sine-integral form and the Cesaro-smoothed values for n=2,3.
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-10;
  double R = 40.0;
  for (int n : {1, 2, 3}) {
    double omega = (n == 1) ? 2.0 : (n == 2 ? 2.0 * M_PI : 4.0 * M_PI);
    auto mass = [&](double T) {
      return omega * integrate_weighted_panels(
                         [&](double r) { return std::pow(r, n - 1) * dirichlet_value(n, R, r); },
                         [](double) { return 1.0; }, M_PI / R, 0.0, T, cfg)
                         .value;
    };
    // Cesaro average over T in [2, 3] damps the boundary oscillation.
    double avg = integrate_finite(mass, 2.0, 3.0, cfg).value;
    CHECK(avg == doctest::Approx(1.0).epsilon(n == 1 ? 2e-2 : 8e-2));
  }
}

TEST_CASE("dirichlet_nd argument validation") {
  CHECK_THROWS(dirichlet_nd({3, 1.0}, 0.0));
  CHECK_THROWS(dirichlet_nd({11, 1.0}, 1.0));
  CHECK_THROWS(dirichlet_nd({2, 1.0}, 1.0));
}

TEST_CASE("kernel bound fit: finite, stable, sane magnitude") {
  std::vector<double> grid;
  for (int i = 1; i <= 100; ++i) grid.push_back(0.05 * i);
  for (int n : {1, 2, 3}) {
    auto fit = verify_kernel_bound({n, 1.0}, grid);
    CHECK(fit.fitted_c > 0.0);
    CHECK(fit.fitted_c < 10.0);
    CHECK(fit.stable);
    CHECK(fit.per_R.size() == 11);
  }
  CHECK_THROWS(verify_kernel_bound({1, 1.0}, {}));
}
