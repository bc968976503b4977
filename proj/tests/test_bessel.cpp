#include <doctest.h>

#include <cmath>

#include "invlab/bessel.hpp"
#include "invlab/quadrature.hpp"
#include "oracles.hpp"

using namespace invlab;

TEST_CASE("special values") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  // first zero of J0
  CHECK(std::abs(bessel_j0(2.404825557695773)) < 1e-13);
  // first positive zero of J1
  CHECK(std::abs(bessel_j1(3.831705970207512)) < 1e-13);
}

TEST_CASE("series vs integral representation across the switch point") {
  std::vector<double> nodes, weights;
  gauss_legendre(256, nodes, weights);
  double worst0 = 0.0, worst1 = 0.0;
  for (double x = 0.25; x <= 50.0; x += 0.25) {
    worst0 = std::max(worst0,
                      std::abs(bessel_j0(x) - oracles::bessel_integral_rep(0, x, nodes, weights)));
    worst1 = std::max(worst1,
                      std::abs(bessel_j1(x) - oracles::bessel_integral_rep(1, x, nodes, weights)));
  }
  CHECK(worst0 <= 1e-12);
  CHECK(worst1 <= 1e-12);
}

TEST_CASE("relative accuracy at large argument") {
  std::vector<double> nodes, weights;
  gauss_legendre(512, nodes, weights);
  for (double x : {60.0, 120.0, 350.0, 1000.0}) {
    double ref0 = oracles::bessel_integral_rep(0, x, nodes, weights);
    double ref1 = oracles::bessel_integral_rep(1, x, nodes, weights);
    // envelope ~ sqrt(2/(pi x)); compare relative to it rather than to the
    // (possibly tiny) value near zeros
    double env = std::sqrt(2.0 / (M_PI * x));
    CHECK(std::abs(bessel_j0(x) - ref0) <= 1e-10 * env);
    CHECK(std::abs(bessel_j1(x) - ref1) <= 1e-10 * env);
  }
}

TEST_CASE("overlap agreement at the branch switch") {
  // series and asymptotic branches evaluated just on either side
  double below = bessel_j0(kBesselSwitch - 1e-9);
  double above = bessel_j0(kBesselSwitch + 1e-9);
  CHECK(std::abs(below - above) <= 1e-11);
  double below1 = bessel_j1(kBesselSwitch - 1e-9);
  double above1 = bessel_j1(kBesselSwitch + 1e-9);
  CHECK(std::abs(below1 - above1) <= 1e-11);
}

TEST_CASE("derivative identity R J1(Rr) = -d/dr J0(Rr)") {
  double R = 7.0, r = 1.3, h = 1e-6;
  double lhs = R * bessel_j1(R * r);
  double rhs = -(bessel_j0(R * (r + h)) - bessel_j0(R * (r - h))) / (2.0 * h);
  CHECK(std::abs(lhs - rhs) <= 1e-7);
}

TEST_CASE("rejects invalid order and negative argument") {
  CHECK_THROWS(bessel_j(2, 1.0));
  CHECK_THROWS(bessel_j0(-0.5));
}
