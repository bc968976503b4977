#include <doctest.h>

#include <cmath>

#include "invlab/cutoff.hpp"

using namespace invlab;

TEST_CASE("plateau and support") {
  SmoothCutoff eta(6);
  double R = 4.0;
  CHECK(eta.evaluate(R, 0.5) == 1.0);
  CHECK(eta.evaluate(R, R) == 1.0);
  CHECK(eta.evaluate(R, R + 1.0) == 0.0);
  CHECK(eta.evaluate(R, R + 7.0) == 0.0);
  for (double r = 0.1; r < R + 2.0; r += 0.05) {
    double v = eta.evaluate(R, r);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  // strictly between 0 and 1 inside the transition
  CHECK(eta.evaluate(R, R + 0.5) > 0.0);
  CHECK(eta.evaluate(R, R + 0.5) < 1.0);
}

TEST_CASE("derivatives vanish at both transition endpoints") {
  SmoothCutoff eta(6);
  double R = 2.0;
  for (int m = 1; m <= 6; ++m) {
    CHECK(eta.derivative(m, R, R) == 0.0);
    CHECK(eta.derivative(m, R, R + 1.0) == 0.0);
    CHECK(std::abs(eta.derivative(m, R, R + 1e-4)) < 1e-3);  // continuity at the edge
    CHECK(std::abs(eta.derivative(m, R, R + 1.0 - 1e-4)) < 1e-3);
  }
}

TEST_CASE("derivatives match finite differences inside the transition") {
  SmoothCutoff eta(6);
  double R = 3.0;
  for (double r : {R + 0.2, R + 0.5, R + 0.8}) {
    for (int m = 1; m <= 3; ++m) {
      double h = 1e-5;
      double fd = (eta.derivative(m - 1, R, r + h) - eta.derivative(m - 1, R, r - h)) / (2.0 * h);
      CHECK(std::abs(eta.derivative(m, R, r) - fd) <= 1e-5 * (1.0 + std::abs(fd)));
    }
  }
}

TEST_CASE("requested order is capped by smoothness_order") {
  SmoothCutoff eta(2);
  CHECK_THROWS(eta.derivative(3, 1.0, 1.5));
}
