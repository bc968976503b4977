#pragma once

namespace invlab {

// Bessel functions of the first kind, orders 0 and 1, for x >= 0.
// Power series below the switch point, Hankel asymptotic expansion above;
// absolute error <= 1e-12 for x <= 50, relative <= 1e-10 beyond.
double bessel_j0(double x);
double bessel_j1(double x);
double bessel_j(int order, double x);

// Switch point between the series and the asymptotic branch (exposed for
// the overlap-agreement test).
inline constexpr double kBesselSwitch = 12.0;

}  // namespace invlab
