#pragma once

// Test-side oracles, independent of the library's evaluation paths.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracles {

// Sine integral Si(x) = int_0^x sin(u)/u du.  Power series for x <= 20,
// asymptotic auxiliary expansion beyond.
inline double sine_integral(double x) {
  if (x < 0.0) return -sine_integral(-x);
  if (x <= 20.0) {
    // sum_m (-1)^m x^{2m+1} / ((2m+1)(2m+1)!)
    long double t = x, s = x;
    for (int m = 1; m < 80; ++m) {
      t *= -static_cast<long double>(x) * x / ((2.0L * m) * (2.0L * m + 1.0L));
      s += t / (2.0L * m + 1.0L);
      if (std::fabs(t) < 1e-22L * std::fabs(s)) break;
    }
    return static_cast<double>(s);
  }
  // Si(x) = pi/2 - f(x) cos x - g(x) sin x with asymptotic f, g.
  long double f = 0.0L, g = 0.0L, term = 1.0L / x;
  for (int m = 0; m < 30; ++m) {
    long double add = term;                       // (2m)!/x^{2m+1}
    if (m > 0 && std::fabs(add) > std::fabs(f)) break;
    f += ((m % 2) ? -add : add);
    term *= (2.0L * m + 1.0L) / x;                // -> (2m+1)!/x^{2m+2}
    long double addg = term;
    g += ((m % 2) ? -addg : addg);
    term *= (2.0L * m + 2.0L) / x;                // -> (2m+2)!/x^{2m+3}
    if (std::fabs(addg) < 1e-24L) break;
  }
  return static_cast<double>(1.57079632679489661923L - f * std::cos((long double)x) -
                             g * std::sin((long double)x));
}

// J_nu by the integral representation J_nu(x) = (1/pi) int_0^pi
// cos(nu t - x sin t) dt using heavy Gauss-Legendre; independent of the
// series/asymptotic branches under test.
inline double bessel_integral_rep(int nu, double x, const std::vector<double>& gl_nodes,
                                  const std::vector<double>& gl_weights) {
  long double acc = 0.0L;
  for (std::size_t i = 0; i < gl_nodes.size(); ++i) {
    long double t = 0.5L * M_PI * (gl_nodes[i] + 1.0L);
    acc += static_cast<long double>(gl_weights[i]) *
           std::cos(nu * t - static_cast<long double>(x) * std::sin(t));
  }
  return static_cast<double>(acc * 0.5L);  // (1/pi) * (pi/2) * sum
}

// Empirical Hoelder quotient sup over seeded pairs at scale-controlled gaps.
template <class F>
double holder_quotient(F&& f, double lo, double hi, double alpha, std::uint64_t seed, int pairs,
                       double min_gap = 1e-7) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::uniform_real_distribution<double> lg(std::log(min_gap), std::log(hi - lo));
  double sup = 0.0;
  for (int i = 0; i < pairs; ++i) {
    double a = u(rng);
    double gap = std::exp(lg(rng));
    double b = std::min(hi, a + gap);
    if (b <= a) continue;
    sup = std::max(sup, std::abs(f(b) - f(a)) / std::pow(b - a, alpha));
  }
  return sup;
}

}  // namespace oracles
