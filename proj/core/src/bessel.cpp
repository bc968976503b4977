#include "invlab/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace invlab {
namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;

// J0(x) = sum_m (-1)^m (x/2)^{2m} / (m!)^2, accumulated in long double so
// the alternating-sum cancellation at x ~ 12 stays below 1e-14.
long double j0_series(long double x) {
  long double q = x * x / 4.0L;
  long double term = 1.0L, sum = 1.0L;
  for (int m = 1; m < 80; ++m) {
    term *= -q / (static_cast<long double>(m) * m);
    sum += term;
    if (std::fabs(term) < 1e-22L * (1.0L + std::fabs(sum))) break;
  }
  return sum;
}

long double j1_series(long double x) {
  long double q = x * x / 4.0L;
  long double term = 1.0L, sum = 1.0L;
  for (int m = 1; m < 80; ++m) {
    term *= -q / (static_cast<long double>(m) * (m + 1.0L));
    sum += term;
    if (std::fabs(term) < 1e-22L * (1.0L + std::fabs(sum))) break;
  }
  return (x / 2.0L) * sum;
}

// Hankel expansion: J_nu(x) ~ sqrt(2/(pi x)) [P cos(chi) - Q sin(chi)],
// chi = x - (2 nu + 1) pi/4, with a_k = prod_{j<=k} (4nu^2 - (2j-1)^2)/(8j),
// P = sum (-1)^m a_{2m} x^{-2m}, Q = sum (-1)^m a_{2m+1} x^{-(2m+1)}.
// Truncated at the smallest term.
long double hankel(int nu, long double x) {
  const long double mu = 4.0L * nu * nu;
  long double a = 1.0L;
  long double P = 1.0L, Q = 0.0L;
  long double prev = 1e30L;
  for (int k = 1; k <= 40; ++k) {
    long double odd = 2.0L * k - 1.0L;
    a *= (mu - odd * odd) / (8.0L * k);
    long double t = a / std::pow(x, static_cast<long double>(k));
    if (std::fabs(t) >= prev) break;  // asymptotic series started diverging
    prev = std::fabs(t);
    int m = k / 2;
    long double signed_t = ((m % 2) ? -t : t);
    if (k % 2 == 0)
      P += signed_t;
    else
      Q += signed_t;
    if (std::fabs(t) < 1e-19L) break;
  }
  long double chi = x - (2 * nu + 1) * kPiL / 4.0L;
  return std::sqrt(2.0L / (kPiL * x)) * (P * std::cos(chi) - Q * std::sin(chi));
}

}  // namespace

double bessel_j0(double x) {
  if (x < 0) throw std::domain_error("bessel_j0: x must be >= 0");
  if (x <= kBesselSwitch) return static_cast<double>(j0_series(x));
  return static_cast<double>(hankel(0, x));
}

double bessel_j1(double x) {
  if (x < 0) throw std::domain_error("bessel_j1: x must be >= 0");
  if (x <= kBesselSwitch) return static_cast<double>(j1_series(x));
  return static_cast<double>(hankel(1, x));
}

double bessel_j(int order, double x) {
  if (order == 0) return bessel_j0(x);
  if (order == 1) return bessel_j1(x);
  throw std::domain_error("bessel_j: order must be 0 or 1");
}

}  // namespace invlab
