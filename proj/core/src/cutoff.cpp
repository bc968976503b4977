#include "invlab/cutoff.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace invlab {
namespace {

constexpr int kMaxOrder = 8;

// f(u) = exp(-1/u) for u > 0.  f^{(m)}(u) = f(u) * Q_m(1/u) where the
// integer-coefficient polynomials satisfy Q_{m+1}(v) = v^2 (Q_m(v) - Q_m'(v)).
const std::array<std::vector<std::int64_t>, kMaxOrder + 1>& q_polys() {
  static const auto table = [] {
    std::array<std::vector<std::int64_t>, kMaxOrder + 1> t;
    t[0] = {1};
    for (int m = 0; m < kMaxOrder; ++m) {
      const auto& q = t[m];
      std::vector<std::int64_t> d(q.size() > 1 ? q.size() - 1 : 1, 0);
      for (std::size_t i = 1; i < q.size(); ++i) d[i - 1] = static_cast<std::int64_t>(i) * q[i];
      std::vector<std::int64_t> next(q.size() + 2, 0);
      for (std::size_t i = 0; i < q.size(); ++i) next[i + 2] += q[i];
      for (std::size_t i = 0; i < d.size(); ++i) next[i + 2] -= d[i];
      t[m + 1] = std::move(next);
    }
    return t;
  }();
  return table;
}

// f^{(m)}(u) for f(u) = exp(-1/u) (0 for u <= 0).  Below u ~ 5e-3 every
// derivative up to order 8 is < 1e-50; return 0 outright to dodge the
// v^{2m} overflow in the polynomial factor.
double f_deriv(int m, double u) {
  if (u < 5e-3) return 0.0;
  double v = 1.0 / u;
  const auto& q = q_polys()[m];
  double poly = 0.0;
  for (std::size_t i = q.size(); i-- > 0;) poly = poly * v + static_cast<double>(q[i]);
  return std::exp(-v) * poly;
}

std::int64_t binom(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double SmoothCutoff::step(int deriv, double u) {
  if (deriv < 0 || deriv > kMaxOrder) throw std::domain_error("SmoothCutoff: derivative order out of range");
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return deriv == 0 ? 1.0 : 0.0;

  // p = f(u) / (f(u) + f(1-u)); derivatives by Leibniz against the
  // reciprocal of the denominator.
  std::array<double, kMaxOrder + 1> f{}, g{}, h{};
  for (int m = 0; m <= deriv; ++m) {
    f[m] = f_deriv(m, u);
    double fm = f_deriv(m, 1.0 - u);
    g[m] = f[m] + ((m % 2) ? -fm : fm);
  }
  h[0] = 1.0 / g[0];
  for (int m = 1; m <= deriv; ++m) {
    double s = 0.0;
    for (int i = 1; i <= m; ++i) s += static_cast<double>(binom(m, i)) * g[i] * h[m - i];
    h[m] = -s * h[0];
  }
  double p = 0.0;
  for (int i = 0; i <= deriv; ++i) p += static_cast<double>(binom(deriv, i)) * f[i] * h[deriv - i];
  return p;
}

SmoothCutoff::SmoothCutoff(int smoothness_order) : order_(smoothness_order) {
  if (smoothness_order < 1 || smoothness_order > kMaxOrder)
    throw std::domain_error("SmoothCutoff: smoothness_order must be in [1,8]");
}

double SmoothCutoff::evaluate(double R, double r) const {
  if (r <= R) return 1.0;
  if (r >= R + 1.0) return 0.0;
  return step(0, R + 1.0 - r);
}

double SmoothCutoff::derivative(int order, double R, double r) const {
  if (order > order_) throw std::domain_error("SmoothCutoff: order exceeds smoothness_order");
  if (order == 0) return evaluate(R, r);
  if (r <= R || r >= R + 1.0) return 0.0;
  double d = step(order, R + 1.0 - r);
  return (order % 2) ? -d : d;
}

}  // namespace invlab
