#include "invlab/dirichlet.hpp"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "invlab/bessel.hpp"

namespace invlab {
namespace {

double basis_value(KernelBasis b, double u) {
  switch (b) {
    case KernelBasis::Sin: return std::sin(u);
    case KernelBasis::Cos: return std::cos(u);
    case KernelBasis::J0: return bessel_j0(u);
    case KernelBasis::J1: return bessel_j1(u);
  }
  return 0.0;
}

void merge_term(std::map<std::tuple<int, int, int>, Rat>& acc, KernelBasis b, int r_pow,
                int R_pow, Rat c) {
  auto key = std::make_tuple(static_cast<int>(b), r_pow, R_pow);
  auto it = acc.find(key);
  if (it == acc.end())
    acc.emplace(key, c);
  else
    it->second = it->second + c;
}

double sphere_area(int n) {
  // omega_{n-1} = 2 pi^{n/2} / Gamma(n/2)
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

// D_n^R(r) = (2 pi)^{-n} omega_{n-1} sum_j (-1)^j r^{2j} R^{n+2j} /
//            (4^j j! (n/2)_j (n+2j)), convergent series in (R r)^2.
double dirichlet_series(int n, double R, double r) {
  double u2 = R * r * R * r;
  double pref = std::pow(2.0 * M_PI, -n) * sphere_area(n) * std::pow(R, n);
  double poch = 1.0;  // (n/2)_j
  double fourj = 1.0, fact = 1.0, rpow = 1.0;
  double sum = 0.0;
  for (int j = 0; j < 40; ++j) {
    if (j > 0) {
      poch *= 0.5 * n + (j - 1);
      fourj *= 4.0;
      fact *= j;
      rpow *= u2;
    }
    double term = ((j % 2) ? -1.0 : 1.0) * rpow / (fourj * fact * poch * (n + 2.0 * j));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return pref * sum;
}

}  // namespace

double RadialKernelForm::eval(double R, double r) const {
  double u = R * r;
  double acc = 0.0;
  for (const auto& t : terms)
    acc += t.coef.value() * std::pow(R, t.R_pow) * std::pow(r, t.r_pow) * basis_value(t.basis, u);
  return acc * std::pow(M_PI, -pi_pow);
}

RadialKernelForm RadialKernelForm::raise_dimension() const {
  std::map<std::tuple<int, int, int>, Rat> acc;
  const Rat half(-1, 2);
  for (const auto& t : terms) {
    // d/dr of coef R^a r^b basis(R r), then * (-1/(2 pi r)).
    Rat c = t.coef;
    int a = t.R_pow, b = t.r_pow;
    switch (t.basis) {
      case KernelBasis::Sin:
        merge_term(acc, KernelBasis::Sin, b - 2, a, c * Rat(b) * half);
        merge_term(acc, KernelBasis::Cos, b - 1, a + 1, c * half);
        break;
      case KernelBasis::Cos:
        merge_term(acc, KernelBasis::Cos, b - 2, a, c * Rat(b) * half);
        merge_term(acc, KernelBasis::Sin, b - 1, a + 1, c * half * Rat(-1));
        break;
      case KernelBasis::J0:
        merge_term(acc, KernelBasis::J0, b - 2, a, c * Rat(b) * half);
        merge_term(acc, KernelBasis::J1, b - 1, a + 1, c * half * Rat(-1));
        break;
      case KernelBasis::J1:
        merge_term(acc, KernelBasis::J1, b - 2, a, c * Rat(b - 1) * half);
        merge_term(acc, KernelBasis::J0, b - 1, a + 1, c * half);
        break;
    }
  }
  RadialKernelForm out;
  out.n = n + 2;
  out.pi_pow = pi_pow + 1;
  for (const auto& [key, c] : acc) {
    if (c.is_zero()) continue;
    out.terms.push_back({c, std::get<1>(key), std::get<2>(key),
                         static_cast<KernelBasis>(std::get<0>(key))});
  }
  return out;
}

const RadialKernelForm& dirichlet_form(int n) {
  static const std::array<RadialKernelForm, kMaxKernelDim + 1> table = [] {
    std::array<RadialKernelForm, kMaxKernelDim + 1> t;
    RadialKernelForm d1;
    d1.n = 1;
    d1.pi_pow = 1;
    d1.terms = {{Rat(1), -1, 0, KernelBasis::Sin}};
    RadialKernelForm d2;
    d2.n = 2;
    d2.pi_pow = 1;
    d2.terms = {{Rat(1, 2), -1, 1, KernelBasis::J1}};
    t[1] = d1;
    t[2] = d2;
    for (int n = 3; n <= kMaxKernelDim; ++n) t[n] = t[n - 2].raise_dimension();
    return t;
  }();
  if (n < 1 || n > kMaxKernelDim)
    throw std::domain_error("dirichlet_form: supported dimensions are 1..9");
  return table[n];
}

double dirichlet_1d(double R, double r) {
  if (R < 1.0 || r < 0.0) throw std::domain_error("dirichlet_1d: requires R >= 1, r >= 0");
  if (r == 0.0) return R / M_PI;
  return std::sin(R * r) / (M_PI * r);
}

double dirichlet_2d(double R, double r) {
  if (R < 1.0 || r < 0.0) throw std::domain_error("dirichlet_2d: requires R >= 1, r >= 0");
  if (R * r < 1e-8) return R * R / (4.0 * M_PI);
  return R * bessel_j1(R * r) / (2.0 * M_PI * r);
}

double dirichlet_nd(const KernelSpec& spec, double r) {
  if (spec.n < 3) throw std::domain_error("dirichlet_nd: use the closed forms for n < 3");
  if (spec.n > kMaxKernelDim) throw std::domain_error("dirichlet_nd: supported dimensions are 3..9");
  if (!(r > 0.0)) throw std::domain_error("dirichlet_nd: requires r > 0");
  return dirichlet_value(spec.n, spec.R, r);
}

double dirichlet_value(int n, double R, double r) {
  if (n == 1) return dirichlet_1d(R, r);
  if (n == 2) return dirichlet_2d(R, r);
  // The closed forms cancel through ~n leading orders as R r -> 0; the
  // series branch is exact there and overlaps the closed form near 0.5.
  if (R * r < 0.5) return dirichlet_series(n, R, r);
  return dirichlet_form(n).eval(R, r);
}

KernelBoundFit verify_kernel_bound(const KernelSpec& spec, const std::vector<double>& r_grid) {
  if (r_grid.empty()) throw std::domain_error("verify_kernel_bound: empty grid");
  for (double r : r_grid)
    if (!(r > 0.0)) throw std::domain_error("verify_kernel_bound: grid points must be positive");

  KernelBoundFit fit;
  fit.n = spec.n;
  double running_max = 0.0;
  fit.stable = true;
  for (int p = 0; p <= 10; ++p) {
    double R = std::pow(2.0, p);
    double c = 0.0;
    for (double r : r_grid) {
      double bound = std::pow(R, spec.n) / std::pow(1.0 + R * r, 0.5 * (spec.n + 1));
      double ratio = std::abs(dirichlet_value(spec.n, R, r)) / bound;
      c = std::max(c, ratio);
    }
    if (!std::isfinite(c)) throw std::runtime_error("verify_kernel_bound: unbounded ratio (kernel bug)");
    if (running_max > 0.0 && c > 1.10 * running_max) fit.stable = false;
    running_max = std::max(running_max, c);
    fit.per_R.emplace_back(R, c);
  }
  fit.fitted_c = running_max;
  return fit;
}

}  // namespace invlab
