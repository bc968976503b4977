#pragma once

#include <vector>

#include "invlab/rational.hpp"

namespace invlab {

// Identifies the radial kernel D_n^R (inverse transform of the ball
// indicator |xi| <= R under the (2 pi)^{-n} convention).
struct KernelSpec {
  int n = 1;
  double R = 1.0;
};

enum class KernelBasis { Sin, Cos, J0, J1 };

// One monomial term: coef * R^R_pow * r^r_pow * basis(R r), with a shared
// overall factor pi^{-pi_pow} on the whole form.
struct KernelTerm {
  Rat coef;
  int r_pow = 0;
  int R_pow = 0;
  KernelBasis basis = KernelBasis::Sin;
};

struct RadialKernelForm {
  int n = 1;
  int pi_pow = 1;
  std::vector<KernelTerm> terms;

  double eval(double R, double r) const;
  // Applies -(1/(2 pi r)) d/dr exactly (the step D_{n-2} -> D_n in this
  // normalization), with symbolic differentiation of the closed forms.
  RadialKernelForm raise_dimension() const;
};

inline constexpr int kMaxKernelDim = 9;

// Precomputed closed form for D_n^R, 1 <= n <= 9.
const RadialKernelForm& dirichlet_form(int n);

double dirichlet_1d(double R, double r);  // sin(Rr)/(pi r); R/pi at r = 0
double dirichlet_2d(double R, double r);  // R J1(Rr)/(2 pi r); R^2/(4 pi) at r -> 0
double dirichlet_nd(const KernelSpec& spec, double r);  // n >= 3, r > 0

// Internal evaluator used by the quadrature paths: switches to the
// hypergeometric small-argument series when R r is small, where the closed
// forms cancel catastrophically for larger n.  Defined for r >= 0.
double dirichlet_value(int n, double R, double r);

struct KernelBoundFit {
  int n = 0;
  double fitted_c = 0.0;                       // max over the (R, r) product grid
  std::vector<std::pair<double, double>> per_R;  // (R, fitted C at that R)
  bool stable = false;  // no R exceeds the running max by more than 10%
};

// Fits the smallest C with |D_n^R(r)| <= C R^n / (1 + R r)^{(n+1)/2} on the
// grid, sweeping R in {1, 2, 4, ..., 2^10}.
KernelBoundFit verify_kernel_bound(const KernelSpec& spec, const std::vector<double>& r_grid);

}  // namespace invlab
