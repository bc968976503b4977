#pragma once

#include <Eigen/Dense>

#include "invlab/laplace.hpp"
#include "invlab/report.hpp"
#include "invlab/types.hpp"

namespace invlab {

// Matrix realization of a C0-semigroup: S(t) = e^{tA} with growth bound
// omega0 = spectral abscissa (+ tiny margin for defective eigenvalues).
struct SemigroupSystem {
  Eigen::MatrixXd A;
  double omega0 = 0.0;

  int dim() const { return static_cast<int>(A.rows()); }
  static SemigroupSystem from_matrix(const Eigen::MatrixXd& A);
};

// Pade-13 scaling-and-squaring matrix exponential.
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& A);

Vec semigroup_apply(const SemigroupSystem& sys, double t, const Vec& x);

// (lambda - A)^{-1} x by dense LU; throws when lambda is (numerically) in
// the spectrum.
CVec resolvent(const SemigroupSystem& sys, Complex lambda, const Vec& x);

enum class InversionMode { WithZero, Plain };

struct SemigroupExperimentOpts {
  int grid_points = 39;
  double threshold = 1e-3;
  double alpha_prime = 0.5;  // Favard exponent for the sampled error norms
  QuadratureConfig quad;
  int jobs = 0;
};

struct SemigroupReport {
  ConvergenceReport x_norm;               // sup_t X-norm errors per R
  std::vector<double> favard_sup_errors;  // sup_t Favard-alpha' norms per R
};

// Bromwich partials of the resolvent transform (minus x/(lambda - omega0)
// in WithZero mode) against the matrix-exponential ground truth.
SemigroupReport semigroup_inversion_experiment(const SemigroupSystem& sys, const Vec& x,
                                               double alpha, double omega, double a, double b,
                                               const std::vector<double>& R_values,
                                               InversionMode mode,
                                               const SemigroupExperimentOpts& opts);

struct FavardEstimate {
  double alpha = 1.0;
  double norm_estimate = 0.0;  // sup over the grid of t^{-alpha} ||S(t)x - x||
  double argmax_t = 0.0;
  double t_min = 1e-6, t_max = 1e2;
  int points = 400;
  bool diverging = false;  // quantity still growing at the three smallest t
};

FavardEstimate favard_norm(const SemigroupSystem& sys, const Vec& x, double alpha,
                           double t_min = 1e-6, double t_max = 1e2, int points = 400);

struct HolderConstants {
  double x_norm_constant = 0.0;   // sup ||S(t2)x - S(t1)x|| / |t2-t1|^alpha
  double favard_constant = 0.0;   // same quotient in the Favard-alpha' norm
  double favard_norm_of_x = 0.0;  // ||x||_{F_alpha}
};

// Empirical Hoelder constants over seeded random pairs in [a,b], including
// near-coincident pairs so the h -> 0 limit is resolved.
HolderConstants holder_constant_check(const SemigroupSystem& sys, const Vec& x, double alpha,
                                      double alpha_prime, double a, double b,
                                      std::uint64_t seed = 12345, int pairs = 400);

}  // namespace invlab
