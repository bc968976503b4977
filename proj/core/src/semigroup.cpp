#include "invlab/semigroup.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <stdexcept>

namespace invlab {

SemigroupSystem SemigroupSystem::from_matrix(const Eigen::MatrixXd& A) {
  if (A.rows() != A.cols()) throw std::domain_error("SemigroupSystem: square matrix required");
  SemigroupSystem sys;
  sys.A = A;
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, false);
  double abscissa = -1e300;
  for (int i = 0; i < A.rows(); ++i) abscissa = std::max(abscissa, es.eigenvalues()[i].real());
  sys.omega0 = abscissa + 1e-9;  // margin for defective eigenvalues
  return sys;
}

Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& A) {
  // Higham's Pade-13 scaling-and-squaring.
  static const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                             1187353796428800.,  129060195264000.,   10559470521600.,
                             670442572800.,      33522128640.,       1323241920.,
                             40840800.,          960960.,            16380.,
                             182.,               1.};
  const int d = static_cast<int>(A.rows());
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(d, d);
  double norm1 = A.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm1 > 5.371920351148152) s = static_cast<int>(std::ceil(std::log2(norm1 / 5.371920351148152)));
  Eigen::MatrixXd As = A / std::pow(2.0, s);
  Eigen::MatrixXd A2 = As * As, A4 = A2 * A2, A6 = A4 * A2;
  Eigen::MatrixXd U = As * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 +
                            b[3] * A2 + b[1] * I);
  Eigen::MatrixXd V =
      A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
  Eigen::MatrixXd P = (V - U).lu().solve(V + U);
  for (int i = 0; i < s; ++i) P = P * P;
  return P;
}

Vec semigroup_apply(const SemigroupSystem& sys, double t, const Vec& x) {
  if (t < 0.0) throw std::domain_error("semigroup_apply: t must be >= 0");
  if (t == 0.0) return x;
  Eigen::MatrixXd S = matrix_exponential(Eigen::MatrixXd(t * sys.A));
  Eigen::VectorXd y = S * Eigen::VectorXd(x);
  return Vec(y);
}

CVec resolvent(const SemigroupSystem& sys, Complex lambda, const Vec& x) {
  const int d = sys.dim();
  Eigen::MatrixXcd M = lambda * Eigen::MatrixXcd::Identity(d, d) - sys.A.cast<Complex>();
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(M);
  if (!lu.isInvertible())
    throw std::domain_error("resolvent: lambda is in the spectrum of A");
  Eigen::VectorXcd y = lu.solve(Eigen::VectorXcd(x.cast<Complex>()));
  double residual = (M * y - Eigen::VectorXcd(x.cast<Complex>())).norm();
  if (residual > 1e-10 * (1.0 + x.norm()))
    throw std::runtime_error("resolvent: solve residual too large");
  return CVec(y);
}

namespace {

// S(tau) matrices precomputed on a geometric grid; Favard norms of many
// vectors then cost one matrix-vector product per grid point.
struct FavardGrid {
  std::vector<double> t;
  std::vector<Eigen::MatrixXd> S;

  FavardGrid(const SemigroupSystem& sys, double t_min, double t_max, int points) {
    double ratio = std::pow(t_max / t_min, 1.0 / (points - 1));
    double tau = t_min;
    for (int i = 0; i < points; ++i) {
      t.push_back(tau);
      S.push_back(matrix_exponential(Eigen::MatrixXd(tau * sys.A)));
      tau *= ratio;
    }
  }

  FavardEstimate estimate(const Vec& x, double alpha) const {
    FavardEstimate est;
    est.alpha = alpha;
    est.t_min = t.front();
    est.t_max = t.back();
    est.points = static_cast<int>(t.size());
    Eigen::VectorXd xv(x);
    std::vector<double> q(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      q[i] = (S[i] * xv - xv).norm() / std::pow(t[i], alpha);
      if (q[i] > est.norm_estimate) {
        est.norm_estimate = q[i];
        est.argmax_t = t[i];
      }
    }
    est.diverging = t.size() >= 3 && q[0] > q[1] && q[1] > q[2] && est.argmax_t == t.front();
    return est;
  }
};

}  // namespace

FavardEstimate favard_norm(const SemigroupSystem& sys, const Vec& x, double alpha, double t_min,
                           double t_max, int points) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("favard_norm: alpha in (0,1]");
  FavardGrid grid(sys, t_min, t_max, points);
  return grid.estimate(x, alpha);
}

SemigroupReport semigroup_inversion_experiment(const SemigroupSystem& sys, const Vec& x,
                                               double alpha, double omega, double a, double b,
                                               const std::vector<double>& R_values,
                                               InversionMode mode,
                                               const SemigroupExperimentOpts& opts) {
  if (!(omega > sys.omega0))
    throw std::domain_error("semigroup_inversion_experiment: requires omega > omega0");
  if (mode == InversionMode::Plain && !(a > 0.0))
    throw std::domain_error("semigroup_inversion_experiment: plain mode requires a > 0");

  const double w0 = sys.omega0;
  SemigroupSystem local = sys;
  auto transform = [local, w0, x, mode](Complex lambda) -> CVec {
    CVec r = resolvent(local, lambda, x);
    if (mode == InversionMode::WithZero) r -= CVec(x.cast<Complex>() / (lambda - w0));
    return r;
  };
  TransformHandle handle = TransformHandle::closed_form(transform, w0, sys.dim());

  std::vector<double> grid;
  for (int i = 0; i < opts.grid_points; ++i)
    grid.push_back(a + (b - a) * static_cast<double>(i) / std::max(1, opts.grid_points - 1));

  SemigroupReport rep;
  rep.x_norm.function_id = "semigroup";
  rep.x_norm.engine = (mode == InversionMode::WithZero) ? "with_zero" : "plain";
  rep.x_norm.box_lo = {a};
  rep.x_norm.box_hi = {b};
  rep.x_norm.grid_points = opts.grid_points;
  rep.x_norm.grid_h = grid.size() > 1 ? grid[1] - grid[0] : 0.0;
  rep.x_norm.threshold = opts.threshold;

  FavardGrid fgrid(sys, 1e-6, 1e2, 160);

  for (double R : R_values) {
    BromwichConfig bc;
    bc.omega = omega;
    bc.R = R;
    bc.t_grid = grid;
    bc.quad = opts.quad;
    bc.jobs = opts.jobs;
    BromwichOutput out = bromwich_partial(handle, bc);

    double sup_x = 0.0, sup_f = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double t = grid[i];
      Vec truth = semigroup_apply(sys, t, x);
      if (mode == InversionMode::WithZero) truth -= Vec(std::exp(w0 * t) * x);
      Vec err = out.values[i] - truth;
      sup_x = std::max(sup_x, err.norm());
      sup_f = std::max(sup_f, fgrid.estimate(err, opts.alpha_prime).norm_estimate);
    }
    rep.x_norm.R_values.push_back(R);
    rep.x_norm.sup_errors.push_back(sup_x);
    rep.favard_sup_errors.push_back(sup_f);
  }
  rep.x_norm.fitted_rate = fit_rate(rep.x_norm.R_values, rep.x_norm.sup_errors);
  double best = rep.x_norm.sup_errors.empty()
                    ? 1e300
                    : *std::min_element(rep.x_norm.sup_errors.begin(), rep.x_norm.sup_errors.end());
  rep.x_norm.uniform_verdict = best <= opts.threshold;
  (void)alpha;
  return rep;
}

HolderConstants holder_constant_check(const SemigroupSystem& sys, const Vec& x, double alpha,
                                      double alpha_prime, double a, double b, std::uint64_t seed,
                                      int pairs) {
  if (!(alpha_prime > 0.0 && alpha_prime < alpha && alpha <= 1.0))
    throw std::domain_error("holder_constant_check: requires 0 < alpha' < alpha <= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(a, b);
  std::uniform_real_distribution<double> loggap(std::log(1e-8), std::log(std::max(b - a, 1e-6)));

  FavardGrid fgrid(sys, 1e-6, 1e2, 160);
  HolderConstants out;
  out.favard_norm_of_x = fgrid.estimate(x, alpha).norm_estimate;
  for (int i = 0; i < pairs; ++i) {
    double t1 = uni(rng);
    double gap = (i % 2 == 0) ? std::exp(loggap(rng)) : std::abs(uni(rng) - t1);
    double t2 = std::min(b, t1 + std::max(gap, 1e-12));
    if (t2 <= t1) continue;
    Vec d = semigroup_apply(sys, t2, x) - semigroup_apply(sys, t1, x);
    double h = t2 - t1;
    out.x_norm_constant = std::max(out.x_norm_constant, d.norm() / std::pow(h, alpha));
    out.favard_constant =
        std::max(out.favard_constant,
                 fgrid.estimate(d, alpha_prime).norm_estimate / std::pow(h, alpha - alpha_prime));
  }
  return out;
}

}  // namespace invlab
