#include "invlab/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace invlab {
namespace {

// Golub-Welsch from the symmetric Jacobi-matrix three-term recurrence.
void golub_welsch(int n, double mu0, const std::vector<double>& beta,
                  std::vector<double>& nodes, std::vector<double>& weights) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    J(i, i + 1) = beta[i];
    J(i + 1, i) = beta[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = es.eigenvalues()[i];
    double v0 = es.eigenvectors()(0, i);
    weights[i] = mu0 * v0 * v0;
  }
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  std::vector<double> beta(n - 1);
  for (int j = 1; j < n; ++j) beta[j - 1] = j / std::sqrt(4.0 * j * j - 1.0);
  golub_welsch(n, 2.0, beta, nodes, weights);
}

void gauss_gegenbauer(int n, double lambda, std::vector<double>& nodes,
                      std::vector<double>& weights) {
  // Jacobi alpha = beta = lambda: diagonal vanishes by symmetry and
  // beta_k^2 = k (k + 2 lambda) / ((2k + 2 lambda + 1)(2k + 2 lambda - 1)).
  std::vector<double> beta(n - 1);
  for (int k = 1; k < n; ++k) {
    double s = 2.0 * k + 2.0 * lambda;
    beta[k - 1] = std::sqrt(k * (k + 2.0 * lambda) / ((s + 1.0) * (s - 1.0)));
  }
  double mu0 = std::sqrt(M_PI) * std::exp(std::lgamma(lambda + 1.0) - std::lgamma(lambda + 1.5));
  golub_welsch(n, mu0, beta, nodes, weights);
}

}  // namespace invlab
