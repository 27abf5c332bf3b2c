#include "ogplab/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "ogplab/errors.hpp"

namespace ogplab {

SquareMatrix SquareMatrix::identity(std::size_t m) {
  SquareMatrix a(m);
  for (std::size_t i = 0; i < m; ++i) a(i, i) = 1.0;
  return a;
}

SquareMatrix SquareMatrix::equicorrelated(std::size_t m, double rho) {
  SquareMatrix a(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a(i, j) = i == j ? 1.0 : rho;
  }
  return a;
}

void CovarianceSpec::validate() const {
  if (m < 1) throw ParameterError("covariance dimension m must be at least 1");
  if (!(beta >= -1.0 && beta <= 1.0)) throw ParameterError("beta must lie in [-1, 1]");
  if (!eta_vec.empty() && eta_vec.size() != m * (m - 1) / 2) {
    throw ParameterError("eta_vec needs m(m-1)/2 = " + std::to_string(m * (m - 1) / 2) +
                         " entries, got " + std::to_string(eta_vec.size()));
  }
  for (double e : eta_vec) {
    if (!(e >= 0.0 && e <= eta)) {
      throw ParameterError("eta_vec entries must lie in [0, eta]");
    }
  }
}

SquareMatrix CovarianceSpec::materialize() const {
  validate();
  SquareMatrix a = SquareMatrix::identity(m);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      a(i, j) = a(j, i) = beta - (eta_vec.empty() ? 0.0 : eta_vec[idx++]);
    }
  }
  return a;
}

bool CovarianceSpec::admissible() const {
  return eta <= (1.0 - beta) / (2.0 * static_cast<double>(m));
}

Cholesky cholesky(const SquareMatrix& a, double tol) {
  const std::size_t m = a.dim;
  Cholesky out;
  out.lower = SquareMatrix(m);
  SquareMatrix& l = out.lower;
  double det = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    double pivot = a(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
    if (!(pivot > tol)) return out;
    const double d = std::sqrt(pivot);
    l(j, j) = d;
    det *= pivot;
    for (std::size_t i = j + 1; i < m; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / d;
    }
  }
  out.positive_definite = true;
  out.determinant = det;
  return out;
}

SquareMatrix psd_factor(const SquareMatrix& a, double tol) {
  const std::size_t m = a.dim;
  SquareMatrix l(m);
  for (std::size_t j = 0; j < m; ++j) {
    double pivot = a(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
    if (pivot < -tol) throw NotPositiveDefinite("covariance matrix is not positive semidefinite");
    if (pivot <= tol) {
      // Degenerate direction: the remaining entries of this column must vanish too.
      for (std::size_t i = j + 1; i < m; ++i) {
        double s = a(i, j);
        for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
        if (std::abs(s) > std::sqrt(tol)) {
          throw NotPositiveDefinite("covariance matrix is not positive semidefinite");
        }
      }
      continue;
    }
    const double d = std::sqrt(pivot);
    l(j, j) = d;
    for (std::size_t i = j + 1; i < m; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / d;
    }
  }
  return l;
}

std::vector<double> symmetric_eigenvalues(const SquareMatrix& a) {
  Eigen::MatrixXd mat(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat, Eigen::EigenvaluesOnly);
  std::vector<double> eigs(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  return eigs;
}

CovarianceAnalysis covariance_analysis(const CovarianceSpec& spec) {
  const SquareMatrix sigma = spec.materialize();
  const Cholesky chol = cholesky(sigma);
  CovarianceAnalysis out;
  out.positive_definite = chol.positive_definite;
  out.determinant = chol.determinant;
  out.det_lower_bound = std::pow((1.0 - spec.beta) / 2.0, static_cast<double>(spec.m));
  out.eigenvalues = symmetric_eigenvalues(sigma);
  out.eta_admissible = spec.admissible();
  return out;
}

}  // namespace ogplab
