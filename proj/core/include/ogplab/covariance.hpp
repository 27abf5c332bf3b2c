#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ogplab {

/// Row-major square matrix, kept deliberately small: covariances here are m x m with m <= ~10.
struct SquareMatrix {
  std::size_t dim = 0;
  std::vector<double> values;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t m) : dim(m), values(m * m, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return values[i * dim + j]; }
  double operator()(std::size_t i, std::size_t j) const { return values[i * dim + j]; }

  static SquareMatrix identity(std::size_t m);
  /// Unit diagonal, every off-diagonal entry equal to rho.
  static SquareMatrix equicorrelated(std::size_t m, double rho);
};

/// Sigma(eta): unit diagonal, entry (i, j) = beta - eta_ij. `eta_vec` lists pairs in
/// the order (0,1), (0,2), ..., (0,m-1), (1,2), ...; `eta` bounds its entries.
/// An empty `eta_vec` means every eta_ij is zero.
struct CovarianceSpec {
  std::size_t m = 2;
  double beta = 0.5;
  double eta = 0.0;
  std::vector<double> eta_vec;

  void validate() const;
  SquareMatrix materialize() const;
  /// eta <= (1 - beta) / (2m), the regime where the determinant bound is proven.
  bool admissible() const;
};

struct Cholesky {
  bool positive_definite = false;
  SquareMatrix lower;  // valid when positive_definite
  double determinant = 0.0;
};

/// Plain Cholesky; a pivot <= tol stops the factorization and reports not-PD.
Cholesky cholesky(const SquareMatrix& a, double tol = 1e-12);

/// Lower factor L with L L^T = a for positive semidefinite a. Zero pivots (up to tol)
/// give zero columns; a negative pivot throws NotPositiveDefinite.
SquareMatrix psd_factor(const SquareMatrix& a, double tol = 1e-12);

/// Eigenvalues of a symmetric matrix in descending order.
std::vector<double> symmetric_eigenvalues(const SquareMatrix& a);

struct CovarianceAnalysis {
  bool positive_definite = false;
  double determinant = 0.0;       // product of Cholesky pivots squared (0 when not PD)
  double det_lower_bound = 0.0;   // ((1 - beta) / 2)^m
  std::vector<double> eigenvalues;
  bool eta_admissible = false;
};

CovarianceAnalysis covariance_analysis(const CovarianceSpec& spec);

}  // namespace ogplab
