#pragma once

#include <cstddef>
#include <cstdint>

#include "ogplab/covariance.hpp"

namespace ogplab {

struct BoxEstimate {
  double estimate = 0.0;
  double std_error = 0.0;  // binomial, sqrt(p (1 - p) / samples)
  std::uint64_t samples = 0;
};

inline constexpr std::uint64_t kMinBoxSamples = 10'000;

/// Monte Carlo estimate of P[max_i |Z_i| <= half_width], Z ~ N(0, covariance).
/// Sample s uses normals addressed by (seed, s, coordinate), so the estimate does not
/// depend on how the loop is split. Semidefinite covariances are accepted (perfectly
/// coupled coordinates); indefinite ones throw NotPositiveDefinite.
BoxEstimate mc_box_probability(const SquareMatrix& covariance, double half_width,
                               std::uint64_t samples, std::uint64_t seed);

/// P[max_i |Z_i| <= half_width] for unit-diagonal equicorrelated Z with rho in [0, 1],
/// reduced to a one-dimensional integral over the shared Gaussian factor.
double equicorrelated_box_probability(std::size_t m, double rho, double half_width);

/// Deterministic nested quadrature for a positive definite covariance with m <= 3.
double box_probability_quadrature(const SquareMatrix& covariance, double half_width);

}  // namespace ogplab
