#pragma once

#include <cstddef>
#include <vector>

#include "ogplab/instance.hpp"
#include "ogplab/sign_vector.hpp"

namespace ogplab {

struct DiscrepancyResult {
  double value = 0.0;           // ||M sigma||_inf
  SignVector argmin;            // the evaluated or minimizing sigma
  std::vector<double> row_sums; // M sigma
};

inline constexpr std::size_t kDefaultExactMaxN = 30;
inline constexpr std::size_t kDefaultEnumerateMaxN = 26;

/// Row sums M sigma and their sup-norm.
DiscrepancyResult disc_value(const Instance& inst, const SignVector& sigma);

/// Global minimum of ||M sigma||_inf over {-1,+1}^n. Fixes sigma(1) = +1 and walks the
/// other 2^{n-1} vectors in binary-reflected Gray-code order, updating row sums by
/// +-2 * column per step. Returns the first minimizer in that order.
DiscrepancyResult exact_discrepancy(const Instance& inst, std::size_t max_n = kDefaultExactMaxN);

/// ||M sigma||_inf <= kappa * sqrt(n), inclusive, Gaussian instances only.
bool sbp_membership(const Instance& inst, const SignVector& sigma, double kappa);

/// All sigma with ||M sigma||_inf <= threshold, sorted lexicographically.
/// Shared engine behind enumerate_solutions and the landscape searches.
std::vector<SignVector> solutions_below(const Instance& inst, double threshold,
                                        std::size_t max_n = kDefaultEnumerateMaxN);

/// S(kappa) = { sigma : ||M sigma||_inf <= kappa sqrt(n) }, closed under global flip.
std::vector<SignVector> enumerate_solutions(const Instance& inst, double kappa,
                                            std::size_t max_n = kDefaultEnumerateMaxN);

}  // namespace ogplab
