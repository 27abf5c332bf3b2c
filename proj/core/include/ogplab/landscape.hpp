#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ogplab/instance.hpp"
#include "ogplab/sign_vector.hpp"

namespace ogplab {

/// Equal-width bins over [-1, 1]; the last bin is closed on the right.
struct Histogram {
  std::vector<double> bin_lo;
  std::vector<double> bin_hi;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
};

/// Histogram of n^{-1}<sigma_i, sigma_j> over all unordered pairs i < j.
Histogram overlap_histogram(std::span<const SignVector> solutions, std::size_t bins);

/// Witness that a forbidden tuple set is non-empty.
struct TupleCertificate {
  std::vector<SignVector> members;
  std::vector<double> overlaps;     // pairs (0,1), (0,2), ..., (m-2,m-1)
  std::vector<double> disc_values;  // ||M_i sigma_i||_inf for the member's instance
  double threshold = 0.0;           // bound every disc_value satisfies
  std::size_t shared_prefix = 0;    // suffix ensembles: n - k
  std::vector<double> taus;         // interpolated ensembles: tau_i per member
};

/// Overlap window [beta - eta, beta] for m-tuples with discrepancy at most K.
struct OgpWindow {
  double beta = 0.9;
  double eta = 0.05;
  double K = 1.0;
  std::size_t m = 2;

  void validate() const;
  /// Inclusive test on an exact Hamming distance.
  bool admits(std::size_t hamming, std::size_t n) const;
};

inline constexpr std::size_t kDefaultXiMaxN = 22;

/// Tuples sharing the first n - k coordinates with ||M_i sigma_i||_inf <= threshold
/// for every member. Prefixes are scanned in lexicographic order and each member
/// takes its lexicographically first admissible suffix.
std::optional<TupleCertificate> search_xi(const SuffixEnsemble& ens, double threshold,
                                          std::size_t max_n = kDefaultXiMaxN);

/// |Xi|: number of ordered tuples as above.
std::uint64_t count_xi(const SuffixEnsemble& ens, double threshold,
                       std::size_t max_n = kDefaultXiMaxN);

/// SBP form: threshold kappa * sqrt(n), gaussian ensembles.
std::optional<TupleCertificate> search_xi_sbp(const SuffixEnsemble& ens, double kappa,
                                              std::size_t max_n = kDefaultXiMaxN);

/// Discrepancy form: threshold c_u * sqrt(M), integer disorder, k = M resampled columns.
std::optional<TupleCertificate> search_xi_disc(const SuffixEnsemble& ens, double c_u,
                                               std::size_t max_n = kDefaultXiMaxN);

/// Default capacity for the ensemble overlap-gap search: 18 for m = 2, 14 for m = 3, else 12.
std::size_t default_ogp_max_n(std::size_t m);

/// Exhaustive search for m-tuples whose members solve M_i(tau_i) for some tau_i in
/// the ensemble's angle grid and whose pairwise overlaps lie in the window.
/// Tuples are explored in lexicographic order of (sigma_1, ..., sigma_m).
std::optional<TupleCertificate> search_ogp_tuples(const InterpolatedEnsemble& ens,
                                                  const OgpWindow& window,
                                                  std::size_t max_n = 0);

// ---------------------------------------------------------------------------
// Stability probe

/// Any (possibly randomized) solver: instance plus auxiliary randomness omega.
using SigningAlgorithm = std::function<SignVector(const Instance&, std::uint64_t omega)>;

/// Wraps one of the online algorithms; "random" draws its coins from omega.
SigningAlgorithm signing_algorithm(const std::string& name, double lambda = 0.0);

enum class OmegaMode { kShared, kIndependent };

struct StabilityConfig {
  std::size_t rows = 16;
  std::size_t cols = 128;
  double rho = 1.0;  // entrywise correlation, realized as tau = arccos(rho)
  double K = 1.0;    // success threshold on ||M sigma||_inf
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  OmegaMode omega = OmegaMode::kShared;
};

struct StabilityReport {
  StabilityConfig config;
  std::vector<std::size_t> hamming;   // per trial
  std::vector<double> frobenius;      // ||M - M_bar||_F per trial
  std::vector<double> quantile_levels;
  std::vector<double> quantiles;      // of hamming, at quantile_levels
  double mean_hamming = 0.0;
  double se_hamming = 0.0;
  double success_rate = 0.0;          // over both members of every pair
  double fit_f = 0.0;                 // least squares d_H ~ f + L * ||M - M_bar||_F
  double fit_L = 0.0;
};

StabilityReport stability_probe(const SigningAlgorithm& alg, const StabilityConfig& config);

}  // namespace ogplab
