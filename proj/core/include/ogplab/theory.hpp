#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ogplab/covariance.hpp"
#include "ogplab/special.hpp"

namespace ogplab {

/// A first-moment exponent with its additive breakdown. `value` is the sum of
/// `terms`; `per_unit_n` distinguishes rates (divide log2 E by n) from absolute
/// base-2 exponents.
struct ExponentReport {
  std::string kind;
  double value = 0.0;
  std::vector<std::pair<std::string, double>> terms;
  std::vector<std::pair<std::string, double>> params;
  bool per_unit_n = true;

  bool negative() const { return value < 0.0; }
  std::string verdict() const { return negative() ? "negative" : "nonnegative"; }
};

/// Storage capacity of the symmetric binary perceptron: -1 / log2 P[|Z| <= kappa].
double alpha_c(double kappa);

/// Rate of E|Xi(Delta, m)| for the SBP suffix ensemble, per unit n.
ExponentReport psi_sbp(double delta, std::size_t m, double alpha, double kappa);

/// Delta - (alpha/2) log2(2 pi) + alpha log2(2 kappa) - (alpha/2) log2 Delta.
double upsilon(double delta, double alpha, double kappa);
ExponentReport upsilon_report(double delta, double alpha, double kappa);

/// Which coefficient multiplies n h_b((1 - beta + eta)/2) in the OGP free energy.
enum class CountingForm {
  kFreeEnergy,     // m n h_b(.)       as written in the free-energy expression
  kCountingLemma,  // (m - 1) n h_b(.) as given by the tuple counting bound
};

/// Absolute base-2 exponent of the ensemble m-OGP first moment:
/// n + coeff n h_b((1-beta+eta)/2) + c m n + (mM/2) log2(4K^2/(pi(1-beta))) - (Mm/2) log2 n.
ExponentReport psi_disc(std::size_t m, double beta, double eta, double c, double n, double M,
                        double K, CountingForm form = CountingForm::kFreeEnergy);

struct OgpParams {
  std::size_t m = 2;
  double beta = 0.0;
  double eta = 0.0;
  double c = 0.0;
};

/// m* = max{2, ceil(16 C1)}, h_b(1 - beta*) = min{1/(4 C1), 1/2} with beta* > 1/2,
/// eta* = (1 - beta*)/(2 m*), c* = 1/m*.
OgpParams find_ogp_params(double C1, double c2, double K);

/// (2 pi)^{-m/2} |Sigma(eta)|^{-1/2} (2K / sqrt n)^m, an upper bound on
/// P[max_i |Z_i| <= K / sqrt n] for Z ~ N(0, Sigma(eta)).
double gaussian_box_bound(const CovarianceSpec& spec, double K, double n);

inline constexpr double kCu = 1.0 / 24.0;
/// Bernoulli analogue sqrt(p - p^2) / 24.
double c_u_prime(double p);

/// 3 |I| / sqrt(M) for sums of M Rademacher signs (not capped at 1).
double berry_esseen_bound(double interval_length, std::size_t M);
/// 3 |I| / sqrt(M (p - p^2)) for sums of M Bernoulli(p) variables (not capped at 1).
double berry_esseen_bound(double interval_length, std::size_t M, double p);

enum class BoxMethod { kQuadrature, kMonteCarlo };

struct BoxOptions {
  BoxMethod method = BoxMethod::kQuadrature;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
};

struct CountExpectation {
  double value = 0.0;
  double log2_value = 0.0;
  double counting_log2 = 0.0;  // log2 of the tuple count (exact for Xi, a bound otherwise)
  double p_box = 0.0;          // single-row box probability
  double p_box_std_error = 0.0;
  bool upper_bound_style = false;
  std::string method;
};

/// E|Xi| = 2^{n + k(m-1)} P_box^M, P_box = P[max_i |Z_i| <= kappa] under the
/// covariance (k/n) I + (1 - k/n) 1 1^T shared by every admissible tuple.
CountExpectation expected_xi_count(std::size_t n, std::size_t M, std::size_t k, std::size_t m,
                                   double kappa, const BoxOptions& options = {});

/// First-moment estimate for m-tuples at pairwise Hamming distance delta with
/// ||M sigma_i||_inf <= K: exp2(n + n(m-1) h_b(delta/n)) * P_box^M, where P_box uses
/// the equicorrelated covariance with off-diagonal 1 - 2 delta / n and half-width
/// K / sqrt n. The counting factor is a bound, so the result is flagged as such.
CountExpectation expected_tuple_count_general(std::size_t n, std::size_t M, std::size_t m,
                                              std::size_t delta, double K,
                                              const BoxOptions& options = {});

struct StableConstants {
  double C = 0.0;
  double Q = 0.0;
  double log2_log2_T = 0.0;  // T itself overflows every floating type
};

/// C = eta^2 / 1600, Q = 4800 L pi / eta^2, log2 log2 T = 4 m Q log2 Q.
StableConstants stable_constants(double eta, double L, std::size_t m);

}  // namespace ogplab
