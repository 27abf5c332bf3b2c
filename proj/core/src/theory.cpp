#include "ogplab/theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "ogplab/box_probability.hpp"
#include "ogplab/errors.hpp"

namespace ogplab {

namespace {

double sum_terms(const std::vector<std::pair<std::string, double>>& terms) {
  double total = 0.0;
  for (const auto& [name, v] : terms) total += v;
  return total;
}

const double kLog2TwoPi = std::log2(2.0 * std::numbers::pi);

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw ParameterError("Delta must lie in (0, 1/2), got " + std::to_string(delta));
  }
}

BoxEstimate box_probability(const SquareMatrix& cov, double half_width, bool equicorrelated,
                            double rho, const BoxOptions& options, std::string& method) {
  if (options.method == BoxMethod::kMonteCarlo) {
    method = "monte_carlo";
    return mc_box_probability(cov, half_width, options.samples, options.seed);
  }
  if (equicorrelated && rho >= 0.0) {
    method = "equicorrelated_quadrature";
    return {equicorrelated_box_probability(cov.dim, rho, half_width), 0.0, 0};
  }
  if (cov.dim <= 3) {
    method = "nested_quadrature";
    return {box_probability_quadrature(cov, half_width), 0.0, 0};
  }
  method = "monte_carlo";
  return mc_box_probability(cov, half_width, options.samples, options.seed);
}

}  // namespace

double alpha_c(double kappa) {
  if (!(kappa > 0.0)) throw ParameterError("kappa must be positive");
  return -1.0 / std::log2(normal_interval_probability(kappa));
}

ExponentReport psi_sbp(double delta, std::size_t m, double alpha, double kappa) {
  check_delta(delta);
  if (m < 1) throw ParameterError("m must be at least 1");
  if (!(alpha > 0.0)) throw ParameterError("alpha must be positive");
  if (!(kappa > 0.0)) throw ParameterError("kappa must be positive");
  const auto md = static_cast<double>(m);
  ExponentReport rep;
  rep.kind = "psi_sbp";
  rep.per_unit_n = true;
  rep.terms = {
      {"count_first", 1.0},
      {"count_suffixes", md * delta},
      {"gaussian_normalization", -(alpha * md / 2.0) * kLog2TwoPi},
      {"box_volume", alpha * md * std::log2(2.0 * kappa)},
      {"det_small_eigenvalues", -(alpha * (md - 1.0) / 2.0) * std::log2(delta)},
      {"det_large_eigenvalue", -(alpha / 2.0) * std::log2(delta + (1.0 - delta) * md)},
  };
  rep.params = {{"delta", delta}, {"m", md}, {"alpha", alpha}, {"kappa", kappa}};
  rep.value = sum_terms(rep.terms);
  return rep;
}

ExponentReport upsilon_report(double delta, double alpha, double kappa) {
  check_delta(delta);
  if (!(alpha > 0.0)) throw ParameterError("alpha must be positive");
  if (!(kappa > 0.0)) throw ParameterError("kappa must be positive");
  ExponentReport rep;
  rep.kind = "upsilon";
  rep.per_unit_n = true;
  rep.terms = {
      {"delta", delta},
      {"gaussian_normalization", -(alpha / 2.0) * kLog2TwoPi},
      {"box_volume", alpha * std::log2(2.0 * kappa)},
      {"det_small_eigenvalue", -(alpha / 2.0) * std::log2(delta)},
  };
  rep.params = {{"delta", delta}, {"alpha", alpha}, {"kappa", kappa}};
  rep.value = sum_terms(rep.terms);
  return rep;
}

double upsilon(double delta, double alpha, double kappa) {
  return upsilon_report(delta, alpha, kappa).value;
}

ExponentReport psi_disc(std::size_t m, double beta, double eta, double c, double n, double M,
                        double K, CountingForm form) {
  if (!(eta > 0.0 && eta < beta && beta < 1.0)) {
    throw ParameterError("psi_disc needs 0 < eta < beta < 1");
  }
  if (m < 2) throw ParameterError("psi_disc needs m >= 2");
  if (!(n > 0.0 && M > 0.0 && K > 0.0)) throw ParameterError("n, M and K must be positive");
  if (!(c >= 0.0)) throw ParameterError("c must be nonnegative");
  const auto md = static_cast<double>(m);
  const double coeff = form == CountingForm::kFreeEnergy ? md : md - 1.0;
  ExponentReport rep;
  rep.kind = "psi_disc";
  rep.per_unit_n = false;
  rep.terms = {
      {"count_first", n},
      {"count_overlaps", coeff * n * binary_entropy((1.0 - beta + eta) / 2.0)},
      {"angle_grid", c * md * n},
      {"box_probability", (md * M / 2.0) * std::log2(4.0 * K * K / (std::numbers::pi * (1.0 - beta)))},
      {"box_scaling", -(M * md / 2.0) * std::log2(n)},
  };
  rep.params = {{"m", md}, {"beta", beta}, {"eta", eta}, {"c", c},
                {"n", n},  {"M", M},       {"K", K},     {"counting_coefficient", coeff}};
  rep.value = sum_terms(rep.terms);
  return rep;
}

OgpParams find_ogp_params(double C1, double c2, double K) {
  if (!(C1 > c2 && c2 > 0.0)) throw ParameterError("find_ogp_params needs C1 > c2 > 0");
  if (!(K > 0.0)) throw ParameterError("K must be positive");
  OgpParams p;
  p.m = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(16.0 * C1 - 1e-12)));
  const double target = std::min(1.0 / (4.0 * C1), 0.5);
  // h_b is symmetric; the root below 1/2 gives beta* = 1 - x > 1/2.
  const double x = binary_entropy_inverse_low(target, 1e-12);
  p.beta = 1.0 - x;
  p.eta = (1.0 - p.beta) / (2.0 * static_cast<double>(p.m));
  p.c = 1.0 / static_cast<double>(p.m);
  return p;
}

double gaussian_box_bound(const CovarianceSpec& spec, double K, double n) {
  if (!(K > 0.0 && n > 0.0)) throw ParameterError("K and n must be positive");
  const Cholesky chol = cholesky(spec.materialize());
  if (!chol.positive_definite) throw NotPositiveDefinite("Sigma(eta) is not positive definite");
  const auto md = static_cast<double>(spec.m);
  return std::pow(2.0 * std::numbers::pi, -md / 2.0) / std::sqrt(chol.determinant) *
         std::pow(2.0 * K / std::sqrt(n), md);
}

double c_u_prime(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("p must lie in (0, 1)");
  return std::sqrt(p - p * p) / 24.0;
}

double berry_esseen_bound(double interval_length, std::size_t M) {
  if (M < 1) throw ParameterError("M must be at least 1");
  if (!(interval_length >= 0.0)) throw ParameterError("interval length must be nonnegative");
  return 3.0 * interval_length / std::sqrt(static_cast<double>(M));
}

double berry_esseen_bound(double interval_length, std::size_t M, double p) {
  if (M < 1) throw ParameterError("M must be at least 1");
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("bernoulli p must lie in (0, 1)");
  if (!(interval_length >= 0.0)) throw ParameterError("interval length must be nonnegative");
  return 3.0 * interval_length / std::sqrt(static_cast<double>(M) * (p - p * p));
}

CountExpectation expected_xi_count(std::size_t n, std::size_t M, std::size_t k, std::size_t m,
                                   double kappa, const BoxOptions& options) {
  if (n < 1 || M < 1 || m < 1) throw ParameterError("n, M and m must be positive");
  if (k < 1 || k > n) throw ParameterError("resampled count k must lie in [1, n]");
  if (!(kappa > 0.0)) throw ParameterError("kappa must be positive");
  const double rho = 1.0 - static_cast<double>(k) / static_cast<double>(n);
  CountExpectation out;
  const BoxEstimate box =
      box_probability(SquareMatrix::equicorrelated(m, rho), kappa, true, rho, options, out.method);
  out.p_box = box.estimate;
  out.p_box_std_error = box.std_error;
  out.counting_log2 = static_cast<double>(n) + static_cast<double>(k * (m - 1));
  out.log2_value = out.counting_log2 + static_cast<double>(M) * std::log2(out.p_box);
  out.value = std::exp2(out.log2_value);
  return out;
}

CountExpectation expected_tuple_count_general(std::size_t n, std::size_t M, std::size_t m,
                                              std::size_t delta, double K,
                                              const BoxOptions& options) {
  if (n < 1 || M < 1 || m < 1) throw ParameterError("n, M and m must be positive");
  if (delta > n) throw ParameterError("Hamming distance delta must lie in [0, n]");
  if (!(K > 0.0)) throw ParameterError("K must be positive");
  const double nd = static_cast<double>(n);
  const double half_width = K / std::sqrt(nd);
  CountExpectation out;
  out.upper_bound_style = true;
  out.counting_log2 = nd + nd * static_cast<double>(m - 1) * binary_entropy(static_cast<double>(delta) / nd);

  const double rho = 1.0 - 2.0 * static_cast<double>(delta) / nd;
  BoxEstimate box;
  if (delta == 0 || m == 1) {
    // Identical members: the tuple is a single vector.
    box = {normal_interval_probability(half_width), 0.0, 0};
    out.method = "single_vector";
  } else {
    if (m > 1 && !(rho > -1.0 / static_cast<double>(m - 1))) {
      throw NotPositiveDefinite(
          "equicorrelated covariance with off-diagonal 1 - 2 delta/n is not positive definite "
          "(requires 1 - 2 delta/n > -1/(m-1))");
    }
    box = box_probability(SquareMatrix::equicorrelated(m, rho), half_width, true, rho, options,
                          out.method);
  }
  out.p_box = box.estimate;
  out.p_box_std_error = box.std_error;
  out.log2_value = out.counting_log2 + static_cast<double>(M) * std::log2(out.p_box);
  out.value = std::exp2(out.log2_value);
  return out;
}

StableConstants stable_constants(double eta, double L, std::size_t m) {
  if (!(eta > 0.0 && eta < 1.0)) throw ParameterError("eta must lie in (0, 1)");
  if (!(L > 0.0)) throw ParameterError("L must be positive");
  if (m < 2) throw ParameterError("m must be at least 2");
  StableConstants out;
  out.C = eta * eta / 1600.0;
  out.Q = 4800.0 * L * std::numbers::pi / (eta * eta);
  out.log2_log2_T = 4.0 * static_cast<double>(m) * out.Q * std::log2(out.Q);
  return out;
}

}  // namespace ogplab
