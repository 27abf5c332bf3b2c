#include "ogplab/box_probability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ogplab/errors.hpp"
#include "ogplab/rng.hpp"
#include "ogplab/special.hpp"

namespace ogplab {

namespace {

constexpr double kTail = 39.0;  // normal density below 1e-300 beyond this

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

template <typename F>
double integrate(F&& f, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 12, 1e-14);
}

// Integrates over [lo, hi] after splitting at the given interior points.
template <typename F>
double integrate_split(F&& f, double lo, double hi, std::vector<double> cuts) {
  cuts.push_back(lo);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = std::clamp(cuts[i], lo, hi);
    const double b = std::clamp(cuts[i + 1], lo, hi);
    total += integrate(f, a, b);
  }
  return total;
}

void check_half_width(double half_width) {
  if (!(half_width >= 0.0)) throw ParameterError("box half-width must be nonnegative");
}

}  // namespace

BoxEstimate mc_box_probability(const SquareMatrix& covariance, double half_width,
                               std::uint64_t samples, std::uint64_t seed) {
  check_half_width(half_width);
  if (samples < kMinBoxSamples) {
    throw ParameterError("Monte Carlo box probability needs at least 10^4 samples");
  }
  const std::size_t m = covariance.dim;
  if (m == 0) throw ParameterError("empty covariance");
  const SquareMatrix l = psd_factor(covariance);
  const CounterRng rng(seed);

  std::vector<double> g(m + 1);
  std::uint64_t inside = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (std::size_t q = 0; 2 * q < m; ++q) {
      const auto [a, b] = rng.normal_pair(Stream::kBoxSamples, s, static_cast<std::uint32_t>(q));
      g[2 * q] = a;
      g[2 * q + 1] = b;
    }
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      double z = 0.0;
      for (std::size_t k = 0; k <= i; ++k) z += l(i, k) * g[k];
      ok = std::abs(z) <= half_width;
    }
    inside += ok;
  }
  BoxEstimate out;
  out.samples = samples;
  out.estimate = static_cast<double>(inside) / static_cast<double>(samples);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
  return out;
}

double equicorrelated_box_probability(std::size_t m, double rho, double half_width) {
  check_half_width(half_width);
  if (m == 0) throw ParameterError("box dimension must be positive");
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw ParameterError("equicorrelated reduction needs rho in [0, 1]");
  }
  const double single = normal_interval_probability(half_width);
  if (m == 1 || rho == 1.0) return single;
  if (rho == 0.0) return std::pow(single, static_cast<double>(m));

  // Z_i = sqrt(rho) W + sqrt(1 - rho) E_i with W, E_i independent standard normals.
  const double a = std::sqrt(rho);
  const double b = std::sqrt(1.0 - rho);
  const auto md = static_cast<double>(m);
  auto integrand = [&](double w) {
    const double p = normal_cdf((half_width - a * w) / b) - normal_cdf((-half_width - a * w) / b);
    return p <= 0.0 ? 0.0 : normal_pdf(w) * std::pow(p, md);
  };
  const double edge = half_width / a;
  const double value = integrate_split(integrand, -kTail, kTail, {-edge, 0.0, edge});
  return std::clamp(value, 0.0, 1.0);
}

double box_probability_quadrature(const SquareMatrix& covariance, double half_width) {
  check_half_width(half_width);
  const std::size_t m = covariance.dim;
  if (m == 0 || m > 3) throw ParameterError("box quadrature is offered for 1 <= m <= 3");
  const Cholesky chol = cholesky(covariance);
  if (!chol.positive_definite) throw NotPositiveDefinite("box quadrature needs a PD covariance");
  const SquareMatrix& l = chol.lower;

  // Sequential conditioning: Z = L g, level i integrates g_i over the slab that keeps
  // |Z_i| <= half_width given g_0..g_{i-1}; the last level is a CDF difference.
  std::vector<double> g(m, 0.0);
  auto level = [&](auto&& self, std::size_t i) -> double {
    double shift = 0.0;
    for (std::size_t k = 0; k < i; ++k) shift += l(i, k) * g[k];
    const double lo = (-half_width - shift) / l(i, i);
    const double hi = (half_width - shift) / l(i, i);
    if (i + 1 == m) return std::max(0.0, normal_cdf(hi) - normal_cdf(lo));
    const double a = std::max(lo, -kTail);
    const double b = std::min(hi, kTail);
    return integrate(
        [&](double x) {
          g[i] = x;
          return normal_pdf(x) * self(self, i + 1);
        },
        a, b);
  };
  return std::clamp(level(level, 0), 0.0, 1.0);
}

}  // namespace ogplab
