#include "ogplab/special.hpp"

#include <cmath>
#include <numbers>

#include "ogplab/errors.hpp"

namespace ogplab {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_interval_probability(double a) {
  if (a < 0.0) throw ParameterError("interval half-width must be nonnegative");
  return std::erf(a / std::numbers::sqrt2);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("binary entropy needs p in [0, 1]");
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double binary_entropy_inverse_low(double target, double tol) {
  if (!(target >= 0.0 && target <= 1.0)) throw ParameterError("entropy target must lie in [0, 1]");
  double lo = 0.0;
  double hi = 0.5;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (binary_entropy(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double log2_binomial(double n, double k) {
  if (!(k >= 0.0 && k <= n)) throw ParameterError("binomial coefficient needs 0 <= k <= n");
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) /
         std::numbers::ln2;
}

}  // namespace ogplab
