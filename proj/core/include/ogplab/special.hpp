#pragma once

namespace ogplab {

/// Standard normal CDF.
double normal_cdf(double x);

/// P[|Z| <= a] for Z ~ N(0,1), a >= 0; evaluated as erf(a / sqrt 2).
double normal_interval_probability(double a);

/// h_b(p) = -p log2 p - (1-p) log2(1-p) with 0 log 0 = 0; p in [0, 1].
double binary_entropy(double p);

/// The root x in [0, 1/2] of h_b(x) = target for target in [0, 1], by bisection.
double binary_entropy_inverse_low(double target, double tol = 1e-12);

/// log2 of the binomial coefficient C(n, k) via lgamma.
double log2_binomial(double n, double k);

}  // namespace ogplab
