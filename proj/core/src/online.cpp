#include "ogplab/online.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ogplab/errors.hpp"
#include "ogplab/rng.hpp"

namespace ogplab {

namespace {

// log|sinh(x)| for x != 0, stable for large |x|.
double log_abs_sinh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(-std::exp(-2.0 * a)) - std::numbers::ln2;
}

}  // namespace

OnlineRun run_online(OnlineAlgorithm& alg, const Instance& inst) {
  const std::size_t rows = inst.rows();
  OnlineState state;
  state.partial_sums.assign(rows, 0.0);
  alg.reset(rows);
  SignVector sigma(inst.cols());
  for (std::size_t t = 0; t < inst.cols(); ++t) {
    state.t = t;
    const auto column = inst.column(t);
    const int s = alg.step(state, column);
    if (s != 1 && s != -1) {
      throw ContractViolation("online algorithm '" + alg.name() + "' returned " +
                              std::to_string(s) + " at column " + std::to_string(t));
    }
    sigma.set(t, s);
    for (std::size_t r = 0; r < rows; ++r) state.partial_sums[r] += s * column[r];
  }
  OnlineRun run{sigma, disc_value(inst, sigma)};
  return run;
}

int greedy_online_step(const OnlineState& state, std::span<const double> column) {
  double plus = 0.0;
  double minus = 0.0;
  for (std::size_t r = 0; r < column.size(); ++r) {
    plus = std::max(plus, std::abs(state.partial_sums[r] + column[r]));
    minus = std::max(minus, std::abs(state.partial_sums[r] - column[r]));
  }
  return minus < plus ? -1 : 1;
}

int potential_online_step(const OnlineState& state, std::span<const double> column,
                          double lambda) {
  if (!(lambda > 0.0)) throw ParameterError("potential lambda must be positive");
  // Phi(w + c) - Phi(w - c) = 2 * sum_i sinh(lambda w_i) sinh(lambda c_i); only its
  // sign matters. Terms are carried as (sign, log magnitude) and rescaled by the
  // largest magnitude before summing.
  std::vector<std::pair<int, double>> terms;
  terms.reserve(column.size());
  double peak = -INFINITY;
  for (std::size_t r = 0; r < column.size(); ++r) {
    const double a = lambda * state.partial_sums[r];
    const double b = lambda * column[r];
    if (a == 0.0 || b == 0.0) continue;
    const int sign = ((a > 0) == (b > 0)) ? 1 : -1;
    const double logmag = log_abs_sinh(a) + log_abs_sinh(b);
    terms.emplace_back(sign, logmag);
    peak = std::max(peak, logmag);
  }
  double diff = 0.0;
  for (const auto& [sign, logmag] : terms) diff += sign * std::exp(logmag - peak);
  return diff > 0.0 ? -1 : 1;
}

PotentialOnline::PotentialOnline(double lambda) : requested_(lambda), effective_(lambda) {}

void PotentialOnline::reset(std::size_t rows) {
  effective_ = requested_ > 0.0 ? requested_ : 1.0 / std::sqrt(static_cast<double>(rows));
}

int PotentialOnline::step(const OnlineState& state, std::span<const double> column) {
  return potential_online_step(state, column, effective_);
}

int RandomOnline::step(const OnlineState& state, std::span<const double> /*column*/) {
  return CounterRng(seed_).sign(Stream::kSigns, state.t, 0);
}

SignVector random_signing(const Instance& inst, std::uint64_t seed) {
  RandomOnline alg(seed);
  return run_online(alg, inst).sigma;
}

std::unique_ptr<OnlineAlgorithm> make_online_algorithm(const std::string& name, double lambda,
                                                       std::uint64_t seed) {
  if (name == "greedy") return std::make_unique<GreedyOnline>();
  if (name == "potential") {
    if (lambda < 0.0) throw ParameterError("potential lambda must be positive");
    return std::make_unique<PotentialOnline>(lambda);
  }
  if (name == "random") return std::make_unique<RandomOnline>(seed);
  throw ParameterError("unknown online algorithm '" + name + "'");
}

std::vector<std::string> online_algorithm_names() { return {"greedy", "potential", "random"}; }

}  // namespace ogplab
