#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ogplab/discrepancy.hpp"
#include "ogplab/instance.hpp"
#include "ogplab/sign_vector.hpp"

namespace ogplab {

/// What an online algorithm may look at before choosing sign t: the index t
/// (0-based) and the exact signed prefix sum of columns 0..t-1.
struct OnlineState {
  std::size_t t = 0;
  std::vector<double> partial_sums;
};

/// A column-at-a-time signing rule. The harness hands over one column per
/// call and never exposes later columns, so sigma(t) depends on columns 0..t only.
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;
  virtual std::string name() const = 0;
  /// Called once before the first column of a run.
  virtual void reset(std::size_t /*rows*/) {}
  virtual int step(const OnlineState& state, std::span<const double> column) = 0;
};

struct OnlineRun {
  SignVector sigma;
  DiscrepancyResult disc;
};

/// Feeds the columns of `inst` one at a time and records the returned signs.
/// Throws ContractViolation if a step returns anything but -1 or +1.
OnlineRun run_online(OnlineAlgorithm& alg, const Instance& inst);

/// Sign minimizing ||partial_sums + s * column||_inf; +1 on ties.
int greedy_online_step(const OnlineState& state, std::span<const double> column);

/// Sign minimizing Phi(partial_sums + s * column), Phi(w) = sum_i cosh(lambda * w_i);
/// +1 on ties. The comparison is made in log space so it never overflows.
int potential_online_step(const OnlineState& state, std::span<const double> column,
                          double lambda);

class GreedyOnline final : public OnlineAlgorithm {
 public:
  std::string name() const override { return "greedy"; }
  int step(const OnlineState& state, std::span<const double> column) override {
    return greedy_online_step(state, column);
  }
};

/// Hyperbolic-cosine potential minimizer. A non-positive lambda selects the
/// default 1/sqrt(M) at reset time.
class PotentialOnline final : public OnlineAlgorithm {
 public:
  explicit PotentialOnline(double lambda = 0.0);
  std::string name() const override { return "potential"; }
  void reset(std::size_t rows) override;
  int step(const OnlineState& state, std::span<const double> column) override;
  double lambda() const { return effective_; }

 private:
  double requested_;
  double effective_;
};

/// Ignores the data; sign t is a fair coin drawn from (seed, t).
class RandomOnline final : public OnlineAlgorithm {
 public:
  explicit RandomOnline(std::uint64_t seed) : seed_(seed) {}
  std::string name() const override { return "random"; }
  int step(const OnlineState& state, std::span<const double> column) override;

 private:
  std::uint64_t seed_;
};

/// I.i.d. uniform signs from the seeded generator.
SignVector random_signing(const Instance& inst, std::uint64_t seed);

/// Builds "greedy", "potential" or "random"; `seed` is used by "random" only.
std::unique_ptr<OnlineAlgorithm> make_online_algorithm(const std::string& name, double lambda,
                                                       std::uint64_t seed);
std::vector<std::string> online_algorithm_names();

}  // namespace ogplab
