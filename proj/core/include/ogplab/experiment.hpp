#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ogplab/instance.hpp"
#include "ogplab/report.hpp"

namespace ogplab {

/// Inclusive seed range; empty when last < first.
struct SeedRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;

  bool empty() const { return last < first; }
  std::uint64_t size() const { return empty() ? 0 : last - first + 1; }
};

/// Parses "A..B" (inclusive) or a single seed "A".
SeedRange parse_seed_range(std::string_view text);

/// A seeded sweep. kind is one of:
///   "online": run `algorithm` on a fresh instance per seed
///   "exact": exact discrepancy per seed
///   "sbp": |S(kappa)| per seed (gaussian)
///   "xi": |Xi| of a suffix ensemble with k resampled columns and m members (gaussian)
struct ExperimentConfig {
  std::string kind = "online";
  std::size_t rows = 4;
  std::size_t cols = 16;
  Disorder disorder = Disorder::gaussian();
  std::string algorithm = "greedy";
  double lambda = 0.0;
  double kappa = 1.0;
  std::size_t k = 1;
  std::size_t m = 2;
  SeedRange seeds{0, 0};
  std::string out_dir = ".";

  /// Checks every parameter against the preconditions of the modules it feeds.
  void validate() const;
};

Json to_json(const ExperimentConfig& c);
ExperimentConfig experiment_config_from_json(const Json& j);

struct TaskRecord {
  std::uint64_t seed = 0;
  std::string file;     // relative to out_dir
  std::string status;   // "ok" or "failed"
  std::string fnv1a64;  // hash of the file contents, empty on failure
  std::string error;
};

struct Manifest {
  ExperimentConfig config;
  std::vector<TaskRecord> tasks;
};

Json to_json(const Manifest& m);
Manifest manifest_from_json(const Json& j);

/// 64-bit FNV-1a of `bytes` as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

/// Validates, runs every seed in order, writes one result file per task and
/// out_dir/manifest.json. Nothing is written if validation fails.
Manifest run_experiment(const ExperimentConfig& config);

}  // namespace ogplab
