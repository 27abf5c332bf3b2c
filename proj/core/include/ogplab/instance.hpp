#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ogplab {

enum class DisorderKind { kGaussian, kRademacher, kBernoulli };

/// Entry law of a random matrix. `p` is meaningful only for Bernoulli.
struct Disorder {
  DisorderKind kind = DisorderKind::kGaussian;
  double p = 0.5;

  static Disorder gaussian() { return {DisorderKind::kGaussian, 0.5}; }
  static Disorder rademacher() { return {DisorderKind::kRademacher, 0.5}; }
  static Disorder bernoulli(double p) { return {DisorderKind::kBernoulli, p}; }

  bool integral() const { return kind != DisorderKind::kGaussian; }
  bool operator==(const Disorder& other) const;
};

std::string to_string(DisorderKind kind);
/// Accepts "gaussian", "rademacher", "bernoulli" (p supplied separately).
DisorderKind parse_disorder_kind(const std::string& name);

/// Dense M x n matrix, stored column-major so that column j is contiguous.
/// Integer disorders hold exact small integers (-1/+1 or 0/1); every value
/// involved is exactly representable, so sums over at most 2^53 entries stay exact.
class Instance {
 public:
  Instance() = default;
  Instance(std::size_t rows, std::size_t cols, Disorder disorder, std::uint64_t seed,
           std::vector<double> column_major);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Disorder& disorder() const { return disorder_; }
  std::uint64_t seed() const { return seed_; }

  double at(std::size_t row, std::size_t col) const { return data_[col * rows_ + row]; }
  std::span<const double> column(std::size_t col) const {
    return {data_.data() + col * rows_, rows_};
  }
  std::span<const double> data() const { return data_; }

  bool operator==(const Instance& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Disorder disorder_{};
  std::uint64_t seed_ = 0;
  std::vector<double> data_;
};

/// Draws entry (row, col) of the instance identified by (disorder, seed).
double draw_entry(const Disorder& disorder, std::uint64_t seed, std::size_t row,
                  std::size_t col);

/// Seeded instance; identical arguments give bit-identical entries.
Instance generate(std::size_t rows, std::size_t cols, Disorder disorder, std::uint64_t seed);

/// Ensemble members 2..m redraw the last k columns with their own seed; member 1 is
/// `base`. Resampled column j uses the same (row, j) coordinates as the base draw.
std::vector<Instance> resample_suffix(const Instance& base, std::size_t k, std::size_t m,
                                      std::span<const std::uint64_t> member_seeds);

/// Same as above with member seeds derived from the base seed.
std::vector<Instance> resample_suffix(const Instance& base, std::size_t k, std::size_t m);

/// Number of resampled columns for a fraction delta of n (rounded down).
std::size_t suffix_length(std::size_t cols, double delta);

/// cos(tau) * base + sin(tau) * fresh, Gaussian only, tau in [0, pi/2].
Instance interpolate(const Instance& base, const Instance& fresh, double tau);

struct SuffixEnsemble {
  std::size_t resampled = 0;  // k
  std::vector<Instance> members;
};

/// Base M_0 plus independent M_1..M_m; member i at angle tau is
/// interpolate(base, fresh[i], tau).
struct InterpolatedEnsemble {
  Instance base;
  std::vector<Instance> fresh;
  std::vector<double> angles;

  Instance member(std::size_t i, double tau) const { return interpolate(base, fresh.at(i), tau); }
};

SuffixEnsemble make_suffix_ensemble(std::size_t rows, std::size_t cols, Disorder disorder,
                                    std::uint64_t seed, std::size_t k, std::size_t m);
InterpolatedEnsemble make_interpolated_ensemble(std::size_t rows, std::size_t cols,
                                                std::uint64_t seed, std::size_t m,
                                                std::vector<double> angles);

/// Uniform angle grid {j * pi / (2Q) : 0 <= j <= Q}.
std::vector<double> default_angle_grid(std::size_t q);

}  // namespace ogplab
