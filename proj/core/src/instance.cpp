#include "ogplab/instance.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ogplab/errors.hpp"
#include "ogplab/rng.hpp"

namespace ogplab {

namespace {

void validate(std::size_t rows, std::size_t cols, const Disorder& disorder) {
  if (rows == 0 || cols == 0) {
    throw ParameterError("instance dimensions must be positive, got " + std::to_string(rows) +
                         "x" + std::to_string(cols));
  }
  if (disorder.kind == DisorderKind::kBernoulli && !(disorder.p > 0.0 && disorder.p < 1.0)) {
    throw ParameterError("bernoulli p must lie in (0,1), got " + std::to_string(disorder.p));
  }
}

}  // namespace

bool Disorder::operator==(const Disorder& other) const {
  if (kind != other.kind) return false;
  return kind != DisorderKind::kBernoulli || p == other.p;
}

std::string to_string(DisorderKind kind) {
  switch (kind) {
    case DisorderKind::kGaussian:
      return "gaussian";
    case DisorderKind::kRademacher:
      return "rademacher";
    case DisorderKind::kBernoulli:
      return "bernoulli";
  }
  return "unknown";
}

DisorderKind parse_disorder_kind(const std::string& name) {
  if (name == "gaussian") return DisorderKind::kGaussian;
  if (name == "rademacher") return DisorderKind::kRademacher;
  if (name == "bernoulli") return DisorderKind::kBernoulli;
  throw ParameterError("unknown disorder '" + name + "'");
}

Instance::Instance(std::size_t rows, std::size_t cols, Disorder disorder, std::uint64_t seed,
                   std::vector<double> column_major)
    : rows_(rows), cols_(cols), disorder_(disorder), seed_(seed), data_(std::move(column_major)) {
  validate(rows, cols, disorder);
  if (data_.size() != rows * cols) {
    throw ParameterError("instance body has " + std::to_string(data_.size()) +
                         " entries, expected " + std::to_string(rows * cols));
  }
  for (double v : data_) {
    const bool ok = disorder.kind == DisorderKind::kGaussian     ? std::isfinite(v)
                    : disorder.kind == DisorderKind::kRademacher ? (v == 1.0 || v == -1.0)
                                                                 : (v == 0.0 || v == 1.0);
    if (!ok) {
      throw ParameterError("entry " + std::to_string(v) + " is outside the support of " +
                           to_string(disorder.kind) + " disorder");
    }
  }
}

double draw_entry(const Disorder& disorder, std::uint64_t seed, std::size_t row,
                  std::size_t col) {
  const CounterRng rng(seed);
  switch (disorder.kind) {
    case DisorderKind::kGaussian:
      return rng.normal(Stream::kEntries, row, static_cast<std::uint32_t>(col));
    case DisorderKind::kRademacher:
      return rng.sign(Stream::kEntries, row, static_cast<std::uint32_t>(col));
    case DisorderKind::kBernoulli:
      return rng.uniform(Stream::kEntries, row, static_cast<std::uint32_t>(col)) < disorder.p
                 ? 1.0
                 : 0.0;
  }
  return 0.0;
}

Instance generate(std::size_t rows, std::size_t cols, Disorder disorder, std::uint64_t seed) {
  validate(rows, cols, disorder);
  std::vector<double> data(rows * cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) data[c * rows + r] = draw_entry(disorder, seed, r, c);
  }
  return Instance(rows, cols, disorder, seed, std::move(data));
}

std::vector<Instance> resample_suffix(const Instance& base, std::size_t k, std::size_t m,
                                      std::span<const std::uint64_t> member_seeds) {
  const std::size_t n = base.cols();
  if (k == 0 || k > n) {
    throw ParameterError("resampled column count k=" + std::to_string(k) + " must lie in [1, " +
                         std::to_string(n) + "]");
  }
  if (m < 2) throw ParameterError("suffix ensemble needs m >= 2 members");
  if (member_seeds.size() + 1 < m) {
    throw ParameterError("need " + std::to_string(m - 1) + " member seeds, got " +
                         std::to_string(member_seeds.size()));
  }

  std::vector<Instance> out;
  out.reserve(m);
  out.push_back(base);
  const std::size_t rows = base.rows();
  const std::size_t first_resampled = n - k;
  for (std::size_t i = 1; i < m; ++i) {
    const std::uint64_t seed = member_seeds[i - 1];
    std::vector<double> data(base.data().begin(), base.data().end());
    for (std::size_t c = first_resampled; c < n; ++c) {
      for (std::size_t r = 0; r < rows; ++r) data[c * rows + r] = draw_entry(base.disorder(), seed, r, c);
    }
    out.emplace_back(rows, n, base.disorder(), seed, std::move(data));
  }
  return out;
}

std::vector<Instance> resample_suffix(const Instance& base, std::size_t k, std::size_t m) {
  std::vector<std::uint64_t> seeds;
  for (std::size_t i = 1; i < m; ++i) seeds.push_back(mix_seed(base.seed(), i));
  return resample_suffix(base, k, m, seeds);
}

std::size_t suffix_length(std::size_t cols, double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) throw ParameterError("delta must lie in (0, 1]");
  return static_cast<std::size_t>(std::floor(delta * static_cast<double>(cols)));
}

Instance interpolate(const Instance& base, const Instance& fresh, double tau) {
  if (base.disorder().kind != DisorderKind::kGaussian ||
      fresh.disorder().kind != DisorderKind::kGaussian) {
    throw UnsupportedDisorder("interpolation is defined for gaussian disorder only");
  }
  if (base.rows() != fresh.rows() || base.cols() != fresh.cols()) {
    throw ParameterError("interpolated instances must have equal dimensions");
  }
  if (!(tau >= 0.0 && tau <= std::numbers::pi / 2)) {
    throw ParameterError("interpolation angle must lie in [0, pi/2], got " + std::to_string(tau));
  }
  // Exact endpoints: cos(pi/2) is not exactly zero in floating point.
  if (tau == 0.0) return base;
  if (tau == std::numbers::pi / 2) return fresh;
  const double c = std::cos(tau);
  const double s = std::sin(tau);
  std::vector<double> data(base.data().size());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = c * base.data()[i] + s * fresh.data()[i];
  return Instance(base.rows(), base.cols(), Disorder::gaussian(), base.seed(), std::move(data));
}

SuffixEnsemble make_suffix_ensemble(std::size_t rows, std::size_t cols, Disorder disorder,
                                    std::uint64_t seed, std::size_t k, std::size_t m) {
  return {k, resample_suffix(generate(rows, cols, disorder, seed), k, m)};
}

InterpolatedEnsemble make_interpolated_ensemble(std::size_t rows, std::size_t cols,
                                                std::uint64_t seed, std::size_t m,
                                                std::vector<double> angles) {
  if (m < 1) throw ParameterError("ensemble needs at least one member");
  for (double tau : angles) {
    if (!(tau >= 0.0 && tau <= std::numbers::pi / 2)) {
      throw ParameterError("interpolation angle outside [0, pi/2]");
    }
  }
  InterpolatedEnsemble ens;
  ens.base = generate(rows, cols, Disorder::gaussian(), seed);
  for (std::size_t i = 1; i <= m; ++i) {
    ens.fresh.push_back(generate(rows, cols, Disorder::gaussian(), mix_seed(seed, i)));
  }
  ens.angles = std::move(angles);
  return ens;
}

std::vector<double> default_angle_grid(std::size_t q) {
  if (q == 0) throw ParameterError("angle grid resolution Q must be positive");
  std::vector<double> grid;
  grid.reserve(q + 1);
  for (std::size_t j = 0; j <= q; ++j) {
    grid.push_back(j == q ? std::numbers::pi / 2
                          : static_cast<double>(j) * std::numbers::pi / (2.0 * static_cast<double>(q)));
  }
  return grid;
}

}  // namespace ogplab
