#include "ogplab/discrepancy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "ogplab/errors.hpp"

namespace ogplab {

// ---------------------------------------------------------------------------
// SignVector

SignVector::SignVector(std::size_t n, std::int8_t fill) : signs_(n, fill) {
  if (fill != 1 && fill != -1) throw ParameterError("sign fill must be +1 or -1");
}

SignVector::SignVector(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
  for (auto s : signs_) {
    if (s != 1 && s != -1) throw ParameterError("sign vector entries must be +1 or -1");
  }
}

SignVector SignVector::parse(std::string_view text) {
  std::vector<std::int8_t> signs;
  signs.reserve(text.size());
  for (char ch : text) {
    if (ch == '+') {
      signs.push_back(1);
    } else if (ch == '-') {
      signs.push_back(-1);
    } else {
      throw ParameterError("sign vector text may contain only '+' and '-'");
    }
  }
  return SignVector(std::move(signs));
}

SignVector SignVector::from_bits(std::uint64_t bits, std::size_t n) {
  SignVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((bits >> i) & 1u) v.signs_[i] = -1;
  }
  return v;
}

void SignVector::set(std::size_t i, int sign) {
  if (sign != 1 && sign != -1) throw ParameterError("sign must be +1 or -1");
  signs_.at(i) = static_cast<std::int8_t>(sign);
}

SignVector SignVector::negated() const {
  SignVector out = *this;
  for (auto& s : out.signs_) s = static_cast<std::int8_t>(-s);
  return out;
}

std::string SignVector::str() const {
  std::string s(signs_.size(), '+');
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] < 0) s[i] = '-';
  }
  return s;
}

std::strong_ordering SignVector::operator<=>(const SignVector& other) const {
  // '+' (1) sorts before '-' (-1), i.e. descending by value.
  const std::size_t n = std::min(size(), other.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (signs_[i] != other.signs_[i]) {
      return signs_[i] > other.signs_[i] ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
  }
  return size() <=> other.size();
}

std::size_t hamming_distance(const SignVector& a, const SignVector& b) {
  if (a.size() != b.size()) throw ParameterError("hamming distance of vectors of unequal length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

double overlap(const SignVector& a, const SignVector& b) {
  const auto n = static_cast<double>(a.size());
  return 1.0 - 2.0 * static_cast<double>(hamming_distance(a, b)) / n;
}

// ---------------------------------------------------------------------------
// Evaluation and Gray-code enumeration

namespace {

void require_length(const Instance& inst, const SignVector& sigma) {
  if (sigma.size() != inst.cols()) {
    throw ParameterError("sign vector length " + std::to_string(sigma.size()) +
                         " does not match instance with " + std::to_string(inst.cols()) +
                         " columns");
  }
}

void require_capacity(const Instance& inst, std::size_t max_n) {
  if (inst.cols() > max_n) {
    throw CapacityError("exhaustive enumeration refused: n=" + std::to_string(inst.cols()) +
                        " exceeds max_n=" + std::to_string(max_n));
  }
  if (inst.cols() > 62) throw CapacityError("exhaustive enumeration supports n <= 62");
}

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Incremental sums drift for real entries; anything this close to a decision
// boundary is re-evaluated from scratch. Integer instances are exact.
double drift_tolerance(const Instance& inst, double scale) {
  return inst.disorder().integral() ? 0.0 : 1e-9 * std::max(1.0, scale);
}

constexpr std::uint64_t kResyncPeriod = std::uint64_t{1} << 16;

// Visits every sigma with sigma(0) = +1 in reflected Gray-code order.
// `visit(sigma, row_sums)` returns false to stop early.
template <typename Visit>
void gray_walk(const Instance& inst, Visit&& visit) {
  const std::size_t n = inst.cols();
  const std::size_t rows = inst.rows();
  SignVector sigma(n);
  std::vector<double> sums(rows, 0.0);
  auto resync = [&] {
    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::size_t c = 0; c < n; ++c) {
      const auto col = inst.column(c);
      const double s = sigma[c];
      for (std::size_t r = 0; r < rows; ++r) sums[r] += s * col[r];
    }
  };
  resync();
  if (!visit(static_cast<const SignVector&>(sigma), static_cast<const std::vector<double>&>(sums))) {
    return;
  }
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const std::size_t j = static_cast<std::size_t>(std::countr_zero(i)) + 1;
    sigma.flip(j);
    if (!inst.disorder().integral() && i % kResyncPeriod == 0) {
      resync();
    } else {
      const auto col = inst.column(j);
      const double twice = 2.0 * sigma[j];
      for (std::size_t r = 0; r < rows; ++r) sums[r] += twice * col[r];
    }
    if (!visit(static_cast<const SignVector&>(sigma), static_cast<const std::vector<double>&>(sums))) {
      return;
    }
  }
}

}  // namespace

DiscrepancyResult disc_value(const Instance& inst, const SignVector& sigma) {
  require_length(inst, sigma);
  DiscrepancyResult out;
  out.row_sums.assign(inst.rows(), 0.0);
  for (std::size_t c = 0; c < inst.cols(); ++c) {
    const auto col = inst.column(c);
    const double s = sigma[c];
    for (std::size_t r = 0; r < inst.rows(); ++r) out.row_sums[r] += s * col[r];
  }
  out.value = sup_norm(out.row_sums);
  out.argmin = sigma;
  return out;
}

DiscrepancyResult exact_discrepancy(const Instance& inst, std::size_t max_n) {
  require_capacity(inst, max_n);
  double best = INFINITY;
  SignVector best_sigma;
  gray_walk(inst, [&](const SignVector& sigma, const std::vector<double>& sums) {
    const double v = sup_norm(sums);
    if (v < best) {
      best = v;
      best_sigma = sigma;
    }
    return best > 0.0;
  });
  return disc_value(inst, best_sigma);
}

bool sbp_membership(const Instance& inst, const SignVector& sigma, double kappa) {
  if (!(kappa > 0.0)) throw ParameterError("kappa must be positive");
  if (inst.disorder().kind != DisorderKind::kGaussian) {
    throw UnsupportedDisorder("the symmetric binary perceptron uses gaussian patterns");
  }
  require_length(inst, sigma);
  return disc_value(inst, sigma).value <= kappa * std::sqrt(static_cast<double>(inst.cols()));
}

std::vector<SignVector> solutions_below(const Instance& inst, double threshold,
                                        std::size_t max_n) {
  require_capacity(inst, max_n);
  std::vector<SignVector> found;
  if (threshold < 0.0) return found;
  const double tol = drift_tolerance(inst, threshold);
  gray_walk(inst, [&](const SignVector& sigma, const std::vector<double>& sums) {
    double v = sup_norm(sums);
    if (v <= threshold + tol) {
      if (tol > 0.0) v = disc_value(inst, sigma).value;
      if (v <= threshold) {
        found.push_back(sigma);
        found.push_back(sigma.negated());
      }
    }
    return true;
  });
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<SignVector> enumerate_solutions(const Instance& inst, double kappa,
                                            std::size_t max_n) {
  if (!(kappa > 0.0)) throw ParameterError("kappa must be positive");
  return solutions_below(inst, kappa * std::sqrt(static_cast<double>(inst.cols())), max_n);
}

}  // namespace ogplab
