#include "ogplab/landscape.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "ogplab/discrepancy.hpp"
#include "ogplab/errors.hpp"
#include "ogplab/online.hpp"
#include "ogplab/rng.hpp"

namespace ogplab {

std::uint64_t Histogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

Histogram overlap_histogram(std::span<const SignVector> solutions, std::size_t bins) {
  if (solutions.size() < 2) throw ParameterError("overlap histogram needs at least 2 solutions");
  if (bins == 0) throw ParameterError("histogram needs at least one bin");
  const std::size_t n = solutions.front().size();
  for (const auto& s : solutions) {
    if (s.size() != n) throw ParameterError("solutions have different lengths");
  }
  Histogram h;
  h.counts.assign(bins, 0);
  for (std::size_t b = 0; b < bins; ++b) {
    h.bin_lo.push_back(-1.0 + 2.0 * static_cast<double>(b) / static_cast<double>(bins));
    h.bin_hi.push_back(-1.0 + 2.0 * static_cast<double>(b + 1) / static_cast<double>(bins));
  }
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    for (std::size_t j = i + 1; j < solutions.size(); ++j) {
      // overlap = 1 - 2d/n, so (overlap + 1) / 2 = (n - d) / n; binned in integers.
      const std::size_t d = hamming_distance(solutions[i], solutions[j]);
      const std::size_t b = std::min(bins - 1, (n - d) * bins / n);
      ++h.counts[b];
    }
  }
  return h;
}

void OgpWindow::validate() const {
  if (!(eta >= 0.0 && eta <= beta && beta <= 1.0 && beta - eta >= -1.0)) {
    throw ParameterError("overlap window needs 0 <= eta <= beta <= 1");
  }
  if (!(K > 0.0)) throw ParameterError("discrepancy bound K must be positive");
  if (m < 2) throw ParameterError("tuple size m must be at least 2");
}

bool OgpWindow::admits(std::size_t hamming, std::size_t n) const {
  constexpr double kSlack = 1e-12;
  const double o = 1.0 - 2.0 * static_cast<double>(hamming) / static_cast<double>(n);
  return o >= beta - eta - kSlack && o <= beta + kSlack;
}

// ---------------------------------------------------------------------------
// Suffix-resampled ensembles

namespace {

struct XiLayout {
  std::size_t n = 0;
  std::size_t rows = 0;
  std::size_t prefix = 0;  // shared coordinates n - k
  std::size_t suffix = 0;  // k
};

XiLayout check_suffix_ensemble(const SuffixEnsemble& ens, std::size_t max_n) {
  if (ens.members.empty()) throw ParameterError("ensemble has no members");
  const Instance& base = ens.members.front();
  XiLayout lay{base.cols(), base.rows(), 0, ens.resampled};
  if (lay.suffix == 0 || lay.suffix > lay.n) throw ParameterError("resampled count k must lie in [1, n]");
  if (lay.n > max_n) {
    throw CapacityError("tuple search refused: n=" + std::to_string(lay.n) + " exceeds max_n=" +
                        std::to_string(max_n));
  }
  if (lay.n > 62) throw CapacityError("tuple search supports n <= 62");
  lay.prefix = lay.n - lay.suffix;
  const double table_entries = std::ldexp(static_cast<double>(lay.rows), static_cast<int>(lay.suffix));
  if (table_entries > static_cast<double>(std::size_t{1} << 27)) {
    throw CapacityError("suffix table of 2^k * M entries is too large");
  }
  for (const auto& inst : ens.members) {
    if (inst.rows() != lay.rows || inst.cols() != lay.n || !(inst.disorder() == base.disorder())) {
      throw ParameterError("ensemble members differ in shape or disorder");
    }
    for (std::size_t c = 0; c < lay.prefix; ++c) {
      const auto a = inst.column(c);
      const auto b = base.column(c);
      if (!std::equal(a.begin(), a.end(), b.begin())) {
        throw ParameterError("ensemble members do not share the first n - k columns");
      }
    }
  }
  return lay;
}

// Bit b of a prefix index is coordinate prefix-1-b, bit b of a suffix index is
// coordinate n-1-b; a set bit means -1. Integer order is then lexicographic order.
SignVector compose(const XiLayout& lay, std::uint64_t prefix_bits, std::uint64_t suffix_bits) {
  SignVector s(lay.n);
  for (std::size_t b = 0; b < lay.prefix; ++b) {
    if ((prefix_bits >> b) & 1u) s.set(lay.prefix - 1 - b, -1);
  }
  for (std::size_t b = 0; b < lay.suffix; ++b) {
    if ((suffix_bits >> b) & 1u) s.set(lay.n - 1 - b, -1);
  }
  return s;
}

// Row sums of every suffix sign pattern, indexed by suffix bits.
std::vector<double> suffix_table(const XiLayout& lay, const Instance& inst) {
  const std::size_t count = std::size_t{1} << lay.suffix;
  std::vector<double> table(count * lay.rows, 0.0);
  for (std::size_t c = lay.prefix; c < lay.n; ++c) {
    const auto col = inst.column(c);
    for (std::size_t r = 0; r < lay.rows; ++r) table[r] += col[r];
  }
  for (std::size_t s = 1; s < count; ++s) {
    const auto b = static_cast<std::size_t>(std::countr_zero(s));
    const std::size_t parent = s ^ (std::size_t{1} << b);
    const auto col = inst.column(lay.n - 1 - b);
    for (std::size_t r = 0; r < lay.rows; ++r) {
      table[s * lay.rows + r] = table[parent * lay.rows + r] - 2.0 * col[r];
    }
  }
  return table;
}

// Walks prefixes in lexicographic order keeping the shared prefix row sums;
// calls visit(prefix_bits, sums) and stops when it returns false.
template <typename Visit>
void prefix_walk(const XiLayout& lay, const Instance& base, Visit&& visit) {
  std::vector<double> sums(lay.rows, 0.0);
  SignVector signs(lay.prefix == 0 ? 1 : lay.prefix);
  auto resync = [&] {
    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::size_t c = 0; c < lay.prefix; ++c) {
      const auto col = base.column(c);
      for (std::size_t r = 0; r < lay.rows; ++r) sums[r] += signs[c] * col[r];
    }
  };
  resync();
  const std::uint64_t count = std::uint64_t{1} << lay.prefix;
  const bool integral = base.disorder().integral();
  for (std::uint64_t x = 0; x < count; ++x) {
    if (x > 0) {
      // x-1 -> x clears trailing ones and sets the next bit.
      const auto top = static_cast<std::size_t>(std::countr_zero(x));
      for (std::size_t b = 0; b <= top; ++b) {
        const std::size_t c = lay.prefix - 1 - b;
        signs.flip(c);
        const auto col = base.column(c);
        const double twice = 2.0 * signs[c];
        for (std::size_t r = 0; r < lay.rows; ++r) sums[r] += twice * col[r];
      }
      if (!integral && (x & 0xFFFF) == 0) resync();
    }
    if (!visit(x, static_cast<const std::vector<double>&>(sums))) return;
  }
}

struct XiScanner {
  const SuffixEnsemble& ens;
  XiLayout lay;
  double threshold;
  double tol;
  std::vector<std::vector<double>> tables;

  XiScanner(const SuffixEnsemble& e, double thr, std::size_t max_n)
      : ens(e), lay(check_suffix_ensemble(e, max_n)), threshold(thr) {
    tol = e.members.front().disorder().integral() ? 0.0 : 1e-9 * std::max(1.0, thr);
    for (const auto& inst : ens.members) tables.push_back(suffix_table(lay, inst));
  }

  bool admissible(std::size_t member, std::uint64_t prefix_bits, std::uint64_t s,
                  const std::vector<double>& prefix_sums) const {
    const double* row = tables[member].data() + s * lay.rows;
    double v = 0.0;
    for (std::size_t r = 0; r < lay.rows; ++r) v = std::max(v, std::abs(prefix_sums[r] + row[r]));
    if (v > threshold + tol) return false;
    if (tol == 0.0) return true;
    return disc_value(ens.members[member], compose(lay, prefix_bits, s)).value <= threshold;
  }
};

}  // namespace

std::optional<TupleCertificate> search_xi(const SuffixEnsemble& ens, double threshold,
                                          std::size_t max_n) {
  const XiScanner scan(ens, threshold, max_n);
  const std::size_t m = ens.members.size();
  const std::uint64_t suffixes = std::uint64_t{1} << scan.lay.suffix;
  std::optional<TupleCertificate> result;
  std::vector<std::uint64_t> chosen(m);
  prefix_walk(scan.lay, ens.members.front(), [&](std::uint64_t x, const std::vector<double>& sums) {
    for (std::size_t i = 0; i < m; ++i) {
      std::uint64_t s = 0;
      while (s < suffixes && !scan.admissible(i, x, s, sums)) ++s;
      if (s == suffixes) return true;
      chosen[i] = s;
    }
    TupleCertificate cert;
    cert.threshold = threshold;
    cert.shared_prefix = scan.lay.prefix;
    for (std::size_t i = 0; i < m; ++i) {
      cert.members.push_back(compose(scan.lay, x, chosen[i]));
      cert.disc_values.push_back(disc_value(ens.members[i], cert.members.back()).value);
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) cert.overlaps.push_back(overlap(cert.members[i], cert.members[j]));
    }
    result = std::move(cert);
    return false;
  });
  return result;
}

std::uint64_t count_xi(const SuffixEnsemble& ens, double threshold, std::size_t max_n) {
  const XiScanner scan(ens, threshold, max_n);
  const std::size_t m = ens.members.size();
  if (scan.lay.n + scan.lay.suffix * (m - 1) > 63) {
    throw CapacityError("|Xi| may exceed 2^63; reduce n, k or m");
  }
  const std::uint64_t suffixes = std::uint64_t{1} << scan.lay.suffix;
  std::uint64_t total = 0;
  prefix_walk(scan.lay, ens.members.front(), [&](std::uint64_t x, const std::vector<double>& sums) {
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < m && product > 0; ++i) {
      std::uint64_t admissible = 0;
      for (std::uint64_t s = 0; s < suffixes; ++s) admissible += scan.admissible(i, x, s, sums);
      product *= admissible;
    }
    total += product;
    return true;
  });
  return total;
}

std::optional<TupleCertificate> search_xi_sbp(const SuffixEnsemble& ens, double kappa,
                                              std::size_t max_n) {
  if (!(kappa > 0.0)) throw ParameterError("kappa must be positive");
  if (ens.members.empty()) throw ParameterError("ensemble has no members");
  if (ens.members.front().disorder().kind != DisorderKind::kGaussian) {
    throw UnsupportedDisorder("the SBP tuple search uses gaussian ensembles");
  }
  const double n = static_cast<double>(ens.members.front().cols());
  return search_xi(ens, kappa * std::sqrt(n), max_n);
}

std::optional<TupleCertificate> search_xi_disc(const SuffixEnsemble& ens, double c_u,
                                               std::size_t max_n) {
  if (!(c_u > 0.0)) throw ParameterError("c_u must be positive");
  if (ens.members.empty()) throw ParameterError("ensemble has no members");
  const Instance& base = ens.members.front();
  if (!base.disorder().integral()) {
    throw UnsupportedDisorder("the discrepancy tuple search uses rademacher or bernoulli ensembles");
  }
  if (ens.resampled != base.rows()) {
    throw ParameterError("the discrepancy tuple search resamples exactly k = M columns");
  }
  return search_xi(ens, c_u * std::sqrt(static_cast<double>(base.rows())), max_n);
}

// ---------------------------------------------------------------------------
// Interpolated ensembles

std::size_t default_ogp_max_n(std::size_t m) {
  if (m <= 2) return 18;
  if (m == 3) return 14;
  return 12;
}

namespace {

std::uint64_t to_bits(const SignVector& s) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) bits |= std::uint64_t{1} << i;
  }
  return bits;
}

struct Candidate {
  SignVector sigma;
  std::uint64_t bits;
  std::size_t tau_index;
};

}  // namespace

std::optional<TupleCertificate> search_ogp_tuples(const InterpolatedEnsemble& ens,
                                                  const OgpWindow& window, std::size_t max_n) {
  window.validate();
  if (ens.angles.empty()) throw ParameterError("angle grid is empty");
  if (ens.fresh.size() != window.m) {
    throw ParameterError("ensemble has " + std::to_string(ens.fresh.size()) +
                         " members but the window asks for m=" + std::to_string(window.m));
  }
  if (ens.base.disorder().kind != DisorderKind::kGaussian) {
    throw UnsupportedDisorder("interpolated ensembles are gaussian");
  }
  const std::size_t n = ens.base.cols();
  const std::size_t cap = max_n == 0 ? default_ogp_max_n(window.m) : max_n;
  if (n > cap) {
    throw CapacityError("ensemble OGP search refused: n=" + std::to_string(n) + " exceeds max_n=" +
                        std::to_string(cap));
  }

  // Per member: union over the grid of solutions, keeping the first angle that works.
  std::vector<std::vector<Candidate>> pools(window.m);
  for (std::size_t i = 0; i < window.m; ++i) {
    std::map<SignVector, std::size_t> first_tau;
    for (std::size_t a = 0; a < ens.angles.size(); ++a) {
      for (auto& s : solutions_below(ens.member(i, ens.angles[a]), window.K, cap)) {
        first_tau.emplace(std::move(s), a);
      }
    }
    if (first_tau.empty()) return std::nullopt;
    for (auto& [sigma, a] : first_tau) pools[i].push_back({sigma, to_bits(sigma), a});
  }

  std::vector<const Candidate*> stack(window.m, nullptr);
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == window.m) return true;
    for (const auto& cand : pools[depth]) {
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const auto d = static_cast<std::size_t>(std::popcount(cand.bits ^ stack[j]->bits));
        ok = window.admits(d, n);
      }
      if (!ok) continue;
      stack[depth] = &cand;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;

  TupleCertificate cert;
  cert.threshold = window.K;
  for (std::size_t i = 0; i < window.m; ++i) {
    const double tau = ens.angles[stack[i]->tau_index];
    cert.members.push_back(stack[i]->sigma);
    cert.taus.push_back(tau);
    cert.disc_values.push_back(disc_value(ens.member(i, tau), stack[i]->sigma).value);
  }
  for (std::size_t i = 0; i < window.m; ++i) {
    for (std::size_t j = i + 1; j < window.m; ++j) cert.overlaps.push_back(overlap(cert.members[i], cert.members[j]));
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Stability

SigningAlgorithm signing_algorithm(const std::string& name, double lambda) {
  // Validate eagerly so a bad name fails before any trial runs.
  (void)make_online_algorithm(name, lambda, 0);
  return [name, lambda](const Instance& inst, std::uint64_t omega) {
    auto alg = make_online_algorithm(name, lambda, omega);
    return run_online(*alg, inst).sigma;
  };
}

StabilityReport stability_probe(const SigningAlgorithm& alg, const StabilityConfig& config) {
  if (!(config.rho >= 0.0 && config.rho <= 1.0)) throw ParameterError("rho must lie in [0, 1]");
  if (config.trials == 0) throw ParameterError("stability probe needs at least one trial");
  const double tau = std::acos(config.rho);
  StabilityReport rep;
  rep.config = config;
  std::size_t successes = 0;
  for (std::size_t t = 0; t < config.trials; ++t) {
    const Instance a = generate(config.rows, config.cols, Disorder::gaussian(), mix_seed(config.seed, 3 * t));
    const Instance fresh =
        generate(config.rows, config.cols, Disorder::gaussian(), mix_seed(config.seed, 3 * t + 1));
    const Instance b = interpolate(a, fresh, tau);
    const std::uint64_t omega_a = mix_seed(config.seed ^ 0x5bd1e995u, 3 * t + 2);
    const std::uint64_t omega_b =
        config.omega == OmegaMode::kShared ? omega_a : mix_seed(omega_a, 1);
    const SignVector sa = alg(a, omega_a);
    const SignVector sb = alg(b, omega_b);
    rep.hamming.push_back(hamming_distance(sa, sb));
    successes += disc_value(a, sa).value <= config.K;
    successes += disc_value(b, sb).value <= config.K;
    double frob = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
      const double d = a.data()[i] - b.data()[i];
      frob += d * d;
    }
    rep.frobenius.push_back(std::sqrt(frob));
  }

  const auto trials = static_cast<double>(config.trials);
  rep.success_rate = static_cast<double>(successes) / (2.0 * trials);
  double mean = 0.0;
  for (auto d : rep.hamming) mean += static_cast<double>(d);
  mean /= trials;
  double var = 0.0;
  for (auto d : rep.hamming) var += (static_cast<double>(d) - mean) * (static_cast<double>(d) - mean);
  var = config.trials > 1 ? var / (trials - 1.0) : 0.0;
  rep.mean_hamming = mean;
  rep.se_hamming = std::sqrt(var / trials);

  std::vector<std::size_t> sorted = rep.hamming;
  std::sort(sorted.begin(), sorted.end());
  rep.quantile_levels = {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 1.0};
  for (double q : rep.quantile_levels) {
    const auto idx = static_cast<std::size_t>(std::ceil(q * (trials - 1.0)));
    rep.quantiles.push_back(static_cast<double>(sorted[idx]));
  }

  double fmean = 0.0;
  for (double f : rep.frobenius) fmean += f;
  fmean /= trials;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t t = 0; t < config.trials; ++t) {
    const double dx = rep.frobenius[t] - fmean;
    sxx += dx * dx;
    sxy += dx * (static_cast<double>(rep.hamming[t]) - mean);
  }
  if (sxx > 1e-12 * std::max(1.0, fmean * fmean)) {
    rep.fit_L = sxy / sxx;
    rep.fit_f = mean - rep.fit_L * fmean;
  } else {
    rep.fit_L = 0.0;
    rep.fit_f = static_cast<double>(sorted.back());
  }
  return rep;
}

}  // namespace ogplab
