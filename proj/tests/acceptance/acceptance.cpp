// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ogplab/ogplab.hpp"
#include "oracles.hpp"

using namespace ogplab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& x) {
  const auto n = static_cast<double>(x.size());
  double s = 0.0;
  for (double v : x) s += v;
  const double mean = s / n;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

Instance splice(const Instance& a, const Instance& b, std::size_t t) {
  std::vector<double> data(a.data().begin(), a.data().end());
  for (std::size_t j = t * a.rows(); j < data.size(); ++j) data[j] = b.data()[j];
  return Instance(a.rows(), a.cols(), a.disorder(), 0, std::move(data));
}

// 1
Outcome alpha_identities() {
  const double k_half = 0.6744897501960817;   // P[|Z| <= k] = 1/2
  const double k_quarter = 0.31863936396437514;  // P[|Z| <= k] = 1/4
  const double a1 = alpha_c(k_half);
  const double a2 = alpha_c(k_quarter);
  const double a3 = alpha_c(1.0);
  const double oracle = -1.0 / std::log2(std::erf(1.0 / std::sqrt(2.0)));
  const bool ok = std::abs(a1 - 1.0) <= 1e-12 && std::abs(a2 - 0.5) <= 1e-12 &&
                  std::abs(a3 - 1.8157) <= 1e-3 && std::abs(a3 - oracle) <= 1e-12;
  return {ok, fmt("alpha_c = %.15f, %.15f, %.6f", a1, a2, a3)};
}

// 2
Outcome upsilon_anchor() {
  const double l2 = std::log2(2.0 * std::numbers::pi);
  double worst = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double k = 0.24 * i / 50.0;
    const double target = -k * k * (2.0 * l2 - 4.0);
    const double v = upsilon(4.0 * k * k, 4.0 * k * k, k);
    worst = std::max(worst, std::abs(v - target) / std::abs(target));
  }
  return {worst <= 1e-10, fmt("max relative error %.3e over 50 kappa", worst)};
}

// 3
Outcome ogp_negativity() {
  const auto p = find_ogp_params(1.0, 0.5, 1.0);
  double worst_free = -INFINITY;
  double worst_lemma = -INFINITY;
  for (int e = 8; e <= 20; ++e) {
    const double M = std::ldexp(1.0, e);
    for (int i = 0; i < 10; ++i) {
      const double c = 0.5 + 0.5 * i / 9.0;
      const double n = c * M * e;
      const double scale = M * e;
      worst_free = std::max(worst_free, psi_disc(p.m, p.beta, p.eta, p.c, n, M, 1.0).value / scale);
      worst_lemma = std::max(
          worst_lemma, psi_disc(p.m, p.beta, p.eta, p.c, n, M, 1.0, CountingForm::kCountingLemma).value / scale);
    }
  }
  return {worst_free < 0.0 && worst_lemma < 0.0,
          fmt("m*=%zu beta*=%.6f; max psi/(M log2 M) = %.4f (lemma form %.4f) over 130 points", p.m, p.beta,
              worst_free, worst_lemma)};
}

// 4
Outcome determinant_bound() {
  const CounterRng rng(20240401);
  int violations = 0;
  double tightest = INFINITY;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    const std::size_t m = 2 + t % 7;
    const double beta = 0.05 + 0.9 * rng.uniform(Stream::kTest, t, 0);
    CovarianceSpec spec{m, beta, (1.0 - beta) / (2.0 * static_cast<double>(m)), {}};
    for (std::size_t q = 0; q < m * (m - 1) / 2; ++q) {
      spec.eta_vec.push_back(spec.eta * rng.uniform(Stream::kTest, t, static_cast<std::uint32_t>(q + 1)));
    }
    const auto a = covariance_analysis(spec);
    if (!a.positive_definite || a.determinant < a.det_lower_bound) ++violations;
    if (a.positive_definite) tightest = std::min(tightest, a.determinant / a.det_lower_bound);
  }
  return {violations == 0, fmt("%d violations; min det / bound = %.3f", violations, tightest)};
}

// 5
Outcome box_bound() {
  const CounterRng rng(77);
  int violations = 0;
  double max_ratio = 0.0;
  double max_z = -INFINITY;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const std::size_t m = 1 + t % 4;
    const double beta = 0.1 + 0.8 * rng.uniform(Stream::kTest, t, 0);
    CovarianceSpec spec{m, beta, (1.0 - beta) / (2.0 * static_cast<double>(m)), {}};
    for (std::size_t q = 0; q < m * (m - 1) / 2; ++q) {
      spec.eta_vec.push_back(spec.eta * rng.uniform(Stream::kTest, t, static_cast<std::uint32_t>(q + 1)));
    }
    const double K = 0.5 + 1.5 * rng.uniform(Stream::kTest, t, 100);
    const double n = 4.0 + std::floor(96.0 * rng.uniform(Stream::kTest, t, 101));
    const double bound = gaussian_box_bound(spec, K, n);
    const auto mc = mc_box_probability(spec.materialize(), K / std::sqrt(n), 1'000'000, 1000 + t);
    if (mc.estimate > bound + 3.0 * mc.std_error) ++violations;
    max_ratio = std::max(max_ratio, mc.estimate / bound);
    if (mc.std_error > 0.0) max_z = std::max(max_z, (mc.estimate - bound) / mc.std_error);
  }
  return {violations == 0, fmt("%d violations over 50 specs; max estimate / bound = %.4f, max (estimate - bound) / SE = %.2f",
                               violations, max_ratio, max_z)};
}

// 6
Outcome berry_esseen() {
  const std::size_t M = 100;
  const double sq = std::sqrt(static_cast<double>(M));
  const double rad = berry_esseen_bound(2.0 * kCu * sq, M);
  double bern_worst = 0.0;
  for (double p : {0.1, 0.3, 0.5, 0.9}) {
    bern_worst = std::max(bern_worst, std::abs(berry_esseen_bound(2.0 * c_u_prime(p) * sq, M, p) - 0.25));
  }
  const bool exact = std::abs(rad - 0.25) <= 1e-15 && bern_worst <= 1e-15;

  const CounterRng rng(606);
  std::vector<int> weights(M);
  for (std::size_t i = 0; i < M; ++i) weights[i] = rng.sign(Stream::kTest, 0, static_cast<std::uint32_t>(i));
  const int trials = 100'000;
  std::vector<int> sums(trials);
  for (int t = 0; t < trials; ++t) {
    int s = 0;
    for (std::size_t i = 0; i < M; ++i) {
      s += weights[i] * rng.sign(Stream::kProbe, static_cast<std::uint64_t>(t), static_cast<std::uint32_t>(i));
    }
    sums[static_cast<std::size_t>(t)] = s;
  }
  int exceed = 0;
  double max_gap = -INFINITY;
  for (std::uint64_t q = 0; q < 40; ++q) {
    const double len = (q < 10 ? 2.0 * kCu : 0.05 + 0.25 * rng.uniform(Stream::kTest, q, 1)) * sq;
    const double centre = -10.0 + 20.0 * rng.uniform(Stream::kTest, q, 2);
    int hits = 0;
    for (int s : sums) hits += (s >= centre - len / 2 && s <= centre + len / 2);
    const double freq = static_cast<double>(hits) / trials;
    const double bound = berry_esseen_bound(len, M);
    if (freq > bound) ++exceed;
    max_gap = std::max(max_gap, freq - bound);
  }
  return {exact && exceed == 0,
          fmt("bound(2C_u sqrt M) = %.17g; bernoulli max |b - 1/4| = %.1e; %d of 40 intervals exceed, "
              "max freq - bound = %.4f",
              rad, bern_worst, exceed, max_gap)};
}

// 7
Outcome first_moment() {
  const std::size_t n = 14, M = 4, k = 4;
  const int seeds = 2000;
  std::vector<double> s_counts, xi_counts;
  for (int s = 0; s < seeds; ++s) {
    const auto inst = generate(M, n, Disorder::gaussian(), 900'000 + static_cast<std::uint64_t>(s));
    s_counts.push_back(static_cast<double>(enumerate_solutions(inst, 1.0).size()));
    const auto ens = make_suffix_ensemble(M, n, Disorder::gaussian(), 950'000 + static_cast<std::uint64_t>(s), k, 2);
    xi_counts.push_back(static_cast<double>(count_xi(ens, std::sqrt(static_cast<double>(n)))));
  }
  const double s_target = std::ldexp(1.0, n) * std::pow(normal_interval_probability(1.0), M);
  const double xi_target = expected_xi_count(n, M, k, 2, 1.0).value;
  const auto s = mean_se(s_counts);
  const auto x = mean_se(xi_counts);
  const double zs = (s.mean - s_target) / s.se;
  const double zx = (x.mean - xi_target) / x.se;
  return {std::abs(zs) <= 3.0 && std::abs(zx) <= 3.0,
          fmt("|S|: mean %.1f vs %.1f (z=%.2f); |Xi|: mean %.1f vs %.1f (z=%.2f)", s.mean, s_target, zs, x.mean,
              xi_target, zx)};
}

// 8
Outcome exact_oracle() {
  int mismatches = 0;
  const Disorder laws[] = {Disorder::gaussian(), Disorder::rademacher(), Disorder::bernoulli(0.3)};
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto& d = laws[i % 3];
    const std::size_t n = 2 + (i * 7) % 13;
    const std::size_t rows = 1 + (i * 5) % 6;
    const auto inst = generate(rows, n, d, 31'000 + i);
    const double got = exact_discrepancy(inst).value;
    const double want = oracle::naive_min_disc(inst);
    const bool ok = d.integral() ? got == want : std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want));
    if (!ok) ++mismatches;
  }
  return {mismatches == 0, fmt("%d mismatches over 200 instances (n in [2,14])", mismatches)};
}

// 9
Outcome online_contract() {
  int violations = 0;
  const std::size_t n = 64;
  for (const auto& name : online_algorithm_names()) {
    for (std::uint64_t pair = 0; pair < 50; ++pair) {
      const auto a = generate(6, n, Disorder::gaussian(), 70'000 + 2 * pair);
      const auto b = generate(6, n, Disorder::gaussian(), 70'001 + 2 * pair);
      auto alg = make_online_algorithm(name, 0.0, pair);
      const auto ra = run_online(*alg, a).sigma;
      for (std::size_t q = 1; q <= 20; ++q) {
        const std::size_t t = q * n / 21;
        const auto rb = run_online(*alg, splice(a, b, t)).sigma;
        for (std::size_t i = 0; i < t; ++i) violations += ra[i] != rb[i];
      }
    }
  }
  const auto stream = generate(1, 10'000, Disorder::rademacher(), 5);
  GreedyOnline g;
  const auto run = run_online(g, stream);
  double w = 0.0, worst = 0.0;
  for (std::size_t t = 0; t < stream.cols(); ++t) {
    w += run.sigma[t] * stream.at(0, t);
    worst = std::max(worst, std::abs(w));
  }
  return {violations == 0 && worst <= 1.0,
          fmt("%d prefix violations (%zu algorithms x 50 pairs x 20 splits); greedy max |partial sum| = %g",
              violations, online_algorithm_names().size(), worst)};
}

// 10
Outcome online_vs_random() {
  std::vector<double> pot, rnd;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto inst = generate(32, 1024, Disorder::rademacher(), 123'000 + s);
    PotentialOnline p;
    pot.push_back(run_online(p, inst).disc.value);
    rnd.push_back(disc_value(inst, random_signing(inst, 456'000 + s)).value);
  }
  const double mp = median(pot), mr = median(rnd);
  return {mp <= mr, fmt("median potential %.1f vs random %.1f", mp, mr)};
}

// 11
Outcome jensen_amplification() {
  const std::size_t n = 24, M = 6, k = 12, m = 3;
  GreedyOnline alg;
  std::vector<double> pilot;
  for (std::uint64_t s = 0; s < 2000; ++s) {
    pilot.push_back(run_online(alg, generate(M, n, Disorder::gaussian(), 500'000 + s)).disc.value);
  }
  const double threshold = median(pilot);
  const int ensembles = 10'000;
  std::size_t singles = 0, joints = 0;
  for (int e = 0; e < ensembles; ++e) {
    const auto ens = make_suffix_ensemble(M, n, Disorder::gaussian(), 600'000 + static_cast<std::uint64_t>(e), k, m);
    bool all = true;
    for (const auto& inst : ens.members) {
      const bool ok = run_online(alg, inst).disc.value <= threshold;
      singles += ok;
      all = all && ok;
    }
    joints += all;
  }
  const double p = static_cast<double>(singles) / (static_cast<double>(ensembles) * m);
  const double q = static_cast<double>(joints) / ensembles;
  const double se = std::sqrt(q * (1.0 - q) / ensembles);
  const double target = std::pow(p, static_cast<double>(m));
  return {q >= target - 3.0 * se,
          fmt("greedy, threshold %.4f: single %.4f, joint %.4f vs single^3 %.4f (SE %.4f)", threshold, p, q,
              target, se)};
}

// 12
Outcome landscape_oracles() {
  int checked = 0, mismatches = 0;
  auto tally = [&](bool a, bool b) {
    ++checked;
    mismatches += a != b;
  };
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto ens = make_suffix_ensemble(4, 12, Disorder::gaussian(), 10'000 + s, 4, 2);
    for (double kappa : {0.6, 0.9, 1.2}) {
      tally(search_xi_sbp(ens, kappa).has_value(),
            oracle::naive_xi_exists(ens.members, 4, kappa * std::sqrt(12.0)));
    }
    const auto e3 = make_suffix_ensemble(3, 10, Disorder::gaussian(), 11'000 + s, 3, 3);
    tally(search_xi(e3, 2.0).has_value(), oracle::naive_xi_exists(e3.members, 3, 2.0));
    for (auto d : {Disorder::rademacher(), Disorder::bernoulli(0.5)}) {
      const auto ed = make_suffix_ensemble(4, 11 + s % 2, d, 12'000 + s, 4, 2);
      for (double c_u : {0.4, 0.75, 1.0}) {
        tally(search_xi_disc(ed, c_u).has_value(), oracle::naive_xi_exists(ed.members, 4, c_u * 2.0));
      }
    }
    const std::size_t m = 2 + s % 2;
    const std::size_t n = m == 2 ? 12 : 9;
    const auto ie = make_interpolated_ensemble(3, n, 13'000 + s, m, {0.0, 0.5, 1.0});
    const double K = 0.8 * std::sqrt(static_cast<double>(n));
    for (auto [beta, eta] : {std::pair{0.6, 0.2}, std::pair{1.0 - 2.0 / n, 0.0}, std::pair{0.0, 0.0}}) {
      const OgpWindow w{beta, eta, K, m};
      tally(search_ogp_tuples(ie, w).has_value(),
            oracle::naive_ogp_exists(ie.base, ie.fresh, ie.angles, K, beta - eta, beta));
    }
  }
  return {mismatches == 0, fmt("%d mismatches over %d searches", mismatches, checked)};
}

// 13
Outcome stable_arithmetic() {
  double worst = 0.0;
  bool exact = true;
  for (double eta : {0.05, 0.2, 0.4, 0.9}) {
    for (double L : {0.5, 1.0, 3.0}) {
      for (std::size_t m : {2u, 5u, 16u}) {
        const auto s = stable_constants(eta, L, m);
        exact = exact && s.C == eta * eta / 1600.0 && s.Q == 4800.0 * L * std::numbers::pi / (eta * eta);
        const double want = 4.0 * static_cast<double>(m) * s.Q * std::log2(s.Q);
        worst = std::max(worst, std::abs(s.log2_log2_T - want) / want);
      }
    }
  }
  const auto ref = stable_constants(0.4, 1.0, 2);
  const double ref_err = std::abs(ref.log2_log2_T - 12458931.420208754) / 12458931.420208754;
  return {exact && worst <= 1e-12 && ref_err <= 1e-12,
          fmt("C, Q exact: %s; max relative error of log2 log2 T %.1e; eta=0.4 value %.6f", exact ? "yes" : "no",
              std::max(worst, ref_err), ref.log2_log2_T)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "alpha_c identities", 1.0, alpha_identities},
      {2, "upsilon anchor", 1.0, upsilon_anchor},
      {3, "OGP exponent negativity", 5.0, ogp_negativity},
      {4, "determinant bound", 10.0, determinant_bound},
      {5, "box-probability bound", 120.0, box_bound},
      {6, "Berry-Esseen constants", 30.0, berry_esseen},
      {7, "first-moment exactness", 300.0, first_moment},
      {8, "exact-solver oracle equivalence", 120.0, exact_oracle},
      {9, "online contract", 30.0, online_contract},
      {10, "online vs random signing", 60.0, online_vs_random},
      {11, "Jensen amplification", 300.0, jensen_amplification},
      {12, "landscape searches vs naive oracles", 120.0, landscape_oracles},
      {13, "stable-constant arithmetic", 1.0, stable_arithmetic},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.time_limit_s;
    const bool pass = out.pass && in_time;
    failures += !pass;
    std::printf("[%s] %2d %s (%.2f s / limit %.0f s%s): %s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.time_limit_s, in_time ? "" : ", over time", out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
