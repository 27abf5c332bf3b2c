#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ogplab/discrepancy.hpp"
#include "ogplab/errors.hpp"
#include "ogplab/landscape.hpp"
#include "oracles.hpp"

using namespace ogplab;

namespace {

std::vector<SignVector> cube(std::size_t n) {
  std::vector<SignVector> all;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) all.push_back(SignVector::from_bits(b, n));
  return all;
}

void verify_xi(const TupleCertificate& cert, const SuffixEnsemble& ens) {
  const std::size_t n = ens.members.front().cols();
  CHECK(cert.shared_prefix == n - ens.resampled);
  for (std::size_t i = 0; i < cert.members.size(); ++i) {
    CHECK(oracle::naive_disc(ens.members[i], cert.members[i]) <= cert.threshold);
    CHECK(cert.disc_values[i] == doctest::Approx(oracle::naive_disc(ens.members[i], cert.members[i])));
    for (std::size_t c = 0; c < cert.shared_prefix; ++c) CHECK(cert.members[i][c] == cert.members[0][c]);
  }
}

}  // namespace

TEST_CASE("overlap histogram degenerate inputs") {
  const auto s = SignVector::parse("+-++-");
  const std::vector<SignVector> same{s, s};
  auto h = overlap_histogram(same, 10);
  CHECK(h.counts.back() == 1);
  CHECK(h.total() == 1);
  const std::vector<SignVector> opp{s, s.negated()};
  h = overlap_histogram(opp, 10);
  CHECK(h.counts.front() == 1);
  CHECK(h.total() == 1);
  CHECK_THROWS_AS(overlap_histogram(std::vector<SignVector>{s}, 3), ParameterError);
}

TEST_CASE("overlap histogram of the full cube is binomial") {
  const std::size_t n = 12;
  const auto all = cube(n);
  // 13 bins: each attainable overlap 1 - 2d/12 falls into bin 12 - d.
  const auto h = overlap_histogram(all, n + 1);
  const double pairs_per_vector = 4096.0 / 2.0;
  for (std::size_t d = 0; d <= n; ++d) {
    double binom = 1.0;
    for (std::size_t i = 0; i < d; ++i) binom = binom * static_cast<double>(n - i) / static_cast<double>(i + 1);
    const double expected = d == 0 ? 0.0 : pairs_per_vector * binom;
    CHECK(static_cast<double>(h.counts[n - d]) == expected);
  }
}

TEST_CASE("window validation and admission") {
  OgpWindow w{1.0, 0.0, 1.0, 2};
  CHECK_NOTHROW(w.validate());
  CHECK(w.admits(0, 10));
  CHECK_FALSE(w.admits(1, 10));
  CHECK_THROWS_AS((OgpWindow{0.5, 0.6, 1.0, 2}.validate()), ParameterError);
  CHECK_THROWS_AS((OgpWindow{0.5, 0.1, 0.0, 2}.validate()), ParameterError);
  CHECK_THROWS_AS((OgpWindow{0.5, 0.1, 1.0, 1}.validate()), ParameterError);
}

TEST_CASE("xi sbp trivial cases") {
  const auto ens = make_suffix_ensemble(3, 12, Disorder::gaussian(), 1, 3, 2);
  const auto cert = search_xi_sbp(ens, 1e6);
  REQUIRE(cert.has_value());
  verify_xi(*cert, ens);
  CHECK(cert->members[0] == SignVector(12));
  CHECK_FALSE(search_xi_sbp(ens, 1e-9).has_value());
  CHECK(count_xi(ens, 1e9) == (std::uint64_t{1} << (12 + 3)));
}

TEST_CASE("xi sbp agrees with the naive oracle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto ens = make_suffix_ensemble(4, 12, Disorder::gaussian(), seed, 4, 2);
    for (double kappa : {0.5, 0.8, 1.0}) {
      const double thr = kappa * std::sqrt(12.0);
      const auto cert = search_xi_sbp(ens, kappa);
      CHECK(cert.has_value() == oracle::naive_xi_exists(ens.members, 4, thr));
      CHECK(count_xi(ens, thr) == oracle::naive_xi_count(ens.members, 4, thr));
      if (cert) verify_xi(*cert, ens);
    }
  }
}

TEST_CASE("xi search with three members") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto ens = make_suffix_ensemble(3, 10, Disorder::gaussian(), 100 + seed, 3, 3);
    const double thr = 0.7 * std::sqrt(10.0);
    CHECK(search_xi(ens, thr).has_value() == oracle::naive_xi_exists(ens.members, 3, thr));
    CHECK(count_xi(ens, thr) == oracle::naive_xi_count(ens.members, 3, thr));
  }
}

TEST_CASE("xi disc parity and oracle") {
  // Rademacher rows with odd n have odd row sums, so a threshold below 1 is infeasible.
  const auto odd = make_suffix_ensemble(4, 13, Disorder::rademacher(), 5, 4, 2);
  CHECK_FALSE(search_xi_disc(odd, 0.4).has_value());
  const auto huge = search_xi_disc(odd, 100.0);
  REQUIRE(huge.has_value());
  verify_xi(*huge, odd);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto ens = make_suffix_ensemble(4, 12, Disorder::rademacher(), 40 + seed, 4, 2);
    for (double c_u : {0.5, 1.0, 1.5}) {
      const double thr = c_u * 2.0;
      const auto cert = search_xi_disc(ens, c_u);
      CHECK(cert.has_value() == oracle::naive_xi_exists(ens.members, 4, thr));
      if (cert) verify_xi(*cert, ens);
    }
  }
}

TEST_CASE("xi argument checks") {
  const auto g = make_suffix_ensemble(4, 12, Disorder::gaussian(), 1, 4, 2);
  const auto r = make_suffix_ensemble(4, 12, Disorder::rademacher(), 1, 3, 2);
  CHECK_THROWS_AS(search_xi_disc(g, 1.0), UnsupportedDisorder);
  CHECK_THROWS_AS(search_xi_sbp(r, 1.0), UnsupportedDisorder);
  CHECK_THROWS_AS(search_xi_disc(r, 1.0), ParameterError);
  CHECK_THROWS_AS(search_xi_sbp(g, 1.0, 10), CapacityError);
}

TEST_CASE("ogp trivial window") {
  const auto ens = make_interpolated_ensemble(2, 10, 3, 2, default_angle_grid(4));
  const auto cert = search_ogp_tuples(ens, OgpWindow{1.0, 0.0, 1e6, 2});
  REQUIRE(cert.has_value());
  CHECK(cert->members[0] == cert->members[1]);
  CHECK(cert->overlaps == std::vector<double>{1.0});
  CHECK_FALSE(search_ogp_tuples(ens, OgpWindow{1.0, 0.5, 1e-9, 2}).has_value());
}

TEST_CASE("ogp parity window matches the oracle") {
  const std::size_t n = 11;
  const double beta = 1.0 - 2.0 / n;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto ens = make_interpolated_ensemble(2, n, 10 + seed, 2, default_angle_grid(3));
    const OgpWindow w{beta, 0.0, 1.2 * std::sqrt(double(n)), 2};
    const auto cert = search_ogp_tuples(ens, w);
    CHECK(cert.has_value() == oracle::naive_ogp_exists(ens.base, ens.fresh, ens.angles, w.K, beta, beta));
    if (cert) CHECK(oracle::naive_hamming(cert->members[0], cert->members[1]) == 1);
  }
}

TEST_CASE("ogp agrees with the oracle and certificates re-verify") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t m = 2 + seed % 2;
    const std::size_t n = m == 2 ? 12 : 10;
    const auto ens = make_interpolated_ensemble(3, n, 200 + seed, m, {0.0, 0.4, 0.9});
    const OgpWindow w{0.6, 0.2, 0.9 * std::sqrt(double(n)), m};
    const auto cert = search_ogp_tuples(ens, w);
    CHECK(cert.has_value() == oracle::naive_ogp_exists(ens.base, ens.fresh, ens.angles, w.K, 0.4, 0.6));
    if (!cert) continue;
    std::size_t p = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const auto inst = oracle::naive_interpolate(ens.base, ens.fresh[i], cert->taus[i]);
      CHECK(oracle::naive_disc(inst, cert->members[i]) <= w.K + 1e-12);
      for (std::size_t j = i + 1; j < m; ++j, ++p) {
        const double o = cert->overlaps[p];
        CHECK(o == 1.0 - 2.0 * double(oracle::naive_hamming(cert->members[i], cert->members[j])) / double(n));
        CHECK(o >= 0.4 - 1e-12);
        CHECK(o <= 0.6 + 1e-12);
      }
    }
  }
}

TEST_CASE("ogp argument checks") {
  const auto ens = make_interpolated_ensemble(2, 20, 1, 2, {0.0});
  CHECK_THROWS_AS(search_ogp_tuples(ens, OgpWindow{0.5, 0.1, 1.0, 2}), CapacityError);
  CHECK_THROWS_AS(search_ogp_tuples(ens, OgpWindow{0.5, 0.1, 1.0, 3}, 30), ParameterError);
}

TEST_CASE("stability probe") {
  SUBCASE("rho = 1 with a deterministic algorithm") {
    StabilityConfig cfg{8, 64, 1.0, 10.0, 50, 1, OmegaMode::kShared};
    const auto rep = stability_probe(signing_algorithm("greedy"), cfg);
    for (auto d : rep.hamming) CHECK(d == 0);
    for (double f : rep.frobenius) CHECK(f == 0.0);
  }
  SUBCASE("rho = 0 random signing with independent coins") {
    StabilityConfig cfg{4, 64, 0.0, 10.0, 1000, 2, OmegaMode::kIndependent};
    const auto rep = stability_probe(signing_algorithm("random"), cfg);
    CHECK(std::abs(rep.mean_hamming - 32.0) < 3.0 * rep.se_hamming);
  }
  SUBCASE("rho = 0 random signing with a shared coin seed") {
    StabilityConfig cfg{4, 64, 0.0, 10.0, 100, 2, OmegaMode::kShared};
    const auto rep = stability_probe(signing_algorithm("random"), cfg);
    CHECK(rep.mean_hamming == 0.0);
  }
  SUBCASE("greedy near rho = 1 gives monotone quantiles") {
    StabilityConfig cfg{16, 512, std::cos(std::numbers::pi / 200), 50.0, 40, 3, OmegaMode::kShared};
    const auto rep = stability_probe(signing_algorithm("greedy"), cfg);
    REQUIRE(rep.quantiles.size() == rep.quantile_levels.size());
    CHECK(std::is_sorted(rep.quantiles.begin(), rep.quantiles.end()));
    CHECK(rep.success_rate >= 0.0);
    CHECK(rep.success_rate <= 1.0);
  }
  CHECK_THROWS_AS(stability_probe(signing_algorithm("greedy"), StabilityConfig{4, 8, 1.5}), ParameterError);
  CHECK_THROWS_AS(signing_algorithm("nope"), ParameterError);
}
