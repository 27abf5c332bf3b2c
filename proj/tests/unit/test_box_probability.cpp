#include <doctest.h>

#include <cmath>

#include "ogplab/box_probability.hpp"
#include "ogplab/errors.hpp"
#include "ogplab/special.hpp"

using namespace ogplab;

TEST_CASE("monte carlo box probability") {
  const auto one = mc_box_probability(SquareMatrix::identity(1), 1.0, 200000, 1);
  CHECK(std::abs(one.estimate - 0.6826894921370859) < 3.0 * one.std_error);
  const auto wide = mc_box_probability(SquareMatrix::equicorrelated(3, 0.3), 50.0, 10000, 2);
  CHECK(wide.estimate == 1.0);
  CHECK(wide.std_error == 0.0);
  const auto coupled = mc_box_probability(SquareMatrix::equicorrelated(2, 1.0), 1.0, 200000, 1);
  CHECK(coupled.estimate == one.estimate);
  CHECK_THROWS_AS(mc_box_probability(SquareMatrix::identity(2), 1.0, 100, 1), ParameterError);
  CHECK_THROWS_AS(mc_box_probability(SquareMatrix::equicorrelated(3, -0.8), 1.0, 10000, 1), NotPositiveDefinite);
}

TEST_CASE("equicorrelated reduction") {
  CHECK(equicorrelated_box_probability(1, 0.0, 1.0) == doctest::Approx(0.6826894921370859).epsilon(1e-12));
  CHECK(equicorrelated_box_probability(3, 0.0, 1.0) ==
        doctest::Approx(std::pow(0.6826894921370859, 3)).epsilon(1e-12));
  CHECK(equicorrelated_box_probability(4, 1.0, 1.0) == doctest::Approx(0.6826894921370859).epsilon(1e-12));
  CHECK(equicorrelated_box_probability(2, 10.0 / 14.0, 1.0) == doctest::Approx(0.5377312682208979).epsilon(1e-6));
}

TEST_CASE("quadrature agrees with the reduction and with Monte Carlo") {
  for (double rho : {0.0, 0.3, 0.7}) {
    for (std::size_t m : {2u, 3u}) {
      const auto cov = SquareMatrix::equicorrelated(m, rho);
      const double q = box_probability_quadrature(cov, 1.1);
      CHECK(q == doctest::Approx(equicorrelated_box_probability(m, rho, 1.1)).epsilon(1e-8));
    }
  }
  SquareMatrix cov(3);
  cov(0, 0) = cov(1, 1) = cov(2, 2) = 1.0;
  cov(0, 1) = cov(1, 0) = 0.5;
  cov(0, 2) = cov(2, 0) = 0.2;
  cov(1, 2) = cov(2, 1) = -0.1;
  const double q = box_probability_quadrature(cov, 0.8);
  const auto mc = mc_box_probability(cov, 0.8, 400000, 5);
  CHECK(std::abs(q - mc.estimate) < 4.0 * mc.std_error);
  CHECK_THROWS_AS(box_probability_quadrature(SquareMatrix::identity(4), 1.0), ParameterError);
}
