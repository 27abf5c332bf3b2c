#include <doctest.h>

#include <cmath>
#include <set>

#include "ogplab/rng.hpp"

using namespace ogplab;

TEST_CASE("philox4x32-10 matches the Random123 known-answer vectors") {
  using C = Philox4x32::Counter;
  using K = Philox4x32::Key;
  CHECK(Philox4x32::block(C{0, 0, 0, 0}, K{0, 0}) ==
        C{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(Philox4x32::block(C{0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                          K{0xffffffffu, 0xffffffffu}) ==
        C{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(Philox4x32::block(C{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                          K{0xa4093822u, 0x299f31d0u}) ==
        C{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("draws are pure functions of their address") {
  const CounterRng a(42);
  const CounterRng b(42);
  for (std::uint64_t i = 0; i < 100; ++i) {
    CHECK(a.bits(Stream::kEntries, i, 3) == b.bits(Stream::kEntries, i, 3));
  }
  CHECK(a.bits(Stream::kEntries, 0, 0) != a.bits(Stream::kSigns, 0, 0));
  CHECK(a.bits(Stream::kEntries, 0, 0) != CounterRng(43).bits(Stream::kEntries, 0, 0));
}

TEST_CASE("unit uniforms stay inside the open interval") {
  CHECK(CounterRng::to_unit(0) > 0.0);
  CHECK(CounterRng::to_unit(~std::uint64_t{0}) < 1.0);
}

TEST_CASE("normals have unit variance and signs are balanced") {
  const CounterRng rng(7);
  const int n = 200000;
  double sum = 0.0;
  double sq = 0.0;
  long signs = 0;
  for (int i = 0; i < n; ++i) {
    const auto [x, y] = rng.normal_pair(Stream::kTest, static_cast<std::uint64_t>(i), 0);
    sum += x + y;
    sq += x * x + y * y;
    signs += rng.sign(Stream::kTest, static_cast<std::uint64_t>(i), 1);
  }
  const double mean = sum / (2.0 * n);
  const double var = sq / (2.0 * n) - mean * mean;
  CHECK(std::abs(mean) < 3.0 / std::sqrt(2.0 * n));
  CHECK(std::abs(var - 1.0) < 3.0 * std::sqrt(2.0 / (2.0 * n)));
  CHECK(std::abs(static_cast<double>(signs)) < 3.0 * std::sqrt(static_cast<double>(n)));
}

TEST_CASE("mix_seed separates children") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) seen.insert(mix_seed(5, s));
  CHECK(seen.size() == 1000);
}
