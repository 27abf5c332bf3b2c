#pragma once

// Counter-based random numbers. Every draw is a pure function of
// (seed, stream, coordinate), so matrix entries, sign coins and Monte Carlo
// samples can be produced in any order or in parallel with identical results.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace ogplab {

/// Philox4x32-10 block function (Salmon et al., SC'11).
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter block(Counter ctr, Key key) noexcept {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      ctr = single_round(ctr, key);
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static constexpr Counter single_round(const Counter& ctr, const Key& key) noexcept {
    const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
};

/// Purpose tags keep unrelated consumers of one seed on disjoint counters.
enum class Stream : std::uint32_t {
  kEntries = 1,
  kSigns = 2,
  kBoxSamples = 3,
  kProbe = 4,
  kTest = 0xFFFF,
};

/// Stateless generator keyed by a 64-bit seed. A draw is addressed by
/// (stream, major, minor); major is 64 bits wide, minor 32 bits.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) noexcept
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

  constexpr std::array<std::uint64_t, 2> bits(Stream stream, std::uint64_t major,
                                              std::uint32_t minor) const noexcept {
    const Philox4x32::Counter ctr{static_cast<std::uint32_t>(major),
                                  static_cast<std::uint32_t>(major >> 32), minor,
                                  static_cast<std::uint32_t>(stream)};
    const auto out = Philox4x32::block(ctr, key_);
    return {(std::uint64_t{out[1]} << 32) | out[0], (std::uint64_t{out[3]} << 32) | out[2]};
  }

  /// Uniform on the open interval (0, 1): 52 random bits plus a half-step offset.
  static constexpr double to_unit(std::uint64_t x) noexcept {
    return (static_cast<double>(x >> 12) + 0.5) * 0x1p-52;
  }

  double uniform(Stream stream, std::uint64_t major, std::uint32_t minor) const noexcept {
    return to_unit(bits(stream, major, minor)[0]);
  }

  /// Two independent standard normals by Box-Muller from one Philox block.
  std::pair<double, double> normal_pair(Stream stream, std::uint64_t major,
                                        std::uint32_t minor) const noexcept {
    const auto b = bits(stream, major, minor);
    const double r = std::sqrt(-2.0 * std::log(to_unit(b[0])));
    const double theta = 2.0 * std::numbers::pi * to_unit(b[1]);
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  double normal(Stream stream, std::uint64_t major, std::uint32_t minor) const noexcept {
    return normal_pair(stream, major, minor).first;
  }

  /// Fair coin mapped to {-1, +1}.
  int sign(Stream stream, std::uint64_t major, std::uint32_t minor) const noexcept {
    return (bits(stream, major, minor)[0] >> 63) != 0 ? -1 : 1;
  }

 private:
  Philox4x32::Key key_;
};

/// SplitMix64 finalizer; derives independent child seeds from a parent seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace ogplab
