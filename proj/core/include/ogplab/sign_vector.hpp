#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ogplab {

/// Element of {-1,+1}^n. Text form is a string over {'+','-'}.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::size_t n, std::int8_t fill = 1);
  explicit SignVector(std::vector<std::int8_t> signs);

  static SignVector parse(std::string_view text);
  /// Bit i of `bits` set means coordinate i is -1.
  static SignVector from_bits(std::uint64_t bits, std::size_t n);

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  void set(std::size_t i, int sign);
  void flip(std::size_t i) { signs_[i] = static_cast<std::int8_t>(-signs_[i]); }
  SignVector negated() const;

  const std::vector<std::int8_t>& signs() const { return signs_; }
  std::string str() const;

  bool operator==(const SignVector&) const = default;
  /// Lexicographic with '+' before '-'.
  std::strong_ordering operator<=>(const SignVector& other) const;

 private:
  std::vector<std::int8_t> signs_;
};

std::size_t hamming_distance(const SignVector& a, const SignVector& b);
/// n^{-1} <a, b>, computed as 1 - 2 d_H(a, b) / n.
double overlap(const SignVector& a, const SignVector& b);

}  // namespace ogplab
