#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qmcnet {

// b^e, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t b, std::size_t e) noexcept;

// The e with b^e == n, if there is one.
std::optional<std::size_t> exact_log(std::uint64_t n, std::uint32_t b) noexcept;

// Number of base-b digits needed to write n (0 for n == 0).
std::size_t digit_count(std::uint64_t n, std::uint32_t b) noexcept;

// Least-significant digit first: n = v[0] + v[1] b + ... + v[m-1] b^(m-1).
// DomainError unless n < b^m.
std::vector<std::uint32_t> digit_vector_of_index(std::uint64_t n, std::uint32_t b, std::size_t m);

// Fractional base-b expansion x = d[0] b^-1 + d[1] b^-2 + ... of finite length.
class DigitVector {
 public:
  DigitVector(std::uint32_t base, std::vector<std::uint32_t> digits);
  // The `length`-digit expansion of numerator / base^length.
  static DigitVector from_numerator(std::uint32_t base, std::uint64_t numerator, std::size_t length);

  std::uint32_t base() const noexcept { return base_; }
  std::size_t size() const noexcept { return digits_.size(); }
  std::span<const std::uint32_t> digits() const noexcept { return digits_; }
  // 1-based digit index as in x = sum_i x_i b^-i; zero past the end.
  std::uint32_t digit(std::size_t i) const noexcept {
    return i >= 1 && i <= digits_.size() ? digits_[i - 1] : 0;
  }

  // Numerator over base^size(); PrecisionError if that overflows.
  std::uint64_t numerator() const;
  double to_double() const noexcept;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;

 private:
  std::uint32_t base_;
  std::vector<std::uint32_t> digits_;
};

}  // namespace qmcnet
