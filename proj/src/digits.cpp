#include "qmcnet/digits.hpp"

#include <string>

#include "qmcnet/errors.hpp"

namespace qmcnet {

std::optional<std::uint64_t> checked_pow(std::uint64_t b, std::size_t e) noexcept {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (b != 0 && r > UINT64_MAX / b) return std::nullopt;
    r *= b;
  }
  return r;
}

std::optional<std::size_t> exact_log(std::uint64_t n, std::uint32_t b) noexcept {
  if (n == 0 || b < 2) return std::nullopt;
  std::size_t e = 0;
  while (n % b == 0) {
    n /= b;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return e;
}

std::size_t digit_count(std::uint64_t n, std::uint32_t b) noexcept {
  std::size_t d = 0;
  while (n != 0) {
    n /= b;
    ++d;
  }
  return d;
}

std::vector<std::uint32_t> digit_vector_of_index(std::uint64_t n, std::uint32_t b, std::size_t m) {
  if (b < 2) throw DomainError("digit base must be at least 2");
  std::vector<std::uint32_t> v(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    v[i] = static_cast<std::uint32_t>(n % b);
    n /= b;
  }
  if (n != 0) {
    throw DomainError("index does not fit in " + std::to_string(m) + " base-" + std::to_string(b) +
                      " digits");
  }
  return v;
}

DigitVector::DigitVector(std::uint32_t base, std::vector<std::uint32_t> digits)
    : base_(base), digits_(std::move(digits)) {
  if (base < 2) throw DomainError("digit base must be at least 2");
  for (auto d : digits_)
    if (d >= base) throw DomainError("digit " + std::to_string(d) + " out of range for base " +
                                     std::to_string(base));
}

DigitVector DigitVector::from_numerator(std::uint32_t base, std::uint64_t numerator,
                                        std::size_t length) {
  std::vector<std::uint32_t> digits(length, 0);
  for (std::size_t i = length; i-- > 0;) {
    digits[i] = static_cast<std::uint32_t>(numerator % base);
    numerator /= base;
  }
  if (numerator != 0) throw DomainError("numerator is not below base^length");
  return DigitVector(base, std::move(digits));
}

std::uint64_t DigitVector::numerator() const {
  if (!checked_pow(base_, digits_.size())) {
    throw PrecisionError("digit vector too long for 64-bit numerator");
  }
  std::uint64_t v = 0;
  for (auto d : digits_) v = v * base_ + d;
  return v;
}

double DigitVector::to_double() const noexcept {
  double v = 0.0;
  for (std::size_t i = digits_.size(); i-- > 0;) v = (v + digits_[i]) / base_;
  return v;
}

}  // namespace qmcnet
