#pragma once

#include <cstdint>
#include <ostream>

namespace qmcnet {

bool is_prime(std::uint64_t n) noexcept;

// Arithmetic in F_b for a prime b. The base is validated once at
// construction; the member functions take residues already reduced mod b.
class PrimeField {
 public:
  // Largest supported base; keeps every product of two residues in 64 bits.
  static constexpr std::uint32_t kMaxBase = 1u << 16;

  explicit PrimeField(std::uint32_t base);

  std::uint32_t base() const noexcept { return base_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= base_ ? s - base_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + base_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : base_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % base_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  // Throws DomainError for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  std::uint32_t reduce(std::uint64_t v) const noexcept {
    return static_cast<std::uint32_t>(v % base_);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t base_;
};

class FieldElem {
 public:
  // Throws DomainError if base is not prime or value >= base.
  FieldElem(std::uint32_t value, std::uint32_t base);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t base() const noexcept { return base_; }

  friend FieldElem operator+(FieldElem a, FieldElem b);
  friend FieldElem operator-(FieldElem a, FieldElem b);
  friend FieldElem operator*(FieldElem a, FieldElem b);
  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FieldElem& e) {
    return os << e.value_ << " (mod " << e.base_ << ")";
  }

 private:
  struct Unchecked {};
  FieldElem(std::uint32_t value, std::uint32_t base, Unchecked) noexcept
      : value_(value), base_(base) {}

  std::uint32_t value_;
  std::uint32_t base_;
};

// Multiplicative inverse; DomainError on zero.
FieldElem field_inverse(FieldElem a);

// C(i, j) mod b, with C(i, j) = 0 whenever j > i. Uses Lucas' theorem so
// arbitrarily large indices never overflow.
FieldElem binomial_mod_p(std::uint64_t i, std::uint64_t j, std::uint32_t b);

}  // namespace qmcnet
