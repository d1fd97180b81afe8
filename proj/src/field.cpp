#include "qmcnet/field.hpp"

#include <string>

#include "qmcnet/errors.hpp"

namespace qmcnet {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t base) : base_(base) {
  if (base > kMaxBase) {
    throw DomainError("field base " + std::to_string(base) + " exceeds supported maximum " +
                      std::to_string(kMaxBase));
  }
  if (!is_prime(base)) {
    throw DomainError("field base " + std::to_string(base) + " is not prime");
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % base_;
  std::uint32_t sq = a % base_;
  while (e != 0) {
    if (e & 1u) result = mul(result, sq);
    sq = mul(sq, sq);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % base_ == 0) throw DomainError("zero has no multiplicative inverse");
  // Fermat: a^(b-2) = a^(-1) in F_b.
  return pow(a, base_ - 2);
}

FieldElem::FieldElem(std::uint32_t value, std::uint32_t base) : value_(value), base_(base) {
  PrimeField f(base);
  if (value >= base) {
    throw DomainError("value " + std::to_string(value) + " is not a residue mod " +
                      std::to_string(base));
  }
}

namespace {

PrimeField common_field(const FieldElem& a, const FieldElem& b) {
  if (a.base() != b.base()) throw DomainError("field elements have different bases");
  return PrimeField(a.base());
}

}  // namespace

FieldElem operator+(FieldElem a, FieldElem b) {
  const auto f = common_field(a, b);
  return {f.add(a.value_, b.value_), a.base_, FieldElem::Unchecked{}};
}

FieldElem operator-(FieldElem a, FieldElem b) {
  const auto f = common_field(a, b);
  return {f.sub(a.value_, b.value_), a.base_, FieldElem::Unchecked{}};
}

FieldElem operator*(FieldElem a, FieldElem b) {
  const auto f = common_field(a, b);
  return {f.mul(a.value_, b.value_), a.base_, FieldElem::Unchecked{}};
}

FieldElem field_inverse(FieldElem a) {
  const PrimeField f(a.base());
  return FieldElem(f.inv(a.value()), a.base());
}

namespace {

// C(i, j) mod b for i, j < b; the denominator j! is a unit mod b.
std::uint32_t small_binomial(const PrimeField& f, std::uint32_t i, std::uint32_t j) {
  if (j > i) return 0;
  if (j > i - j) j = i - j;
  std::uint32_t num = 1;
  std::uint32_t den = 1;
  for (std::uint32_t t = 0; t < j; ++t) {
    num = f.mul(num, i - t);
    den = f.mul(den, t + 1);
  }
  return f.mul(num, f.inv(den));
}

}  // namespace

FieldElem binomial_mod_p(std::uint64_t i, std::uint64_t j, std::uint32_t b) {
  const PrimeField f(b);
  if (j > i) return FieldElem(0, b);
  std::uint32_t result = 1 % b;
  while ((i != 0 || j != 0) && result != 0) {
    const auto id = static_cast<std::uint32_t>(i % b);
    const auto jd = static_cast<std::uint32_t>(j % b);
    result = f.mul(result, small_binomial(f, id, jd));
    i /= b;
    j /= b;
  }
  return FieldElem(result, b);
}

}  // namespace qmcnet
