#include "qmcnet/point_set.hpp"

#include <string>

#include "qmcnet/errors.hpp"

namespace qmcnet {

namespace {

std::uint64_t digital_denominator(std::uint32_t base, std::size_t precision) {
  if (base < 2) throw DomainError("point set base must be at least 2");
  const auto d = checked_pow(base, precision);
  if (!d) {
    throw PrecisionError("base " + std::to_string(base) + " with precision " +
                         std::to_string(precision) + " exceeds 64-bit exact storage");
  }
  return *d;
}

}  // namespace

PointSet::PointSet(std::uint32_t base, std::size_t dim, std::size_t precision, std::size_t m)
    : base_(base),
      dim_(dim),
      precision_(precision),
      m_(m),
      digital_denominator_(digital_denominator(base, precision)),
      denominators_(dim, digital_denominator_) {
  if (dim == 0) throw DomainError("point set dimension must be positive");
}

PointSet::PointSet(std::uint32_t base, std::size_t dim, std::size_t precision, std::size_t m,
                   std::vector<std::uint64_t> denominators)
    : PointSet(base, dim, precision, m) {
  if (denominators.size() != dim) throw DomainError("one denominator per axis required");
  for (auto d : denominators)
    if (d == 0) throw DomainError("zero denominator");
  denominators_ = std::move(denominators);
}

std::vector<double> PointSet::to_doubles() const {
  std::vector<double> out(numerators_.size());
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    out[i] = static_cast<double>(numerators_[i]) / static_cast<double>(denominators_[i % dim_]);
  }
  return out;
}

bool PointSet::axis_is_digital(std::size_t j) const noexcept {
  return denominators_[j] == digital_denominator_;
}

bool PointSet::is_digital() const noexcept {
  for (std::size_t j = 0; j < dim_; ++j)
    if (!axis_is_digital(j)) return false;
  return true;
}

DigitVector PointSet::digits(std::size_t n, std::size_t j) const {
  if (n >= size() || j >= dim_) throw DomainError("point index out of range");
  if (!axis_is_digital(j)) {
    throw DomainError("axis " + std::to_string(j + 1) + " does not hold base-" +
                      std::to_string(base_) + " digit expansions");
  }
  return DigitVector::from_numerator(base_, numerator(n, j), precision_);
}

void PointSet::add_point(std::span<const std::uint64_t> numerators) {
  if (numerators.size() != dim_) throw DomainError("point has wrong dimension");
  for (std::size_t j = 0; j < dim_; ++j) {
    if (numerators[j] >= denominators_[j]) throw DomainError("coordinate outside [0,1)");
  }
  numerators_.insert(numerators_.end(), numerators.begin(), numerators.end());
}

void PointSet::add_digit_point(std::span<const std::vector<std::uint32_t>> digits) {
  if (digits.size() != dim_) throw DomainError("point has wrong dimension");
  std::vector<std::uint64_t> nums;
  nums.reserve(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!axis_is_digital(j)) throw DomainError("digit point added to a non-digital axis");
    const auto& d = digits[j];
    if (d.size() > precision_) throw PrecisionError("digit vector longer than precision");
    std::uint64_t num = 0;
    for (std::size_t i = 0; i < precision_; ++i) {
      const std::uint32_t digit = i < d.size() ? d[i] : 0;
      if (digit >= base_) throw DomainError("digit out of range");
      num = num * base_ + digit;
    }
    nums.push_back(num);
  }
  numerators_.insert(numerators_.end(), nums.begin(), nums.end());
}

bool same_points(const PointSet& a, const PointSet& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) return false;
  for (std::size_t n = 0; n < a.size(); ++n) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto lhs = static_cast<unsigned __int128>(a.numerator(n, j)) * b.denominator(j);
      const auto rhs = static_cast<unsigned __int128>(b.numerator(n, j)) * a.denominator(j);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

PointSet take_prefix(const PointSet& points, std::size_t n) {
  if (n > points.size()) throw DomainError("prefix longer than the point set");
  PointSet out(points.base(), points.dim(), points.precision(), points.m(),
               {points.denominators().begin(), points.denominators().end()});
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.add_point(points.point(i));
  out.set_provenance(points.provenance());
  return out;
}

}  // namespace qmcnet
