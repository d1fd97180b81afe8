#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qmcnet/digits.hpp"

namespace qmcnet {

// Family name plus a `key=value;key=value` parameter list, enough to
// rebuild a point set bit-exactly.
struct Provenance {
  std::string family;
  std::string params;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// Ordered points in [0,1)^s with exact rational coordinates.
//
// Coordinate j of every point shares the denominator `denominator(j)`.
// Digital constructions use base^precision on every axis, which makes the
// coordinates exact digit vectors; trimmed or rescaled sets keep exact
// rationals on the affected axes.
class PointSet {
 public:
  // Empty point set whose axes all have denominator base^precision.
  PointSet(std::uint32_t base, std::size_t dim, std::size_t precision, std::size_t m);
  PointSet(std::uint32_t base, std::size_t dim, std::size_t precision, std::size_t m,
           std::vector<std::uint64_t> denominators);

  std::uint32_t base() const noexcept { return base_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t precision() const noexcept { return precision_; }
  // Index-digit count of the generating construction (log_b of the net size
  // for nets).
  std::size_t m() const noexcept { return m_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : numerators_.size() / dim_; }
  bool empty() const noexcept { return numerators_.empty(); }

  std::uint64_t denominator(std::size_t j) const noexcept { return denominators_[j]; }
  std::span<const std::uint64_t> denominators() const noexcept { return denominators_; }
  std::uint64_t numerator(std::size_t n, std::size_t j) const noexcept {
    return numerators_[n * dim_ + j];
  }
  std::span<const std::uint64_t> point(std::size_t n) const noexcept {
    return {numerators_.data() + n * dim_, dim_};
  }
  double coordinate(std::size_t n, std::size_t j) const noexcept {
    return static_cast<double>(numerators_[n * dim_ + j]) / static_cast<double>(denominators_[j]);
  }
  // Row-major N x s doubles.
  std::vector<double> to_doubles() const;

  // True if axis j has denominator base^precision.
  bool axis_is_digital(std::size_t j) const noexcept;
  bool is_digital() const noexcept;
  // Exact digits of coordinate j of point n; DomainError on non-digital axes.
  DigitVector digits(std::size_t n, std::size_t j) const;

  // Appends a point given as numerators over the axis denominators;
  // DomainError if any coordinate is not in [0,1).
  void add_point(std::span<const std::uint64_t> numerators);
  // Appends a point given as digit vectors of length <= precision.
  void add_digit_point(std::span<const std::vector<std::uint32_t>> digits);
  void reserve(std::size_t n) { numerators_.reserve(n * dim_); }

  const Provenance& provenance() const noexcept { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::uint32_t base_;
  std::size_t dim_;
  std::size_t precision_;
  std::size_t m_;
  std::uint64_t digital_denominator_;
  std::vector<std::uint64_t> denominators_;
  std::vector<std::uint64_t> numerators_;
  Provenance provenance_;
};

// Same points in the same order, compared as exact rationals (independent of
// precision and denominators).
bool same_points(const PointSet& a, const PointSet& b);

// The first n points (n <= size), same metadata.
PointSet take_prefix(const PointSet& points, std::size_t n);

}  // namespace qmcnet
