#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmcnet/dual.hpp"

namespace qmcnet {

enum class WeightKind { nrt, hamming, mu_alpha };

struct WeightSpec {
  WeightKind kind = WeightKind::nrt;
  std::size_t alpha = 1;  // used by mu_alpha only

  static WeightSpec nrt() { return {WeightKind::nrt, 1}; }
  static WeightSpec hamming() { return {WeightKind::hamming, 1}; }
  static WeightSpec mu(std::size_t alpha) { return {WeightKind::mu_alpha, alpha}; }

  std::string name() const;
};

// mu_1(k): exponent a_1 of the leading digit, k = kappa_1 b^(a_1 - 1) + ...
std::size_t nrt_weight(std::uint64_t k, std::uint32_t b);
// kappa(k): number of nonzero base-b digits.
std::size_t hamming_weight(std::uint64_t k, std::uint32_t b);
// mu_alpha(k) = a_1 + ... + a_min(nu, alpha).
std::size_t mu_alpha(std::uint64_t k, std::size_t alpha, std::uint32_t b);

std::size_t weight(std::uint64_t k, WeightSpec spec, std::uint32_t b);
std::size_t vector_weight(std::span<const std::uint64_t> ks, WeightSpec spec, std::uint32_t b);

// Digitwise (k - l) mod b, read back as an integer.
std::uint64_t digitwise_difference(std::uint64_t k, std::uint64_t l, std::uint32_t b);

struct WeightProfile {
  WeightSpec spec;
  // nullopt when no nonzero dual element lies in range (+infinity).
  std::optional<std::size_t> minimum;
  std::vector<std::uint64_t> witness;
  std::uint64_t dual_size = 0;
  std::uint64_t range_limit = 0;
};

inline constexpr std::uint64_t kUnboundedRange = std::numeric_limits<std::uint64_t>::max();

// Minimum weight over nonzero dual elements whose coordinates are all below
// `range_limit`. Membership depends only on the first p digits, so when
// range_limit exceeds b^p the elements with a coordinate >= b^p are covered
// by the cheapest of them, (b^p, 0, ..., 0).
WeightProfile min_dual_weight(const DualSpace& dual, WeightSpec spec,
                              std::uint64_t range_limit = kUnboundedRange);

// CSV: kind,alpha,min,witness,dual_size (min "inf" when absent, witness
// coordinates joined by ';').
void write_weight_profile_header(std::ostream& os);
void write_weight_profile_row(std::ostream& os, const WeightProfile& profile);

// alpha t + s alpha (alpha - 1) / 2
std::size_t t_alpha(std::size_t alpha, std::size_t t, std::size_t s);

struct OrderAlphaResult {
  WeightProfile profile;
  long bound;  // alpha m - t_alpha
  bool pass;
};

// min mu_alpha over the nonzero dual of the interlaced matrices against
// alpha m - t_alpha(alpha, t_base, s).
OrderAlphaResult check_order_alpha(const GeneratingMatrixSet& interlaced, std::size_t alpha,
                                   std::size_t m, std::size_t t_base, std::uint64_t cap);
bool verify_order_alpha(const GeneratingMatrixSet& interlaced, std::size_t alpha, std::size_t m,
                        std::size_t t_base, std::uint64_t cap);

}  // namespace qmcnet
