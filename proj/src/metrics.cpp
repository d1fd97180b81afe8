#include "qmcnet/metrics.hpp"

#include <algorithm>
#include <ostream>

#include "qmcnet/errors.hpp"

namespace qmcnet {

std::string WeightSpec::name() const {
  switch (kind) {
    case WeightKind::nrt: return "nrt";
    case WeightKind::hamming: return "hamming";
    case WeightKind::mu_alpha: return "mu_alpha";
  }
  return "unknown";
}

std::size_t nrt_weight(std::uint64_t k, std::uint32_t b) { return digit_count(k, b); }

std::size_t hamming_weight(std::uint64_t k, std::uint32_t b) {
  std::size_t w = 0;
  for (; k != 0; k /= b) w += (k % b != 0);
  return w;
}

std::size_t mu_alpha(std::uint64_t k, std::size_t alpha, std::uint32_t b) {
  if (alpha == 0) throw DomainError("mu_alpha requires alpha >= 1");
  // Positions a_i of nonzero digits, highest first.
  std::size_t total = 0;
  std::size_t taken = 0;
  std::size_t pos = digit_count(k, b);
  std::uint64_t scale = 1;
  for (std::size_t i = 1; i < pos; ++i) scale *= b;
  for (; pos > 0 && taken < alpha; --pos, scale /= b) {
    if ((k / scale) % b != 0) {
      total += pos;
      ++taken;
    }
  }
  return total;
}

std::size_t weight(std::uint64_t k, WeightSpec spec, std::uint32_t b) {
  switch (spec.kind) {
    case WeightKind::nrt: return nrt_weight(k, b);
    case WeightKind::hamming: return hamming_weight(k, b);
    case WeightKind::mu_alpha: return mu_alpha(k, spec.alpha, b);
  }
  return 0;
}

std::size_t vector_weight(std::span<const std::uint64_t> ks, WeightSpec spec, std::uint32_t b) {
  std::size_t w = 0;
  for (auto k : ks) w += weight(k, spec, b);
  return w;
}

std::uint64_t digitwise_difference(std::uint64_t k, std::uint64_t l, std::uint32_t b) {
  std::uint64_t out = 0, scale = 1;
  while (k != 0 || l != 0) {
    const auto dk = k % b, dl = l % b;
    out += ((dk + b - dl) % b) * scale;
    k /= b;
    l /= b;
    if (k != 0 || l != 0) scale *= b;
  }
  return out;
}

WeightProfile min_dual_weight(const DualSpace& dual, WeightSpec spec, std::uint64_t range_limit) {
  const std::uint32_t b = dual.base();
  WeightProfile profile{spec, std::nullopt, {}, dual.size(), range_limit};
  bool first = true;
  dual.for_each([&](std::span<const std::uint64_t> k) {
    if (first) {
      first = false;
      return;
    }
    if (std::any_of(k.begin(), k.end(), [&](auto v) { return v >= range_limit; })) return;
    const auto w = vector_weight(k, spec, b);
    if (!profile.minimum || w < *profile.minimum) {
      profile.minimum = w;
      profile.witness.assign(k.begin(), k.end());
    }
  });

  if (range_limit > dual.coordinate_bound()) {
    std::vector<std::uint64_t> high(dual.dim(), 0);
    high[0] = dual.coordinate_bound();
    const auto w = vector_weight(high, spec, b);
    if (!profile.minimum || w < *profile.minimum) {
      profile.minimum = w;
      profile.witness = std::move(high);
    }
  }
  return profile;
}

void write_weight_profile_header(std::ostream& os) { os << "kind,alpha,min,witness,dual_size\n"; }

void write_weight_profile_row(std::ostream& os, const WeightProfile& profile) {
  os << profile.spec.name() << ',' << profile.spec.alpha << ',';
  if (profile.minimum) {
    os << *profile.minimum;
  } else {
    os << "inf";
  }
  os << ',';
  for (std::size_t j = 0; j < profile.witness.size(); ++j) os << (j ? ";" : "") << profile.witness[j];
  os << ',' << profile.dual_size << '\n';
}

std::size_t t_alpha(std::size_t alpha, std::size_t t, std::size_t s) {
  if (alpha == 0) throw DomainError("t_alpha requires alpha >= 1");
  return alpha * t + s * alpha * (alpha - 1) / 2;
}

OrderAlphaResult check_order_alpha(const GeneratingMatrixSet& interlaced, std::size_t alpha,
                                   std::size_t m, std::size_t t_base, std::uint64_t cap) {
  const DualSpace dual(interlaced, cap);
  auto profile = min_dual_weight(dual, WeightSpec::mu(alpha));
  const long bound = static_cast<long>(alpha * m) - static_cast<long>(t_alpha(alpha, t_base, interlaced.dim()));
  const bool pass = !profile.minimum || static_cast<long>(*profile.minimum) >= bound;
  return {std::move(profile), bound, pass};
}

bool verify_order_alpha(const GeneratingMatrixSet& interlaced, std::size_t alpha, std::size_t m,
                        std::size_t t_base, std::uint64_t cap) {
  return check_order_alpha(interlaced, alpha, m, t_base, cap).pass;
}

}  // namespace qmcnet
