#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qmcnet/net.hpp"

namespace qmcnet {

// Dual net D(C_1..C_s) = {k : C_1^T k_1 + ... + C_s^T k_s = 0}, where k_j is
// the vector of the first p base-b digits of k_j (least significant first).
// Elements are enumerated inside {0..b^p-1}^s by spanning the kernel of the
// stacked m x (p s) system.
class DualSpace {
 public:
  // CapacityError if b^dim(kernel) exceeds `cap`.
  DualSpace(GeneratingMatrixSet matrices, std::uint64_t cap);

  const GeneratingMatrixSet& matrices() const noexcept { return matrices_; }
  std::uint32_t base() const noexcept { return matrices_.base(); }
  std::size_t dim() const noexcept { return matrices_.dim(); }
  std::size_t digits() const noexcept { return matrices_.rows(); }
  // b^digits(): coordinates of enumerated elements are below this bound.
  std::uint64_t coordinate_bound() const noexcept { return coordinate_bound_; }
  std::uint64_t cap() const noexcept { return cap_; }

  // Kernel basis; component j * digits() + i is digit i of coordinate j.
  const std::vector<std::vector<std::uint32_t>>& kernel() const noexcept { return kernel_; }
  // Number of enumerated elements, b^kernel().size(), zero vector included.
  std::uint64_t size() const noexcept { return size_; }

  // f(std::span<const std::uint64_t> k) for every element, zero first.
  template <class F>
  void for_each(F&& f) const;

  // Flattened size() x dim() array in enumeration order.
  std::vector<std::uint64_t> elements() const;

  bool contains(std::span<const std::uint64_t> k) const { return in_dual(matrices_, k); }

  // Substitution check of the defining system (uses the first p digits of
  // each coordinate).
  static bool in_dual(const GeneratingMatrixSet& c, std::span<const std::uint64_t> k);

 private:
  GeneratingMatrixSet matrices_;
  std::uint64_t cap_;
  std::uint64_t coordinate_bound_;
  std::vector<std::vector<std::uint32_t>> kernel_;
  std::uint64_t size_;
};

DualSpace dual_space(const GeneratingMatrixSet& c, std::uint64_t cap);

template <class F>
void DualSpace::for_each(F&& f) const {
  const std::uint32_t b = base();
  const std::size_t p = digits();
  const std::size_t s = dim();
  const PrimeField& field = matrices_.matrix(0).field();

  std::vector<std::uint32_t> current(p * s, 0);
  std::vector<std::uint32_t> coeff(kernel_.size(), 0);
  std::vector<std::uint64_t> k(s, 0);

  auto emit = [&] {
    for (std::size_t j = 0; j < s; ++j) {
      std::uint64_t v = 0;
      for (std::size_t i = p; i-- > 0;) v = v * b + current[j * p + i];
      k[j] = v;
    }
    f(std::span<const std::uint64_t>(k));
  };

  emit();
  // Odometer over kernel coefficients; each step adds one basis vector per
  // carried position, so the running sum always equals sum coeff[i] * v_i.
  for (std::uint64_t step = 1; step < size_; ++step) {
    std::size_t i = 0;
    while (true) {
      const auto& v = kernel_[i];
      for (std::size_t c = 0; c < current.size(); ++c) current[c] = field.add(current[c], v[c]);
      if (++coeff[i] < b) break;
      coeff[i] = 0;
      ++i;
    }
    emit();
  }
}

}  // namespace qmcnet
