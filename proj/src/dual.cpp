#include "qmcnet/dual.hpp"

#include <string>

#include "qmcnet/errors.hpp"

namespace qmcnet {

namespace {

FieldMatrix stacked_system(const GeneratingMatrixSet& c) {
  const std::size_t p = c.rows();
  FieldMatrix a(c.base(), c.cols(), p * c.dim());
  for (std::size_t j = 0; j < c.dim(); ++j) {
    const auto& cj = c.matrix(j);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t l = 0; l < c.cols(); ++l) a.set(l, j * p + i, cj(i, l));
  }
  return a;
}

}  // namespace

DualSpace::DualSpace(GeneratingMatrixSet matrices, std::uint64_t cap)
    : matrices_(std::move(matrices)), cap_(cap) {
  const auto bound = checked_pow(base(), digits());
  if (!bound) throw CapacityError("dual coordinates b^p do not fit in 64 bits");
  coordinate_bound_ = *bound;

  kernel_ = kernel_basis(stacked_system(matrices_));
  const auto size = checked_pow(base(), kernel_.size());
  if (!size || *size > cap_) {
    throw CapacityError("dual space has " + std::to_string(base()) + "^" +
                        std::to_string(kernel_.size()) + " elements, above cap " +
                        std::to_string(cap_));
  }
  size_ = *size;
}

std::vector<std::uint64_t> DualSpace::elements() const {
  std::vector<std::uint64_t> out;
  out.reserve(size_ * dim());
  for_each([&](std::span<const std::uint64_t> k) { out.insert(out.end(), k.begin(), k.end()); });
  return out;
}

bool DualSpace::in_dual(const GeneratingMatrixSet& c, std::span<const std::uint64_t> k) {
  if (k.size() != c.dim()) throw DomainError("dual vector has wrong dimension");
  const std::uint32_t b = c.base();
  const PrimeField& f = c.matrix(0).field();
  std::vector<std::uint32_t> sum(c.cols(), 0);
  for (std::size_t j = 0; j < c.dim(); ++j) {
    std::uint64_t v = k[j];
    const auto& cj = c.matrix(j);
    for (std::size_t i = 0; i < c.rows() && v != 0; ++i, v /= b) {
      const auto digit = static_cast<std::uint32_t>(v % b);
      if (digit == 0) continue;
      for (std::size_t l = 0; l < c.cols(); ++l) sum[l] = f.add(sum[l], f.mul(digit, cj(i, l)));
    }
  }
  for (auto v : sum)
    if (v != 0) return false;
  return true;
}

DualSpace dual_space(const GeneratingMatrixSet& c, std::uint64_t cap) { return DualSpace(c, cap); }

}  // namespace qmcnet
