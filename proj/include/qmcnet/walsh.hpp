#pragma once

#include <complex>
#include <cstdint>
#include <span>

#include "qmcnet/digits.hpp"
#include "qmcnet/point_set.hpp"

namespace qmcnet {

// Exponent e of wal_k(x) = omega_b^e: sum of kappa_i * x_{i+1} mod b, where
// k = sum kappa_i b^i and x = sum x_i b^-i.
std::uint32_t walsh_exponent(std::uint64_t k, const DigitVector& x);

// omega_b^e with omega_b = exp(2 pi i / b). Exact for b = 2 and for e = 0.
std::complex<double> root_of_unity(std::uint32_t b, std::uint32_t e);

std::complex<double> walsh_eval(std::uint64_t k, const DigitVector& x);

// (1/N) sum_n wal_k(x_n) for a point set whose axes are all digital.
std::complex<double> char_property_sum(const PointSet& points, std::span<const std::uint64_t> k);

}  // namespace qmcnet
