#include "qmcnet/walsh.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qmcnet/errors.hpp"

namespace qmcnet {

std::uint32_t walsh_exponent(std::uint64_t k, const DigitVector& x) {
  const std::uint32_t b = x.base();
  std::uint64_t e = 0;
  for (std::size_t i = 1; k != 0; ++i, k /= b) e += (k % b) * x.digit(i);
  return static_cast<std::uint32_t>(e % b);
}

std::complex<double> root_of_unity(std::uint32_t b, std::uint32_t e) {
  e %= b;
  if (e == 0) return {1.0, 0.0};
  if (2 * e == b) return {-1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * e / b;
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> walsh_eval(std::uint64_t k, const DigitVector& x) {
  return root_of_unity(x.base(), walsh_exponent(k, x));
}

std::complex<double> char_property_sum(const PointSet& points, std::span<const std::uint64_t> k) {
  if (k.size() != points.dim()) throw DomainError("Walsh index has wrong dimension");
  if (!points.is_digital()) throw DomainError("character sums need digit-exact coordinates");
  if (points.empty()) throw DomainError("character sum over an empty point set");
  const std::uint32_t b = points.base();
  const std::size_t p = points.precision();

  // Digits of each k_j, most significant fractional digit of x first.
  std::vector<std::vector<std::uint32_t>> kappa(points.dim(), std::vector<std::uint32_t>(p, 0));
  for (std::size_t j = 0; j < points.dim(); ++j) {
    std::uint64_t v = k[j];
    for (std::size_t i = 0; i < p && v != 0; ++i, v /= b) kappa[j][i] = v % b;
  }

  // Histogram of total exponents, then one root of unity per class.
  std::vector<std::uint64_t> histogram(b, 0);
  for (std::size_t n = 0; n < points.size(); ++n) {
    std::uint64_t e = 0;
    for (std::size_t j = 0; j < points.dim(); ++j) {
      std::uint64_t x = points.numerator(n, j);
      // Digit x_{i+1} pairs with kappa_i; x_p is the lowest base-b digit.
      for (std::size_t i = p; i-- > 0; x /= b) e += std::uint64_t{kappa[j][i]} * (x % b);
    }
    ++histogram[e % b];
  }
  std::complex<double> sum{0.0, 0.0};
  for (std::uint32_t e = 0; e < b; ++e) {
    if (histogram[e] != 0) sum += static_cast<double>(histogram[e]) * root_of_unity(b, e);
  }
  return sum / static_cast<double>(points.size());
}

}  // namespace qmcnet
