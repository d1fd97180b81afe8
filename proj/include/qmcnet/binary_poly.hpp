#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qmcnet {

// Polynomial over F_2. Bit i holds the coefficient of x^i. The word vector
// is kept trimmed so equal polynomials compare equal.
class BinaryPoly {
 public:
  BinaryPoly() = default;
  // Coefficients of x^0..x^63 from the bits of `mask`.
  static BinaryPoly from_mask(std::uint64_t mask);
  static BinaryPoly monomial(std::size_t degree);

  bool is_zero() const noexcept { return words_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept;
  bool coefficient(std::size_t i) const noexcept;
  void set_coefficient(std::size_t i, bool value);

  // Low 64 coefficients as a mask; the caller must know degree < 64.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  BinaryPoly& operator^=(const BinaryPoly& other);
  BinaryPoly& shift_up(std::size_t n);  // multiply by x^n

  friend BinaryPoly operator+(BinaryPoly a, const BinaryPoly& b) { return a ^= b; }
  friend BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b);
  friend BinaryPoly operator%(const BinaryPoly& a, const BinaryPoly& b);
  friend bool operator==(const BinaryPoly&, const BinaryPoly&) = default;

  BinaryPoly pow(std::size_t e) const;

  // Number of roots in F_2 (0, 1 or 2).
  int root_count() const noexcept;

  // e.g. "x^3 + x + 1"
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const BinaryPoly& p) {
    return os << p.to_string();
  }

 private:
  void trim() noexcept;
  std::vector<std::uint64_t> words_;
};

bool is_irreducible(const BinaryPoly& p);

// p_1 = x, followed by the irreducible polynomials over F_2 other than x in
// increasing degree; equal degrees are ordered lexicographically on the
// coefficient string c_0 c_1 ... c_d (x^3 + x^2 + 1 before x^3 + x + 1).
std::vector<BinaryPoly> irreducible_polys_f2(std::size_t count);

}  // namespace qmcnet
