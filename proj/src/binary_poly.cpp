#include "qmcnet/binary_poly.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "qmcnet/errors.hpp"

namespace qmcnet {

BinaryPoly BinaryPoly::from_mask(std::uint64_t mask) {
  BinaryPoly p;
  if (mask != 0) p.words_.push_back(mask);
  return p;
}

BinaryPoly BinaryPoly::monomial(std::size_t degree) {
  BinaryPoly p;
  p.set_coefficient(degree, true);
  return p;
}

long BinaryPoly::degree() const noexcept {
  if (words_.empty()) return -1;
  const auto top = words_.back();
  return static_cast<long>((words_.size() - 1) * 64 + (63 - std::countl_zero(top)));
}

bool BinaryPoly::coefficient(std::size_t i) const noexcept {
  const auto w = i / 64;
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % 64)) & 1u;
}

void BinaryPoly::set_coefficient(std::size_t i, bool value) {
  const auto w = i / 64;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value)
    words_[w] |= bit;
  else
    words_[w] &= ~bit;
  trim();
}

void BinaryPoly::trim() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPoly& BinaryPoly::operator^=(const BinaryPoly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

BinaryPoly& BinaryPoly::shift_up(std::size_t n) {
  if (words_.empty() || n == 0) return *this;
  const std::size_t word_shift = n / 64;
  const unsigned bit_shift = n % 64;
  std::vector<std::uint64_t> out(words_.size() + word_shift + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out[i + word_shift] |= words_[i] << bit_shift;
    if (bit_shift != 0) out[i + word_shift + 1] |= words_[i] >> (64 - bit_shift);
  }
  words_ = std::move(out);
  trim();
  return *this;
}

BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b) {
  BinaryPoly result;
  const long db = b.degree();
  for (long i = 0; i <= db; ++i) {
    if (!b.coefficient(static_cast<std::size_t>(i))) continue;
    BinaryPoly term = a;
    term.shift_up(static_cast<std::size_t>(i));
    result ^= term;
  }
  return result;
}

BinaryPoly operator%(const BinaryPoly& a, const BinaryPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  BinaryPoly r = a;
  const long db = b.degree();
  for (long dr = r.degree(); dr >= db; dr = r.degree()) {
    BinaryPoly shifted = b;
    shifted.shift_up(static_cast<std::size_t>(dr - db));
    r ^= shifted;
  }
  return r;
}

BinaryPoly BinaryPoly::pow(std::size_t e) const {
  BinaryPoly result = from_mask(1);
  BinaryPoly sq = *this;
  while (e != 0) {
    if (e & 1u) result = result * sq;
    e >>= 1;
    if (e != 0) sq = sq * sq;
  }
  return result;
}

int BinaryPoly::root_count() const noexcept {
  if (is_zero()) return 2;
  int roots = 0;
  if (!coefficient(0)) ++roots;  // p(0) = constant term
  int parity = 0;
  for (auto w : words_) parity ^= std::popcount(w) & 1;
  if (parity == 0) ++roots;  // p(1) = number of terms mod 2
  return roots;
}

std::string BinaryPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (long i = degree(); i >= 0; --i) {
    if (!coefficient(static_cast<std::size_t>(i))) continue;
    if (!s.empty()) s += " + ";
    if (i == 0)
      s += "1";
    else if (i == 1)
      s += "x";
    else
      s += "x^" + std::to_string(i);
  }
  return s;
}

bool is_irreducible(const BinaryPoly& p) {
  const long d = p.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  if (p.root_count() != 0) return false;
  // Trial division by every polynomial of degree 2..d/2.
  for (long k = 2; 2 * k <= d; ++k) {
    if (k >= 63) throw CapacityError("irreducibility test limited to degree < 126");
    const std::uint64_t lo = std::uint64_t{1} << k;
    for (std::uint64_t mask = lo; mask < (lo << 1); ++mask) {
      if ((mask & 1u) == 0) continue;  // divisible by x; already excluded
      if ((p % BinaryPoly::from_mask(mask)).is_zero()) return false;
    }
  }
  return true;
}

std::vector<BinaryPoly> irreducible_polys_f2(std::size_t count) {
  if (count == 0) throw DomainError("irreducible_polys_f2 requires count >= 1");
  std::vector<BinaryPoly> out;
  out.push_back(BinaryPoly::from_mask(0b10));
  // Within one degree, order by the coefficient string c_0 c_1 ... c_d read
  // lexicographically, i.e. by the bit-reversed mask.
  for (std::size_t d = 1; out.size() < count; ++d) {
    if (d >= 63) throw CapacityError("irreducible_polys_f2: degree limit reached");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> found;
    for (std::uint64_t mask = std::uint64_t{1} << d; mask < (std::uint64_t{2} << d); ++mask) {
      if (mask == 0b10) continue;
      if (!is_irreducible(BinaryPoly::from_mask(mask))) continue;
      std::uint64_t reversed = 0;
      for (std::size_t i = 0; i <= d; ++i) reversed |= ((mask >> i) & 1u) << (d - i);
      found.emplace_back(reversed, mask);
    }
    std::sort(found.begin(), found.end());
    for (const auto& [key, mask] : found) {
      if (out.size() == count) break;
      out.push_back(BinaryPoly::from_mask(mask));
    }
  }
  return out;
}

}  // namespace qmcnet
