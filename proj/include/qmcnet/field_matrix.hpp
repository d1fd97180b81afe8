#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "qmcnet/field.hpp"

namespace qmcnet {

// Dense row-major matrix over F_b. Entries are stored as residues; the
// FieldElem accessor re-attaches the base.
class FieldMatrix {
 public:
  FieldMatrix(std::uint32_t base, std::size_t rows, std::size_t cols);
  // Rows given as residues; all rows must have equal length and every
  // entry must be < base.
  FieldMatrix(std::uint32_t base, std::initializer_list<std::initializer_list<std::uint32_t>> rows);

  static FieldMatrix identity(std::uint32_t base, std::size_t n);

  std::uint32_t base() const noexcept { return field_.base(); }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint32_t v);
  FieldElem at(std::size_t r, std::size_t c) const;

  std::span<const std::uint32_t> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  FieldMatrix transposed() const;
  // First `rows` rows and `cols` columns.
  FieldMatrix top_left(std::size_t rows, std::size_t cols) const;

  // y = M x over F_b; x.size() must equal cols().
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> x) const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FieldMatrix& m);

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

std::size_t matrix_rank(const FieldMatrix& m);

// Basis of {v : M v = 0}; size is cols - rank. Each basis vector has a 1
// in exactly one free column and zeros in the other free columns.
std::vector<std::vector<std::uint32_t>> kernel_basis(const FieldMatrix& m);

}  // namespace qmcnet
