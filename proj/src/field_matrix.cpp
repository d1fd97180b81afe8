#include "qmcnet/field_matrix.hpp"

#include <string>
#include <utility>

#include "qmcnet/errors.hpp"

namespace qmcnet {

FieldMatrix::FieldMatrix(std::uint32_t base, std::size_t rows, std::size_t cols)
    : field_(base), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix::FieldMatrix(std::uint32_t base,
                         std::initializer_list<std::initializer_list<std::uint32_t>> rows)
    : field_(base), rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    for (auto v : r) {
      if (v >= base) throw DomainError("matrix entry " + std::to_string(v) + " not reduced mod base");
      data_.push_back(v);
    }
  }
}

FieldMatrix FieldMatrix::identity(std::uint32_t base, std::size_t n) {
  FieldMatrix m(base, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

void FieldMatrix::set(std::size_t r, std::size_t c, std::uint32_t v) {
  if (r >= rows_ || c >= cols_) throw DomainError("matrix index out of range");
  data_[r * cols_ + c] = field_.reduce(v);
}

FieldElem FieldMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DomainError("matrix index out of range");
  return FieldElem(data_[r * cols_ + c], base());
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix t(base(), cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

FieldMatrix FieldMatrix::top_left(std::size_t rows, std::size_t cols) const {
  if (rows > rows_ || cols > cols_) throw DomainError("top_left larger than matrix");
  FieldMatrix t(base(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.data_[r * cols + c] = data_[r * cols_ + c];
  return t;
}

std::vector<std::uint32_t> FieldMatrix::apply(std::span<const std::uint32_t> x) const {
  if (x.size() != cols_) throw DomainError("vector length does not match matrix columns");
  std::vector<std::uint32_t> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const std::uint32_t* row = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) acc += std::uint64_t{row[c]} * x[c];
    y[r] = field_.reduce(acc);
  }
  return y;
}

std::ostream& operator<<(std::ostream& os, const FieldMatrix& m) {
  for (std::size_t r = 0; r < m.rows_; ++r) {
    for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os;
}

namespace {

struct Echelon {
  std::vector<std::uint32_t> data;  // reduced row echelon form, row-major
  std::vector<std::size_t> pivot_cols;
};

Echelon reduce(const FieldMatrix& m) {
  const auto& f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Echelon e;
  e.data.resize(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) e.data[r * cols + c] = m(r, c);

  auto at = [&](std::size_t r, std::size_t c) -> std::uint32_t& { return e.data[r * cols + c]; };

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && at(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(sel, k), at(pivot_row, k));
    const std::uint32_t scale = f.inv(at(pivot_row, c));
    for (std::size_t k = c; k < cols; ++k) at(pivot_row, k) = f.mul(at(pivot_row, k), scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      const std::uint32_t factor = at(r, c);
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k)
        at(r, k) = f.sub(at(r, k), f.mul(factor, at(pivot_row, k)));
    }
    e.pivot_cols.push_back(c);
    ++pivot_row;
  }
  return e;
}

}  // namespace

std::size_t matrix_rank(const FieldMatrix& m) { return reduce(m).pivot_cols.size(); }

std::vector<std::vector<std::uint32_t>> kernel_basis(const FieldMatrix& m) {
  const auto& f = m.field();
  const std::size_t cols = m.cols();
  const Echelon e = reduce(m);

  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      v[e.pivot_cols[r]] = f.neg(e.data[r * cols + free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qmcnet
