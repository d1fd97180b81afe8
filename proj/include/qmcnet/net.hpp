#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qmcnet/field_matrix.hpp"
#include "qmcnet/point_set.hpp"

namespace qmcnet {

// Generating matrices C_1..C_s of a digital net: s matrices over F_b with
// p rows (output digits) and m columns (index digits).
class GeneratingMatrixSet {
 public:
  explicit GeneratingMatrixSet(std::vector<FieldMatrix> matrices);

  std::uint32_t base() const noexcept { return matrices_.front().base(); }
  std::size_t dim() const noexcept { return matrices_.size(); }
  std::size_t rows() const noexcept { return matrices_.front().rows(); }
  std::size_t cols() const noexcept { return matrices_.front().cols(); }
  const FieldMatrix& matrix(std::size_t j) const { return matrices_.at(j); }
  const std::vector<FieldMatrix>& matrices() const noexcept { return matrices_; }

  friend bool operator==(const GeneratingMatrixSet&, const GeneratingMatrixSet&) = default;

 private:
  std::vector<FieldMatrix> matrices_;
};

// All b^m points; coordinate j of point n has digits C_j n.
PointSet generate_net_points(const GeneratingMatrixSet& c, Provenance provenance = {});

// Infinite generating matrices of a digital sequence, given entry-wise.
// Indices are 0-based: entry(j, k, l) is row k, column l of C_j.
class SequenceMatrixSource {
 public:
  virtual ~SequenceMatrixSource() = default;

  virtual std::uint32_t base() const = 0;
  virtual std::size_t dim() const = 0;
  // Number of leading rows of column `col` that may be nonzero (K(l) for
  // the 0-based column l).
  virtual std::size_t column_height(std::size_t col) const = 0;
  virtual std::uint32_t entry(std::size_t j, std::size_t row, std::size_t col) const = 0;

  // Top-left rows x cols block of C_j.
  virtual FieldMatrix block(std::size_t j, std::size_t rows, std::size_t cols) const;
};

// Points n_from..n_to-1 with `precision` digits per coordinate. Throws
// PrecisionError if a nonzero digit beyond `precision` would be dropped.
PointSet generate_sequence_points(const SequenceMatrixSource& source, std::uint64_t n_from,
                                  std::uint64_t n_to, std::size_t precision,
                                  Provenance provenance = {});

// Smallest t such that for every d_1+...+d_s = m-t the first d_j rows of
// each C_j are jointly linearly independent. Requires rows >= cols.
std::size_t compute_t_value(const GeneratingMatrixSet& c);
bool is_tms_net(const GeneratingMatrixSet& c, std::size_t t);

// Direct counting: every elementary interval of volume b^(t-m) holds
// exactly b^t points. DomainError unless |P| is a power of the base.
bool geometric_net_check(const PointSet& points, std::size_t t);

// |{x_1,n} ∩ [0, r b^-m)| = r for every r, where |P| = b^m.
bool first_coordinate_is_0m1_net(const PointSet& points);

// Calls f(d) for every composition d_1+...+d_parts = total, d_j >= 0.
template <class F>
void for_each_composition(std::size_t total, std::size_t parts, F&& f) {
  std::vector<std::size_t> d(parts, 0);
  auto rec = [&](auto&& self, std::size_t j, std::size_t remaining) -> void {
    if (j + 1 == parts) {
      d[j] = remaining;
      f(static_cast<const std::vector<std::size_t>&>(d));
      return;
    }
    for (std::size_t v = 0; v <= remaining; ++v) {
      d[j] = v;
      self(self, j + 1, remaining - v);
    }
  };
  if (parts == 0) {
    if (total == 0) f(static_cast<const std::vector<std::size_t>&>(d));
    return;
  }
  rec(rec, 0, total);
}

}  // namespace qmcnet
