#include "qmcnet/net.hpp"

#include <algorithm>
#include <string>

#include "qmcnet/errors.hpp"

namespace qmcnet {

GeneratingMatrixSet::GeneratingMatrixSet(std::vector<FieldMatrix> matrices)
    : matrices_(std::move(matrices)) {
  if (matrices_.empty()) throw ParameterError("a generating matrix set needs at least one matrix");
  const auto& first = matrices_.front();
  for (const auto& c : matrices_) {
    if (c.base() != first.base() || c.rows() != first.rows() || c.cols() != first.cols()) {
      throw ParameterError("generating matrices must share base, rows and columns");
    }
  }
}

namespace {

std::uint64_t net_size(std::uint32_t base, std::size_t m) {
  const auto n = checked_pow(base, m);
  if (!n) throw CapacityError("b^m does not fit in 64 bits");
  return *n;
}

// Numerator over b^precision of the digit vector y (y[0] most significant).
std::uint64_t to_numerator(std::span<const std::uint32_t> y, std::size_t precision,
                           std::uint32_t base) {
  std::uint64_t num = 0;
  for (std::size_t k = 0; k < precision; ++k) num = num * base + (k < y.size() ? y[k] : 0);
  return num;
}

// floor(num * b^d / den) without overflow.
std::uint64_t leading_digits(std::uint64_t num, std::uint64_t den, std::uint64_t b_pow_d) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(num) * b_pow_d / den);
}

}  // namespace

PointSet generate_net_points(const GeneratingMatrixSet& c, Provenance provenance) {
  const std::uint32_t b = c.base();
  const std::size_t m = c.cols();
  const std::size_t p = c.rows();
  const std::uint64_t count = net_size(b, m);

  PointSet points(b, c.dim(), p, m);
  points.reserve(count);
  std::vector<std::uint64_t> row(c.dim());
  for (std::uint64_t n = 0; n < count; ++n) {
    const auto digits = digit_vector_of_index(n, b, m);
    for (std::size_t j = 0; j < c.dim(); ++j) {
      row[j] = to_numerator(c.matrix(j).apply(digits), p, b);
    }
    points.add_point(row);
  }
  points.set_provenance(std::move(provenance));
  return points;
}

FieldMatrix SequenceMatrixSource::block(std::size_t j, std::size_t rows, std::size_t cols) const {
  FieldMatrix out(base(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t l = 0; l < cols; ++l) out.set(r, l, entry(j, r, l));
  return out;
}

PointSet generate_sequence_points(const SequenceMatrixSource& source, std::uint64_t n_from,
                                  std::uint64_t n_to, std::size_t precision,
                                  Provenance provenance) {
  if (n_from > n_to) throw DomainError("sequence range has n_from > n_to");
  const std::uint32_t b = source.base();
  const std::size_t m = n_to == 0 ? 0 : digit_count(n_to - 1, b);

  std::size_t height = 0;
  for (std::size_t l = 0; l < m; ++l) height = std::max(height, source.column_height(l));

  std::vector<FieldMatrix> blocks;
  blocks.reserve(source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) blocks.push_back(source.block(j, height, m));

  PointSet points(b, source.dim(), precision, m);
  points.reserve(n_to - n_from);
  std::vector<std::uint64_t> row(source.dim());
  for (std::uint64_t n = n_from; n < n_to; ++n) {
    const auto digits = digit_vector_of_index(n, b, m);
    for (std::size_t j = 0; j < source.dim(); ++j) {
      const auto y = blocks[j].apply(digits);
      for (std::size_t k = precision; k < y.size(); ++k) {
        if (y[k] != 0) {
          throw PrecisionError("point " + std::to_string(n) + " coordinate " +
                               std::to_string(j + 1) + " has a nonzero digit at position " +
                               std::to_string(k + 1) + " beyond precision " +
                               std::to_string(precision));
        }
      }
      row[j] = to_numerator(y, precision, b);
    }
    points.add_point(row);
  }
  points.set_provenance(std::move(provenance));
  return points;
}

namespace {

bool rows_independent(const GeneratingMatrixSet& c, const std::vector<std::size_t>& d,
                      std::size_t total) {
  FieldMatrix pooled(c.base(), total, c.cols());
  std::size_t r = 0;
  for (std::size_t j = 0; j < c.dim(); ++j) {
    const auto& cj = c.matrix(j);
    for (std::size_t k = 0; k < d[j]; ++k, ++r)
      for (std::size_t l = 0; l < c.cols(); ++l) pooled.set(r, l, cj(k, l));
  }
  return matrix_rank(pooled) == total;
}

bool passes_at(const GeneratingMatrixSet& c, std::size_t t) {
  const std::size_t strength = c.cols() - t;
  bool ok = true;
  for_each_composition(strength, c.dim(), [&](const std::vector<std::size_t>& d) {
    if (ok && !rows_independent(c, d, strength)) ok = false;
  });
  return ok;
}

}  // namespace

std::size_t compute_t_value(const GeneratingMatrixSet& c) {
  if (c.rows() < c.cols()) {
    throw PreconditionError("t-value needs at least as many rows as columns");
  }
  // Independence at strength m-t implies independence at every lower strength,
  // so the first passing t is the t-value.
  for (std::size_t t = 0; t < c.cols(); ++t)
    if (passes_at(c, t)) return t;
  return c.cols();
}

bool is_tms_net(const GeneratingMatrixSet& c, std::size_t t) {
  if (t > c.cols()) throw DomainError("t must not exceed m");
  return compute_t_value(c) <= t;
}

namespace {

std::size_t net_size_log(std::uint64_t n, std::uint32_t b) {
  const auto m = exact_log(n, b);
  if (!m) {
    throw DomainError("point count " + std::to_string(n) + " is not a power of " +
                      std::to_string(b));
  }
  return *m;
}

}  // namespace

bool geometric_net_check(const PointSet& points, std::size_t t) {
  const std::uint32_t b = points.base();
  const std::size_t m = net_size_log(points.size(), b);
  if (t > m) throw DomainError("t must not exceed m");
  const std::size_t strength = m - t;
  const std::uint64_t per_cell = *checked_pow(b, t);
  const std::uint64_t cells = *checked_pow(b, strength);

  std::vector<std::uint64_t> b_pow(strength + 1);
  for (std::size_t i = 0; i <= strength; ++i) b_pow[i] = *checked_pow(b, i);

  bool ok = true;
  std::vector<std::uint64_t> counts(cells);
  for_each_composition(strength, points.dim(), [&](const std::vector<std::size_t>& d) {
    if (!ok) return;
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t n = 0; n < points.size(); ++n) {
      std::uint64_t cell = 0;
      for (std::size_t j = 0; j < points.dim(); ++j) {
        cell = cell * b_pow[d[j]] +
               leading_digits(points.numerator(n, j), points.denominator(j), b_pow[d[j]]);
      }
      ++counts[cell];
    }
    ok = std::all_of(counts.begin(), counts.end(), [&](auto v) { return v == per_cell; });
  });
  return ok;
}

bool first_coordinate_is_0m1_net(const PointSet& points) {
  const std::uint64_t n = points.size();
  net_size_log(n, points.base());
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto cell = leading_digits(points.numerator(i, 0), points.denominator(0), n);
    if (seen[cell]) return false;
    seen[cell] = true;
  }
  return true;
}

}  // namespace qmcnet
