#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qmcnet/binary_poly.hpp"
#include "qmcnet/digits.hpp"
#include "qmcnet/net.hpp"
#include "qmcnet/point_set.hpp"

namespace qmcnet {

// ---- Chen-Skriganov and Faure ----

struct CsParams {
  std::uint32_t b = 2;
  std::size_t alpha = 1;
  std::size_t m = 1;
  std::size_t s = 1;
  // s rows of alpha pairwise distinct elements of F_b. Empty selects
  // 0, 1, ..., alpha*s - 1 in row-major order.
  std::vector<std::vector<std::uint32_t>> betas;
};

// s matrices of size alpha*m x alpha*m with
//   c^(i)_{(l-1)m+j, k} = C(k-1, j-1) beta_{i,l}^(k-j),   0^0 = 1.
// ParameterError if b is not prime, b < alpha*s, or betas repeat.
GeneratingMatrixSet cs_matrices(const CsParams& params);

// Faure matrices: the alpha = 1 case with betas 0..s-1.
GeneratingMatrixSet faure_matrices(std::uint32_t b, std::size_t m, std::size_t s);

// Identity generating matrix: the b^m-point van der Corput set.
GeneratingMatrixSet van_der_corput_matrices(std::uint32_t b, std::size_t m);

// ---- Generalized Niederreiter over F_2 ----

struct NiedParams {
  // polys[0] = x, the rest irreducible with nondecreasing degree.
  std::vector<BinaryPoly> polys;

  std::size_t dim() const noexcept { return polys.size(); }
  std::size_t degree(std::size_t j) const { return static_cast<std::size_t>(polys.at(j).degree()); }
};

// The first s polynomials of irreducible_polys_f2.
NiedParams niederreiter_params(std::size_t s);
// Validates the invariants of NiedParams; ParameterError otherwise.
void validate(const NiedParams& params);

// c_{j,k,l} for 1-based j, k, l: coefficient of x^(-l) in the Laurent
// expansion of x^(e_j - z - 1) / p_j(x)^i, where k - 1 = (i-1) e_j + z.
std::uint32_t niederreiter_matrix_entry(const NiedParams& params, std::size_t j, std::size_t k,
                                        std::size_t l);

// sum_j (e_j - 1)
std::size_t niederreiter_t_bound(const NiedParams& params);

// Upper-left rows x cols blocks of C_1..C_s.
GeneratingMatrixSet niederreiter_matrices(const NiedParams& params, std::size_t rows,
                                          std::size_t cols);

// The first `max_cols` columns of each C_j, precomputed. The matrices are
// upper triangular, so column l (0-based) has height l + 1.
class NiederreiterSource final : public SequenceMatrixSource {
 public:
  NiederreiterSource(NiedParams params, std::size_t max_cols);

  std::uint32_t base() const override { return 2; }
  std::size_t dim() const override { return params_.dim(); }
  std::size_t column_height(std::size_t col) const override;
  std::uint32_t entry(std::size_t j, std::size_t row, std::size_t col) const override;

  const NiedParams& params() const noexcept { return params_; }
  std::size_t max_cols() const noexcept { return max_cols_; }

 private:
  NiedParams params_;
  std::size_t max_cols_;
  // rows_[j][k] holds row k of C_j as a column mask.
  std::vector<std::vector<std::vector<std::uint8_t>>> rows_;
};

// ---- Digit interlacing (base 2) ----

// D_alpha(x_1, ..., x_alpha): digit a of x_r lands at position
// r + (a-1) alpha. Output precision is alpha times the longest input.
DigitVector interlace_point(std::span<const DigitVector> xs);

// D_alpha^s applied to every point of a digital base-2 set in dimension
// alpha*s.
PointSet interlace_points(const PointSet& points, std::size_t alpha);

// Row k = u*alpha + v of E_j is row u+1 of C_{(j-1)alpha+v}; E_j has
// alpha*p rows.
GeneratingMatrixSet interlace_matrices(const GeneratingMatrixSet& c, std::size_t alpha);

// Matrix-level interlacing of an infinite sequence source.
class InterlacedSource final : public SequenceMatrixSource {
 public:
  InterlacedSource(std::shared_ptr<const SequenceMatrixSource> inner, std::size_t alpha);

  std::uint32_t base() const override { return inner_->base(); }
  std::size_t dim() const override { return inner_->dim() / alpha_; }
  std::size_t column_height(std::size_t col) const override;
  std::uint32_t entry(std::size_t j, std::size_t row, std::size_t col) const override;

 private:
  std::shared_ptr<const SequenceMatrixSource> inner_;
  std::size_t alpha_;
};

// ---- Optimal-order constructions ----

// Generating matrices of D_alpha^s applied to the m x m Niederreiter net in
// dimension alpha*s.
GeneratingMatrixSet dp_net_matrices(std::size_t alpha, std::size_t m, std::size_t s);
PointSet dp_net(std::size_t alpha, std::size_t m, std::size_t s);

// Generating matrices of the 2^m-point set D_3^s(y_n) with
// y_n = (n 2^-m, x_{1,n}, ..., x_{3s-1,n}).
GeneratingMatrixSet dp_finite_matrices(std::size_t m, std::size_t s);
// The 2^m-point set before trimming; ConsistencyError if its first
// coordinate is not a (0,m,1)-net.
PointSet dp_finite_full(std::size_t m, std::size_t s);
// N points for any N >= 2, via arbitrary_n_trim of dp_finite_full.
PointSet dp_finite_pointset(std::uint64_t n, std::size_t s);

// First n_max points of D_5^s applied to the 5s-dimensional Niederreiter
// sequence.
PointSet dp_sequence(std::size_t s, std::uint64_t n_max);

// Keep the points with x_1 < N b^-m and scale x_1 by b^m / N. Requires
// b^(m-1) < N <= b^m and a (0,m,1)-net first coordinate
// (PreconditionError otherwise).
PointSet arbitrary_n_trim(const PointSet& points, std::uint64_t n);

// ---- Davenport's symmetrized set ----

// Periodic continued fraction [a0; period, period, ...].
struct ContinuedFraction {
  std::uint64_t a0 = 0;
  std::vector<std::uint64_t> period{1};

  static ContinuedFraction golden_ratio() { return {1, {1}}; }
  static ContinuedFraction sqrt2() { return {1, {2}}; }
};

// Convergent p/q of the continued fraction with the smallest q > min_q.
struct Convergent {
  std::uint64_t p;
  std::uint64_t q;
};
Convergent convergent_exceeding(const ContinuedFraction& cf, std::uint64_t min_q);

// 2M points ({n a}, n/M) and ({-n a}, n/M) for n = 1..M, with a replaced by
// a convergent whose denominator exceeds M^2 and n/M = 1 wrapped to 0.
PointSet davenport_symmetrized(const ContinuedFraction& cf, std::uint64_t big_m);

}  // namespace qmcnet
