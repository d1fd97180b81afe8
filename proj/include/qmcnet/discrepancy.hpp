#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qmcnet/point_set.hpp"

namespace qmcnet {

enum class DiscrepancyMethod { exact_pairwise, exact_rational, estimated };

std::string to_string(DiscrepancyMethod method);

struct DiscrepancyReport {
  std::string family;
  std::string params;
  std::uint64_t n = 0;
  std::size_t s = 0;
  double q = 2.0;
  DiscrepancyMethod method = DiscrepancyMethod::exact_pairwise;
  double value = 0.0;
  double std_error = 0.0;  // estimates only
  // N L_q / (c_s (log N)^((s-1)/2)); NaN when N < 2 or q < 2.
  double roth_ratio = 0.0;
  std::uint64_t sum_of_digits = 0;
};

// A_N([0,t), P)/N - t_1 ... t_s with the half-open box [0,t).
double local_discrepancy(const PointSet& points, std::span<const double> t);

// Squared L_2 discrepancy by the pairwise closed form
//   3^-s - (2^(1-s)/N) sum_n prod_j (1 - x_{j,n}^2)
//        + (1/N^2) sum_{n,n'} prod_j (1 - max(x_{j,n}, x_{j,n'}))
// with compensated summation. Rows are split into fixed blocks, so the
// result does not depend on `threads`.
double l2_squared(const PointSet& points, std::size_t threads = 1);
DiscrepancyReport l2_exact(const PointSet& points, std::size_t threads = 1);

// L_2 of every prefix: element i is the discrepancy of the first i+1
// points. O(N^2 s).
std::vector<double> l2_prefix_profile(const PointSet& points);

using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kRationalMaxPoints = 64;
inline constexpr std::size_t kRationalMaxDim = 3;

// The same closed form in exact rational arithmetic (squared value).
// CapacityError beyond kRationalMaxPoints points or kRationalMaxDim axes.
Rational l2_exact_rational(const PointSet& points);

struct LqOptions {
  std::size_t samples = 1u << 16;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
};

// Stratified Monte Carlo estimate of (int |Delta|^q)^(1/q). The cube is
// split into 2^(sL) dyadic boxes with the largest L that leaves at least two
// samples per box. The standard error of the integral is propagated to the
// q-th root by the delta method.
DiscrepancyReport lq_estimate(const PointSet& points, double q, const LqOptions& options = {});

// 7 / (27 2^(2s-1) (log 2)^((s-1)/2) sqrt((s-1)!))
double roth_constant(std::size_t s);

struct RothBound {
  double value;
  // False for q < 2, where the constant is not explicit; value is then 0.
  bool constant_known;
};
RothBound roth_lower_bound(std::size_t s, std::uint64_t n, double q);
double roth_ratio(double value, std::uint64_t n, std::size_t s, double q);

// Number of ones in the binary expansion; DomainError for n == 0.
std::uint64_t sum_of_digits(std::uint64_t n);

// N = 2..min(256, n_max), then powers of two and 2^k - 1 up to n_max.
std::vector<std::uint64_t> profile_grid(std::uint64_t n_max);

struct SequenceProfileRow {
  std::uint64_t n;
  double value;
  double std_error;
  std::uint64_t s_n;
  // N L / ((log N)^((s-1)/2) sqrt(S(N)))
  double ratio;
  // N L / (r^(3/2 - 1/q) sqrt(sum_v m_v^(s-1))) with N = sum_v 2^(m_v)
  double lq_seq_ratio;
};

struct SequenceProfile {
  std::size_t s = 0;
  double q = 2.0;
  std::vector<SequenceProfileRow> rows;
};

// Profile of the prefixes of `sequence` on profile_grid(sequence.size()).
// q == 2 uses the exact prefix recursion, other q the estimator.
SequenceProfile sequence_profile(const PointSet& sequence, double q, const LqOptions& options = {});

struct Lemma6Result {
  double lhs;  // N L_2 of the trimmed set
  double rhs;  // sqrt(b) b^m L_2 of the full set
  bool pass;
};
Lemma6Result lemma6_check(const PointSet& full, std::uint64_t n, std::size_t threads = 1);
bool lemma6_inequality_check(const PointSet& full, std::uint64_t n, std::size_t threads = 1);

// First N points with k/N appended as coordinate s+1.
PointSet append_index_coordinate(const PointSet& prefix, std::uint64_t n);

// CSV: family,params,N,s,q,method,value,stderr,roth_ratio,S_N
void write_report_header(std::ostream& os);
void write_report_row(std::ostream& os, const DiscrepancyReport& report);
std::string format_double(double v);

}  // namespace qmcnet
