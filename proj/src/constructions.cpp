#include "qmcnet/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "qmcnet/errors.hpp"
#include "qmcnet/field.hpp"

namespace qmcnet {

namespace {

std::string kv(const char* key, std::uint64_t v) { return std::string(key) + "=" + std::to_string(v); }

std::string join_params(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ';';
    out += p;
  }
  return out;
}

// Coefficients a_1..a_len of num / den in F_2((x^-1)), deg num < deg den.
std::vector<std::uint8_t> laurent_coefficients(BinaryPoly num, const BinaryPoly& den,
                                               std::size_t len) {
  const long d = den.degree();
  std::vector<std::uint8_t> out(len, 0);
  for (std::size_t l = 0; l < len; ++l) {
    num.shift_up(1);
    if (num.degree() == d) {
      out[l] = 1;
      num ^= den;
    }
  }
  return out;
}

// Row k (1-based) of C_j over its first `len` columns.
std::vector<std::uint8_t> niederreiter_row(const BinaryPoly& p, std::size_t k, std::size_t len) {
  const auto e = static_cast<std::size_t>(p.degree());
  const std::size_t i = (k - 1) / e + 1;
  const std::size_t z = (k - 1) % e;
  return laurent_coefficients(BinaryPoly::monomial(e - z - 1), p.pow(i), len);
}

}  // namespace

// ---- Chen-Skriganov and Faure ----

GeneratingMatrixSet cs_matrices(const CsParams& params) {
  const std::uint32_t b = params.b;
  if (!is_prime(b) || b > PrimeField::kMaxBase) {
    throw ParameterError("chen-skriganov: base " + std::to_string(b) + " is not a supported prime");
  }
  if (params.alpha == 0 || params.m == 0 || params.s == 0) {
    throw ParameterError("chen-skriganov: alpha, m and s must be positive");
  }
  const std::size_t alpha = params.alpha, m = params.m, s = params.s;
  if (std::uint64_t{b} < alpha * s) {
    throw ParameterError("chen-skriganov: requires b >= alpha*s (b=" + std::to_string(b) +
                         ", alpha*s=" + std::to_string(alpha * s) + ")");
  }

  std::vector<std::vector<std::uint32_t>> betas = params.betas;
  if (betas.empty()) {
    betas.assign(s, std::vector<std::uint32_t>(alpha));
    std::uint32_t next = 0;
    for (auto& row : betas)
      for (auto& v : row) v = next++;
  }
  if (betas.size() != s) throw ParameterError("chen-skriganov: betas must have s rows");
  std::set<std::uint32_t> seen;
  for (const auto& row : betas) {
    if (row.size() != alpha) throw ParameterError("chen-skriganov: each betas row needs alpha entries");
    for (auto v : row) {
      if (v >= b) throw ParameterError("chen-skriganov: beta " + std::to_string(v) + " not in F_b");
      if (!seen.insert(v).second) {
        throw ParameterError("chen-skriganov: beta " + std::to_string(v) + " repeated");
      }
    }
  }

  const PrimeField f(b);
  const std::size_t n = alpha * m;
  std::vector<FieldMatrix> out;
  out.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    FieldMatrix c(b, n, n);
    for (std::size_t l = 1; l <= alpha; ++l) {
      const std::uint32_t beta = betas[i][l - 1];
      for (std::size_t j = 1; j <= m; ++j) {
        for (std::size_t k = j; k <= n; ++k) {
          const auto binom = binomial_mod_p(k - 1, j - 1, b).value();
          c.set((l - 1) * m + j - 1, k - 1, f.mul(binom, f.pow(beta, k - j)));
        }
      }
    }
    out.push_back(std::move(c));
  }
  return GeneratingMatrixSet(std::move(out));
}

GeneratingMatrixSet faure_matrices(std::uint32_t b, std::size_t m, std::size_t s) {
  if (!is_prime(b) || b > PrimeField::kMaxBase) {
    throw ParameterError("faure: base " + std::to_string(b) + " is not a supported prime");
  }
  if (b < s) throw ParameterError("faure: requires b >= s");
  return cs_matrices(CsParams{b, 1, m, s, {}});
}

GeneratingMatrixSet van_der_corput_matrices(std::uint32_t b, std::size_t m) {
  if (m == 0) throw ParameterError("van der corput: m must be positive");
  return GeneratingMatrixSet({FieldMatrix::identity(b, m)});
}

// ---- Generalized Niederreiter ----

NiedParams niederreiter_params(std::size_t s) {
  if (s == 0) throw ParameterError("niederreiter: dimension must be positive");
  return NiedParams{irreducible_polys_f2(s)};
}

void validate(const NiedParams& params) {
  if (params.polys.empty()) throw ParameterError("niederreiter: no polynomials");
  if (params.polys[0] != BinaryPoly::monomial(1)) throw ParameterError("niederreiter: p_1 must be x");
  for (std::size_t j = 1; j < params.polys.size(); ++j) {
    if (!is_irreducible(params.polys[j])) {
      throw ParameterError("niederreiter: p_" + std::to_string(j + 1) + " is not irreducible");
    }
    if (j >= 2 && params.polys[j].degree() < params.polys[j - 1].degree()) {
      throw ParameterError("niederreiter: degrees must be nondecreasing");
    }
  }
}

std::uint32_t niederreiter_matrix_entry(const NiedParams& params, std::size_t j, std::size_t k,
                                        std::size_t l) {
  if (j < 1 || j > params.dim() || k < 1 || l < 1) {
    throw DomainError("niederreiter_matrix_entry: indices are 1-based and j <= s");
  }
  if (k > l) return 0;
  return niederreiter_row(params.polys[j - 1], k, l)[l - 1];
}

std::size_t niederreiter_t_bound(const NiedParams& params) {
  std::size_t t = 0;
  for (std::size_t j = 0; j < params.dim(); ++j) t += params.degree(j) - 1;
  return t;
}

NiederreiterSource::NiederreiterSource(NiedParams params, std::size_t max_cols)
    : params_(std::move(params)), max_cols_(max_cols) {
  validate(params_);
  rows_.resize(params_.dim());
  for (std::size_t j = 0; j < params_.dim(); ++j) {
    rows_[j].reserve(max_cols_);
    for (std::size_t k = 1; k <= max_cols_; ++k) {
      rows_[j].push_back(niederreiter_row(params_.polys[j], k, max_cols_));
    }
  }
}

std::size_t NiederreiterSource::column_height(std::size_t col) const {
  if (col >= max_cols_) throw CapacityError("niederreiter source: column beyond precomputed range");
  return col + 1;
}

std::uint32_t NiederreiterSource::entry(std::size_t j, std::size_t row, std::size_t col) const {
  if (col >= max_cols_) throw CapacityError("niederreiter source: column beyond precomputed range");
  if (row > col) return 0;
  return rows_.at(j)[row][col];
}

GeneratingMatrixSet niederreiter_matrices(const NiedParams& params, std::size_t rows,
                                          std::size_t cols) {
  if (rows == 0 || cols == 0) throw ParameterError("niederreiter: matrix size must be positive");
  const NiederreiterSource src(params, std::max(rows, cols));
  std::vector<FieldMatrix> out;
  out.reserve(params.dim());
  for (std::size_t j = 0; j < params.dim(); ++j) out.push_back(src.block(j, rows, cols));
  return GeneratingMatrixSet(std::move(out));
}

// ---- Digit interlacing ----

DigitVector interlace_point(std::span<const DigitVector> xs) {
  if (xs.empty()) throw DomainError("interlace_point: no inputs");
  std::size_t prec = 0;
  for (const auto& x : xs) {
    if (x.base() != 2) throw DomainError("interlace_point: digit interlacing is defined for base 2");
    prec = std::max(prec, x.size());
  }
  const std::size_t alpha = xs.size();
  std::vector<std::uint32_t> out(alpha * prec, 0);
  for (std::size_t r = 0; r < alpha; ++r) {
    for (std::size_t a = 0; a < xs[r].size(); ++a) out[a * alpha + r] = xs[r].digits()[a];
  }
  return DigitVector(2, std::move(out));
}

PointSet interlace_points(const PointSet& points, std::size_t alpha) {
  if (points.base() != 2) throw DomainError("interlace_points: digit interlacing is defined for base 2");
  if (alpha == 0 || points.dim() % alpha != 0) {
    throw ParameterError("interlace_points: dimension " + std::to_string(points.dim()) +
                         " is not a multiple of alpha=" + std::to_string(alpha));
  }
  const std::size_t s = points.dim() / alpha;
  PointSet out(2, s, alpha * points.precision(), points.m());
  out.reserve(points.size());
  std::vector<DigitVector> group;
  std::vector<std::uint64_t> nums(s);
  for (std::size_t n = 0; n < points.size(); ++n) {
    for (std::size_t j = 0; j < s; ++j) {
      group.clear();
      for (std::size_t v = 0; v < alpha; ++v) group.push_back(points.digits(n, j * alpha + v));
      nums[j] = interlace_point(group).numerator();
    }
    out.add_point(nums);
  }
  Provenance prov = points.provenance();
  prov.params += (prov.params.empty() ? "" : ";") + kv("interlace", alpha);
  out.set_provenance(std::move(prov));
  return out;
}

GeneratingMatrixSet interlace_matrices(const GeneratingMatrixSet& c, std::size_t alpha) {
  if (alpha == 0 || c.dim() % alpha != 0) {
    throw ParameterError("interlace_matrices: dimension " + std::to_string(c.dim()) +
                         " is not a multiple of alpha=" + std::to_string(alpha));
  }
  const std::size_t s = c.dim() / alpha;
  const std::size_t p = c.rows();
  std::vector<FieldMatrix> out;
  out.reserve(s);
  for (std::size_t j = 0; j < s; ++j) {
    FieldMatrix e(c.base(), alpha * p, c.cols());
    for (std::size_t u = 0; u < p; ++u) {
      for (std::size_t v = 0; v < alpha; ++v) {
        const auto src = c.matrix(j * alpha + v).row(u);
        for (std::size_t l = 0; l < c.cols(); ++l) e.set(u * alpha + v, l, src[l]);
      }
    }
    out.push_back(std::move(e));
  }
  return GeneratingMatrixSet(std::move(out));
}

InterlacedSource::InterlacedSource(std::shared_ptr<const SequenceMatrixSource> inner,
                                   std::size_t alpha)
    : inner_(std::move(inner)), alpha_(alpha) {
  if (!inner_) throw ParameterError("interlaced source: no inner source");
  if (alpha_ == 0 || inner_->dim() % alpha_ != 0) {
    throw ParameterError("interlaced source: dimension " + std::to_string(inner_->dim()) +
                         " is not a multiple of alpha=" + std::to_string(alpha_));
  }
}

std::size_t InterlacedSource::column_height(std::size_t col) const {
  return alpha_ * inner_->column_height(col);
}

std::uint32_t InterlacedSource::entry(std::size_t j, std::size_t row, std::size_t col) const {
  return inner_->entry(j * alpha_ + row % alpha_, row / alpha_, col);
}

// ---- Optimal-order constructions ----

GeneratingMatrixSet dp_net_matrices(std::size_t alpha, std::size_t m, std::size_t s) {
  if (alpha == 0 || m == 0 || s == 0) throw ParameterError("dp-net: alpha, m and s must be positive");
  return interlace_matrices(niederreiter_matrices(niederreiter_params(alpha * s), m, m), alpha);
}

PointSet dp_net(std::size_t alpha, std::size_t m, std::size_t s) {
  return generate_net_points(dp_net_matrices(alpha, m, s),
                             {"dp-net", join_params({kv("alpha", alpha), kv("m", m), kv("s", s)})});
}

GeneratingMatrixSet dp_finite_matrices(std::size_t m, std::size_t s) {
  if (m == 0 || s == 0) throw ParameterError("dp-finite: m and s must be positive");
  std::vector<FieldMatrix> base;
  base.reserve(3 * s);
  // n 2^-m has digit k equal to index digit n_{m-k}.
  FieldMatrix reversal(2, m, m);
  for (std::size_t k = 0; k < m; ++k) reversal.set(k, m - 1 - k, 1);
  base.push_back(std::move(reversal));
  if (3 * s > 1) {
    const auto nied = niederreiter_matrices(niederreiter_params(3 * s - 1), m, m);
    for (const auto& c : nied.matrices()) base.push_back(c);
  }
  return interlace_matrices(GeneratingMatrixSet(std::move(base)), 3);
}

PointSet dp_finite_full(std::size_t m, std::size_t s) {
  auto points = generate_net_points(dp_finite_matrices(m, s),
                                    {"dp-finite", join_params({kv("m", m), kv("s", s)})});
  if (!first_coordinate_is_0m1_net(points)) {
    throw ConsistencyError("dp-finite: first coordinate of the 2^m-point set is not a (0,m,1)-net");
  }
  return points;
}

PointSet dp_finite_pointset(std::uint64_t n, std::size_t s) {
  if (n < 2) throw ParameterError("dp-finite: N must be at least 2");
  const std::size_t m = digit_count(n - 1, 2);
  auto out = arbitrary_n_trim(dp_finite_full(m, s), n);
  out.set_provenance({"dp-finite", join_params({kv("N", n), kv("s", s)})});
  return out;
}

PointSet dp_sequence(std::size_t s, std::uint64_t n_max) {
  constexpr std::size_t kAlpha = 5;
  if (s == 0) throw ParameterError("dp-sequence: s must be positive");
  if (n_max == 0) throw ParameterError("dp-sequence: N must be at least 1");
  const std::size_t m = std::max<std::size_t>(1, digit_count(n_max - 1, 2));
  auto inner = std::make_shared<NiederreiterSource>(niederreiter_params(kAlpha * s), m);
  const InterlacedSource src(std::move(inner), kAlpha);
  return generate_sequence_points(src, 0, n_max, kAlpha * m,
                                  {"dp-sequence", join_params({kv("N", n_max), kv("s", s)})});
}

PointSet arbitrary_n_trim(const PointSet& points, std::uint64_t n) {
  const std::uint32_t b = points.base();
  const std::uint64_t size = points.size();
  const auto m = exact_log(size, b);
  if (!m) {
    throw PreconditionError("arbitrary_n_trim: point count " + std::to_string(size) +
                            " is not a power of " + std::to_string(b));
  }
  if (n == 0 || n > size || (*m > 0 && n <= size / b)) {
    throw PreconditionError("arbitrary_n_trim: N=" + std::to_string(n) + " must satisfy b^(m-1) < N <= b^m = " +
                            std::to_string(size));
  }
  if (!first_coordinate_is_0m1_net(points)) {
    throw PreconditionError("arbitrary_n_trim: first coordinate is not a (0,m,1)-net");
  }

  const std::uint64_t den = points.denominator(0);
  const std::uint64_t g = std::gcd(size, den);
  const unsigned __int128 new_den = static_cast<unsigned __int128>(den / g) * n;
  if (new_den > UINT64_MAX) throw PrecisionError("arbitrary_n_trim: rescaled denominator overflows");

  std::vector<std::uint64_t> dens(points.denominators().begin(), points.denominators().end());
  dens[0] = static_cast<std::uint64_t>(new_den);
  PointSet out(b, points.dim(), points.precision(), *m, std::move(dens));
  out.reserve(n);
  std::vector<std::uint64_t> nums(points.dim());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto x = points.point(i);
    // x_1 < N / b^m
    if (static_cast<unsigned __int128>(x[0]) * size >= static_cast<unsigned __int128>(n) * den) continue;
    std::copy(x.begin(), x.end(), nums.begin());
    nums[0] = x[0] * (size / g);
    out.add_point(nums);
  }
  if (out.size() != n) throw ConsistencyError("arbitrary_n_trim: kept point count differs from N");
  Provenance prov = points.provenance();
  prov.params += (prov.params.empty() ? "" : ";") + kv("trim", n);
  out.set_provenance(std::move(prov));
  return out;
}

// ---- Davenport ----

Convergent convergent_exceeding(const ContinuedFraction& cf, std::uint64_t min_q) {
  if (cf.period.empty() || std::find(cf.period.begin(), cf.period.end(), 0) != cf.period.end()) {
    throw ParameterError("continued fraction period must be nonempty with positive partial quotients");
  }
  // p_{-1}/q_{-1} = 1/0, p_0/q_0 = a0/1
  unsigned __int128 p_prev = 1, q_prev = 0, p = cf.a0, q = 1;
  for (std::size_t i = 0; q <= min_q; ++i) {
    const std::uint64_t a = cf.period[i % cf.period.size()];
    const unsigned __int128 p_next = a * p + p_prev, q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    if (p > UINT64_MAX || q > UINT64_MAX) throw CapacityError("continued fraction convergent overflows");
  }
  return {static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(q)};
}

PointSet davenport_symmetrized(const ContinuedFraction& cf, std::uint64_t big_m) {
  if (big_m == 0) throw ParameterError("davenport: M must be positive");
  if (big_m > (std::uint64_t{1} << 24)) throw CapacityError("davenport: M above 2^24 is not supported");
  const auto [p, q] = convergent_exceeding(cf, big_m * big_m);
  const std::uint64_t frac = p % q;

  PointSet out(2, 2, 0, 0, {q, big_m});
  out.reserve(2 * big_m);
  for (std::uint64_t n = 1; n <= big_m; ++n) {
    const auto x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(n) * frac % q);
    const std::uint64_t y = n % big_m;
    const std::uint64_t a[2] = {x, y};
    const std::uint64_t b[2] = {x == 0 ? 0 : q - x, y};
    out.add_point(a);
    out.add_point(b);
  }
  std::string period;
  for (auto v : cf.period) period += (period.empty() ? "" : ":") + std::to_string(v);
  out.set_provenance({"davenport", join_params({kv("M", big_m), kv("a0", cf.a0), "period=" + period})});
  return out;
}

}  // namespace qmcnet
