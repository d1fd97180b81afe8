#include "qmcnet/discrepancy.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>

#include "qmcnet/constructions.hpp"
#include "qmcnet/errors.hpp"
#include "qmcnet/parallel.hpp"
#include "qmcnet/summation.hpp"

namespace qmcnet {

namespace {

constexpr std::size_t kBlockRows = 64;

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

double pair_product(const double* a, const double* b, std::size_t s) {
  double p = 1.0;
  for (std::size_t j = 0; j < s; ++j) p *= 1.0 - std::max(a[j], b[j]);
  return p;
}

double squared_product(const double* a, std::size_t s) {
  double p = 1.0;
  for (std::size_t j = 0; j < s; ++j) p *= 1.0 - a[j] * a[j];
  return p;
}

double combine(std::size_t s, std::uint64_t n, double single_sum, double pair_sum) {
  const double nd = static_cast<double>(n);
  CompensatedSum total;
  total += std::pow(3.0, -static_cast<double>(s));
  total += -std::ldexp(1.0, 1 - static_cast<int>(s)) / nd * single_sum;
  total += pair_sum / (nd * nd);
  return std::max(0.0, total.value());
}

DiscrepancyReport base_report(const PointSet& points, double q, DiscrepancyMethod method) {
  DiscrepancyReport r;
  r.family = points.provenance().family;
  r.params = points.provenance().params;
  r.n = points.size();
  r.s = points.dim();
  r.q = q;
  r.method = method;
  r.sum_of_digits = r.n == 0 ? 0 : sum_of_digits(r.n);
  return r;
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

}  // namespace

std::string to_string(DiscrepancyMethod method) {
  switch (method) {
    case DiscrepancyMethod::exact_pairwise: return "exact-pairwise";
    case DiscrepancyMethod::exact_rational: return "exact-rational";
    case DiscrepancyMethod::estimated: return "estimated";
  }
  return "unknown";
}

double local_discrepancy(const PointSet& points, std::span<const double> t) {
  if (t.size() != points.dim()) throw DomainError("local_discrepancy: t has wrong dimension");
  if (points.empty()) throw DomainError("local_discrepancy: empty point set");
  std::uint64_t count = 0;
  for (std::size_t n = 0; n < points.size(); ++n) {
    bool inside = true;
    for (std::size_t j = 0; j < points.dim() && inside; ++j) inside = points.coordinate(n, j) < t[j];
    count += inside;
  }
  double volume = 1.0;
  for (double v : t) volume *= v;
  return static_cast<double>(count) / static_cast<double>(points.size()) - volume;
}

double l2_squared(const PointSet& points, std::size_t threads) {
  const std::size_t n = points.size(), s = points.dim();
  if (n == 0) throw DomainError("l2 discrepancy of an empty point set");
  const std::vector<double> x = points.to_doubles();

  CompensatedSum single;
  for (std::size_t i = 0; i < n; ++i) single += squared_product(&x[i * s], s);

  const std::size_t blocks = (n + kBlockRows - 1) / kBlockRows;
  std::vector<double> block_sums(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    CompensatedSum acc;
    const std::size_t end = std::min(n, (b + 1) * kBlockRows);
    for (std::size_t i = b * kBlockRows; i < end; ++i) {
      const double* xi = &x[i * s];
      CompensatedSum row;
      for (std::size_t k = i + 1; k < n; ++k) row += pair_product(xi, &x[k * s], s);
      acc += 2.0 * row.value();
      acc += pair_product(xi, xi, s);
    }
    block_sums[b] = acc.value();
  });
  CompensatedSum pairs;
  for (double v : block_sums) pairs += v;
  return combine(s, n, single.value(), pairs.value());
}

DiscrepancyReport l2_exact(const PointSet& points, std::size_t threads) {
  auto r = base_report(points, 2.0, DiscrepancyMethod::exact_pairwise);
  r.value = std::sqrt(l2_squared(points, threads));
  r.roth_ratio = roth_ratio(r.value, r.n, r.s, 2.0);
  return r;
}

std::vector<double> l2_prefix_profile(const PointSet& points) {
  const std::size_t n = points.size(), s = points.dim();
  const std::vector<double> x = points.to_doubles();
  std::vector<double> out(n);
  CompensatedSum single, pairs;
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = &x[i * s];
    CompensatedSum cross;
    for (std::size_t k = 0; k < i; ++k) cross += pair_product(&x[k * s], xi, s);
    pairs += 2.0 * cross.value();
    pairs += pair_product(xi, xi, s);
    single += squared_product(xi, s);
    out[i] = std::sqrt(combine(s, i + 1, single.value(), pairs.value()));
  }
  return out;
}

Rational l2_exact_rational(const PointSet& points) {
  const std::size_t n = points.size(), s = points.dim();
  if (n == 0) throw DomainError("l2 discrepancy of an empty point set");
  if (n > kRationalMaxPoints || s > kRationalMaxDim) {
    throw CapacityError("exact rational L2 is limited to N <= " + std::to_string(kRationalMaxPoints) +
                        " and s <= " + std::to_string(kRationalMaxDim));
  }
  std::vector<Rational> x(n * s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < s; ++j)
      x[i * s + j] = Rational(points.numerator(i, j), points.denominator(j));

  Rational single = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < s; ++j) p *= 1 - x[i * s + j] * x[i * s + j];
    single += p;
  }
  Rational pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Rational p = 1;
      for (std::size_t j = 0; j < s; ++j) p *= 1 - std::max(x[i * s + j], x[k * s + j]);
      pairs += p;
    }
  }
  Rational three_pow = 1, two_pow = 1;
  for (std::size_t j = 0; j < s; ++j) three_pow *= 3;
  for (std::size_t j = 0; j < s; ++j) two_pow *= 2;
  const Rational nr(n);
  return 1 / three_pow - 2 * single / (two_pow * nr) + pairs / (nr * nr);
}

DiscrepancyReport lq_estimate(const PointSet& points, double q, const LqOptions& options) {
  if (!std::isfinite(q) || q < 1.0) throw ParameterError("lq_estimate: q must be finite and >= 1");
  if (options.samples < 2) throw ParameterError("lq_estimate: at least 2 samples are required");
  if (points.empty()) throw DomainError("lq_estimate: empty point set");
  const std::size_t s = points.dim();

  std::size_t level = 0;
  while (s * (level + 1) <= 20 && (std::uint64_t{2} << (s * (level + 1))) <= options.samples) ++level;
  const std::uint64_t cells_per_axis = std::uint64_t{1} << level;
  const std::uint64_t strata = std::uint64_t{1} << (s * level);
  const std::uint64_t per_stratum = options.samples / strata;
  const double width = 1.0 / static_cast<double>(cells_per_axis);

  std::vector<double> means(strata), variances(strata);
  parallel_for(strata, options.threads, [&](std::size_t k) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(std::uint64_t{k} >> 32)};
    std::mt19937_64 rng(seq);
    std::vector<double> lower(s), t(s);
    std::uint64_t rest = k;
    for (std::size_t j = 0; j < s; ++j) {
      lower[j] = static_cast<double>(rest % cells_per_axis) * width;
      rest /= cells_per_axis;
    }
    double mean = 0.0, m2 = 0.0;
    for (std::uint64_t i = 0; i < per_stratum; ++i) {
      for (std::size_t j = 0; j < s; ++j) t[j] = lower[j] + uniform01(rng) * width;
      const double v = std::pow(std::abs(local_discrepancy(points, t)), q);
      const double delta = v - mean;
      mean += delta / static_cast<double>(i + 1);
      m2 += delta * (v - mean);
    }
    means[k] = mean;
    variances[k] = m2 / static_cast<double>(per_stratum - 1);
  });

  CompensatedSum integral, variance;
  const double inv = 1.0 / static_cast<double>(strata);
  for (std::uint64_t k = 0; k < strata; ++k) {
    integral += means[k] * inv;
    variance += variances[k] * inv * inv / static_cast<double>(per_stratum);
  }
  const double i_hat = std::max(0.0, integral.value());
  const double se_i = std::sqrt(std::max(0.0, variance.value()));

  auto r = base_report(points, q, DiscrepancyMethod::estimated);
  r.value = std::pow(i_hat, 1.0 / q);
  r.std_error = i_hat > 0.0 ? se_i / (q * std::pow(i_hat, (q - 1.0) / q)) : 0.0;
  r.roth_ratio = roth_ratio(r.value, r.n, r.s, q);
  return r;
}

double roth_constant(std::size_t s) {
  if (s == 0) throw DomainError("roth_constant requires s >= 1");
  const double sd = static_cast<double>(s);
  return 7.0 / (27.0 * std::ldexp(1.0, 2 * static_cast<int>(s) - 1) *
                std::pow(std::log(2.0), (sd - 1.0) / 2.0) * std::sqrt(std::tgamma(sd)));
}

RothBound roth_lower_bound(std::size_t s, std::uint64_t n, double q) {
  if (n < 2) throw DomainError("roth_lower_bound requires N >= 2");
  if (q < 2.0) return {0.0, false};
  const double nd = static_cast<double>(n);
  return {roth_constant(s) * std::pow(std::log(nd), (static_cast<double>(s) - 1.0) / 2.0) / nd, true};
}

double roth_ratio(double value, std::uint64_t n, std::size_t s, double q) {
  if (n < 2 || q < 2.0 || s == 0) return nan();
  return value / roth_lower_bound(s, n, q).value;
}

std::uint64_t sum_of_digits(std::uint64_t n) {
  if (n == 0) throw DomainError("sum_of_digits requires N >= 1");
  return static_cast<std::uint64_t>(std::popcount(n));
}

std::vector<std::uint64_t> profile_grid(std::uint64_t n_max) {
  std::vector<std::uint64_t> grid;
  for (std::uint64_t n = 2; n <= std::min<std::uint64_t>(256, n_max); ++n) grid.push_back(n);
  for (std::uint64_t p = 256; p <= n_max / 2 + 1 && p < (std::uint64_t{1} << 62); p *= 2) {
    if (2 * p - 1 <= n_max) grid.push_back(2 * p - 1);
    if (2 * p <= n_max) grid.push_back(2 * p);
  }
  return grid;
}

SequenceProfile sequence_profile(const PointSet& sequence, double q, const LqOptions& options) {
  if (sequence.size() < 2) throw PreconditionError("sequence_profile requires at least 2 points");
  SequenceProfile profile{sequence.dim(), q, {}};
  const double sd = static_cast<double>(sequence.dim());
  std::vector<double> exact;
  if (q == 2.0) exact = l2_prefix_profile(sequence);
  for (auto n : profile_grid(sequence.size())) {
    SequenceProfileRow row{n, 0.0, 0.0, sum_of_digits(n), 0.0, 0.0};
    if (q == 2.0) {
      row.value = exact[n - 1];
    } else {
      const auto r = lq_estimate(take_prefix(sequence, n), q, options);
      row.value = r.value;
      row.std_error = r.std_error;
    }
    const double nd = static_cast<double>(n);
    const double scaled = nd * row.value;
    row.ratio = scaled / (std::pow(std::log(nd), (sd - 1.0) / 2.0) *
                          std::sqrt(static_cast<double>(row.s_n)));
    double digit_sum = 0.0;
    for (std::uint64_t v = 0, rest = n; rest != 0; ++v, rest >>= 1) {
      if (rest & 1) digit_sum += std::pow(static_cast<double>(v), sd - 1.0);
    }
    row.lq_seq_ratio = scaled / (std::pow(static_cast<double>(row.s_n), 1.5 - 1.0 / q) * std::sqrt(digit_sum));
    profile.rows.push_back(row);
  }
  return profile;
}

Lemma6Result lemma6_check(const PointSet& full, std::uint64_t n, std::size_t threads) {
  const PointSet trimmed = arbitrary_n_trim(full, n);
  const double lhs = static_cast<double>(n) * std::sqrt(l2_squared(trimmed, threads));
  const double rhs = std::sqrt(static_cast<double>(full.base())) * static_cast<double>(full.size()) *
                     std::sqrt(l2_squared(full, threads));
  return {lhs, rhs, lhs <= rhs * (1.0 + 1e-9)};
}

bool lemma6_inequality_check(const PointSet& full, std::uint64_t n, std::size_t threads) {
  return lemma6_check(full, n, threads).pass;
}

PointSet append_index_coordinate(const PointSet& prefix, std::uint64_t n) {
  if (n == 0 || prefix.size() < n) {
    throw PreconditionError("append_index_coordinate: need 1 <= N <= " + std::to_string(prefix.size()));
  }
  std::vector<std::uint64_t> dens(prefix.denominators().begin(), prefix.denominators().end());
  dens.push_back(n);
  PointSet out(prefix.base(), prefix.dim() + 1, prefix.precision(), prefix.m(), std::move(dens));
  out.reserve(n);
  std::vector<std::uint64_t> nums(prefix.dim() + 1);
  for (std::uint64_t k = 0; k < n; ++k) {
    const auto x = prefix.point(k);
    std::copy(x.begin(), x.end(), nums.begin());
    nums.back() = k;
    out.add_point(nums);
  }
  Provenance prov = prefix.provenance();
  prov.params += (prov.params.empty() ? "" : ";") + std::string("index=") + std::to_string(n);
  out.set_provenance(std::move(prov));
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_report_header(std::ostream& os) {
  os << "family,params,N,s,q,method,value,stderr,roth_ratio,S_N\n";
}

void write_report_row(std::ostream& os, const DiscrepancyReport& r) {
  os << r.family << ',' << r.params << ',' << r.n << ',' << r.s << ',' << format_double(r.q) << ','
     << to_string(r.method) << ',' << format_double(r.value) << ',' << format_double(r.std_error) << ','
     << format_double(r.roth_ratio) << ',' << r.sum_of_digits << '\n';
}

}  // namespace qmcnet
