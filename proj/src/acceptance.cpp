#include "qmcnet/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "qmcnet/constructions.hpp"
#include "qmcnet/discrepancy.hpp"
#include "qmcnet/dual.hpp"
#include "qmcnet/metrics.hpp"
#include "qmcnet/walsh.hpp"

namespace qmcnet {

namespace {

constexpr std::uint64_t kDualCap = std::uint64_t{1} << 22;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "FAILED: ";
      detail << what << "; ";
      pass = false;
    }
  }
};

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double max_over_min(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi / *lo;
}

// Random matrices over F_b with every C_j invertible.
GeneratingMatrixSet random_full_rank(std::uint32_t b, std::size_t m, std::size_t s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> digit(0, b - 1);
  std::vector<FieldMatrix> out;
  while (out.size() < s) {
    FieldMatrix c(b, m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t l = 0; l < m; ++l) c.set(r, l, digit(rng));
    if (matrix_rank(c) == m) out.push_back(std::move(c));
  }
  return GeneratingMatrixSet(std::move(out));
}

// ---- criteria ----

void criterion_cs_example(Outcome& o, std::size_t) {
  const auto c = cs_matrices({5, 2, 2, 2, {{0, 1}, {2, 3}}});
  const FieldMatrix c1(5, {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, 1}, {0, 1, 2, 3}});
  const FieldMatrix c2(5, {{1, 2, 4, 3}, {0, 1, 4, 2}, {1, 3, 4, 2}, {0, 1, 1, 2}});
  o.require(c.matrix(0) == c1, "C_1 differs");
  o.require(c.matrix(1) == c2, "C_2 differs");
  o.detail << "C_1 and C_2 match the printed 4x4 matrices";
}

void criterion_cs_structure(Outcome& o, std::size_t) {
  const CsParams cases[] = {{5, 2, 1, 2, {}}, {5, 2, 2, 2, {}}, {11, 2, 1, 2, {}}, {11, 2, 1, 3, {}}};
  for (const auto& p : cases) {
    const auto c = cs_matrices(p);
    const auto t = compute_t_value(c);
    const DualSpace dual(c, kDualCap);
    const auto prof = min_dual_weight(dual, WeightSpec::hamming(), dual.coordinate_bound());
    const std::string tag = "b=" + std::to_string(p.b) + ",m=" + std::to_string(p.m) + ",s=" + std::to_string(p.s);
    o.require(t == 0, tag + " t=" + std::to_string(t));
    o.require(prof.minimum && *prof.minimum >= p.alpha + 1, tag + " min hamming below alpha+1");
    o.detail << tag << ": t=" << t << " min_kappa=" << (prof.minimum ? std::to_string(*prof.minimum) : "inf")
             << " |D|=" << dual.size() << "; ";
  }
}

void criterion_nrt_identity(Outcome& o, std::size_t) {
  std::vector<std::pair<std::string, GeneratingMatrixSet>> nets;
  nets.emplace_back("faure(5,2,2)", faure_matrices(5, 2, 2));
  nets.emplace_back("faure(3,4,3)", faure_matrices(3, 4, 3));
  nets.emplace_back("faure(2,6,2)", faure_matrices(2, 6, 2));
  nets.emplace_back("cs(5,2,1,2)", cs_matrices({5, 2, 1, 2, {}}));
  nets.emplace_back("cs(5,2,2,2)", cs_matrices({5, 2, 2, 2, {}}));
  nets.emplace_back("cs(7,3,1,2)", cs_matrices({7, 3, 1, 2, {}}));
  nets.emplace_back("niederreiter(m=6,s=3)", niederreiter_matrices(niederreiter_params(3), 6, 6));
  nets.emplace_back("dp-net(2,4,1)", dp_net_matrices(2, 4, 1));
  nets.emplace_back("dp-net(3,3,1)", dp_net_matrices(3, 3, 1));
  nets.emplace_back("dp-net(2,3,2)", dp_net_matrices(2, 3, 2));
  nets.emplace_back("random(2,6,3)", random_full_rank(2, 6, 3, 11));
  nets.emplace_back("random(3,4,2)", random_full_rank(3, 4, 2, 12));
  nets.emplace_back("random(5,3,2)", random_full_rank(5, 3, 2, 13));
  for (const auto& [name, c] : nets) {
    const auto t = compute_t_value(c);
    const DualSpace dual(c, kDualCap);
    const auto prof = min_dual_weight(dual, WeightSpec::nrt());
    const std::size_t expected = c.cols() - t + 1;
    o.require(prof.minimum && *prof.minimum == expected, name + " min mu_1 != m-t+1");
    o.detail << name << ":" << (prof.minimum ? std::to_string(*prof.minimum) : "inf") << "=" << expected << " ";
  }
  o.detail << "(" << nets.size() << " nets)";
}

void criterion_order_alpha(Outcome& o, std::size_t) {
  std::size_t count = 0;
  for (std::size_t alpha : {2, 3}) {
    for (std::size_t s : {1, 2}) {
      const auto t_base = niederreiter_t_bound(niederreiter_params(alpha * s));
      for (std::size_t m = 1; m <= 4; ++m) {
        const auto r = check_order_alpha(dp_net_matrices(alpha, m, s), alpha, m, t_base, kDualCap);
        o.require(r.pass, "alpha=" + std::to_string(alpha) + " s=" + std::to_string(s) + " m=" + std::to_string(m) +
                              " min mu_alpha=" + std::to_string(r.profile.minimum.value_or(0)) +
                              " < " + std::to_string(r.bound));
        ++count;
      }
    }
  }
  o.detail << count << " interlaced nets satisfy min mu_alpha >= alpha m - t_alpha";
}

void criterion_oracle(Outcome& o, std::size_t threads) {
  std::vector<PointSet> sets;
  {
    PointSet origin(2, 1, 1, 0);
    const std::uint64_t zero[1] = {0};
    origin.add_point(zero);
    sets.push_back(origin);
    PointSet two(2, 1, 1, 1);
    const std::uint64_t half[1] = {1};
    two.add_point(zero);
    two.add_point(half);
    sets.push_back(two);
  }
  const Rational third = l2_exact_rational(sets[0]);
  const Rational twelfth = l2_exact_rational(sets[1]);
  o.require(third == Rational(1, 3), "L2^2({0}) != 1/3");
  o.require(twelfth == Rational(1, 12), "L2^2({0,1/2}) != 1/12");

  std::mt19937_64 rng(2024);
  const std::uint32_t bases[] = {2, 3, 5, 7};
  while (sets.size() < 50) {
    const std::uint32_t b = bases[rng() % 4];
    const std::size_t s = 1 + rng() % 3;
    const std::size_t precision = b == 2 ? 10 : 5;
    const std::size_t n = 1 + rng() % 64;
    PointSet p(b, s, precision, 0);
    std::uniform_int_distribution<std::uint64_t> num(0, p.denominator(0) - 1);
    std::vector<std::uint64_t> x(s);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& v : x) v = num(rng);
      p.add_point(x);
    }
    sets.push_back(std::move(p));
  }
  sets[10] = generate_net_points(faure_matrices(7, 2, 3));
  sets[11] = dp_net(2, 6, 2);
  sets[12] = dp_finite_pointset(37, 3);

  double worst = 0.0;
  for (const auto& p : sets) {
    const double exact = std::sqrt(l2_exact_rational(p).convert_to<double>());
    const double fp = l2_exact(p, threads).value;
    const double diff = std::abs(exact - fp);
    worst = std::isnan(diff) ? std::numeric_limits<double>::infinity() : std::max(worst, diff);
  }
  o.require(worst <= 1e-12, "max |l2_exact - oracle| = " + fmt(worst));
  o.detail << sets.size() << " sets, max abs difference " << fmt(worst, 3);
}

void criterion_roth(Outcome& o, std::size_t threads) {
  std::size_t checked = 0;
  double worst = 1e300;
  std::string worst_name;
  const auto check = [&](const PointSet& p, const std::string& name) {
    if (p.size() < 2) return;
    const double value = std::sqrt(l2_squared(p, threads));
    const double n = static_cast<double>(p.size());
    const double bound = roth_constant(p.dim()) * std::pow(std::log(n), (static_cast<double>(p.dim()) - 1.0) / 2.0);
    const double margin = n * value - bound;
    o.require(margin >= -1e-9, name + " violates the lower bound");
    if (n * value / bound < worst) {
      worst = n * value / bound;
      worst_name = name;
    }
    ++checked;
  };
  for (std::size_t m = 1; m <= 12; ++m) check(generate_net_points(van_der_corput_matrices(2, m)), "vdc m=" + std::to_string(m));
  for (std::size_t m = 1; m <= 7; ++m) check(generate_net_points(faure_matrices(3, m, 2)), "faure b=3 m=" + std::to_string(m));
  for (std::size_t m = 1; m <= 5; ++m) check(generate_net_points(faure_matrices(5, m, 3)), "faure b=5 m=" + std::to_string(m));
  check(generate_net_points(cs_matrices({5, 2, 1, 2, {}})), "cs b=5 m=1");
  check(generate_net_points(cs_matrices({5, 2, 2, 2, {}})), "cs b=5 m=2");
  check(generate_net_points(cs_matrices({11, 2, 1, 3, {}})), "cs b=11 s=3");
  for (std::size_t s = 1; s <= 4; ++s)
    for (std::size_t m = 1; m <= 12; ++m)
      check(generate_net_points(niederreiter_matrices(niederreiter_params(s), m, m)),
            "niederreiter s=" + std::to_string(s) + " m=" + std::to_string(m));
  for (std::size_t s = 1; s <= 3; ++s)
    for (std::size_t m = 1; m <= 12; ++m) check(dp_net(3, m, s), "dp-net s=" + std::to_string(s) + " m=" + std::to_string(m));
  for (std::uint64_t n : {2, 3, 5, 13, 100, 257, 1000, 2049, 4096}) {
    for (std::size_t s = 1; s <= 3; ++s) check(dp_finite_pointset(n, s), "dp-finite N=" + std::to_string(n) + " s=" + std::to_string(s));
  }
  for (std::size_t s = 1; s <= 2; ++s) {
    const auto seq = dp_sequence(s, 4096);
    const auto prefix = l2_prefix_profile(seq);
    const double cs = roth_constant(s);
    for (std::size_t n = 2; n <= prefix.size(); ++n) {
      const double nd = static_cast<double>(n);
      const double bound = cs * std::pow(std::log(nd), (static_cast<double>(s) - 1.0) / 2.0);
      o.require(nd * prefix[n - 1] - bound >= -1e-9, "dp-sequence prefix N=" + std::to_string(n) + " violates the lower bound");
      worst = std::min(worst, nd * prefix[n - 1] / bound);
      ++checked;
    }
  }
  for (std::uint64_t big_m = 1; big_m <= 2048; big_m *= 2)
    check(davenport_symmetrized(ContinuedFraction::golden_ratio(), big_m), "davenport M=" + std::to_string(big_m));
  o.detail << checked << " point sets, smallest N*L2/bound " << fmt(worst) << " (" << worst_name << ")";
}

void criterion_character(Outcome& o, std::size_t) {
  const std::pair<std::string, GeneratingMatrixSet> nets[] = {
      {"cs b=5", cs_matrices({5, 2, 2, 2, {{0, 1}, {2, 3}}})},
      {"dp-net(2,4,2)", dp_net_matrices(2, 4, 2)},
      {"dp-net(3,4,1)", dp_net_matrices(3, 4, 1)},
  };
  double worst = 0.0;
  std::uint64_t tested = 0;
  for (const auto& [name, c] : nets) {
    const auto points = generate_net_points(c);
    const DualSpace dual(c, kDualCap);
    dual.for_each([&](std::span<const std::uint64_t> k) {
      worst = std::max(worst, std::abs(char_property_sum(points, k) - 1.0));
      ++tested;
    });
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::uint64_t> coord(0, dual.coordinate_bound() - 1);
    std::vector<std::uint64_t> k(c.dim());
    std::size_t non_dual = 0;
    while (non_dual < 100) {
      for (auto& v : k) v = coord(rng);
      if (dual.contains(k)) continue;
      worst = std::max(worst, std::abs(char_property_sum(points, k)));
      ++non_dual;
      ++tested;
    }
  }
  o.require(worst <= 1e-9, "max deviation " + fmt(worst));
  o.detail << tested << " characters, max deviation " << fmt(worst, 3);
}

void criterion_dp_net_shape(Outcome& o, std::size_t threads) {
  std::vector<double> ratios;
  for (std::size_t m = 6; m <= 13; ++m) {
    const double l2 = std::sqrt(l2_squared(dp_net(3, m, 2), threads));
    ratios.push_back(std::ldexp(l2, static_cast<int>(m)) / std::sqrt(static_cast<double>(m)));
  }
  const double r = max_over_min(ratios);
  o.require(r <= 4.0, "max/min = " + fmt(r));
  o.detail << "2^m L2 / m^(1/2) for m=6..13 in [" << fmt(*std::min_element(ratios.begin(), ratios.end())) << ", "
           << fmt(*std::max_element(ratios.begin(), ratios.end())) << "], max/min " << fmt(r);
}

void criterion_lemma6(Outcome& o, std::size_t threads) {
  std::size_t checked = 0;
  double tightest = 0.0;
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto full = generate_net_points(van_der_corput_matrices(2, m));
    for (std::uint64_t n = (std::uint64_t{1} << (m - 1)) + 1; n <= (std::uint64_t{1} << m); ++n) {
      const auto r = lemma6_check(full, n, threads);
      o.require(r.pass, "vdc m=" + std::to_string(m) + " N=" + std::to_string(n));
      tightest = std::max(tightest, r.lhs / r.rhs);
      ++checked;
    }
  }
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto full = dp_finite_full(m, 2);
    for (std::uint64_t n = (std::uint64_t{1} << (m - 1)) + 1; n <= (std::uint64_t{1} << m); ++n) {
      const auto r = lemma6_check(full, n, threads);
      o.require(r.pass, "dp-finite m=" + std::to_string(m) + " N=" + std::to_string(n));
      tightest = std::max(tightest, r.lhs / r.rhs);
      ++checked;
    }
  }
  o.detail << checked << " trims, largest lhs/rhs " << fmt(tightest);
}

void criterion_sequence_shape(Outcome& o, std::size_t) {
  const auto profile = sequence_profile(dp_sequence(1, 4096), 2.0);
  std::vector<double> ratios;
  std::size_t worst_case_points = 0;
  for (const auto& row : profile.rows) {
    ratios.push_back(static_cast<double>(row.n) * row.value / std::sqrt(static_cast<double>(row.s_n)));
    if (((row.n + 1) & row.n) == 0) ++worst_case_points;
  }
  const double r = max_over_min(ratios);
  o.require(worst_case_points >= 11, "grid misses 2^(m+1)-1 values");
  o.require(r <= 8.0, "max/min = " + fmt(r));
  o.detail << profile.rows.size() << " grid points (" << worst_case_points << " of the form 2^k-1), N L2/sqrt(S(N)) in ["
           << fmt(*std::min_element(ratios.begin(), ratios.end())) << ", "
           << fmt(*std::max_element(ratios.begin(), ratios.end())) << "], max/min " << fmt(r);
}

void criterion_davenport(Outcome& o, std::size_t threads) {
  std::vector<double> ratios;
  for (int k = 2; k <= 10; ++k) {
    const auto p = davenport_symmetrized(ContinuedFraction::golden_ratio(), std::uint64_t{1} << k);
    const double n = static_cast<double>(p.size());
    ratios.push_back(n * std::sqrt(l2_squared(p, threads)) / std::sqrt(std::log(n)));
  }
  const double r = max_over_min(ratios);
  o.require(r <= 4.0, "max/min = " + fmt(r));
  o.detail << "N L2 / sqrt(log N) for M=2^2..2^10 in [" << fmt(*std::min_element(ratios.begin(), ratios.end()))
           << ", " << fmt(*std::max_element(ratios.begin(), ratios.end())) << "], max/min " << fmt(r);
}

void criterion_interlacing(Outcome& o, std::size_t) {
  std::size_t checked = 0;
  for (std::size_t alpha = 1; alpha <= 3; ++alpha) {
    for (std::size_t s = 1; s <= 2; ++s) {
      for (std::size_t m = 1; m <= 6; ++m) {
        const auto base = niederreiter_matrices(niederreiter_params(alpha * s), m, m);
        const auto by_points = interlace_points(generate_net_points(base), alpha);
        const auto by_matrices = generate_net_points(interlace_matrices(base, alpha));
        o.require(same_points(by_points, by_matrices) && by_points.precision() == by_matrices.precision(),
                  "alpha=" + std::to_string(alpha) + " s=" + std::to_string(s) + " m=" + std::to_string(m));
        ++checked;
      }
    }
  }
  o.detail << checked << " (alpha, s, m) cases identical";
}

void criterion_lq_calibration(Outcome& o, std::size_t threads) {
  const auto net = dp_net(2, 6, 2);
  const double exact = l2_exact(net, threads).value;
  int within = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto r = lq_estimate(net, 2.0, {4096, seed, threads});
    if (std::abs(r.value - exact) <= 3.0 * r.std_error) ++within;
  }
  o.require(within >= 95, std::to_string(within) + "/100 within 3 standard errors");
  o.detail << within << "/100 estimates within 3 standard errors of " << fmt(exact, 6);
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  void (*run)(Outcome&, std::size_t);
};

constexpr Criterion kCriteria[] = {
    {1, "chen-skriganov example matrices", 0.001, criterion_cs_example},
    {2, "chen-skriganov t=0 and dual hamming weight", 10, criterion_cs_structure},
    {3, "dual nrt weight equals m-t+1", 30, criterion_nrt_identity},
    {4, "interlaced nets satisfy the order-alpha condition", 60, criterion_order_alpha},
    {5, "pairwise L2 matches the exact rational oracle", 10, criterion_oracle},
    {6, "roth lower bound holds for every construction", 120, criterion_roth},
    {7, "character property on cs and interlaced nets", 30, criterion_character},
    {8, "dp-net 2^m L2 / sqrt(m) bounded", 300, criterion_dp_net_shape},
    {9, "trimmed sets satisfy the N-point inequality", 120, criterion_lemma6},
    {10, "dp-sequence N L2 / sqrt(S(N)) bounded", 300, criterion_sequence_shape},
    {11, "davenport N L2 / sqrt(log N) bounded", 60, criterion_davenport},
    {12, "point and matrix interlacing agree", 10, criterion_interlacing},
    {13, "L_q estimator calibration at q=2", 120, criterion_lq_calibration},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results;
  for (const auto& c : kCriteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(outcome, options.threads);
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) outcome.require(false, "took " + fmt(seconds) + " s, limit " + fmt(c.limit_seconds) + " s");
    results.push_back({c.id, c.name, outcome.pass, outcome.detail.str(), seconds, c.limit_seconds});
    if (options.on_result) options.on_result(results.back());
  }
  return results;
}

void print_criterion(std::ostream& os, const CriterionResult& r) {
  char timing[48];
  std::snprintf(timing, sizeof timing, "%.3fs/%gs", r.seconds, r.limit_seconds);
  os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << timing << "): " << r.detail << '\n';
}

bool print_acceptance(std::ostream& os, const std::vector<CriterionResult>& results) {
  bool ok = true;
  for (const auto& r : results) {
    print_criterion(os, r);
    ok = ok && r.pass;
  }
  return ok;
}

}  // namespace qmcnet
