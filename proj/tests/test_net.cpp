#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "qmcnet/constructions.hpp"
#include "qmcnet/digits.hpp"
#include "qmcnet/dual.hpp"
#include "qmcnet/errors.hpp"
#include "qmcnet/net.hpp"
#include "qmcnet/point_io.hpp"
#include "qmcnet/walsh.hpp"

using namespace qmcnet;

namespace {

GeneratingMatrixSet random_matrices(std::uint32_t b, std::size_t p, std::size_t m, std::size_t s,
                                    std::mt19937_64& rng) {
  std::vector<FieldMatrix> mats;
  for (std::size_t j = 0; j < s; ++j) {
    FieldMatrix c(b, p, m);
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t l = 0; l < m; ++l) c.set(r, l, static_cast<std::uint32_t>(rng() % b));
    mats.push_back(std::move(c));
  }
  return GeneratingMatrixSet(std::move(mats));
}

// Radical inverse of n in base b, as numerator over b^m.
std::uint64_t radical_inverse(std::uint64_t n, std::uint32_t b, std::size_t m) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < m; ++i) {
    out = out * b + n % b;
    n /= b;
  }
  return out;
}

// Brute-force dual: every k in {0..b^p-1}^s checked digit by digit.
std::set<std::vector<std::uint64_t>> brute_dual(const GeneratingMatrixSet& c) {
  const std::uint32_t b = c.base();
  const std::uint64_t bound = *checked_pow(b, c.rows());
  const std::size_t s = c.dim();
  std::set<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> k(s, 0);
  const std::uint64_t total = *checked_pow(bound, s);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (auto& v : k) {
      v = rest % bound;
      rest /= bound;
    }
    bool zero = true;
    for (std::size_t l = 0; l < c.cols() && zero; ++l) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < s; ++j) {
        std::uint64_t kj = k[j];
        for (std::size_t r = 0; r < c.rows(); ++r, kj /= b) acc += (kj % b) * c.matrix(j)(r, l);
      }
      zero = acc % b == 0;
    }
    if (zero) out.insert(k);
  }
  return out;
}

}  // namespace

TEST_CASE("digit_vector_of_index examples") {
  CHECK(digit_vector_of_index(0, 2, 3) == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(digit_vector_of_index(6, 2, 3) == std::vector<std::uint32_t>{0, 1, 1});
  CHECK(digit_vector_of_index(7, 5, 2) == std::vector<std::uint32_t>{2, 1});
  CHECK_THROWS_AS(digit_vector_of_index(8, 2, 3), DomainError);
}

TEST_CASE("digit vectors convert exactly") {
  const DigitVector x(2, {1, 0, 1});
  CHECK(x.numerator() == 5);
  CHECK(x.to_double() == doctest::Approx(0.625));
  CHECK(x.digit(1) == 1);
  CHECK(x.digit(4) == 0);
  CHECK(DigitVector::from_numerator(5, 13, 2) == DigitVector(5, {2, 3}));
  CHECK(exact_log(125, 5) == 3u);
  CHECK_FALSE(exact_log(100, 5).has_value());
  CHECK_FALSE(checked_pow(2, 64).has_value());
}

TEST_CASE("generate_net_points examples") {
  const auto vdc = generate_net_points(GeneratingMatrixSet({FieldMatrix::identity(2, 2)}));
  REQUIRE(vdc.size() == 4);
  const double expected[] = {0.0, 0.5, 0.25, 0.75};
  for (std::size_t n = 0; n < 4; ++n) CHECK(vdc.coordinate(n, 0) == expected[n]);

  const auto cs = generate_net_points(cs_matrices({5, 2, 2, 2, {}}));
  CHECK(cs.size() == 625);
  CHECK(cs.numerator(0, 0) == 0);
  CHECK(cs.numerator(0, 1) == 0);
}

TEST_CASE("identity matrices give radical inverses in every coordinate") {
  for (std::uint32_t b : {2u, 3u, 5u}) {
    for (std::size_t m = 1; m <= 4; ++m) {
      const auto id = FieldMatrix::identity(b, m);
      const auto p = generate_net_points(GeneratingMatrixSet({id, id, id}));
      for (std::size_t n = 0; n < p.size(); ++n)
        for (std::size_t j = 0; j < 3; ++j) CHECK(p.numerator(n, j) == radical_inverse(n, b, m));
    }
  }
}

TEST_CASE("generate_sequence_points") {
  const NiederreiterSource src(niederreiter_params(2), 4);
  const auto p = generate_sequence_points(src, 0, 4, 2);
  const double expected[] = {0.0, 0.5, 0.25, 0.75};
  for (std::size_t n = 0; n < 4; ++n) CHECK(p.coordinate(n, 0) == expected[n]);
  CHECK(generate_sequence_points(src, 3, 3, 2).empty());
  // n = 3 needs two digits in coordinate 2; precision 1 would drop one.
  CHECK_THROWS_AS(generate_sequence_points(src, 0, 4, 1), PrecisionError);
}

TEST_CASE("compute_t_value examples") {
  CHECK(compute_t_value(GeneratingMatrixSet({FieldMatrix::identity(3, 4)})) == 0);
  const auto id = FieldMatrix::identity(2, 2);
  const GeneratingMatrixSet dup({id, id});
  CHECK(compute_t_value(dup) == 1);
  CHECK_FALSE(is_tms_net(dup, 0));
  CHECK(is_tms_net(dup, 1));
  const auto cs = cs_matrices({5, 2, 2, 2, {}});
  CHECK(compute_t_value(cs) == 0);
  CHECK(is_tms_net(cs, 0));
  CHECK_THROWS_AS(compute_t_value(GeneratingMatrixSet({FieldMatrix(2, 1, 2)})), PreconditionError);
}

TEST_CASE("geometric_net_check examples") {
  const auto vdc = generate_net_points(GeneratingMatrixSet({FieldMatrix::identity(2, 2)}));
  CHECK(geometric_net_check(vdc, 0));
  const auto id = FieldMatrix::identity(2, 2);
  const auto dup = generate_net_points(GeneratingMatrixSet({id, id}));
  CHECK_FALSE(geometric_net_check(dup, 0));
  CHECK(geometric_net_check(dup, 2));
  PointSet three(2, 1, 2, 0);
  for (std::uint64_t v : {0, 1, 2}) {
    const std::uint64_t x[1] = {v};
    three.add_point(x);
  }
  CHECK_THROWS_AS(geometric_net_check(three, 0), DomainError);
}

TEST_CASE("t-value agrees with geometric counting on random nets") {
  std::mt19937_64 rng(99);
  int instances = 0;
  for (std::uint32_t b : {2u, 3u, 5u}) {
    for (std::size_t m = 1; m <= 4; ++m) {
      if (*checked_pow(b, m) > 625) continue;
      for (std::size_t s = 1; s <= 3; ++s) {
        for (int trial = 0; trial < 4; ++trial) {
          const auto c = random_matrices(b, m, m, s, rng);
          const auto p = generate_net_points(c);
          const auto t = compute_t_value(c);
          for (std::size_t tt = 0; tt <= m; ++tt) CHECK(geometric_net_check(p, tt) == (tt >= t));
          ++instances;
        }
      }
    }
  }
  CHECK(instances > 50);
}

TEST_CASE("dual_space examples") {
  const DualSpace trivial(GeneratingMatrixSet({FieldMatrix::identity(3, 2)}), 100);
  CHECK(trivial.size() == 1);
  const FieldMatrix one(2, {{1}});
  const DualSpace pair(GeneratingMatrixSet({one, one}), 100);
  CHECK(pair.elements() == std::vector<std::uint64_t>{0, 0, 1, 1});
  const DualSpace cs(cs_matrices({5, 2, 2, 2, {}}), 1000);
  CHECK(cs.size() == 625);
  CHECK_THROWS_AS(DualSpace(cs_matrices({5, 2, 2, 2, {}}), 624), CapacityError);
}

TEST_CASE("dual enumeration equals brute-force filtering and satisfies the system") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t b = trial % 2 ? 3 : 2;
    const std::size_t m = 1 + rng() % 3, p = m + rng() % 2, s = 1 + rng() % 2;
    const auto c = random_matrices(b, p, m, s, rng);
    const DualSpace dual(c, 1u << 20);
    std::set<std::vector<std::uint64_t>> enumerated;
    dual.for_each([&](std::span<const std::uint64_t> k) {
      CHECK(DualSpace::in_dual(c, k));
      enumerated.emplace(k.begin(), k.end());
    });
    CHECK(enumerated.size() == dual.size());
    CHECK(enumerated == brute_dual(c));
  }
}

TEST_CASE("walsh_eval examples") {
  CHECK(walsh_eval(0, DigitVector(3, {2, 1})) == std::complex<double>(1.0, 0.0));
  CHECK(walsh_eval(1, DigitVector(2, {1})) == std::complex<double>(-1.0, 0.0));
  CHECK(walsh_eval(1, DigitVector(5, {0, 0})) == std::complex<double>(1.0, 0.0));
  for (std::uint64_t k = 0; k < 50; ++k) CHECK(std::abs(std::abs(walsh_eval(k, DigitVector(7, {3, 5, 1}))) - 1.0) < 1e-12);
}

TEST_CASE("char_property_sum examples and indicator property") {
  const auto c = cs_matrices({5, 2, 2, 2, {}});
  const auto p = generate_net_points(c);
  const std::uint64_t zero[2] = {0, 0};
  CHECK(std::abs(char_property_sum(p, zero) - 1.0) < 1e-12);
  const std::uint64_t k10[2] = {1, 0};
  CHECK_FALSE(DualSpace::in_dual(c, k10));
  CHECK(std::abs(char_property_sum(p, k10)) < 1e-9);

  const DualSpace dual(c, 1000);
  dual.for_each([&](std::span<const std::uint64_t> k) { CHECK(std::abs(char_property_sum(p, k) - 1.0) < 1e-9); });

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t k[2] = {rng() % 625, rng() % 625};
    const double expected = DualSpace::in_dual(c, k) ? 1.0 : 0.0;
    CHECK(std::abs(char_property_sum(p, k) - expected) < 1e-9);
  }
}

TEST_CASE("point files round trip bit-exactly") {
  const PointSet sets[] = {
      generate_net_points(faure_matrices(5, 2, 2), {"faure", "b=5;m=2;s=2"}),
      generate_net_points(faure_matrices(13, 1, 3), {"faure", "b=13;m=1;s=3"}),
      dp_finite_pointset(13, 2),
      davenport_symmetrized(ContinuedFraction::golden_ratio(), 8),
  };
  for (const auto& p : sets) {
    std::stringstream buf;
    write_point_file(buf, p);
    const auto back = read_point_file(buf);
    CHECK(back == p);
  }
}

TEST_CASE("point file format") {
  const auto p = generate_net_points(GeneratingMatrixSet({FieldMatrix::identity(2, 2)}), {"van-der-corput", "b=2;m=2"});
  std::stringstream buf;
  write_point_file(buf, p);
  CHECK(buf.str() == "# provenance family=van-der-corput params=b=2;m=2\n2 2 1 2 4\n00\n10\n01\n11\n");
  const auto big = generate_net_points(GeneratingMatrixSet({FieldMatrix::identity(11, 2)}));
  std::stringstream big_buf;
  write_point_file(big_buf, big);
  std::string line;
  std::getline(big_buf, line);
  for (int i = 0; i < 11; ++i) std::getline(big_buf, line);
  CHECK(line == "10,0");
}

TEST_CASE("malformed point files report the offending line") {
  const auto line_of = [](const std::string& text) -> std::size_t {
    std::stringstream in(text);
    try {
      read_point_file(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK_THROWS_AS([] { std::stringstream in; read_point_file(in); }(), ParseError);
  CHECK(line_of("2 2 1 2\n") == 1);
  CHECK(line_of("2 2 1 2 2\n00\n1x\n") == 3);
  CHECK(line_of("2 2 1 2 2\n00\n") == 2);
  CHECK(line_of("2 2 1 2 1\n002\n") == 2);
  CHECK(line_of("2 2 1 2 1\n0 0\n") == 2);
  CHECK(line_of("2 2 1 2 1\n01\n11\n") == 3);
  CHECK(line_of("# comment\n3 1 1 1 1\n5\n") == 3);
}
