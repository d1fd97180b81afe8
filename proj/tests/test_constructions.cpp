#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "qmcnet/constructions.hpp"
#include "qmcnet/errors.hpp"
#include "qmcnet/field.hpp"

using namespace qmcnet;

namespace {

FieldMatrix rows_of(std::uint32_t b, std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
  return FieldMatrix(b, rows);
}

std::vector<double> first_coords(const PointSet& p) {
  std::vector<double> out;
  for (std::size_t n = 0; n < p.size(); ++n) out.push_back(p.coordinate(n, 0));
  return out;
}

// Oracle for the Laurent coefficients: with A = sum_{l<=L} a_l x^(L-l),
// x^(e-z-1+L) - p^i A must have degree below deg p^i.
bool laurent_prefix_ok(const NiedParams& params, std::size_t j, std::size_t k, std::size_t len) {
  const std::size_t e = params.degree(j - 1);
  const std::size_t i = (k - 1) / e + 1, z = (k - 1) % e;
  const BinaryPoly pi = params.polys[j - 1].pow(i);
  BinaryPoly a;
  for (std::size_t l = 1; l <= len; ++l)
    if (niederreiter_matrix_entry(params, j, k, l)) a.set_coefficient(len - l, true);
  const BinaryPoly lhs = BinaryPoly::monomial(e - z - 1 + len);
  return (lhs + pi * a).degree() < static_cast<long>(i * e);
}

}  // namespace

TEST_CASE("Chen-Skriganov matrices reproduce the worked example") {
  const auto c = cs_matrices({5, 2, 2, 2, {{0, 1}, {2, 3}}});
  CHECK(c.matrix(0) == rows_of(5, {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, 1}, {0, 1, 2, 3}}));
  CHECK(c.matrix(1) == rows_of(5, {{1, 2, 4, 3}, {0, 1, 4, 2}, {1, 3, 4, 2}, {0, 1, 1, 2}}));
  CHECK(cs_matrices({5, 2, 2, 2, {}}) == c);
}

TEST_CASE("Chen-Skriganov parameter errors") {
  CHECK_THROWS_AS(cs_matrices({3, 2, 2, 2, {}}), ParameterError);
  CHECK_THROWS_AS(cs_matrices({6, 1, 2, 2, {}}), ParameterError);
  CHECK_THROWS_AS(cs_matrices({5, 2, 2, 2, {{0, 1}, {1, 3}}}), ParameterError);
  CHECK_THROWS_AS(cs_matrices({5, 2, 2, 2, {{0, 1}, {2, 5}}}), ParameterError);
  CHECK_THROWS_AS(cs_matrices({5, 2, 2, 2, {{0, 1}}}), ParameterError);
  CHECK_THROWS_AS(cs_matrices({5, 0, 2, 2, {}}), ParameterError);
}

TEST_CASE("Faure matrices are the alpha = 1 case") {
  const auto f = faure_matrices(3, 3, 3);
  CHECK(f.matrix(0) == FieldMatrix::identity(3, 3));
  CHECK(f.matrix(1) == rows_of(3, {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}}));
  CHECK(f.matrix(2) == rows_of(3, {{1, 2, 1}, {0, 1, 1}, {0, 0, 1}}));
  CHECK(f == cs_matrices({3, 1, 3, 3, {}}));
  CHECK_THROWS_AS(faure_matrices(2, 2, 3), ParameterError);
  CHECK(van_der_corput_matrices(7, 3).matrix(0) == FieldMatrix::identity(7, 3));
}

TEST_CASE("Chen-Skriganov nets have t = 0") {
  for (std::uint32_t b : {2u, 3u, 5u, 7u})
    for (std::size_t alpha = 1; alpha <= 3; ++alpha)
      for (std::size_t s = 1; alpha * s <= b && s <= 3; ++s)
        for (std::size_t m = 1; alpha * m <= 6 && std::pow(b, alpha * m) <= 1e6; ++m) {
          CAPTURE(b);
          CAPTURE(alpha);
          CAPTURE(s);
          CAPTURE(m);
          CHECK(compute_t_value(cs_matrices({b, alpha, m, s, {}})) == 0);
        }
}

TEST_CASE("Niederreiter parameters and entries") {
  const auto p5 = niederreiter_params(5);
  std::vector<long> degrees;
  for (const auto& p : p5.polys) degrees.push_back(p.degree());
  CHECK(degrees == std::vector<long>{1, 1, 2, 3, 3});
  CHECK(niederreiter_t_bound(niederreiter_params(1)) == 0);
  CHECK(niederreiter_t_bound(niederreiter_params(2)) == 0);
  CHECK(niederreiter_t_bound(p5) == 5);

  for (std::size_t k = 1; k <= 10; ++k)
    for (std::size_t l = 1; l <= 10; ++l) CHECK(niederreiter_matrix_entry(p5, 1, k, l) == (k == l ? 1u : 0u));
  for (std::size_t l = 1; l <= 20; ++l) CHECK(niederreiter_matrix_entry(p5, 2, 1, l) == 1);
  for (std::size_t j = 1; j <= 5; ++j)
    for (std::size_t l = 1; l <= 12; ++l)
      for (std::size_t k = l + 1; k <= 14; ++k) CHECK(niederreiter_matrix_entry(p5, j, k, l) == 0);

  NiedParams bad{{BinaryPoly::from_mask(0b11), BinaryPoly::from_mask(0b10)}};
  CHECK_THROWS_AS(validate(bad), ParameterError);
  NiedParams reducible{{BinaryPoly::from_mask(0b10), BinaryPoly::from_mask(0b101)}};
  CHECK_THROWS_AS(validate(reducible), ParameterError);
}

TEST_CASE("Niederreiter entries satisfy the Laurent identity") {
  const auto params = niederreiter_params(8);
  for (std::size_t j = 1; j <= params.dim(); ++j)
    for (std::size_t k = 1; k <= 16; ++k) {
      CAPTURE(j);
      CAPTURE(k);
      CHECK(laurent_prefix_ok(params, j, k, 24));
    }
}

TEST_CASE("Niederreiter source matches the entry function") {
  const auto params = niederreiter_params(4);
  const NiederreiterSource src(params, 12);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t l = 0; l < 12; ++l) {
      CHECK(src.column_height(l) == l + 1);
      for (std::size_t k = 0; k < 12; ++k)
        CHECK(src.entry(j, k, l) == niederreiter_matrix_entry(params, j + 1, k + 1, l + 1));
    }
  CHECK(src.block(2, 6, 6) == niederreiter_matrices(params, 6, 6).matrix(2));
}

TEST_CASE("Niederreiter nets respect the t bound") {
  for (std::size_t s = 1; s <= 6; ++s) {
    const auto params = niederreiter_params(s);
    for (std::size_t m = 1; m <= 8; ++m) {
      CAPTURE(s);
      CAPTURE(m);
      CHECK(compute_t_value(niederreiter_matrices(params, m, m)) <= niederreiter_t_bound(params));
    }
  }
}

TEST_CASE("interlace_point examples") {
  const DigitVector half(2, {1}), quarter(2, {0, 1});
  const DigitVector pair[] = {half, quarter};
  const auto y = interlace_point(pair);
  CHECK(y.size() == 4);
  CHECK(y.numerator() == 9);
  const DigitVector zeros[] = {DigitVector(2, {0, 0}), DigitVector(2, {0}), DigitVector(2, {})};
  CHECK(interlace_point(zeros).numerator() == 0);
  const DigitVector single[] = {DigitVector(2, {1, 0, 1})};
  CHECK(interlace_point(single) == single[0]);
  const DigitVector base3[] = {DigitVector(3, {1})};
  CHECK_THROWS_AS(interlace_point(base3), DomainError);
}

TEST_CASE("interlace_matrices examples") {
  const FieldMatrix one(2, {{1}});
  const GeneratingMatrixSet c({one, one});
  const auto e = interlace_matrices(c, 2);
  CHECK(e.dim() == 1);
  CHECK(e.matrix(0) == rows_of(2, {{1}, {1}}));
  const auto nied = niederreiter_matrices(niederreiter_params(3), 4, 4);
  CHECK(interlace_matrices(nied, 1) == nied);
  CHECK_THROWS_AS(interlace_matrices(nied, 2), ParameterError);
}

TEST_CASE("matrix-level and point-level interlacing agree") {
  for (std::size_t alpha = 1; alpha <= 3; ++alpha)
    for (std::size_t s = 1; s <= 2; ++s)
      for (std::size_t m = 1; m <= 6; ++m) {
        const auto c = niederreiter_matrices(niederreiter_params(alpha * s), m, m);
        const auto by_points = interlace_points(generate_net_points(c), alpha);
        const auto by_matrices = generate_net_points(interlace_matrices(c, alpha));
        CAPTURE(alpha);
        CAPTURE(s);
        CAPTURE(m);
        CHECK(same_points(by_points, by_matrices));
      }
}

TEST_CASE("interlaced sequence source agrees with interlaced blocks") {
  auto inner = std::make_shared<NiederreiterSource>(niederreiter_params(6), 10);
  const InterlacedSource src(inner, 3);
  CHECK(src.dim() == 2);
  const auto blocks = interlace_matrices(niederreiter_matrices(niederreiter_params(6), 10, 10), 3);
  for (std::size_t j = 0; j < 2; ++j) CHECK(src.block(j, 30, 10) == blocks.matrix(j));
}

TEST_CASE("dp_net examples") {
  CHECK(first_coords(dp_net(1, 2, 1)) == std::vector<double>{0.0, 0.5, 0.25, 0.75});
  CHECK(first_coords(dp_net(2, 1, 1)) == std::vector<double>{0.0, 0.75});
  for (std::size_t m = 1; m <= 5; ++m) CHECK(dp_net(3, m, 2).size() == (1u << m));
  CHECK(dp_net(3, 4, 2).dim() == 2);
}

TEST_CASE("dp_finite examples") {
  const auto three = dp_finite_pointset(3, 1);
  REQUIRE(three.size() == 3);
  CHECK(three.coordinate(0, 0) == 0.0);
  CHECK(three.coordinate(1, 0) == doctest::Approx(7.0 / 12.0));
  CHECK(three.coordinate(2, 0) == doctest::Approx(43.0 / 48.0));
  for (std::uint64_t n : {2, 5, 8, 13, 17, 100}) {
    const auto p = dp_finite_pointset(n, 2);
    CHECK(p.size() == n);
    for (double v : p.to_doubles()) CHECK((v >= 0.0 && v < 1.0));
  }
  CHECK(same_points(dp_finite_pointset(8, 2), dp_finite_full(3, 2)));
  CHECK(first_coordinate_is_0m1_net(generate_net_points(dp_finite_matrices(4, 1))));
  CHECK_THROWS(dp_finite_pointset(1, 2));
}

TEST_CASE("dp_sequence examples") {
  const auto seq = dp_sequence(1, 16);
  CHECK(seq.coordinate(0, 0) == 0.0);
  CHECK(seq.coordinate(1, 0) == 0.96875);
  CHECK(same_points(take_prefix(dp_sequence(2, 16), 8), dp_sequence(2, 8)));
  CHECK(same_points(take_prefix(dp_sequence(1, 64), 16), seq));
  CHECK_THROWS(dp_sequence(1, 0));
}

TEST_CASE("arbitrary_n_trim examples") {
  const auto vdc = generate_net_points(van_der_corput_matrices(2, 2));
  CHECK(same_points(arbitrary_n_trim(vdc, 4), vdc));
  const auto trimmed = arbitrary_n_trim(vdc, 3);
  REQUIRE(trimmed.size() == 3);
  CHECK(trimmed.coordinate(0, 0) == 0.0);
  CHECK(trimmed.coordinate(1, 0) == doctest::Approx(2.0 / 3.0));
  CHECK(trimmed.coordinate(2, 0) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(arbitrary_n_trim(vdc, 2), PreconditionError);
  CHECK_THROWS_AS(arbitrary_n_trim(vdc, 5), PreconditionError);

  const FieldMatrix one(2, {{1}});
  const FieldMatrix zero(2, {{0, 0}, {0, 0}});
  const auto flat = generate_net_points(GeneratingMatrixSet({zero, FieldMatrix::identity(2, 2)}));
  CHECK_THROWS_AS(arbitrary_n_trim(flat, 3), PreconditionError);

  const auto faure = generate_net_points(faure_matrices(3, 2, 2));
  for (std::uint64_t n = 4; n <= 9; ++n) CHECK(arbitrary_n_trim(faure, n).size() == n);
}

TEST_CASE("continued fraction convergents") {
  const auto c = convergent_exceeding(ContinuedFraction::golden_ratio(), 10);
  CHECK(c.q == 13);
  CHECK(c.p == 21);
  const auto r = convergent_exceeding(ContinuedFraction::sqrt2(), 5);
  CHECK(r.q == 12);
  CHECK(r.p == 17);
}

TEST_CASE("davenport_symmetrized") {
  for (std::uint64_t m : {1, 2, 7, 64}) {
    const auto p = davenport_symmetrized(ContinuedFraction::golden_ratio(), m);
    CHECK(p.size() == 2 * m);
    std::multiset<std::pair<std::uint64_t, std::uint64_t>> pts;
    for (std::size_t n = 0; n < p.size(); ++n) pts.emplace(p.numerator(n, 0), p.numerator(n, 1));
    const std::uint64_t q = p.denominator(0);
    for (const auto& [x, y] : pts)
      if (x != 0) CHECK(pts.count({q - x, y}) == pts.count({x, y}));
    CHECK(p.denominator(1) == m);
  }
  const auto one = davenport_symmetrized(ContinuedFraction::sqrt2(), 1);
  CHECK(one.numerator(0, 1) == 0);
  CHECK(one.numerator(1, 1) == 0);
  CHECK_THROWS_AS(davenport_symmetrized(ContinuedFraction::golden_ratio(), 0), ParameterError);
}
