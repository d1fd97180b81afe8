#include <random>
#include <sstream>

#include "doctest.h"
#include "qmcnet/constructions.hpp"
#include "qmcnet/dual.hpp"
#include "qmcnet/metrics.hpp"

using namespace qmcnet;

TEST_CASE("weight examples") {
  CHECK(nrt_weight(0, 2) == 0);
  CHECK(nrt_weight(6, 2) == 3);
  for (std::uint32_t b : {2u, 3u, 7u}) CHECK(nrt_weight(1, b) == 1);
  CHECK(hamming_weight(0, 3) == 0);
  CHECK(hamming_weight(5, 2) == 2);
  CHECK(hamming_weight(50, 5) == 1);
  CHECK(mu_alpha(6, 2, 2) == 5);
  CHECK(mu_alpha(4, 3, 2) == 3);
  CHECK(mu_alpha(0, 4, 5) == 0);
  const std::uint64_t zero[3] = {0, 0, 0};
  CHECK(vector_weight(zero, WeightSpec::hamming(), 2) == 0);
  const std::uint64_t fives[2] = {5, 5};
  CHECK(vector_weight(fives, WeightSpec::hamming(), 2) == 4);
  const std::uint64_t six_one[2] = {6, 1};
  CHECK(vector_weight(six_one, WeightSpec::mu(2), 2) == 6);
  CHECK(weight(6, WeightSpec::nrt(), 2) == 3);
}

TEST_CASE("weights are ordered and monotone in alpha") {
  for (std::uint32_t b : {2u, 5u}) {
    for (std::uint64_t k = 0; k <= (1u << 16); ++k) {
      const auto h = hamming_weight(k, b), m1 = nrt_weight(k, b);
      CHECK(m1 == mu_alpha(k, 1, b));
      CHECK(h <= m1);
      for (std::size_t a = 1; a <= 5; ++a) {
        const auto ma = mu_alpha(k, a, b);
        if (!(ma <= mu_alpha(k, a + 1, b) && m1 <= ma && ma <= a * m1)) {
          FAIL("weight ordering violated at k=" << k << " b=" << b << " alpha=" << a);
        }
      }
    }
  }
}

TEST_CASE("digitwise difference and the quasi-orthogonality trigger") {
  CHECK(digitwise_difference(5, 3, 2) == 6);
  CHECK(digitwise_difference(7, 13, 5) == 24);
  CHECK(digitwise_difference(42, 42, 3) == 0);
  std::mt19937_64 rng(5);
  for (std::uint32_t b : {2u, 3u, 5u}) {
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t k = rng() % 100000, l = rng() % 100000;
      std::size_t differ = 0;
      for (std::uint64_t x = k, y = l; x || y; x /= b, y /= b) differ += (x % b) != (y % b);
      const auto d = digitwise_difference(k, l, b);
      CHECK(hamming_weight(d, b) == differ);
      CHECK(digitwise_difference(d, static_cast<std::uint64_t>(0), b) == d);
    }
  }
}

TEST_CASE("min dual NRT weight equals m - t + 1") {
  std::mt19937_64 rng(11);
  std::vector<GeneratingMatrixSet> nets = {cs_matrices({5, 2, 2, 2, {}}), faure_matrices(3, 3, 3),
                                           niederreiter_matrices(niederreiter_params(4), 6, 6)};
  for (int i = 0; i < 20; ++i) {
    const std::uint32_t b = i % 2 ? 3 : 2;
    const std::size_t m = 2 + i % 3, s = 1 + i % 3;
    std::vector<FieldMatrix> mats;
    for (std::size_t j = 0; j < s; ++j) {
      FieldMatrix c(b, m, m);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t l = 0; l < m; ++l) c.set(r, l, static_cast<std::uint32_t>(rng() % b));
      mats.push_back(std::move(c));
    }
    nets.emplace_back(std::move(mats));
  }
  for (const auto& c : nets) {
    const DualSpace dual(c, 1u << 22);
    const auto profile = min_dual_weight(dual, WeightSpec::nrt());
    REQUIRE(profile.minimum.has_value());
    CHECK(*profile.minimum == c.cols() - compute_t_value(c) + 1);
    CHECK(vector_weight(profile.witness, WeightSpec::nrt(), c.base()) == *profile.minimum);
  }
}

TEST_CASE("min_dual_weight examples") {
  const DualSpace single(GeneratingMatrixSet({FieldMatrix::identity(2, 3)}), 100);
  CHECK_FALSE(min_dual_weight(single, WeightSpec::hamming(), 8).minimum.has_value());
  const auto unbounded = min_dual_weight(single, WeightSpec::hamming());
  CHECK(unbounded.minimum == 1u);
  CHECK(unbounded.witness == std::vector<std::uint64_t>{8});

  const DualSpace cs(cs_matrices({5, 2, 2, 2, {}}), 1000);
  const auto h = min_dual_weight(cs, WeightSpec::hamming(), 625);
  REQUIRE(h.minimum.has_value());
  CHECK(*h.minimum >= 3);
  CHECK(h.dual_size == 625);

  std::ostringstream out;
  write_weight_profile_header(out);
  write_weight_profile_row(out, min_dual_weight(single, WeightSpec::mu(2), 8));
  CHECK(out.str() == "kind,alpha,min,witness,dual_size\nmu_alpha,2,inf,,1\n");
}

TEST_CASE("t_alpha examples") {
  CHECK(t_alpha(1, 4, 3) == 4);
  CHECK(t_alpha(3, 0, 1) == 3);
  CHECK(t_alpha(5, 2, 2) == 30);
}

TEST_CASE("order-alpha verification") {
  const auto params = niederreiter_params(2);
  const auto e = dp_net_matrices(2, 3, 1);
  CHECK(verify_order_alpha(e, 2, 3, niederreiter_t_bound(params), 1u << 20));
  const auto r = check_order_alpha(e, 2, 3, 0, 1u << 20);
  CHECK(r.bound == 5);
  CHECK(r.profile.minimum >= 5u);

  for (std::size_t m = 1; m <= 5; ++m) {
    const auto c = dp_net_matrices(1, m, 2);
    CHECK(verify_order_alpha(c, 1, m, compute_t_value(c), 1u << 20));
  }

  bool found_failure = false;
  for (std::size_t alpha = 2; alpha <= 3 && !found_failure; ++alpha) {
    for (std::size_t m = 2; m <= 5 && !found_failure; ++m) {
      const auto good = dp_net_matrices(alpha, m, 1);
      FieldMatrix reversed(2, good.rows(), good.cols());
      for (std::size_t row = 0; row < good.rows(); ++row)
        for (std::size_t col = 0; col < good.cols(); ++col)
          reversed.set(row, col, good.matrix(0)(good.rows() - 1 - row, col));
      const auto t = niederreiter_t_bound(niederreiter_params(alpha));
      CHECK(verify_order_alpha(good, alpha, m, t, 1u << 22));
      found_failure = !verify_order_alpha(GeneratingMatrixSet({reversed}), alpha, m, t, 1u << 22);
    }
  }
  CHECK(found_failure);
}
