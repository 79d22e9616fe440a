#include <doctest.h>

#include "overpart/enumeration.hpp"
#include "support.hpp"

using namespace overpart;
using overpart::testing::brute_counts;
using overpart::testing::series_from_ints;

TEST_CASE("divisor_count") {
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(4) == 3);
  CHECK(divisor_count(12) == 6);
  CHECK_THROWS_AS((void)divisor_count(0), Error);
}

TEST_CASE("partition counts: worked examples") {
  CHECK(count_p_exact_diff(4, 1) == 1);
  CHECK(count_p_exact_diff(4, 0) == 3);
  CHECK(count_p_exact_diff(5, 2) == 1);

  CHECK(count_p_bounded_diff(4, 1) == 4);
  CHECK(count_p_bounded_diff(4, 0) == 3);
  CHECK(count_p_bounded_diff(4, 3) == 5);

  CHECK(count_opbar_total(4) == 14);
  CHECK(count_opbar_total(1) == 2);
  CHECK(count_opbar_total(5) == 24);

  CHECK(count_opbar_bounded(4, 1) == 10);
  CHECK(count_opbar_bounded(4, 0) == 6);
  CHECK(count_opbar_bounded(4, 2) == 14);

  CHECK(count_g(4, 1) == 8);
  CHECK(count_g(4, 0) == 3);
  CHECK(count_g(4, 2) == 12);
}

TEST_CASE("the listed overpartitions of 4") {
  const auto all = overpartitions_of(4);
  CHECK(all.size() == 14);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("weighted enumeration agrees with materialised overline assignments") {
  for (int n = 1; n <= 12; ++n) {
    CHECK(count_opbar_total(n) == static_cast<long>(overpartitions_of(n).size()));
    for (int t = 0; t <= n; ++t) {
      CHECK(count_opbar_bounded(n, t) == count_opbar_bounded_materialized(n, t));
      CHECK(count_g(n, t) == count_g_materialized(n, t));
    }
  }
}

TEST_CASE("library counts agree with an upward-walking brute force") {
  for (int n = 1; n <= 18; ++n) {
    for (int t = 0; t <= 6; ++t) {
      const auto brute = brute_counts(n, t);
      CHECK(count_p_bounded_diff(n, t) == brute.partitions_bounded);
      CHECK(count_p_exact_diff(n, t) == brute.partitions_exact);
      CHECK(count_opbar_bounded(n, t) == brute.overpartitions_bounded);
      CHECK(count_g(n, t) == brute.g);
    }
  }
}

TEST_CASE("bounded counts are monotone in t and stabilise at the total") {
  for (int n = 1; n <= 20; ++n) {
    const BigInt total = count_opbar_total(n);
    BigInt previous = 0;
    for (int t = 0; t <= n + 1; ++t) {
      const BigInt value = count_opbar_bounded(n, t);
      CHECK(value >= previous);
      if (t >= n - 1) CHECK(value == total);
      previous = value;
    }
  }
}

TEST_CASE("g_t <= pbar_t <= 2 g_t") {
  for (int n = 1; n <= 25; ++n) {
    for (int t = 1; t <= 8; ++t) {
      const BigInt g = count_g(n, t);
      const BigInt pbar = count_opbar_bounded(n, t);
      CHECK(g <= pbar);
      CHECK(pbar <= 2 * g);
    }
  }
}

TEST_CASE("p(n,0) = d(n), p(n,1) = n - d(n), g_1(n) = 2n") {
  for (int n = 1; n <= 200; ++n) {
    const BigInt d = divisor_count(n);
    CHECK(count_p_exact_diff(n, 0) == d);
    CHECK(count_p_exact_diff(n, 1) == n - d);
    CHECK(count_g(n, 1) == 2 * n);
  }
}

TEST_CASE("box oracles") {
  CHECK(equal_to_order(over_qbinom_box_oracle(0, 0), QSeries::constant(Rational(1), 1), 0));
  CHECK(equal_to_order(over_qbinom_box_oracle(1, 1), series_from_ints(0, {1, 2}), 1));
  CHECK(equal_to_order(over_qbinom_box_oracle(2, 2), series_from_ints(0, {1, 2, 4, 4, 2}), 4));
  CHECK(equal_to_order(qbinom_box_oracle(2, 2), series_from_ints(0, {1, 1, 2, 1, 1}), 4));
  // A wide enough box sees every overpartition of n.
  const auto wide = over_qbinom_box_oracle(9, 9);
  for (int n = 1; n <= 9; ++n) CHECK(wide.coeff(n) == Rational(count_opbar_total(n)));
}

TEST_CASE("oracle_series") {
  const auto g1 = oracle_series(OracleKind::g_t, 1, 4);
  CHECK(g1.prec() == 5);
  CHECK(equal_to_order(g1, series_from_ints(0, {0, 2, 4, 6, 8}), 4));
  CHECK(equal_to_order(oracle_series(OracleKind::d, 0, 3), series_from_ints(0, {0, 1, 2, 2}), 3));
  CHECK(equal_to_order(oracle_series(OracleKind::pbar_t, 0, 4), series_from_ints(0, {0, 2, 4, 4, 6}), 4));
  CHECK_THROWS_AS((void)oracle_series(OracleKind::d, 0, 0), Error);
}
