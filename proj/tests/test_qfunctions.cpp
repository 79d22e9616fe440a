#include <doctest.h>

#include <random>

#include "overpart/enumeration.hpp"
#include "overpart/identities.hpp"
#include "overpart/qfunctions.hpp"
#include "support.hpp"

using namespace overpart;
using overpart::testing::series_from_ints;

namespace {

QMonomial q(Exponent e) { return QMonomial::q_power(e); }
QMonomial mq(Exponent e) { return QMonomial::minus_q_power(e); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an overpart::Error");
  return ErrorKind::InternalConsistency;
}

// Euler's pentagonal number theorem, independent of any product expansion.
QSeries pentagonal(Exponent prec) {
  std::vector<Rational> c(static_cast<std::size_t>(prec));
  for (long k = -20; k <= 20; ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e < prec) c[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
  }
  return QSeries::from_coefficients(0, std::move(c));
}

// Number of partitions of n into distinct parts, by subset enumeration.
long distinct_partitions(int n) {
  long count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) sum += i + 1;
    }
    if (sum == n) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("pochhammer: worked examples") {
  CHECK(equal_to_order(pochhammer(q(1), 2, 10), series_from_ints(0, {1, -1, -1, 1, 0, 0, 0, 0, 0, 0}), 9));
  CHECK(equal_to_order(pochhammer(mq(1), 2, 10), series_from_ints(0, {1, 1, 1, 1, 0, 0, 0, 0, 0, 0}), 9));
  const auto vanishing = pochhammer(q(-2), 3, 10);
  CHECK_FALSE(vanishing.valuation().has_value());
  CHECK(equal_to_order(pochhammer(q(5), 0, 4), QSeries::constant(Rational(1), 4), 3));
}

TEST_CASE("pochhammer matches schoolbook Laurent multiplication") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    long raw = static_cast<long>(rng() % 5) - 2;
    if (raw == 0) raw = 1;
    const Rational c(raw);
    const Exponent e = static_cast<Exponent>(rng() % 7) - 3;
    const int n = static_cast<int>(rng() % 6);
    const auto oracle = overpart::testing::naive_pochhammer(c, e, n);
    const auto series = pochhammer(QMonomial(c, e), n, 30);
    for (Exponent x = std::min<Exponent>(series.lo(), -20); x < 30; ++x) {
      const auto it = oracle.find(x);
      CHECK(series.coeff(x) == (it == oracle.end() ? Rational(0) : it->second));
    }
  }
}

TEST_CASE("pochhammer(q^-t, m) vanishes exactly when m > t") {
  for (int t = 0; t <= 6; ++t) {
    for (int m = 0; m <= 9; ++m) {
      const bool zero = !pochhammer(q(-t), m, 40).valuation().has_value();
      CHECK(zero == (m > t));
    }
  }
}

TEST_CASE("pochhammer_inf") {
  CHECK(equal_to_order(pochhammer_inf(q(1), 6), series_from_ints(0, {1, -1, -1, 0, 0, 1}), 5));
  CHECK(equal_to_order(pochhammer_inf(q(1), 80), pentagonal(80), 79));

  CHECK(equal_to_order(pochhammer_inf(mq(1), 4), series_from_ints(0, {1, 1, 1, 2}), 3));
  const auto distinct = pochhammer_inf(mq(1), 20);
  for (int n = 1; n < 20; ++n) CHECK(distinct.coeff(n) == distinct_partitions(n));

  CHECK(kind_of([] { (void)pochhammer_inf(q(0), 10); }) == ErrorKind::NonconvergentProduct);
  CHECK(kind_of([] { (void)pochhammer_inf(q(-1), 10); }) == ErrorKind::NonconvergentProduct);
}

TEST_CASE("qbinom: Gaussian polynomials") {
  CHECK(equal_to_order(qbinom(2, 0), QSeries::constant(Rational(1), 1), 0));
  CHECK(equal_to_order(qbinom(1, 1), series_from_ints(0, {1, 1}), 1));
  const auto box22 = series_from_ints(0, {1, 1, 2, 1, 1});
  CHECK(equal_to_order(qbinom_box_oracle(2, 2), box22, 4));
  CHECK(equal_to_order(qbinom(2, 2), box22, 4));
  for (int M = 0; M <= 7; ++M) {
    for (int N = 0; N <= 7; ++N) {
      const auto g = qbinom(M, N);
      CHECK(g.prec() == M * N + 1);
      CHECK(equal_to_order(g, qbinom_box_oracle(M, N), M * N));
    }
  }
}

TEST_CASE("over q-binomial: explicit sum, recurrence and box oracle") {
  CHECK(equal_to_order(over_qbinom_sum(0, 5), QSeries::constant(Rational(1), 1), 0));
  CHECK(equal_to_order(over_qbinom_sum(1, 1), series_from_ints(0, {1, 2}), 1));
  const auto box22 = series_from_ints(0, {1, 2, 4, 4, 2});
  CHECK(equal_to_order(over_qbinom_box_oracle(2, 2), box22, 4));
  CHECK(equal_to_order(over_qbinom_sum(2, 2), box22, 4));

  CHECK(equal_to_order(over_qbinom_rec(1, 1), series_from_ints(0, {1, 2}), 1));
  CHECK(equal_to_order(over_qbinom_rec(3, 0), QSeries::constant(Rational(1), 1), 0));
  CHECK(equal_to_order(over_qbinom_rec(2, 2), box22, 4));

  for (int M = 0; M <= 8; ++M) {
    for (int N = 0; N <= 8; ++N) {
      const auto sum = over_qbinom_sum(M, N);
      const auto order = static_cast<Exponent>(M) * N;
      CHECK(equal_to_order(sum, over_qbinom_rec(M, N), order));
      CHECK(equal_to_order(sum, over_qbinom_box_oracle(M, N), order));
      CHECK(equal_to_order(sum, over_qbinom_sum(N, M), order));
      CHECK(sum.coeff(0) == 1);
      if (M >= 1 && N >= 1) CHECK(sum.coeff(1) == 2);
    }
  }
}

TEST_CASE("OverQBinomTable memoizes by (M, N)") {
  OverQBinomTable table(30);
  const auto& b = table.get(4, 3);
  CHECK(table.cached() > 1);
  const auto before = table.cached();
  CHECK(&table.get(4, 3) == &b);
  CHECK(table.cached() == before);
  // A truncated table entry agrees with the exact polynomial below the cut.
  OverQBinomTable small(5);
  CHECK(equal_to_order(small.get(6, 6), over_qbinom_sum(6, 6), 4));
}

TEST_CASE("phi: worked examples") {
  // 2phi1(-1, q^-1; -q; q, q^2) = (1 - q)/(1 + q)
  const auto lhs = phi({{QMonomial(Rational(-1), 0), q(-1)}, {mq(1)}, q(2), 20});
  const auto one = QSeries::constant(Rational(1), 20);
  const auto expected = one.times_binomial(Rational(-1), 1) * invert(one.times_binomial(Rational(1), 1));
  CHECK(equal_to_order(lhs, expected, 19));

  // Upper parameter q^0 stops the sum after the m = 0 term.
  const auto trivial = phi_evaluate({{QMonomial(Rational(3, 2), 4), q(0)}, {QMonomial(Rational(5), 2)}, q(1), 15});
  CHECK(trivial.terms == 1);
  CHECK(trivial.terminated);
  CHECK(equal_to_order(trivial.value, QSeries::constant(Rational(1), 15), 14));

  // 3phi2(q, q, -q^{t+1}; -q^2, q^{t+2}; q, q) at t = 2 is forced by G_2:
  // it equals (1+q)(q)_3 / (q(-q)_2) * G_2/2.
  const int t = 2;
  const Exponent prec = 12;
  const auto three_phi_two = phi({{q(1), q(1), mq(t + 1)}, {mq(2), q(t + 2)}, q(1), prec});
  FactoredTerm inverse_prefactor(Rational(1), -1);
  inverse_prefactor.multiply_binomial(Rational(1), 1);
  for (int k = 1; k <= t + 1; ++k) inverse_prefactor.multiply_binomial(Rational(-1), k);
  for (int k = 1; k <= t; ++k) inverse_prefactor.divide_binomial(Rational(1), k);
  const auto forced = inverse_prefactor.expand(prec) * gf_G(t, prec + 1).scaled(Rational(1, 2));
  CHECK(forced.prec() >= prec);
  CHECK(equal_to_order(three_phi_two, forced, prec - 1));
}

TEST_CASE("phi with upper parameter q^-n has exactly n+1 terms") {
  for (int n = 0; n <= 8; ++n) {
    const auto eval = phi_evaluate({{mq(1), q(-n), QMonomial(Rational(2), 3)}, {q(2), mq(5)}, q(1), 30});
    CHECK(eval.terminated);
    CHECK(eval.terms == n + 1);
  }
}

TEST_CASE("phi: non-terminating series stop once valuations pass prec") {
  // 2phi1(q, q; q^2; q, q) = sum_m (1-q)/(1-q^{m+1}) q^m
  const auto eval = phi_evaluate({{q(1), q(1)}, {q(2)}, q(1), 25});
  CHECK_FALSE(eval.terminated);
  CHECK(eval.terms == 25);
  QSeries oracle = QSeries::zero(25);
  for (Exponent m = 0; m < 25; ++m) {
    oracle += QSeries::monomial(Rational(1), m, 25).times_binomial(Rational(-1), 1).over_binomial(Rational(-1), m + 1);
  }
  CHECK(equal_to_order(eval.value, oracle, 24));
}

TEST_CASE("phi: error paths") {
  // Non-terminating with argument exponent 0.
  CHECK(kind_of([] { (void)phi({{q(1), q(1)}, {q(2)}, q(0), 10}); }) == ErrorKind::NonconvergentPhi);
  // 3phi1 with z = q: valuations eventually decrease.
  CHECK(kind_of([] { (void)phi({{q(1), q(1), q(1)}, {q(2)}, q(1), 10}); }) == ErrorKind::NonconvergentPhi);
  // Lower parameter q^-1 zeroes (q^-1; q)_2.
  CHECK(kind_of([] { (void)phi({{q(1), q(1)}, {q(-1)}, q(1), 10}); }) == ErrorKind::DivisionByZero);
  // A lower q^-k is harmless if the sum terminates first.
  CHECK_NOTHROW((void)phi({{q(-1), q(1)}, {q(-3)}, q(1), 10}));
}

TEST_CASE("verify_chu") {
  const QMonomial minus_one(Rational(-1), 0);
  CHECK(verify_chu(minus_one, 1, mq(1), 10).passed());
  CHECK(verify_chu(QMonomial(Rational(7, 3), -2), 0, QMonomial(Rational(-5), 4), 10).passed());
  for (int t = 1; t <= 8; ++t) {
    const auto report = verify_chu(minus_one, t, mq(1), 40);
    CHECK_MESSAGE(report.passed(), report.message);
    CHECK(report.check.name == CheckName::chu);
  }
  // A generic instance with Laurent pieces on both sides.
  CHECK(verify_chu(QMonomial(Rational(3), 2), 4, QMonomial(Rational(-1, 2), 1), 30).passed());
  CHECK(verify_chu(q(-3), 3, q(5), 30).passed());
}
