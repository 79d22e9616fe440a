#include "overpart/identities.hpp"

#include <string>

#include "overpart/enumeration.hpp"
#include "overpart/qfunctions.hpp"

namespace overpart {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::Domain, what);
}

void require_prec(Exponent prec) { require(prec >= 1, "precision must be at least 1"); }

QSeries one(Exponent prec) { return QSeries::constant(Rational(1), prec); }

// 1 - q^k as a series known to O(q^prec).
QSeries one_minus_q_pow(int k, Exponent prec) { return one(prec).times_binomial(Rational(-1), k); }

// (-q)_n / (q)_n - 1
QSeries overline_box_minus_one(int n, Exponent prec) {
  const QSeries ratio = pochhammer(QMonomial::minus_q_power(1), n, prec) * invert(pochhammer(QMonomial::q_power(1), n, prec));
  return ratio - one(prec);
}

void require_summand_valuation(const QSeries& summand, Exponent index) {
  const auto v = summand.valuation();
  if (v && *v < index) {
    throw Error(ErrorKind::InternalConsistency,
                "summand " + std::to_string(index) + " has valuation " + std::to_string(*v) + " below its index");
  }
}

}  // namespace

QSeries gf_bk(int t, Exponent prec) {
  require(t >= 1, "gf_bk needs t >= 1");
  require_prec(prec);
  const QSeries inner = invert(pochhammer(QMonomial::q_power(1), t, prec)) - one(prec);
  return inner * invert(one_minus_q_pow(t, prec));
}

QSeries gf_abr(int t, Exponent prec) {
  require(t >= 2, "gf_abr needs t >= 2; use p(n,0) = d(n) and p(n,1) = n - d(n)");
  require_prec(prec);
  const QSeries inv_qt = invert(pochhammer(QMonomial::q_power(1), t, prec));
  const QSeries inv_t = invert(one_minus_q_pow(t, prec));
  const QSeries inv_t1 = invert(one_minus_q_pow(t - 1, prec));
  const QSeries lead = QSeries::monomial(Rational(1), t - 1, prec).times_binomial(Rational(-1), 1) * inv_t * inv_t1;
  const QSeries last = QSeries::monomial(Rational(1), t, prec) * inv_t1 * inv_qt;
  return lead - lead * inv_qt + last;
}

QSeries gf_G(int t, Exponent prec) {
  require(t >= 1, "gf_G needs t >= 1");
  require_prec(prec);
  return overline_box_minus_one(t, prec) * invert(one_minus_q_pow(t, prec));
}

QSeries divisor_lambert_series(Exponent prec) {
  require_prec(prec);
  QSeries sum = QSeries::zero(prec);
  for (Exponent m = 1; m < prec; ++m) {
    sum += QSeries::monomial(Rational(1), m, prec).over_binomial(Rational(-1), m);
  }
  return sum;
}

QSeries gf_pbar(int t, Exponent prec) {
  require(t >= 0, "gf_pbar needs t >= 0");
  require_prec(prec);
  QSeries divisors = divisor_lambert_series(prec);
  for (int n = 1; n < prec; ++n) {
    if (divisors.coeff(n) != Rational(divisor_count(n))) {
      throw Error(ErrorKind::InternalConsistency, "Lambert series disagrees with d(" + std::to_string(n) + ")");
    }
  }
  QSeries inner = divisors;
  for (int n = 1; n <= t; ++n) {
    const Rational sign = (n % 2 == 0) ? 1 : -1;
    inner += (overline_box_minus_one(n, prec) * invert(one_minus_q_pow(n, prec))).scaled(sign);
  }
  return inner.scaled(Rational(t % 2 == 0 ? 2 : -2));
}

QSeries gf_pbar_direct(int t, Exponent prec) {
  require(t >= 0, "gf_pbar_direct needs t >= 0");
  require_prec(prec);
  QSeries sum = QSeries::zero(prec);
  for (Exponent m = 1; m < prec; ++m) {
    QSeries summand = QSeries::monomial(Rational(2), m, prec).over_binomial(Rational(-1), m);
    for (int j = 1; j <= t; ++j) {
      summand = summand.times_binomial(Rational(1), m + j).over_binomial(Rational(-1), m + j);
    }
    require_summand_valuation(summand, m);
    sum += summand;
  }
  return sum;
}

QSeries gf_g_direct(int t, Exponent prec) {
  require(t >= 1, "gf_g_direct needs t >= 1");
  require_prec(prec);
  QSeries sum = QSeries::zero(prec);
  for (Exponent m = 1; m < prec; ++m) {
    QSeries summand = QSeries::monomial(Rational(2), m, prec).over_binomial(Rational(-1), m);
    for (int j = 1; j < t; ++j) {
      summand = summand.times_binomial(Rational(1), m + j).over_binomial(Rational(-1), m + j);
    }
    summand = summand.over_binomial(Rational(-1), m + t);
    require_summand_valuation(summand, m);
    sum += summand;
  }
  return sum;
}

QSeries gf_overline_total(Exponent prec) {
  require_prec(prec);
  return pochhammer_inf(QMonomial::minus_q_power(1), prec) * invert(pochhammer_inf(QMonomial::q_power(1), prec));
}

const ClosedForms& ClosedForms::standard() {
  static const ClosedForms forms;
  return forms;
}

}  // namespace overpart
