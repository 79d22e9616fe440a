#include "overpart/qfunctions.hpp"

#include <algorithm>

namespace overpart {

void FactoredTerm::multiply_binomial(const Rational& c, Exponent e) {
  if (c == 0) return;
  if (e > 0) {
    numerator_.emplace_back(c, e);
  } else if (e == 0) {
    scalar_ *= Rational(1) + c;
  } else {
    scalar_ *= c;
    shift_ += e;
    numerator_.emplace_back(Rational(1) / c, -e);
  }
}

void FactoredTerm::divide_binomial(const Rational& c, Exponent e) {
  if (c == 0) return;
  if (e > 0) {
    denominator_.emplace_back(c, e);
  } else if (e == 0) {
    const Rational f = Rational(1) + c;
    if (f == 0) throw Error(ErrorKind::DivisionByZero, "denominator factor (1 - q^0) vanishes");
    scalar_ /= f;
  } else {
    scalar_ /= c;
    shift_ -= e;
    denominator_.emplace_back(Rational(1) / c, -e);
  }
}

void FactoredTerm::multiply_monomial(const QMonomial& m) {
  scalar_ *= m.coeff;
  shift_ += m.exp;
}

void FactoredTerm::scale(const Rational& c) { scalar_ *= c; }

QSeries FactoredTerm::expand(Exponent prec) const {
  if (is_zero() || shift_ >= prec) return QSeries::zero(prec);
  QSeries unit = QSeries::constant(scalar_, prec - shift_);
  for (const auto& [c, k] : numerator_) unit = unit.times_binomial(c, k);
  for (const auto& [c, k] : denominator_) unit = unit.over_binomial(c, k);
  return unit.shifted(shift_);
}

QSeries pochhammer(const QMonomial& a, int n, Exponent prec) {
  if (n < 0) throw Error(ErrorKind::Domain, "pochhammer length must be non-negative");
  FactoredTerm t;
  for (int k = 0; k < n; ++k) t.multiply_binomial(-a.coeff, a.exp + k);
  return t.expand(prec);
}

QSeries pochhammer_inf(const QMonomial& a, Exponent prec) {
  if (a.exp <= 0) {
    throw Error(ErrorKind::NonconvergentProduct,
                "(" + to_string(a) + "; q)_inf does not stabilise coefficientwise");
  }
  QSeries s = QSeries::constant(Rational(1), prec);
  const Rational c = -a.coeff;
  for (Exponent e = a.exp; e < prec; ++e) s = s.times_binomial(c, e);
  return s;
}

namespace {

void require_box(int M, int N) {
  if (M < 0 || N < 0) throw Error(ErrorKind::Domain, "box dimensions must be non-negative");
}

// Multiplies (q;q)_n into the numerator (sign = +1) or denominator (-1).
void apply_q_factorial(FactoredTerm& t, int n, int sign) {
  for (int k = 1; k <= n; ++k) {
    if (sign > 0) {
      t.multiply_binomial(Rational(-1), k);
    } else {
      t.divide_binomial(Rational(-1), k);
    }
  }
}

Exponent box_precision(int M, int N) { return static_cast<Exponent>(M) * N + 1; }

}  // namespace

QSeries qbinom(int M, int N) { return qbinom(M, N, box_precision(M, N)); }

QSeries qbinom(int M, int N, Exponent prec) {
  require_box(M, N);
  FactoredTerm t;
  apply_q_factorial(t, M + N, +1);
  apply_q_factorial(t, M, -1);
  apply_q_factorial(t, N, -1);
  return t.expand(prec);
}

QSeries over_qbinom_sum(int M, int N) { return over_qbinom_sum(M, N, box_precision(M, N)); }

QSeries over_qbinom_sum(int M, int N, Exponent prec) {
  require_box(M, N);
  QSeries sum = QSeries::zero(prec);
  for (int k = 0; k <= std::min(M, N); ++k) {
    FactoredTerm t(Rational(1), static_cast<Exponent>(k) * (k + 1) / 2);
    apply_q_factorial(t, M + N - k, +1);
    apply_q_factorial(t, k, -1);
    apply_q_factorial(t, M - k, -1);
    apply_q_factorial(t, N - k, -1);
    sum += t.expand(prec);
  }
  return sum;
}

const QSeries& OverQBinomTable::get(int M, int N) {
  require_box(M, N);
  const OverQBinomKey key{M, N};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  QSeries value;
  if (M == 0 || N == 0) {
    value = QSeries::constant(Rational(1), prec_);
  } else {
    const QSeries& left = get(M, N - 1);
    QSeries tail = get(M - 1, N) + get(M - 1, N - 1);
    value = left + tail.shifted(N);
  }
  return cache_.emplace(key, std::move(value)).first->second;
}

QSeries over_qbinom_rec(int M, int N) { return over_qbinom_rec(M, N, box_precision(M, N)); }

QSeries over_qbinom_rec(int M, int N, Exponent prec) {
  OverQBinomTable table(prec);
  return table.get(M, N);
}

namespace {

bool vanishes_at_some_index(const QMonomial& a) { return a.coeff == 1 && a.exp <= 0; }

}  // namespace

PhiEvaluation phi_evaluate(const PhiSpec& spec) {
  if (spec.upper.empty()) throw Error(ErrorKind::Domain, "phi needs at least one upper parameter");
  const Exponent prec = spec.prec;
  // s - r in  r+1 phi s
  const auto balance = static_cast<Exponent>(spec.lower.size()) - static_cast<Exponent>(spec.upper.size() - 1);
  const bool structural_end = std::any_of(spec.upper.begin(), spec.upper.end(), vanishes_at_some_index);
  if (!structural_end && spec.argument.exp < 1) {
    throw Error(ErrorKind::NonconvergentPhi,
                "non-terminating phi needs argument exponent >= 1, got " + to_string(spec.argument));
  }

  // From m_stable on, every new Pochhammer factor (1 - p q^{e+m}) is a unit.
  Exponent m_stable = 0;
  for (const auto& p : spec.upper) m_stable = std::max(m_stable, 1 - p.exp);
  for (const auto& p : spec.lower) m_stable = std::max(m_stable, 1 - p.exp);

  PhiEvaluation out{QSeries::zero(prec), 0, false};
  FactoredTerm term;
  const Rational balance_sign = (balance % 2 == 0) ? Rational(1) : Rational(-1);
  std::optional<Exponent> horizon;

  for (Exponent m = 0;; ++m) {
    if (term.is_zero()) {
      out.terminated = true;
      break;
    }
    if (m >= m_stable) {
      // Valuation increment from term m to m+1 is balance*m + argument.exp,
      // non-decreasing in m once balance >= 0.
      const Exponent increment = balance * m + spec.argument.exp;
      if (balance >= 0 && increment >= 1 && term.valuation() >= prec) break;
      if (!horizon) horizon = m + std::max<Exponent>(0, prec - term.valuation()) + 16;
      if (m > *horizon) {
        throw Error(ErrorKind::NonconvergentPhi,
                    "term valuations did not pass O(q^" + std::to_string(prec) + ") within the horizon");
      }
    }
    ++out.terms;
    if (term.valuation() < prec) out.value += term.expand(prec);

    for (const auto& a : spec.upper) term.multiply_binomial(-a.coeff, a.exp + m);
    if (term.is_zero()) continue;
    term.divide_binomial(Rational(-1), m + 1);
    for (const auto& b : spec.lower) term.divide_binomial(-b.coeff, b.exp + m);
    term.multiply_monomial(spec.argument);
    term.scale(balance_sign);
    term.multiply_monomial(QMonomial::q_power(balance * m));
  }
  return out;
}

QSeries phi(const PhiSpec& spec) { return phi_evaluate(spec).value; }

VerificationReport verify_chu(const QMonomial& a, int n, const QMonomial& c, Exponent prec) {
  IdentityCheck check{CheckName::chu, {{"a", to_string(a)}, {"c", to_string(c)}, {"n", std::int64_t{n}}},
                      static_cast<int>(prec - 1)};
  try {
    if (n < 0) throw Error(ErrorKind::Domain, "n must be non-negative");
    const QMonomial c_over_a = c / a;
    const QSeries lhs = phi({{a, QMonomial::q_power(-n)}, {c}, c * QMonomial::q_power(n) / a, prec});

    FactoredTerm ratio;
    for (int k = 0; k < n; ++k) {
      ratio.multiply_binomial(-c_over_a.coeff, c_over_a.exp + k);
      ratio.divide_binomial(-c.coeff, c.exp + k);
    }
    const QSeries rhs = ratio.expand(prec);

    if (auto cmp = equal_to_order(lhs, rhs, prec - 1); !cmp) {
      return VerificationReport::fail(std::move(check), *cmp.mismatch,
                                      "2phi1 side differs from (c/a;q)_n/(c;q)_n");
    }
    return VerificationReport::pass(std::move(check));
  } catch (const Error& e) {
    return VerificationReport::error(std::move(check), e.what());
  }
}

}  // namespace overpart
