#include "overpart/series.hpp"

#include <algorithm>
#include <sstream>

namespace overpart {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::WindowViolation: return "window violation";
    case ErrorKind::PrecisionExceeded: return "precision exceeded";
    case ErrorKind::NotInvertible: return "not invertible";
    case ErrorKind::EmptyWindow: return "empty window";
    case ErrorKind::NonconvergentProduct: return "nonconvergent product";
    case ErrorKind::NonconvergentPhi: return "nonconvergent phi";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::InternalConsistency: return "internal consistency";
  }
  return "unknown";
}

QMonomial::QMonomial(Rational c, Exponent e) : coeff(std::move(c)), exp(e) {
  coeff.canonicalize();
  if (coeff == 0) throw Error(ErrorKind::Domain, "QMonomial coefficient must be nonzero");
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const QMonomial& m) {
  std::ostringstream os;
  if (m.coeff == -1) {
    os << '-';
  } else if (m.coeff != 1) {
    os << m.coeff.get_str() << '*';
  }
  os << "q^" << m.exp;
  return os.str();
}

QSeries QSeries::from_terms(std::span<const Term> terms, Exponent prec) {
  Exponent lo = std::min<Exponent>(0, prec);
  for (const auto& t : terms) {
    if (t.exp >= prec) {
      throw Error(ErrorKind::WindowViolation,
                  "term q^" + std::to_string(t.exp) + " outside window O(q^" + std::to_string(prec) + ")");
    }
    lo = std::min(lo, t.exp);
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(prec - lo));
  for (const auto& t : terms) {
    Rational c = t.coeff;
    c.canonicalize();
    coeffs[static_cast<std::size_t>(t.exp - lo)] += c;
  }
  return {lo, prec, std::move(coeffs)};
}

QSeries QSeries::from_coefficients(Exponent lo, std::vector<Rational> coeffs) {
  const auto prec = lo + static_cast<Exponent>(coeffs.size());
  for (auto& c : coeffs) c.canonicalize();
  return {lo, prec, std::move(coeffs)};
}

QSeries QSeries::zero(Exponent prec) { return from_terms({}, prec); }

// constant() and monomial() silently truncate a term that falls outside
// the window; from_terms() treats that as an error.
QSeries QSeries::constant(const Rational& c, Exponent prec) { return monomial(c, 0, prec); }

QSeries QSeries::monomial(const Rational& c, Exponent e, Exponent prec) {
  if (e >= prec) return zero(prec);
  const Term t{e, c};
  return from_terms(std::span<const Term>(&t, 1), prec);
}

Rational QSeries::coeff(Exponent e) const {
  if (e >= prec_) {
    throw Error(ErrorKind::PrecisionExceeded,
                "coefficient of q^" + std::to_string(e) + " requested from series known to O(q^" +
                    std::to_string(prec_) + ")");
  }
  if (e < lo_) return Rational(0);
  return coeffs_[static_cast<std::size_t>(e - lo_)];
}

std::optional<Exponent> QSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return lo_ + static_cast<Exponent>(i);
  }
  return std::nullopt;
}

Exponent QSeries::effective_valuation() const { return valuation().value_or(prec_); }

QSeries QSeries::truncated(Exponent prec) const {
  if (prec >= prec_) return *this;
  if (prec <= lo_) return {prec, prec, {}};
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + (prec - lo_));
  return {lo_, prec, std::move(c)};
}

QSeries QSeries::shifted(Exponent k) const { return {lo_ + k, prec_ + k, coeffs_}; }

QSeries QSeries::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
  return {lo_, prec_, std::move(out)};
}

QSeries QSeries::times_binomial(const Rational& c, Exponent k) const {
  if (c == 0) return *this;
  if (k == 0) return scaled(Rational(1) + c);
  if (k < 0) {
    // 1 + c q^k = c q^k (1 + c^{-1} q^{-k})
    return shifted(k).scaled(c).times_binomial(Rational(1) / c, -k);
  }
  std::vector<Rational> out = coeffs_;
  const auto len = static_cast<Exponent>(coeffs_.size());
  Rational tmp;
  for (Exponent i = k; i < len; ++i) {
    mpq_mul(tmp.get_mpq_t(), c.get_mpq_t(), coeffs_[static_cast<std::size_t>(i - k)].get_mpq_t());
    out[static_cast<std::size_t>(i)] += tmp;
  }
  return {lo_, prec_, std::move(out)};
}

QSeries QSeries::over_binomial(const Rational& c, Exponent k) const {
  if (c == 0) return *this;
  if (k == 0) {
    if (c == -1) throw Error(ErrorKind::NotInvertible, "division by the zero constant 1 - 1");
    return scaled(Rational(1) / (Rational(1) + c));
  }
  if (k < 0) {
    // 1 / (1 + c q^k) = c^{-1} q^{-k} / (1 + c^{-1} q^{-k})
    const Rational inv = Rational(1) / c;
    return over_binomial(inv, -k).scaled(inv).shifted(-k);
  }
  std::vector<Rational> out = coeffs_;
  const auto len = static_cast<Exponent>(coeffs_.size());
  Rational tmp;
  for (Exponent i = k; i < len; ++i) {
    mpq_mul(tmp.get_mpq_t(), c.get_mpq_t(), out[static_cast<std::size_t>(i - k)].get_mpq_t());
    out[static_cast<std::size_t>(i)] -= tmp;
  }
  return {lo_, prec_, std::move(out)};
}

bool QSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& r) { return r.get_den() == 1; });
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const Exponent lo = std::min(a.lo_, b.lo_);
  const Exponent prec = std::min(a.prec_, b.prec_);
  std::vector<Rational> out(static_cast<std::size_t>(prec - lo));
  for (Exponent e = lo; e < prec; ++e) {
    auto& slot = out[static_cast<std::size_t>(e - lo)];
    if (e >= a.lo_) slot += a.coeffs_[static_cast<std::size_t>(e - a.lo_)];
    if (e >= b.lo_) slot += b.coeffs_[static_cast<std::size_t>(e - b.lo_)];
  }
  return {lo, prec, std::move(out)};
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const Exponent va = a.effective_valuation();
  const Exponent vb = b.effective_valuation();
  const Exponent lo = a.lo_ + b.lo_;
  const Exponent prec = std::min(a.prec_ + vb, b.prec_ + va);
  std::vector<Rational> out(static_cast<std::size_t>(prec - lo));
  Rational tmp;
  for (Exponent i = va; i < a.prec_; ++i) {
    const Rational& ai = a.coeffs_[static_cast<std::size_t>(i - a.lo_)];
    if (ai == 0) continue;
    for (Exponent j = vb; j < b.prec_ && i + j < prec; ++j) {
      const Rational& bj = b.coeffs_[static_cast<std::size_t>(j - b.lo_)];
      if (bj == 0) continue;
      mpq_mul(tmp.get_mpq_t(), ai.get_mpq_t(), bj.get_mpq_t());
      out[static_cast<std::size_t>(i + j - lo)] += tmp;
    }
  }
  return {lo, prec, std::move(out)};
}

QSeries add(const QSeries& a, const QSeries& b) { return a + b; }
QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries invert(const QSeries& a) {
  if (a.empty_window()) throw Error(ErrorKind::EmptyWindow, "cannot invert a series with an empty window");
  const auto v = a.valuation();
  if (!v) throw Error(ErrorKind::NotInvertible, "series is zero to O(q^" + std::to_string(a.prec_) + ")");
  const Exponent len = a.prec_ - *v;
  const auto unit = [&](Exponent j) -> const Rational& {
    return a.coeffs_[static_cast<std::size_t>(*v + j - a.lo_)];
  };
  std::vector<Rational> inv(static_cast<std::size_t>(len));
  const Rational lead_inv = Rational(1) / unit(0);
  inv[0] = lead_inv;
  Rational acc;
  Rational tmp;
  for (Exponent k = 1; k < len; ++k) {
    acc = 0;
    for (Exponent j = 1; j <= k; ++j) {
      const Rational& uj = unit(j);
      if (uj == 0) continue;
      mpq_mul(tmp.get_mpq_t(), uj.get_mpq_t(), inv[static_cast<std::size_t>(k - j)].get_mpq_t());
      acc += tmp;
    }
    inv[static_cast<std::size_t>(k)] = -lead_inv * acc;
  }
  return {-*v, a.prec_ - 2 * *v, std::move(inv)};
}

QSeries divide(const QSeries& a, const QSeries& b) { return a * invert(b); }

Rational coeff(const QSeries& a, Exponent e) { return a.coeff(e); }

OrderComparison equal_to_order(const QSeries& a, const QSeries& b, Exponent order) {
  if (order >= a.prec() || order >= b.prec()) {
    throw Error(ErrorKind::PrecisionExceeded,
                "comparison to q^" + std::to_string(order) + " needs both series known past it (have O(q^" +
                    std::to_string(a.prec()) + "), O(q^" + std::to_string(b.prec()) + "))");
  }
  for (Exponent e = std::min(a.lo(), b.lo()); e <= order; ++e) {
    Rational x = a.coeff(e);
    Rational y = b.coeff(e);
    if (x != y) return {false, Mismatch{e, std::move(x), std::move(y)}};
  }
  return {};
}

std::string to_string(const QSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (Exponent e = s.lo(); e < s.prec(); ++e) {
    const Rational& c = s.coefficients()[static_cast<std::size_t>(e - s.lo())];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  if (first) os << '0';
  os << " + O(q^" << s.prec() << ')';
  return os.str();
}

}  // namespace overpart
