#pragma once

// Exact truncated Laurent series over the rationals.
//
// A QSeries knows its coefficients exactly on the window [lo, prec).
// Everything below lo is zero by contract; everything at or above prec is
// unknown. Arithmetic propagates the window conservatively so that every
// stored coefficient of a result is exact.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "overpart/error.hpp"

namespace overpart {

using Rational = mpq_class;
using BigInt = mpz_class;
using Exponent = std::int64_t;

/// `coeff * q^exp` with a nonzero rational coefficient.
struct QMonomial {
  Rational coeff;
  Exponent exp = 0;

  QMonomial(Rational c, Exponent e);

  /// q^e
  static QMonomial q_power(Exponent e) { return {Rational(1), e}; }
  /// -q^e
  static QMonomial minus_q_power(Exponent e) { return {Rational(-1), e}; }

  friend QMonomial operator*(const QMonomial& a, const QMonomial& b) {
    return {a.coeff * b.coeff, a.exp + b.exp};
  }
  friend QMonomial operator/(const QMonomial& a, const QMonomial& b) {
    return {a.coeff / b.coeff, a.exp - b.exp};
  }
  friend bool operator==(const QMonomial& a, const QMonomial& b) {
    return a.exp == b.exp && a.coeff == b.coeff;
  }
};

std::string to_string(const QMonomial& m);

struct Term {
  Exponent exp;
  Rational coeff;
};

class QSeries {
 public:
  /// Zero series with an empty window at 0.
  QSeries() = default;

  /// Builds a series from sparse terms. Gaps are zero-filled; repeated
  /// exponents accumulate. lo = min(term exponents, 0), clipped to prec.
  static QSeries from_terms(std::span<const Term> terms, Exponent prec);
  static QSeries from_terms(std::initializer_list<Term> terms, Exponent prec) {
    return from_terms(std::span<const Term>(terms.begin(), terms.size()), prec);
  }
  /// Dense constructor: coeffs[i] is the coefficient of q^(lo + i); prec = lo + size.
  static QSeries from_coefficients(Exponent lo, std::vector<Rational> coeffs);

  static QSeries zero(Exponent prec);
  static QSeries constant(const Rational& c, Exponent prec);
  static QSeries monomial(const Rational& c, Exponent e, Exponent prec);

  Exponent lo() const noexcept { return lo_; }
  Exponent prec() const noexcept { return prec_; }
  bool empty_window() const noexcept { return lo_ == prec_; }

  /// Coefficient of q^e. Exact zero below the window.
  Rational coeff(Exponent e) const;
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  /// Least exponent with a nonzero coefficient in the window, if any.
  std::optional<Exponent> valuation() const;

  /// Drops everything at or above `prec` (no-op if already coarser).
  QSeries truncated(Exponent prec) const;
  /// Multiplies by q^k.
  QSeries shifted(Exponent k) const;
  QSeries scaled(const Rational& c) const;

  /// Multiplies by the exact binomial (1 + c q^k). Costs O(length).
  QSeries times_binomial(const Rational& c, Exponent k) const;
  /// Divides by the exact binomial (1 + c q^k). Costs O(length).
  QSeries over_binomial(const Rational& c, Exponent k) const;

  /// True when every coefficient in the window has denominator 1.
  bool is_integral() const;

  QSeries operator-() const { return scaled(Rational(-1)); }
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries& operator+=(const QSeries& b) { return *this = *this + b; }
  QSeries& operator-=(const QSeries& b) { return *this = *this - b; }
  QSeries& operator*=(const QSeries& b) { return *this = *this * b; }

 private:
  QSeries(Exponent lo, Exponent prec, std::vector<Rational> coeffs)
      : lo_(lo), prec_(prec), coeffs_(std::move(coeffs)) {}

  // Valuation, or prec when the window is all zero.
  Exponent effective_valuation() const;

  friend QSeries invert(const QSeries& a);

  Exponent lo_ = 0;
  Exponent prec_ = 0;
  std::vector<Rational> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
/// Cauchy product. lo = lo_a + lo_b; prec = min(prec_a + v_b, prec_b + v_a)
/// where v is the valuation (which is never below lo).
QSeries mul(const QSeries& a, const QSeries& b);
/// Multiplicative inverse. With v the valuation of `a`: lo = -v and
/// prec = a.prec() - 2v.
QSeries invert(const QSeries& a);
/// a / b as a * invert(b).
QSeries divide(const QSeries& a, const QSeries& b);
Rational coeff(const QSeries& a, Exponent e);

struct Mismatch {
  Exponent exponent;
  Rational lhs;
  Rational rhs;
};

struct OrderComparison {
  bool equal = true;
  std::optional<Mismatch> mismatch;

  explicit operator bool() const noexcept { return equal; }
};

/// Compares coefficients for every exponent e <= order, starting from the
/// lower of the two windows.
OrderComparison equal_to_order(const QSeries& a, const QSeries& b, Exponent order);

/// Human-readable form, e.g. "q^-1 - 2*q + O(q^3)".
std::string to_string(const QSeries& s);

/// Rational to exact decimal text ("3", "-7/2").
std::string to_string(const Rational& r);

}  // namespace overpart
