#pragma once

// q-Pochhammer symbols, Gaussian and over q-binomial coefficients, and a
// truncated evaluator for the basic hypergeometric series r+1 phi s.

#include <map>
#include <utility>
#include <vector>

#include "overpart/report.hpp"
#include "overpart/series.hpp"

namespace overpart {

/// A product  scalar * q^shift * prod (1 + c q^k)^(+-1)  with every k >= 1.
///
/// Any finite product or ratio of binomials (1 + c q^e) folds into this form
/// without loss: e = 0 factors go into the scalar and e < 0 factors are
/// rewritten as c q^e (1 + c^{-1} q^{-e}). The valuation is therefore known
/// exactly before expansion, and expansion to any precision is exact.
class FactoredTerm {
 public:
  FactoredTerm() = default;
  explicit FactoredTerm(Rational scalar, Exponent shift = 0) : scalar_(std::move(scalar)), shift_(shift) {}

  /// Multiply by (1 + c q^e).
  void multiply_binomial(const Rational& c, Exponent e);
  /// Divide by (1 + c q^e). Throws DivisionByZero if the factor is zero.
  void divide_binomial(const Rational& c, Exponent e);
  void multiply_monomial(const QMonomial& m);
  void scale(const Rational& c);

  bool is_zero() const { return scalar_ == 0; }
  /// Exact valuation; meaningless when is_zero().
  Exponent valuation() const { return shift_; }
  const Rational& scalar() const { return scalar_; }

  QSeries expand(Exponent prec) const;

 private:
  Rational scalar_{1};
  Exponent shift_ = 0;
  std::vector<std::pair<Rational, Exponent>> numerator_;
  std::vector<std::pair<Rational, Exponent>> denominator_;
};

/// (a; q)_n = prod_{k=0}^{n-1} (1 - a q^k) as an exact Laurent polynomial,
/// truncated at `prec`.
QSeries pochhammer(const QMonomial& a, int n, Exponent prec);

/// (a; q)_inf truncated at `prec`. Requires a.exp >= 1.
QSeries pochhammer_inf(const QMonomial& a, Exponent prec);

/// Gaussian polynomial [M+N choose N]_q = (q)_{M+N} / ((q)_M (q)_N).
/// The default precision M*N + 1 makes the result exact.
QSeries qbinom(int M, int N);
QSeries qbinom(int M, int N, Exponent prec);

/// Over q-binomial coefficient via the explicit sum
///   sum_k q^{k(k+1)/2} (q)_{M+N-k} / ((q)_k (q)_{M-k} (q)_{N-k}).
QSeries over_qbinom_sum(int M, int N);
QSeries over_qbinom_sum(int M, int N, Exponent prec);

struct OverQBinomKey {
  int M = 0;
  int N = 0;
  auto operator<=>(const OverQBinomKey&) const = default;
};

/// Memoized evaluation of the over q-binomial recurrence
///   B(M,N) = B(M,N-1) + q^N B(M-1,N) + q^N B(M-1,N-1),
/// B(M,0) = B(0,N) = 1, at a fixed precision. One table per evaluation
/// context; not safe for concurrent use.
class OverQBinomTable {
 public:
  explicit OverQBinomTable(Exponent prec) : prec_(prec) {}

  const QSeries& get(int M, int N);
  Exponent prec() const { return prec_; }
  std::size_t cached() const { return cache_.size(); }

 private:
  Exponent prec_;
  std::map<OverQBinomKey, QSeries> cache_;
};

QSeries over_qbinom_rec(int M, int N);
QSeries over_qbinom_rec(int M, int N, Exponent prec);

struct PhiSpec {
  std::vector<QMonomial> upper;  // a_0 .. a_r
  std::vector<QMonomial> lower;  // b_1 .. b_s
  QMonomial argument{Rational(1), 1};
  Exponent prec = 0;
};

struct PhiEvaluation {
  QSeries value;
  /// Number of terms m = 0, 1, ... that were generated.
  int terms = 0;
  /// True when an upper Pochhammer vanished and cut the sum off.
  bool terminated = false;
};

/// r+1 phi s (upper; lower; q, argument), truncated at spec.prec.
///
/// Summation ends when an upper Pochhammer vanishes, or once every new
/// factor is a unit and the per-term valuation increments are positive and
/// non-decreasing with the current term already at or past prec. A
/// non-terminating series needs argument exponent >= 1; valuations that do
/// not reach prec within 16 terms of slack raise NonconvergentPhi.
PhiEvaluation phi_evaluate(const PhiSpec& spec);
QSeries phi(const PhiSpec& spec);

/// Checks the q-Chu-Vandermonde sum
///   2phi1(a, q^{-n}; c; q, c q^n / a) = (c/a; q)_n / (c; q)_n
/// coefficientwise through q^{prec-1}.
VerificationReport verify_chu(const QMonomial& a, int n, const QMonomial& c, Exponent prec);

}  // namespace overpart
