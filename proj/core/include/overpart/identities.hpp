#pragma once

// Generating functions for bounded-difference partitions and overpartitions,
// and the checks that tie each closed form to its defining sum and to the
// brute-force oracles.
//
// Notation used below:
//   p_t(n)     partitions of n with largest - smallest <= t
//   p(n,t)     partitions of n with largest - smallest == t
//   pbar_t(n)  overpartitions of n with largest - smallest <= t
//   g_t(n)     as pbar_t(n), but when largest - smallest == t the largest
//              part may not be overlined
//   B(M,N)     over q-binomial coefficient for the M x N box

#include <functional>
#include <optional>
#include <vector>

#include "overpart/report.hpp"
#include "overpart/series.hpp"

namespace overpart {

/// sum_{n>=1} p_t(n) q^n = (1/(q)_t - 1) / (1 - q^t), t >= 1.
QSeries gf_bk(int t, Exponent prec);

/// sum_{n>=1} p(n,t) q^n for t >= 2 (three-term rational form).
QSeries gf_abr(int t, Exponent prec);

/// sum_{n>=1} g_t(n) q^n = ((-q)_t/(q)_t - 1) / (1 - q^t), t >= 1.
QSeries gf_G(int t, Exponent prec);

/// sum_{n>=1} pbar_t(n) q^n
///   = 2(-1)^t ( sum_n d(n) q^n + sum_{k=1}^t (-1)^k ((-q)_k/(q)_k - 1)/(1 - q^k) ).
QSeries gf_pbar(int t, Exponent prec);

/// 2 sum_{m>=1} q^m/(1-q^m) prod_{j=1}^t (1+q^{m+j})/(1-q^{m+j}).
QSeries gf_pbar_direct(int t, Exponent prec);

/// 2 sum_{m>=1} q^m/(1-q^m) prod_{j=1}^{t-1} (1+q^{m+j})/(1-q^{m+j}) / (1-q^{m+t}).
QSeries gf_g_direct(int t, Exponent prec);

/// (-q)_inf / (q)_inf = 1 + sum pbar(n) q^n.
QSeries gf_overline_total(Exponent prec);

/// sum_{m>=1} q^m/(1-q^m) = sum_n d(n) q^n.
QSeries divisor_lambert_series(Exponent prec);

/// The closed forms the checks compare against. Swappable so a corrupted
/// formula can be fed through the same harness.
struct ClosedForms {
  std::function<QSeries(int, Exponent)> G = gf_G;
  std::function<QSeries(int, Exponent)> pbar = gf_pbar;
  std::function<QSeries(int, Exponent)> bk = gf_bk;
  std::function<QSeries(int, Exponent)> abr = gf_abr;

  static const ClosedForms& standard();
};

VerificationReport check_th1(int t, int order, const ClosedForms& forms = ClosedForms::standard());
VerificationReport check_th2(int t, int order, const ClosedForms& forms = ClosedForms::standard());
VerificationReport check_bk(int t, int order, const ClosedForms& forms = ClosedForms::standard());
VerificationReport check_abr(int t, int order, const ClosedForms& forms = ClosedForms::standard());

/// pbar_t + pbar_{t-1} = 2 G_t.
VerificationReport check_pbar_g_relation(int t, int order, const ClosedForms& forms = ClosedForms::standard());

/// pbar_t = 2 sum_{r>=1} q^r/(1-q^r) B(r-1, t).
VerificationReport check_oqbinom_pbar(int t, int order, const ClosedForms& forms = ClosedForms::standard());

/// The three series of the disjoint-case split of pbar_t.
struct ThreeCases {
  QSeries largest_at_most_t;        // (-q)_t/(q)_t - 1
  QSeries smallest_overlined;       // direct m-sum
  QSeries largest_exactly_shifted;  // sum_r q^r/(1-q^r) (B(r,t) - B(r,t-1))
};
ThreeCases three_cases(int t, Exponent prec);

/// Checks that the three cases sum to pbar_t, that the overlined-smallest
/// case equals (pbar_t - pbar_{t-1})/2, and that the last case equals
/// q^t (pbar_t + pbar_{t-1})/2.
VerificationReport check_three_cases(int t, int order, const ClosedForms& forms = ClosedForms::standard());

struct ProofChainOptions {
  /// 1-based step whose series is multiplied by (1 + q). Harness self-test.
  std::optional<int> perturbed_step;
};

/// The five expressions for G_t/2 that the hypergeometric derivation passes
/// through, each expanded to O(q^prec):
///   1. sum_{m>=1} (q)_{m-1} (-q)_{m+t-1} / ((q)_{m+t} (-q)_m) q^m
///   2. q(-q)_t/((1+q)(q)_{t+1}) 3phi2(q, q, -q^{t+1}; -q^2, q^{t+2}; q, q)
///   3. the same prefactor times (q^{t+1})_inf (q^2)_inf / ((q^{t+2})_inf (q)_inf)
///      times 3phi2(q, -q, q^{1-t}; -q^2, q^2; q, q^{t+1})
///   4. -(-q)_t / (2(1-q^t)(q)_t) (2phi1(-1, q^{-t}; -q; q, q^{t+1}) - 1)
///   5. G_t / 2 from the closed form
std::vector<QSeries> proof_chain_steps(int t, Exponent prec, const ProofChainOptions& options = {},
                                       const ClosedForms& forms = ClosedForms::standard());

VerificationReport proof_chain_theorem1(int t, int order, const ProofChainOptions& options = {},
                                        const ClosedForms& forms = ClosedForms::standard());

/// For 1 <= n <= n_max: pbar_t(n) is even, is congruent to 2 d(n) mod 4,
/// and is divisible by 4 exactly when n is not a perfect square.
VerificationReport check_corollary(int t, int n_max, const ClosedForms& forms = ClosedForms::standard());

}  // namespace overpart
