#include <string>
#include <utility>

#include "overpart/enumeration.hpp"
#include "overpart/identities.hpp"
#include "overpart/qfunctions.hpp"

namespace overpart {

namespace {

IdentityCheck make_check(CheckName name, int t, int order) {
  return IdentityCheck{name, {{"t", std::int64_t{t}}}, order};
}

// Runs `body` and turns library errors into an error report. `body` returns
// a failing report, or nullopt on success.
template <typename Body>
VerificationReport run_check(IdentityCheck check, Body&& body) {
  try {
    if (check.order < 1) throw Error(ErrorKind::Domain, "order must be at least 1");
    if (auto failure = body(check)) return std::move(*failure);
    return VerificationReport::pass(std::move(check));
  } catch (const Error& e) {
    return VerificationReport::error(std::move(check), e.what());
  }
}

struct Comparison {
  const char* lhs_name;
  const char* rhs_name;
  QSeries lhs;
  QSeries rhs;
};

std::optional<VerificationReport> first_failure(const IdentityCheck& check, const std::vector<Comparison>& list) {
  for (const auto& c : list) {
    if (auto cmp = equal_to_order(c.lhs, c.rhs, check.order); !cmp) {
      return VerificationReport::fail(check, *cmp.mismatch,
                                      std::string(c.lhs_name) + " differs from " + c.rhs_name);
    }
  }
  return std::nullopt;
}

void require_t(int t, int minimum, const char* what) {
  if (t < minimum) {
    throw Error(ErrorKind::Domain, std::string(what) + " needs t >= " + std::to_string(minimum));
  }
}

Exponent prec_for(const IdentityCheck& check) { return static_cast<Exponent>(check.order) + 1; }

}  // namespace

VerificationReport check_th1(int t, int order, const ClosedForms& forms) {
  return run_check(make_check(CheckName::th1, t, order), [&](const IdentityCheck& c) {
    require_t(t, 1, "th1");
    const auto prec = prec_for(c);
    const QSeries closed = forms.G(t, prec);
    return first_failure(c, {{"closed form G_t", "direct m-sum", closed, gf_g_direct(t, prec)},
                             {"closed form G_t", "g_t oracle", closed, oracle_series(OracleKind::g_t, t, c.order)}});
  });
}

VerificationReport check_th2(int t, int order, const ClosedForms& forms) {
  return run_check(make_check(CheckName::th2, t, order), [&](const IdentityCheck& c) {
    require_t(t, 0, "th2");
    const auto prec = prec_for(c);
    const QSeries closed = forms.pbar(t, prec);
    return first_failure(
        c, {{"closed form pbar_t", "direct m-sum", closed, gf_pbar_direct(t, prec)},
            {"closed form pbar_t", "pbar_t oracle", closed, oracle_series(OracleKind::pbar_t, t, c.order)}});
  });
}

VerificationReport check_bk(int t, int order, const ClosedForms& forms) {
  return run_check(make_check(CheckName::bk, t, order), [&](const IdentityCheck& c) {
    require_t(t, 1, "bk");
    return first_failure(c, {{"closed form p_t", "p_t oracle", forms.bk(t, prec_for(c)),
                              oracle_series(OracleKind::p_t, t, c.order)}});
  });
}

VerificationReport check_abr(int t, int order, const ClosedForms& forms) {
  return run_check(make_check(CheckName::abr, t, order), [&](const IdentityCheck& c) {
    require_t(t, 2, "abr");
    return first_failure(c, {{"closed form p(n,t)", "p(n,t) oracle", forms.abr(t, prec_for(c)),
                              oracle_series(OracleKind::p_exact_t, t, c.order)}});
  });
}

VerificationReport check_pbar_g_relation(int t, int order, const ClosedForms& forms) {
  return run_check(make_check(CheckName::relation, t, order), [&](const IdentityCheck& c) {
    require_t(t, 1, "relation");
    const auto prec = prec_for(c);
    return first_failure(c, {{"pbar_t + pbar_{t-1}", "2 G_t", forms.pbar(t, prec) + forms.pbar(t - 1, prec),
                              forms.G(t, prec).scaled(Rational(2))}});
  });
}

VerificationReport check_oqbinom_pbar(int t, int order, const ClosedForms& forms) {
  return run_check(make_check(CheckName::oqbinom, t, order), [&](const IdentityCheck& c) {
    require_t(t, 0, "oqbinom");
    const auto prec = prec_for(c);
    QSeries sum = QSeries::zero(prec);
    for (int r = 1; r < prec; ++r) {
      QSeries summand = QSeries::monomial(Rational(2), r, prec).over_binomial(Rational(-1), r) *
                        over_qbinom_sum(r - 1, t, prec);
      if (auto v = summand.valuation(); v && *v < r) {
        throw Error(ErrorKind::InternalConsistency, "r-sum summand below its index");
      }
      sum += summand;
    }
    return first_failure(c, {{"2 sum_r q^r/(1-q^r) B(r-1,t)", "closed form pbar_t", sum, forms.pbar(t, prec)}});
  });
}

ThreeCases three_cases(int t, Exponent prec) {
  require_t(t, 1, "three cases");
  QSeries case1 = pochhammer(QMonomial::minus_q_power(1), t, prec) *
                      invert(pochhammer(QMonomial::q_power(1), t, prec)) -
                  QSeries::constant(Rational(1), prec);

  QSeries case2 = QSeries::zero(prec);
  for (Exponent m = 1; m < prec; ++m) {
    QSeries summand = QSeries::monomial(Rational(2), m, prec).over_binomial(Rational(-1), m);
    for (int j = 1; j < t; ++j) {
      summand = summand.times_binomial(Rational(1), m + j).over_binomial(Rational(-1), m + j);
    }
    case2 += summand.shifted(m + t).over_binomial(Rational(-1), m + t).truncated(prec);
  }

  OverQBinomTable table(prec);
  QSeries case3 = QSeries::zero(prec);
  for (int r = 1; r < prec; ++r) {
    const QSeries lambert = QSeries::monomial(Rational(1), r, prec).over_binomial(Rational(-1), r);
    case3 += lambert * (table.get(r, t) - table.get(r, t - 1));
  }
  return {std::move(case1), std::move(case2), std::move(case3)};
}

VerificationReport check_three_cases(int t, int order, const ClosedForms& forms) {
  return run_check(make_check(CheckName::cases, t, order), [&](const IdentityCheck& c) {
    require_t(t, 1, "cases");
    const auto prec = prec_for(c);
    const ThreeCases cases = three_cases(t, prec);
    const QSeries pbar_t = forms.pbar(t, prec);
    const QSeries pbar_prev = forms.pbar(t - 1, prec);
    const Rational half(1, 2);
    return first_failure(
        c, {{"case (2) m-sum", "(pbar_t - pbar_{t-1})/2", cases.smallest_overlined, (pbar_t - pbar_prev).scaled(half)},
            {"case (3) r-sum", "q^t (pbar_t + pbar_{t-1})/2", cases.largest_exactly_shifted,
             (pbar_t + pbar_prev).scaled(half).shifted(t).truncated(prec)},
            {"sum of the three cases", "closed form pbar_t",
             cases.largest_at_most_t + cases.smallest_overlined + cases.largest_exactly_shifted, pbar_t}});
  });
}

std::vector<QSeries> proof_chain_steps(int t, Exponent prec, const ProofChainOptions& options,
                                       const ClosedForms& forms) {
  require_t(t, 1, "proof chain");
  const auto q = [](Exponent e) { return QMonomial::q_power(e); };
  const auto mq = [](Exponent e) { return QMonomial::minus_q_power(e); };
  std::vector<QSeries> steps;

  // 1. Pochhammer-ratio m-sum.
  {
    QSeries sum = QSeries::zero(prec);
    for (Exponent m = 1; m < prec; ++m) {
      FactoredTerm term(Rational(1), m);
      for (Exponent k = 0; k < m - 1; ++k) term.multiply_binomial(Rational(-1), k + 1);  // (q)_{m-1}
      for (Exponent k = 0; k < m + t - 1; ++k) term.multiply_binomial(Rational(1), k + 1);  // (-q)_{m+t-1}
      for (Exponent k = 0; k < m + t; ++k) term.divide_binomial(Rational(-1), k + 1);  // (q)_{m+t}
      for (Exponent k = 0; k < m; ++k) term.divide_binomial(Rational(1), k + 1);  // (-q)_m
      sum += term.expand(prec);
    }
    steps.push_back(std::move(sum));
  }

  // q (-q)_t / ((1+q) (q)_{t+1})
  FactoredTerm prefactor(Rational(1), 1);
  for (int k = 0; k < t; ++k) prefactor.multiply_binomial(Rational(1), k + 1);
  prefactor.divide_binomial(Rational(1), 1);
  for (int k = 0; k <= t; ++k) prefactor.divide_binomial(Rational(-1), k + 1);
  const QSeries pre = prefactor.expand(prec);

  // 2. Before the 3phi2 transformation.
  steps.push_back(pre * phi({{q(1), q(1), mq(t + 1)}, {mq(2), q(t + 2)}, q(1), prec}));

  // 3. After it, with the infinite-product prefactor.
  {
    const QSeries products = pochhammer_inf(q(t + 1), prec) * pochhammer_inf(q(2), prec) *
                             invert(pochhammer_inf(q(t + 2), prec) * pochhammer_inf(q(1), prec));
    steps.push_back(pre * products * phi({{q(1), mq(1), q(1 - t)}, {mq(2), q(2)}, q(t + 1), prec}));
  }

  // 4. Shifted index: a 2phi1 minus its m = 0 term.
  {
    FactoredTerm outer(Rational(-1, 2));
    for (int k = 0; k < t; ++k) {
      outer.multiply_binomial(Rational(1), k + 1);
      outer.divide_binomial(Rational(-1), k + 1);
    }
    outer.divide_binomial(Rational(-1), t);
    const QSeries two_phi_one = phi({{QMonomial(Rational(-1), 0), q(-t)}, {mq(1)}, q(t + 1), prec});
    steps.push_back(outer.expand(prec) * (two_phi_one - QSeries::constant(Rational(1), prec)));
  }

  // 5. Closed form.
  steps.push_back(forms.G(t, prec).scaled(Rational(1, 2)));

  if (options.perturbed_step) {
    const int k = *options.perturbed_step;
    if (k < 1 || k > static_cast<int>(steps.size())) throw Error(ErrorKind::Domain, "no such proof step");
    steps[static_cast<std::size_t>(k - 1)] = steps[static_cast<std::size_t>(k - 1)].times_binomial(Rational(1), 1);
  }
  return steps;
}

VerificationReport proof_chain_theorem1(int t, int order, const ProofChainOptions& options,
                                        const ClosedForms& forms) {
  return run_check(make_check(CheckName::proofchain, t, order),
                   [&](const IdentityCheck& c) -> std::optional<VerificationReport> {
                     require_t(t, 1, "proofchain");
                     const auto steps = proof_chain_steps(t, prec_for(c), options, forms);
                     const auto count = steps.size();
                     // disagree[i][j]: mismatch between steps i and j, if any.
                     std::vector<std::vector<std::optional<Mismatch>>> disagree(count,
                                                                                std::vector<std::optional<Mismatch>>(count));
                     std::vector<int> failures(count, 0);
                     bool any = false;
                     for (std::size_t i = 0; i < count; ++i) {
                       for (std::size_t j = i + 1; j < count; ++j) {
                         if (auto cmp = equal_to_order(steps[i], steps[j], c.order); !cmp) {
                           disagree[i][j] = cmp.mismatch;
                           disagree[j][i] = Mismatch{cmp.mismatch->exponent, cmp.mismatch->rhs, cmp.mismatch->lhs};
                           ++failures[i];
                           ++failures[j];
                           any = true;
                         }
                       }
                     }
                     if (!any) return std::nullopt;
                     // Blame the step that disagrees with the most others; ties go to the later step.
                     std::size_t culprit = 0;
                     for (std::size_t i = 0; i < count; ++i) {
                       if (failures[i] >= failures[culprit]) culprit = i;
                     }
                     for (std::size_t j = 0; j < count; ++j) {
                       if (disagree[culprit][j]) {
                         return VerificationReport::fail(
                             c, *disagree[culprit][j],
                             "step " + std::to_string(culprit + 1) + " disagrees with step " + std::to_string(j + 1));
                       }
                     }
                     return std::nullopt;
                   });
}

VerificationReport check_corollary(int t, int n_max, const ClosedForms& forms) {
  return run_check(make_check(CheckName::corollary, t, n_max), [&](const IdentityCheck& c) -> std::optional<VerificationReport> {
    require_t(t, 0, "corollary");
    const QSeries pbar = forms.pbar(t, static_cast<Exponent>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n) {
      const Rational value = pbar.coeff(n);
      if (value.get_den() != 1) {
        throw Error(ErrorKind::InternalConsistency,
                    "coefficient of q^" + std::to_string(n) + " is not an integer: " + value.get_str());
      }
      const BigInt v = value.get_num();
      const BigInt residue = ((v % 4) + 4) % 4;
      const BigInt expected = (2 * divisor_count(n)) % 4;
      const BigInt root = sqrt(BigInt(n));
      const bool square = root * root == n;
      const auto fail = [&](const BigInt& want, const std::string& why) {
        return VerificationReport::fail(c, Mismatch{n, Rational(residue), Rational(want)},
                                        "pbar_t(" + std::to_string(n) + ") mod 4 " + why);
      };
      if (residue % 2 != 0) return fail(BigInt(0), "is odd");
      if (residue != expected) return fail(expected, "differs from 2 d(n) mod 4");
      if ((residue == 0) == square) return fail(BigInt(square ? 2 : 0), "contradicts the perfect-square rule");
    }
    return std::nullopt;
  });
}

}  // namespace overpart
