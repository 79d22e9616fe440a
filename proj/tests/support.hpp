#pragma once

// Test-only helpers: random series generators and brute-force oracles that
// share no code with the library paths they check.

#include <map>
#include <random>
#include <vector>

#include "overpart/series.hpp"

namespace overpart::testing {

/// Random series with small rational coefficients. The valuation is exactly
/// `valuation` (leading coefficient forced nonzero) and the window has
/// `length` coefficients starting there.
inline QSeries random_series(std::mt19937_64& rng, Exponent valuation, Exponent length) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> coeffs(static_cast<std::size_t>(length));
  for (auto& c : coeffs) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  if (coeffs[0] == 0) coeffs[0] = 1;
  return QSeries::from_coefficients(valuation, std::move(coeffs));
}

/// Exact Laurent polynomial as exponent -> coefficient.
using Laurent = std::map<Exponent, Rational>;

inline Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// prod_{k<n} (1 - c q^{e+k}) by schoolbook multiplication.
inline Laurent naive_pochhammer(const Rational& c, Exponent e, int n) {
  Laurent acc{{0, Rational(1)}};
  for (int k = 0; k < n; ++k) {
    Laurent factor{{0, Rational(1)}};
    factor[e + k] += -c;
    std::erase_if(factor, [](const auto& kv) { return kv.second == 0; });
    acc = laurent_mul(acc, factor);
  }
  return acc;
}

/// Partitions of n listed as multiplicity vectors mult[v] for v = 1..n,
/// generated by increasing part value (the library walks downward).
template <typename Visit>
void brute_partitions(int n, Visit&& visit) {
  std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, int value, int remaining) -> void {
    if (remaining == 0) {
      visit(mult);
      return;
    }
    if (value > remaining) return;
    for (int used = 0; used * value <= remaining; ++used) {
      mult[static_cast<std::size_t>(value)] = used;
      self(self, value + 1, remaining - used * value);
    }
    mult[static_cast<std::size_t>(value)] = 0;
  };
  rec(rec, 1, n);
}

struct BruteCounts {
  long partitions_bounded = 0;   // p_t(n)
  long partitions_exact = 0;     // p(n,t)
  long overpartitions_bounded = 0;  // pbar_t(n)
  long g = 0;                    // g_t(n)
};

/// Expands every overline assignment explicitly (2^distinct per partition).
inline BruteCounts brute_counts(int n, int t) {
  BruteCounts out;
  brute_partitions(n, [&](const std::vector<int>& mult) {
    std::vector<int> values;
    for (int v = 1; v <= n; ++v) {
      if (mult[static_cast<std::size_t>(v)] > 0) values.push_back(v);
    }
    const int diff = values.back() - values.front();
    if (diff > t) return;
    ++out.partitions_bounded;
    if (diff == t) ++out.partitions_exact;
    for (unsigned mask = 0; mask < (1u << values.size()); ++mask) {
      ++out.overpartitions_bounded;
      const bool largest_marked = (mask >> (values.size() - 1)) & 1u;
      if (!(diff == t && largest_marked)) ++out.g;
    }
  });
  return out;
}

inline QSeries series_from_ints(Exponent lo, std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return QSeries::from_coefficients(lo, std::move(c));
}

}  // namespace overpart::testing
