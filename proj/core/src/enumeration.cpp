#include "overpart/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace overpart {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::distinct_parts() const {
  int count = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0 || parts[i] != parts[i - 1]) ++count;
  }
  return count;
}

namespace {

void require_positive(int n) {
  if (n < 1) throw Error(ErrorKind::Domain, "n must be a positive integer, got " + std::to_string(n));
}

void require_nonnegative_t(int t) {
  if (t < 0) throw Error(ErrorKind::Domain, "t must be non-negative, got " + std::to_string(t));
}

// Walks part values from `largest bound` down to the smallest part m,
// choosing a multiplicity for each. The smallest part m always occurs at
// least once; its multiplicity is forced by what remains.
class BoundedWalker {
 public:
  BoundedWalker(int smallest, const std::function<void(const PartitionShape&)>& visit)
      : m_(smallest), visit_(visit) {}

  void walk(int value, int remaining, int largest, int distinct) const {
    if (value == m_) {
      if (remaining % m_ == 0) visit_({m_, largest == 0 ? m_ : largest, distinct + 1});
      return;
    }
    for (int used = 0; used * value <= remaining; ++used) {
      walk(value - 1, remaining - used * value, (largest == 0 && used > 0) ? value : largest,
           distinct + (used > 0 ? 1 : 0));
    }
  }

 private:
  int m_;
  const std::function<void(const PartitionShape&)>& visit_;
};

void collect_partitions(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{current});
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    collect_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

void for_each_bounded_partition(int n, int t, const std::function<void(const PartitionShape&)>& visit) {
  require_positive(n);
  require_nonnegative_t(t);
  for (int m = 1; m <= n; ++m) {
    const int top = std::min(m + t, n);
    BoundedWalker(m, visit).walk(top, n - m, 0, 0);
  }
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw Error(ErrorKind::Domain, "n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> current;
  collect_partitions(n, n, current, out);
  return out;
}

std::vector<OverPartition> overpartitions_of(int n) {
  std::vector<OverPartition> out;
  for (auto& p : partitions_of(n)) {
    std::vector<int> values = p.parts;
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const auto subsets = 1u << values.size();
    for (unsigned mask = 0; mask < subsets; ++mask) {
      OverPartition op{p, {}};
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (mask & (1u << i)) op.overlined.insert(values[i]);
      }
      out.push_back(std::move(op));
    }
  }
  return out;
}

BigInt divisor_count(int n) {
  require_positive(n);
  long count = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) count += (d * d == n) ? 1 : 2;
  }
  return BigInt(count);
}

BigInt count_p_exact_diff(int n, int t) {
  BigInt total = 0;
  for_each_bounded_partition(n, t, [&](const PartitionShape& s) {
    if (s.largest - s.smallest == t) ++total;
  });
  return total;
}

BigInt count_p_bounded_diff(int n, int t) {
  BigInt total = 0;
  for_each_bounded_partition(n, t, [&](const PartitionShape&) { ++total; });
  return total;
}

BigInt count_opbar_total(int n) {
  require_positive(n);
  return count_opbar_bounded(n, n - 1);
}

BigInt count_opbar_bounded(int n, int t) {
  BigInt total = 0;
  for_each_bounded_partition(n, t, [&](const PartitionShape& s) {
    mpz_add_ui(total.get_mpz_t(), total.get_mpz_t(), 1ul << s.distinct);
  });
  return total;
}

BigInt count_g(int n, int t) {
  BigInt total = 0;
  for_each_bounded_partition(n, t, [&](const PartitionShape& s) {
    const int free_marks = (s.largest - s.smallest == t) ? s.distinct - 1 : s.distinct;
    mpz_add_ui(total.get_mpz_t(), total.get_mpz_t(), 1ul << free_marks);
  });
  return total;
}

BigInt count_opbar_bounded_materialized(int n, int t) {
  require_positive(n);
  require_nonnegative_t(t);
  BigInt total = 0;
  for (const auto& op : overpartitions_of(n)) {
    if (op.underlying.largest() - op.underlying.smallest() <= t) ++total;
  }
  return total;
}

BigInt count_g_materialized(int n, int t) {
  require_positive(n);
  require_nonnegative_t(t);
  BigInt total = 0;
  for (const auto& op : overpartitions_of(n)) {
    const int largest = op.underlying.largest();
    const int diff = largest - op.underlying.smallest();
    if (diff > t) continue;
    if (diff == t && op.overlined.contains(largest)) continue;
    ++total;
  }
  return total;
}

namespace {

class BoxWalker {
 public:
  BoxWalker(int M, int N, bool weighted)
      : weighted_(weighted), counts_(static_cast<std::size_t>(M) * N + 1) {
    walk(M, N, 0, 0);
  }

  std::vector<BigInt> take() { return std::move(counts_); }

 private:
  void walk(int value, int parts_left, int sum, int distinct) {
    if (value == 0) {
      auto& slot = counts_[static_cast<std::size_t>(sum)];
      mpz_add_ui(slot.get_mpz_t(), slot.get_mpz_t(), weighted_ ? (1ul << distinct) : 1ul);
      return;
    }
    for (int used = 0; used <= parts_left; ++used) {
      walk(value - 1, parts_left - used, sum + used * value, distinct + (used > 0 ? 1 : 0));
    }
  }

  bool weighted_;
  std::vector<BigInt> counts_;
};

QSeries box_series(int M, int N, bool weighted) {
  if (M < 0 || N < 0) throw Error(ErrorKind::Domain, "box dimensions must be non-negative");
  auto counts = BoxWalker(M, N, weighted).take();
  std::vector<Rational> coeffs;
  coeffs.reserve(counts.size());
  for (auto& c : counts) coeffs.emplace_back(c);
  return QSeries::from_coefficients(0, std::move(coeffs));
}

}  // namespace

QSeries over_qbinom_box_oracle(int M, int N) { return box_series(M, N, true); }

QSeries qbinom_box_oracle(int M, int N) { return box_series(M, N, false); }

QSeries oracle_series(OracleKind kind, int t, int N) {
  if (N < 1) throw Error(ErrorKind::Domain, "oracle series needs N >= 1");
  std::vector<Rational> coeffs(static_cast<std::size_t>(N) + 1);
  for (int n = 1; n <= N; ++n) {
    BigInt v;
    switch (kind) {
      case OracleKind::pbar_t: v = count_opbar_bounded(n, t); break;
      case OracleKind::g_t: v = count_g(n, t); break;
      case OracleKind::p_t: v = count_p_bounded_diff(n, t); break;
      case OracleKind::p_exact_t: v = count_p_exact_diff(n, t); break;
      case OracleKind::d: v = divisor_count(n); break;
    }
    coeffs[static_cast<std::size_t>(n)] = Rational(v);
  }
  return QSeries::from_coefficients(0, std::move(coeffs));
}

}  // namespace overpart
