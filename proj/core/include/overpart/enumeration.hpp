#pragma once

// Brute-force counting oracles for partitions and overpartitions.
//
// Nothing here uses generating-function algebra: every count comes from
// visiting partitions one by one. These are the ground truth the closed
// forms in identities.hpp are checked against.

#include <functional>
#include <set>
#include <vector>

#include "overpart/series.hpp"

namespace overpart {

/// Non-increasing list of positive parts.
struct Partition {
  std::vector<int> parts;

  int size() const;
  int largest() const { return parts.empty() ? 0 : parts.front(); }
  int smallest() const { return parts.empty() ? 0 : parts.back(); }
  int distinct_parts() const;
};

/// A partition plus the set of part values whose first occurrence is
/// overlined.
struct OverPartition {
  Partition underlying;
  std::set<int> overlined;
};

/// Summary of one partition as seen by the weighted enumerator.
struct PartitionShape {
  int smallest;
  int largest;
  int distinct;
};

/// Visits every partition of n whose largest and smallest parts differ by
/// at most t, smallest part first.
void for_each_bounded_partition(int n, int t, const std::function<void(const PartitionShape&)>& visit);

/// All partitions of n, lexicographically decreasing.
std::vector<Partition> partitions_of(int n);
/// Every overline assignment of every partition of n. Exponential; meant
/// for n up to about 12.
std::vector<OverPartition> overpartitions_of(int n);

BigInt divisor_count(int n);
/// p(n, t): partitions of n with largest - smallest exactly t.
BigInt count_p_exact_diff(int n, int t);
/// p_t(n): partitions of n with largest - smallest at most t.
BigInt count_p_bounded_diff(int n, int t);
/// Number of overpartitions of n.
BigInt count_opbar_total(int n);
/// Overpartitions of n with largest - smallest at most t.
BigInt count_opbar_bounded(int n, int t);
/// As count_opbar_bounded, except that when largest - smallest equals t the
/// largest part may not be overlined.
BigInt count_g(int n, int t);

/// Same counts as above, but from the materialised list of overpartitions.
BigInt count_opbar_bounded_materialized(int n, int t);
BigInt count_g_materialized(int n, int t);

/// sum over partitions in an M x N box (parts <= M, at most N parts) of
/// 2^{#distinct} q^{|lambda|}.
QSeries over_qbinom_box_oracle(int M, int N);
/// sum over partitions in an M x N box of q^{|lambda|}.
QSeries qbinom_box_oracle(int M, int N);

enum class OracleKind { pbar_t, g_t, p_t, p_exact_t, d };

/// sum_{n=1}^{N} count(n) q^n, known to O(q^{N+1}). `t` is ignored for d.
QSeries oracle_series(OracleKind kind, int t, int N);

}  // namespace overpart
