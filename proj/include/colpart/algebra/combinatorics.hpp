#pragma once

#include <mutex>
#include <vector>

#include "colpart/algebra/rational.hpp"

namespace colpart {

/// A weakly decreasing sequence of positive parts.
using IntegerPartition = std::vector<int>;

BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n
BigInt factorial(unsigned long n);

/// Stirling numbers of the second kind and partition counts, memoized.
/// Safe to share between threads; the memo is guarded internally.
class CombinatoricsTables {
 public:
  BigInt stirling2(int n, int i);
  BigInt partition_count(int l);

 private:
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> stirling_;  // rows grown on demand
  std::vector<BigInt> partitions_;
};

/// Process-wide shared instance used by the free functions below.
CombinatoricsTables& combinatorics_tables();

BigInt stirling2(int n, int i);
BigInt partition_count(int l);

/// All partitions of m into at most k parts, largest part first, listed in
/// reverse lexicographic order: (m), (m-1, 1), ...
std::vector<IntegerPartition> partitions_at_most_k_parts(int m, int k);

}  // namespace colpart
