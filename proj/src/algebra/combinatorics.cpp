#include "colpart/algebra/combinatorics.hpp"

#include <functional>

#include "colpart/errors.hpp"

namespace colpart {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt CombinatoricsTables::stirling2(int n, int i) {
  if (n < 0 || i < 0) throw InvalidArgument("stirling2: negative argument");
  if (i > n) return 0;
  std::lock_guard lock(mutex_);
  while (static_cast<int>(stirling_.size()) <= n) {
    const auto row_n = static_cast<int>(stirling_.size());
    std::vector<BigInt> row(static_cast<std::size_t>(row_n) + 1, 0);
    if (row_n == 0) {
      row[0] = 1;
    } else {
      const auto& prev = stirling_.back();
      for (int j = 1; j <= row_n; ++j) {
        BigInt v = j < row_n ? BigInt(j * prev[j]) : BigInt(0);
        v += prev[j - 1];
        row[j] = v;
      }
    }
    stirling_.push_back(std::move(row));
  }
  return stirling_[n][i];
}

BigInt CombinatoricsTables::partition_count(int l) {
  if (l < 0) throw InvalidArgument("partition_count: negative argument");
  std::lock_guard lock(mutex_);
  if (partitions_.empty()) partitions_.push_back(1);
  // Euler's pentagonal number recurrence.
  while (static_cast<int>(partitions_.size()) <= l) {
    const auto n = static_cast<long>(partitions_.size());
    BigInt sum = 0;
    for (long j = 1;; ++j) {
      const long g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      const long g2 = j * (3 * j + 1) / 2;
      const bool plus = (j % 2) == 1;
      BigInt term = partitions_[n - g1];
      if (g2 <= n) term += partitions_[n - g2];
      if (plus) sum += term; else sum -= term;
    }
    partitions_.push_back(sum);
  }
  return partitions_[l];
}

CombinatoricsTables& combinatorics_tables() {
  static CombinatoricsTables tables;
  return tables;
}

BigInt stirling2(int n, int i) { return combinatorics_tables().stirling2(n, i); }

BigInt partition_count(int l) { return combinatorics_tables().partition_count(l); }

std::vector<IntegerPartition> partitions_at_most_k_parts(int m, int k) {
  if (m < 0 || k < 1) throw InvalidArgument("partitions_at_most_k_parts: need m >= 0, k >= 1");
  std::vector<IntegerPartition> out;
  IntegerPartition current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == k) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

}  // namespace colpart
