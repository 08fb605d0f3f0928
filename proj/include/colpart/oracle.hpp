#pragma once

#include <cstdint>
#include <span>

#include "colpart/algebra/laurent_poly.hpp"
#include "colpart/graphs/graph.hpp"

namespace colpart {

/// The polynomial sum over all k-colorings of y^(number of blocks), where
/// blocks are the maximal monochromatic connected vertex sets.
struct BlockDistribution {
  LaurentPoly2 poly;  // in y only
  int vertex_count = 0;
  int k = 0;

  /// Coefficient of y^blocks as an integer.
  BigInt coefficient(int blocks) const;
  /// k^vertex_count.
  BigInt total() const;

  friend bool operator==(const BlockDistribution&, const BlockDistribution&) = default;
};

struct EnumerationOptions {
  /// Upper bound on k^|V| colorings.
  std::uint64_t cap = std::uint64_t{1} << 24;
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 0;
};

/// Number of maximal monochromatic connected vertex sets under `colors`.
int block_count(const Graph& g, std::span<const int> colors);

/// Throws CapExceeded when k^|V| is above options.cap.
BlockDistribution distribution_bruteforce(const Graph& g, int k, const EnumerationOptions& options = {});

/// (d/dy poly)(1) / k^vertex_count.
BigRational expected_blocks(const BlockDistribution& d);

/// Colorings in which every edge is bichromatic, by direct filtering.
BigInt proper_coloring_count(const Graph& g, int k, const EnumerationOptions& options = {});

}  // namespace colpart
