#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace colpart {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Neighbor lists are sorted ascending; every builder
/// validates that the input has no loops or repeated edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  /// Throws InvalidArgument on loops, duplicates or out-of-range endpoints.
  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return edge_count_; }
  std::span<const int> neighbors(int v) const { return adjacency_.at(v); }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adjacency_;
  int edge_count_ = 0;
};

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// Parts {0..n-1} and {n..n+m-1}.
Graph complete_bipartite(int n, int m);
/// K_{1,m} with center 0.
Graph star(int m);
/// Heap order: root 0, children of i are 2i+1 and 2i+2.
Graph perfect_binary_tree(int height);
/// Tree decoded from a Prüfer sequence drawn with splitmix64(seed).
Graph random_tree(int n, std::uint64_t seed);
/// Vertex (a, b) gets index a * |V(h)| + b.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph grid(int m, int n);
/// Vertex v of g becomes perm[v].
Graph relabeled(const Graph& g, std::span<const int> perm);

/// Maximal connected vertex sets, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Deterministic 64-bit generator (splitmix64), fixed by algorithm so that
/// seeded test inputs are identical across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// next() % bound; bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace colpart
