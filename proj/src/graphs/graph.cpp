#include "colpart/graphs/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "colpart/errors.hpp"

namespace colpart {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace

Graph::Graph(int vertex_count) {
  require(vertex_count >= 0, "negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) {
    require(u >= 0 && v >= 0 && u < vertex_count && v < vertex_count,
            "edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    require(u != v, "loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nb : g.adjacency_) {
    std::sort(nb.begin(), nb.end());
    require(std::adjacent_find(nb.begin(), nb.end()) == nb.end(), "repeated edge");
  }
  g.edge_count_ = static_cast<int>(edges.size());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph::from_edges(n, e);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int n, int m) {
  require(n >= 1 && m >= 1, "complete bipartite graph needs n, m >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < m; ++v) e.emplace_back(u, n + v);
  }
  return Graph::from_edges(n + m, e);
}

Graph star(int m) { return complete_bipartite(1, m); }

Graph perfect_binary_tree(int height) {
  require(height >= 0 && height < 30, "perfect binary tree height out of range");
  const int n = (1 << (height + 1)) - 1;
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back((v - 1) / 2, v);
  return Graph::from_edges(n, e);
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random tree needs n >= 1");
  if (n == 1) return Graph(1);
  if (n == 2) return path(2);

  SplitMix64 rng(seed);
  std::vector<int> prufer(static_cast<std::size_t>(n - 2));
  for (auto& p : prufer) p = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));

  // Standard decoding: repeatedly attach the smallest current leaf.
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int p : prufer) ++degree[p];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> e;
  for (int p : prufer) {
    const int leaf = leaves.top();
    leaves.pop();
    e.emplace_back(std::min(leaf, p), std::max(leaf, p));
    if (--degree[p] == 1) leaves.push(p);
  }
  const int a = leaves.top();
  leaves.pop();
  const int b = leaves.top();
  e.emplace_back(std::min(a, b), std::max(a, b));
  return Graph::from_edges(n, e);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  std::vector<Edge> e;
  for (int a = 0; a < ng; ++a) {
    for (const auto& [u, v] : h.edges()) e.emplace_back(a * nh + u, a * nh + v);
  }
  for (const auto& [u, v] : g.edges()) {
    for (int b = 0; b < nh; ++b) e.emplace_back(u * nh + b, v * nh + b);
  }
  return Graph::from_edges(ng * nh, e);
}

Graph grid(int m, int n) { return cartesian_product(path(m), path(n)); }

Graph relabeled(const Graph& g, std::span<const int> perm) {
  const int n = g.vertex_count();
  require(static_cast<int>(perm.size()) == n, "permutation size mismatch");
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int p : perm) {
    require(p >= 0 && p < n && seen[p] == 0, "not a permutation");
    seen[p] = 1;
  }
  std::vector<Edge> e;
  for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(n, e);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& [u, v] : g.edges()) {
    const int ru = find(u);
    const int rv = find(v);
    if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

}  // namespace colpart
