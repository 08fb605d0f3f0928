#pragma once

// Slow, independent reference computations for tests. Nothing here uses the
// library's union-find, polynomial type or combinatorics tables.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <vector>

#include "colpart/graphs/graph.hpp"

namespace colpart::reference {

/// Blocks by depth-first flood fill.
inline int block_count(const Graph& g, const std::vector<int>& colors) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int blocks = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++blocks;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (!seen[w] && colors[w] == colors[v]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return blocks;
}

/// blocks -> number of colorings, by recursive enumeration.
inline std::map<int, mpz_class> distribution(const Graph& g, int k) {
  std::map<int, mpz_class> out;
  std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == g.vertex_count()) {
      out[block_count(g, colors)] += 1;
      return;
    }
    for (int c = 0; c < k; ++c) {
      colors[v] = c;
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

inline mpq_class expectation(const std::map<int, mpz_class>& d) {
  mpz_class total = 0, weighted = 0;
  for (const auto& [b, c] : d) {
    total += c;
    weighted += c * b;
  }
  mpq_class q(weighted, total);
  q.canonicalize();
  return q;
}

/// Proper colorings by backtracking.
inline mpz_class proper_colorings(const Graph& g, int k) {
  std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), -1);
  std::function<mpz_class(int)> rec = [&](int v) -> mpz_class {
    if (v == g.vertex_count()) return 1;
    mpz_class total = 0;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v)) ok = ok && colors[w] != c;
      if (!ok) continue;
      colors[v] = c;
      total += rec(v + 1);
      colors[v] = -1;
    }
    return total;
  };
  return rec(0);
}

/// Pascal's triangle row n.
inline std::vector<mpz_class> pascal_row(int n) {
  std::vector<mpz_class> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<mpz_class> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row;
}

/// Bell numbers B_0..B_n via B_{n+1} = sum_j C(n,j) B_j.
inline std::vector<mpz_class> bell_numbers(int n) {
  std::vector<mpz_class> b{1};
  for (int m = 0; m < n; ++m) {
    const auto row = pascal_row(m);
    mpz_class next = 0;
    for (int j = 0; j <= m; ++j) next += row[j] * b[j];
    b.push_back(next);
  }
  return b;
}

/// Partitions of n, by the "largest part at most j" table.
inline mpz_class partitions(int n) {
  std::vector<mpz_class> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int s = part; s <= n; ++s) ways[s] += ways[s - part];
  }
  return ways[n];
}

}  // namespace colpart::reference
