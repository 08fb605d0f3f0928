#include "colpart/oracle.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "colpart/errors.hpp"

namespace colpart {

BigInt BlockDistribution::coefficient(int blocks) const {
  const BigRational c = poly.coeff(0, blocks);
  return c.get_num();
}

BigInt BlockDistribution::total() const { return pow_int(k, static_cast<unsigned long>(vertex_count)); }

namespace {

// Union-find reset per coloring by epoch stamping.
class EpochUnionFind {
 public:
  explicit EpochUnionFind(int n) : parent_(n), size_(n), stamp_(n, 0) {}

  void reset() { ++epoch_; }

  int find(int v) {
    touch(v);
    while (parent_[v] != v) {
      touch(parent_[v]);
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  void touch(int v) {
    if (stamp_[v] != epoch_) {
      stamp_[v] = epoch_;
      parent_[v] = v;
      size_[v] = 1;
    }
  }

  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 1;
};

std::uint64_t checked_coloring_count(const Graph& g, int k, std::uint64_t cap) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  std::uint64_t total = 1;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (total > cap / static_cast<std::uint64_t>(k)) {
      throw CapExceeded("k^|V| = " + std::to_string(k) + "^" + std::to_string(g.vertex_count()) +
                        " colorings exceeds the enumeration cap of " + std::to_string(cap) +
                        "; use the transfer engine for G x P_n products");
    }
    total *= static_cast<std::uint64_t>(k);
  }
  if (total > cap) throw CapExceeded("coloring count exceeds the enumeration cap");
  return total;
}

unsigned worker_count(unsigned requested, std::uint64_t work) {
  unsigned t = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (work < (std::uint64_t{1} << 14)) t = 1;
  return t;
}

// Runs visit(colors) over the mixed-radix range [begin, end) of colorings.
template <typename Visit>
void enumerate_range(int n, int k, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  std::uint64_t idx = begin;
  for (int v = 0; v < n; ++v) {
    colors[v] = static_cast<int>(idx % static_cast<std::uint64_t>(k));
    idx /= static_cast<std::uint64_t>(k);
  }
  for (std::uint64_t i = begin; i < end; ++i) {
    visit(colors);
    for (int v = 0; v < n; ++v) {
      if (++colors[v] < k) break;
      colors[v] = 0;
    }
  }
}

// Splits [0, total) over threads, each producing a partial result merged by `merge`.
template <typename Partial, typename Work, typename Merge>
void run_partitioned(std::uint64_t total, unsigned threads, Work&& work, Merge&& merge) {
  std::vector<Partial> partials(threads);
  std::vector<std::jthread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min(total, t * chunk);
    const std::uint64_t end = std::min(total, begin + chunk);
    if (threads == 1) {
      work(begin, end, partials[t]);
    } else {
      pool.emplace_back([&, begin, end, t] { work(begin, end, partials[t]); });
    }
  }
  pool.clear();
  for (auto& p : partials) merge(p);
}

}  // namespace

int block_count(const Graph& g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.vertex_count()) {
    throw InvalidArgument("coloring length " + std::to_string(colors.size()) + " does not match |V| = " +
                          std::to_string(g.vertex_count()));
  }
  EpochUnionFind uf(g.vertex_count());
  int blocks = g.vertex_count();
  for (const auto& [u, v] : g.edges()) {
    if (colors[u] == colors[v] && uf.unite(u, v)) --blocks;
  }
  return blocks;
}

BlockDistribution distribution_bruteforce(const Graph& g, int k, const EnumerationOptions& options) {
  const std::uint64_t total = checked_coloring_count(g, k, options.cap);
  const int n = g.vertex_count();
  const auto edges = g.edges();
  using Histogram = std::vector<std::uint64_t>;

  Histogram hist(static_cast<std::size_t>(n) + 1, 0);
  run_partitioned<Histogram>(
      total, worker_count(options.threads, total),
      [&](std::uint64_t begin, std::uint64_t end, Histogram& local) {
        local.assign(static_cast<std::size_t>(n) + 1, 0);
        EpochUnionFind uf(n);
        enumerate_range(n, k, begin, end, [&](const std::vector<int>& colors) {
          uf.reset();
          int blocks = n;
          for (const auto& [u, v] : edges) {
            if (colors[u] == colors[v] && uf.unite(u, v)) --blocks;
          }
          ++local[blocks];
        });
      },
      [&](const Histogram& local) {
        for (std::size_t i = 0; i < local.size(); ++i) hist[i] += local[i];
      });

  BlockDistribution d;
  d.vertex_count = n;
  d.k = k;
  for (int b = 0; b <= n; ++b) {
    if (hist[b] != 0) d.poly.add_term(Monomial{0, b}, BigRational(BigInt(std::to_string(hist[b]))));
  }
  return d;
}

BigRational expected_blocks(const BlockDistribution& d) {
  const BigRational slope = poly_eval(poly_derivative_y(d.poly), 1, 1);
  return slope / BigRational(d.total());
}

BigInt proper_coloring_count(const Graph& g, int k, const EnumerationOptions& options) {
  const std::uint64_t total = checked_coloring_count(g, k, options.cap);
  const auto edges = g.edges();
  std::uint64_t count = 0;
  run_partitioned<std::uint64_t>(
      total, worker_count(options.threads, total),
      [&](std::uint64_t begin, std::uint64_t end, std::uint64_t& local) {
        local = 0;
        enumerate_range(g.vertex_count(), k, begin, end, [&](const std::vector<int>& colors) {
          const bool proper = std::none_of(edges.begin(), edges.end(),
                                           [&](const Edge& e) { return colors[e.first] == colors[e.second]; });
          if (proper) ++local;
        });
      },
      [&](std::uint64_t local) { count += local; });
  return BigInt(std::to_string(count));
}

}  // namespace colpart
