#include "colpart/transfer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "colpart/algebra/combinatorics.hpp"
#include "colpart/errors.hpp"

namespace colpart {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

  void reset() { std::iota(parent.begin(), parent.end(), 0); }

  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<int> canonical_rgs(const std::vector<int>& labels) {
  std::vector<int> out(labels.size());
  std::map<int, int> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = seen.try_emplace(labels[i], static_cast<int>(seen.size()));
    out[i] = it->second;
  }
  return out;
}

// All k^m colorings, first vertex varying slowest.
std::vector<std::vector<int>> all_colorings(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(m), 0);
  while (true) {
    out.push_back(c);
    int i = m - 1;
    while (i >= 0 && c[i] == k - 1) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  return out;
}

void check_caps(const Graph& g, int k, const TransferOptions& options) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  const int m = g.vertex_count();
  if (m < 1) throw InvalidArgument("slice graph must have at least one vertex");
  if (m > options.max_vertices) {
    throw CapExceeded("slice has " + std::to_string(m) + " vertices; transfer cap is " +
                      std::to_string(options.max_vertices));
  }
  std::uint64_t count = 1;
  for (int i = 0; i < m; ++i) {
    count *= static_cast<std::uint64_t>(k);
    if (count > options.max_slice_colorings) {
      throw CapExceeded(std::to_string(k) + "^" + std::to_string(m) + " slice colorings exceed the transfer cap of " +
                        std::to_string(options.max_slice_colorings));
    }
  }
}

std::vector<int> slice_components(const Graph& g, const std::vector<int>& c) {
  UnionFind uf(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    if (c[u] == c[v]) uf.unite(u, v);
  }
  std::vector<int> roots(c.size());
  for (std::size_t v = 0; v < c.size(); ++v) roots[v] = uf.find(static_cast<int>(v));
  return canonical_rgs(roots);
}

}  // namespace

int Profile::open_blocks() const {
  return linkage.empty() ? 0 : *std::max_element(linkage.begin(), linkage.end()) + 1;
}

std::size_t ProfileHash::operator()(const Profile& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](int v) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (int v : p.coloring) mix(v);
  mix(-1);
  for (int v : p.linkage) mix(v);
  return h;
}

StateWeights initial_states(const Graph& g, int k, const TransferOptions& options) {
  check_caps(g, k, options);
  StateWeights out;
  for (auto& c : all_colorings(g.vertex_count(), k)) {
    Profile p{c, slice_components(g, c)};
    out[std::move(p)] += LaurentPoly2(1);
  }
  return out;
}

StateWeights step(const Graph& g, int k, const StateWeights& s, const TransferOptions& options) {
  check_caps(g, k, options);
  const int m = g.vertex_count();
  const auto colorings = all_colorings(m, k);
  std::vector<std::vector<int>> new_components;
  new_components.reserve(colorings.size());
  for (const auto& c : colorings) new_components.push_back(slice_components(g, c));

  StateWeights out;
  UnionFind uf(2 * m);
  std::vector<int> labels(static_cast<std::size_t>(m));
  std::vector<char> reaches(static_cast<std::size_t>(2 * m));
  for (const auto& [old, weight] : s) {
    if (static_cast<int>(old.coloring.size()) != m) throw InvalidArgument("profile size does not match slice graph");
    const int old_blocks = old.open_blocks();
    for (std::size_t ci = 0; ci < colorings.size(); ++ci) {
      const auto& c2 = colorings[ci];
      const auto& comp = new_components[ci];
      uf.reset();
      // Old slice nodes 0..m-1 joined by linkage; new slice nodes m..2m-1
      // joined by their own components; vertical edges where colors agree.
      std::vector<int> first_old(static_cast<std::size_t>(old_blocks), -1);
      for (int v = 0; v < m; ++v) {
        int& f = first_old[old.linkage[v]];
        if (f < 0) f = v; else uf.unite(f, v);
      }
      std::vector<int> first_new(static_cast<std::size_t>(m), -1);
      for (int v = 0; v < m; ++v) {
        int& f = first_new[comp[v]];
        if (f < 0) f = m + v; else uf.unite(f, m + v);
      }
      for (int v = 0; v < m; ++v) {
        if (old.coloring[v] == c2[v]) uf.unite(v, m + v);
      }
      std::fill(reaches.begin(), reaches.end(), 0);
      for (int v = 0; v < m; ++v) reaches[uf.find(m + v)] = 1;
      int closed = 0;
      for (int b = 0; b < old_blocks; ++b) {
        if (!reaches[uf.find(first_old[b])]) ++closed;
      }
      for (int v = 0; v < m; ++v) labels[v] = uf.find(m + v);
      Profile next{c2, canonical_rgs(labels)};
      out[std::move(next)] += closed == 0 ? weight : weight.shifted(0, closed);
    }
  }
  return out;
}

LaurentPoly2 finalize(const StateWeights& s) {
  LaurentPoly2 out;
  for (const auto& [p, w] : s) out.add_shifted(w, 0, p.open_blocks());
  return out;
}

BlockDistribution prism_distribution(const Graph& g, int k, int n, const TransferOptions& options) {
  if (n < 1) throw InvalidArgument("prism length must be at least 1");
  StateWeights s = initial_states(g, k, options);
  for (int t = 1; t < n; ++t) s = step(g, k, s, options);
  return BlockDistribution{finalize(s), g.vertex_count() * n, k};
}

BigRational prism_expected(const Graph& g, int k, int n, const TransferOptions& options) {
  return expected_blocks(prism_distribution(g, k, n, options));
}

std::vector<int> ColorClass::coloring() const {
  int m = 0;
  for (const auto& s : subsets) m += static_cast<int>(s.size());
  std::vector<int> out(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (int v : subsets[i]) out[v] = static_cast<int>(i);
  }
  return out;
}

std::vector<ColorClass> color_classes(int m, int k) {
  if (m < 1 || k < 1) throw InvalidArgument("color_classes needs m >= 1 and k >= 1");
  std::vector<ColorClass> out;
  for (const auto& parts : partitions_at_most_k_parts(m, k)) {
    ColorClass cls;
    cls.subsets.resize(static_cast<std::size_t>(k));
    int v = 0;
    BigInt denom_vertices = 1;
    std::map<int, int> mult;
    mult[0] = k - static_cast<int>(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (int j = 0; j < parts[i]; ++j) cls.subsets[i].push_back(v++);
      denom_vertices *= factorial(static_cast<unsigned long>(parts[i]));
      ++mult[parts[i]];
    }
    BigInt denom_colors = 1;
    for (const auto& [size, count] : mult) denom_colors *= factorial(static_cast<unsigned long>(count));
    cls.class_size = factorial(static_cast<unsigned long>(m)) / denom_vertices *
                     (factorial(static_cast<unsigned long>(k)) / denom_colors);
    cls.support = static_cast<int>(parts.size());
    out.push_back(std::move(cls));
  }
  return out;
}

KmSystem km_transfer_system(int m, int k, const SolverOptions& options) {
  KmSystem sys;
  sys.classes = color_classes(m, k);
  const std::size_t d = sys.classes.size();
  if (d > options.max_dimension) {
    throw CapExceeded(std::to_string(d) + " color classes exceed the solver cap of " +
                      std::to_string(options.max_dimension));
  }
  std::map<std::vector<int>, std::size_t> index_of_shape;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<int> shape;
    for (const auto& s : sys.classes[i].subsets) {
      if (!s.empty()) shape.push_back(static_cast<int>(s.size()));
    }
    index_of_shape[shape] = i;
  }

  sys.transition = PolyMatrix(d, d);
  const auto colorings = all_colorings(m, k);
  for (std::size_t a = 0; a < d; ++a) {
    const std::vector<int> ca = sys.classes[a].coloring();
    for (const auto& cb : colorings) {
      std::vector<int> shape(static_cast<std::size_t>(k), 0);
      for (int c : cb) ++shape[c];
      int fresh = 0;
      for (int i = 0; i < k; ++i) {
        if (sys.classes[a].subsets[i].empty()) continue;
        bool meets = false;
        for (int v : sys.classes[a].subsets[i]) meets = meets || cb[v] == i;
        if (!meets) ++fresh;
      }
      std::erase(shape, 0);
      std::sort(shape.rbegin(), shape.rend());
      sys.transition(a, index_of_shape.at(shape)) += LaurentPoly2::monomial(1, 0, fresh);
    }
    sys.base.push_back(LaurentPoly2::monomial(1, 0, sys.classes[a].support));
    sys.sizes.push_back(LaurentPoly2(BigRational(sys.classes[a].class_size)));
  }
  return sys;
}

RationalGF km_prism_gf(int m, int k, const SolverOptions& options) {
  const KmSystem sys = km_transfer_system(m, k, options);
  return combine_solution(bareiss_solve(sys.transition, sys.base, options), sys.sizes);
}

}  // namespace colpart
