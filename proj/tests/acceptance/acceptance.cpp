// Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "colpart/algebra/poly_io.hpp"
#include "colpart/closed_forms.hpp"
#include "colpart/fixtures.hpp"
#include "colpart/oracle.hpp"
#include "colpart/transfer.hpp"
#include "support/reference.hpp"

using namespace colpart;

namespace {

std::string str(const BigRational& q) { return q.get_den() == 1 ? q.get_num().get_str() : to_fraction_string(q); }

// Collects failures for one criterion; a criterion passes when none are added.
struct Failures {
  std::vector<std::string> items;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && items.size() < 50) items.push_back(what);
  }
  void expect_poly(const LaurentPoly2& want, const LaurentPoly2& got, const std::string& what) {
    ++checks;
    if (want == got) return;
    for (const auto& [m, c] : (want - got).terms()) {
      items.push_back(what + ": coefficient of y^" + std::to_string(m.y) + " expected " + str(want.coeff(m.x, m.y)) +
                      ", got " + str(got.coeff(m.x, m.y)));
      return;
    }
  }
  void expect_value(const BigRational& want, const BigRational& got, const std::string& what) {
    expect(want == got, what + ": expected " + str(want) + ", got " + str(got));
  }
};

std::string fmt(const char* f, int a, int b = 0, int c = 0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

BigRational qpow(long base, long e) { return pow_rational(BigRational(base), e); }

LaurentPoly2 from_map(const std::map<int, mpz_class>& d) {
  LaurentPoly2 p;
  for (const auto& [b, c] : d) p.add_term(Monomial{0, b}, BigRational(c));
  return p;
}

// k y ((k-1) y + 1)^e expanded with Pascal's triangle.
LaurentPoly2 tree_like(int k, int e) {
  const auto row = reference::pascal_row(e);
  LaurentPoly2 p;
  for (int j = 0; j <= e; ++j) p.add_term(Monomial{0, j + 1}, BigRational(k * row[j]) * qpow(k - 1, j));
  return p;
}

mpz_class binom(int n, int i) {
  if (i < 0 || i > n) return 0;
  return reference::pascal_row(n)[i];
}

// Stirling numbers of the second kind by inclusion-exclusion.
mpz_class stirling_ie(int n, int i) {
  mpz_class sum = 0;
  for (int j = 0; j <= i; ++j) {
    mpz_class term = binom(i, j);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i - j), static_cast<unsigned long>(n));
    sum += (j % 2 == 0 ? 1 : -1) * term * power;
  }
  mpz_class fact = 1;
  for (int t = 2; t <= i; ++t) fact *= t;
  return sum / fact;
}

using Clock = std::chrono::steady_clock;

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;  // 0 when unbounded
  std::function<void(Failures&)> body;
};

void trees(Failures& f) {
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 9;
    const Graph t = random_tree(n, 0xC0FFEE + static_cast<std::uint64_t>(i));
    f.expect(t.edge_count() == n - 1 && connected_components(t).size() == 1, fmt("tree %d is not a tree", i));
    for (int k : {2, 3, 4}) {
      const auto brute = distribution_bruteforce(t, k);
      const std::string tag = fmt("tree %d (n=%d) k=%d", i, n, k);
      f.expect_poly(tree_like(k, n - 1), brute.poly, tag);
      f.expect_poly(tree_distribution(n, k).poly, brute.poly, tag + " closed form");
    }
  }
}

void binary_trees(Failures& f) {
  for (int k : {2, 3}) {
    for (int h = 0; h <= (k == 2 ? 3 : 2); ++h) {
      const auto brute = distribution_bruteforce(perfect_binary_tree(h), k);
      const std::string tag = fmt("h=%d k=%d", h, k);
      f.expect_poly(tree_like(k, (2 << h) - 2), brute.poly, tag);
      f.expect_poly(pbt_distribution(h, k).poly, brute.poly, tag + " closed form");
    }
  }
  f.expect_poly(parse_poly("2y + 12y^2 + 30y^3 + 40y^4 + 30y^5 + 12y^6 + 2y^7"),
                distribution_bruteforce(perfect_binary_tree(2), 2).poly, "h=2 k=2 displayed polynomial");
}

void cycles(Failures& f) {
  for (int k : {2, 3}) {
    for (int n = 3; n <= 10; ++n) {
      LaurentPoly2 want;
      want.add_term(Monomial{0, 1}, BigRational(k));
      for (int i = 2; i <= n; ++i) {
        const BigRational fi = BigRational(binom(n, i)) * (qpow(k - 1, i) + (k - 1) * qpow(-1, i));
        want.add_term(Monomial{0, i}, fi);
      }
      const auto brute = distribution_bruteforce(cycle(n), k);
      const std::string tag = fmt("C_%d k=%d", n, k);
      f.expect_poly(want, brute.poly, tag);
      f.expect_poly(cycle_distribution(n, k).poly, brute.poly, tag + " closed form");
      f.expect_value(expected_blocks(brute), cycle_expected(n, k), tag + " expectation");
    }
  }
  f.expect(cycle_block_count(5, 4, 2) == 10, "f_2(5,4) != 10");
  f.expect(distribution_bruteforce(cycle(5), 2).coefficient(4) == 10, "brute force C_5 four blocks != 10");
}

void complete_graphs(Failures& f) {
  for (int k : {2, 3}) {
    for (int n = 1; n <= 8; ++n) {
      LaurentPoly2 want;
      mpz_class falling = 1;
      for (int i = 1; i <= std::min(n, k); ++i) {
        falling *= k - i + 1;
        want.add_term(Monomial{0, i}, BigRational(stirling_ie(n, i) * falling));
      }
      const auto brute = distribution_bruteforce(complete(n), k);
      const std::string tag = fmt("K_%d k=%d", n, k);
      f.expect_poly(want, brute.poly, tag);
      f.expect_poly(complete_distribution(n, k).poly, brute.poly, tag + " closed form");
      const BigRational formula = BigRational(k) - qpow(k - 1, n) / qpow(k, n - 1);
      f.expect_value(formula, expected_blocks(brute), tag + " expectation formula");
      f.expect_value(formula, complete_expected(n, k), tag + " complete_expected");
    }
  }
  f.expect(complete_block_count(4, 2, 2) == 14, "g_2(4,2) != 14");
  f.expect(distribution_bruteforce(complete(4), 2).coefficient(2) == 14, "brute force K_4 two blocks != 14");
}

void bipartite(Failures& f) {
  for (int k : {2, 3}) {
    for (int n = 1; n <= 4; ++n) {
      for (int m = 1; m <= 4; ++m) {
        const Graph g = complete_bipartite(n, m);
        const BigRational oracle = expected_blocks(distribution_bruteforce(g, k));
        f.expect_value(oracle, bipartite_expected(n, m, k), fmt("K_{%d,%d} k=%d", n, m, k));
        if (n + m <= 6) {
          f.expect_value(reference::expectation(reference::distribution(g, k)), oracle,
                         fmt("K_{%d,%d} k=%d flood fill", n, m, k));
        }
      }
    }
  }
}

void engine_against_fixture(Failures& f, FixtureId id, std::optional<int> k_param, const Graph& slice, int k,
                            int max_n) {
  const auto s = series_expand(fixture_gf(id, k_param).normalized(), max_n);
  for (int n = 1; n <= max_n; ++n) {
    f.expect_poly(s[n], prism_distribution(slice, k, n).poly,
                  std::string(fixture_name(id)) + fmt(" vs engine, k=%d, x^%d", k, n));
  }
}

void k3_prism(Failures& f) {
  for (int k : {2, 3}) {
    for (int n = 1; n <= (k == 2 ? 6 : 4); ++n) {
      f.expect_poly(distribution_bruteforce(cartesian_product(complete(3), path(n)), k).poly,
                    prism_distribution(complete(3), k, n).poly, fmt("engine vs brute force, k=%d n=%d", k, n));
    }
  }
  for (int k : {2, 3, 4}) {
    engine_against_fixture(f, FixtureId::K3_generic_k, k, complete(3), k, 8);
    const auto s = series_expand(fixture_gf(FixtureId::K3_generic_k, k), 8);
    for (int n = 1; n <= 8; ++n) {
      f.expect_value(qpow(k, 3L * n), poly_eval(s[n], 1, 1), fmt("[x^%d]T(x,1), k=%d", n, k));
    }
  }
  for (int n = 1; n <= 10; ++n) {
    const BigRational formula = qpow(2, 3L * n - 5) * (37 + 19 * n) / qpow(2, 3L * n);
    f.expect_value(formula, prism_expected(complete(3), 2, n), fmt("expectation n=%d", n));
  }
}

void larger_cliques(Failures& f) {
  f.expect(gf_equal(km_prism_gf(4, 2), fixture_gf(FixtureId::K4_k2)), "km_prism_gf(4,2) not equal to K4_k2");
  engine_against_fixture(f, FixtureId::K5_k2, std::nullopt, complete(5), 2, 5);
  engine_against_fixture(f, FixtureId::K6_k2, std::nullopt, complete(6), 2, 5);
  engine_against_fixture(f, FixtureId::K4_k3, std::nullopt, complete(4), 3, 5);
  for (int n = 1; n <= 10; ++n) {
    const BigRational formula = qpow(2, 4L * n - 7) * (175 + 65 * n) / qpow(2, 4L * n);
    f.expect_value(formula, prism_expected(complete(4), 2, n), fmt("K_4 expectation n=%d", n));
  }
  const auto classes = color_classes(4, 2);
  f.expect(classes.size() == 3, "color_classes(4,2) count != 3");
  if (classes.size() == 3) {
    f.expect(classes[0].class_size == 2 && classes[1].class_size == 8 && classes[2].class_size == 6,
             "color_classes(4,2) sizes != (2,8,6)");
  }
}

void general_expectation(Failures& f) {
  for (int k : {2, 3}) {
    for (int l = 1; l <= 4; ++l) {
      for (int n = 1; n <= 4; ++n) {
        f.expect_value(prism_expected(complete(l), k, n), complete_prism_expected(l, n, k),
                       fmt("K_%d x P_%d, k=%d", l, n, k));
      }
    }
  }
  for (int l = 1; l <= 8; ++l) {
    for (int k = 1; k <= 5; ++k) {
      f.expect_value(complete_expected(l, k), complete_prism_expected(l, 1, k), fmt("n=1, l=%d k=%d", l, k));
    }
  }
}

void star_product(Failures& f) {
  engine_against_fixture(f, FixtureId::STAR13_k2, std::nullopt, star(3), 2, 6);
  for (int n = 1; n <= 4; ++n) {
    f.expect_poly(distribution_bruteforce(cartesian_product(star(3), path(n)), 2).poly,
                  prism_distribution(star(3), 2, n).poly, fmt("engine vs brute force, n=%d", n));
  }
  const StarSystem sys = star_system();
  f.expect(gf_equal(combine_solution(bareiss_solve(sys.transition, sys.base), sys.combo),
                    fixture_gf(FixtureId::STAR13_k2)),
           "solved 7x7 system differs from the published p/q");
  for (int n = 1; n <= 8; ++n) {
    const BigRational formula = make_rational(2254219, 1411200) + make_rational(6, 49) * qpow(2, -3L * n) -
                                make_rational(2, 225) * qpow(2, -4L * n) + make_rational(11933, 13440) * n;
    f.expect_value(formula, prism_expected(star(3), 2, n), fmt("expectation n=%d", n));
  }
  f.expect_value(BigRational(5, 2), prism_expected(star(3), 2, 1), "expectation n=1");
  f.expect(star_profile_count(3) == 7, "star_profile_count(3) != 7");
}

void properties(Failures& f) {
  SplitMix64 rng(0xACCE97);
  int instances = 0;
  while (instances < 120) {
    const int k = 1 + static_cast<int>(rng.below(4));
    const int n = 1 + static_cast<int>(rng.below(12));
    if (pow_int(BigInt(k), n) > BigInt(1) << 18) continue;
    ++instances;
    std::vector<Edge> edges;
    const std::uint64_t density = 2 + rng.below(4);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.below(density) == 0) edges.emplace_back(u, v);
      }
    }
    const Graph g = Graph::from_edges(n, edges);
    const auto d = distribution_bruteforce(g, k);
    const std::string tag = fmt("instance %d (|V|=%d k=%d)", instances, n, k);
    f.expect_value(BigRational(pow_int(BigInt(k), n)), poly_eval(d.poly, 1, 1), tag + " B(1)");
    f.expect(d.coefficient(n) == reference::proper_colorings(g, k), tag + " top coefficient");
    if (connected_components(g).size() == 1) f.expect(d.coefficient(1) == k, tag + " y^1 coefficient");
    if (k == 2) {
      bool even = true;
      for (const auto& [m, c] : d.poly.terms()) even = even && c.get_num() % 2 == 0;
      f.expect(even, tag + " odd coefficient");
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    f.expect_poly(d.poly, distribution_bruteforce(relabeled(g, perm), k).poly, tag + " relabeled");
    if (n <= 8) f.expect_poly(from_map(reference::distribution(g, k)), d.poly, tag + " flood fill");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "tree theorem: 50 random trees, n<=9, k in {2,3,4}", 20, trees},
      {2, "perfect binary tree lemma", 30, binary_trees},
      {3, "cycle theorem, 3<=n<=10, k in {2,3}", 0, cycles},
      {4, "complete graph theorem, n<=8, k in {2,3}", 0, complete_graphs},
      {5, "bipartite expectation, n,m<=4, k in {2,3}", 0, bipartite},
      {6, "K_3 x P_n: engine, brute force, fixture, mass, expectation", 60, k3_prism},
      {7, "K_4/K_5/K_6 fixtures, K_4 expectation, color classes", 0, larger_cliques},
      {8, "general complete-prism expectation", 0, general_expectation},
      {9, "K_{1,3} x P_n: fixture, brute force, 7x7 system, expectation", 0, star_product},
      {10, "property suite over >=100 random (G,k)", 60, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Failures f;
    const auto t0 = Clock::now();
    try {
      c.body(f);
    } catch (const std::exception& e) {
      f.items.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      f.items.push_back(fmt("runtime over the %d s bound", static_cast<int>(c.limit_seconds)));
    }
    const bool ok = f.items.empty();
    failed += ok ? 0 : 1;
    std::printf("criterion %2d: %s  %-62s %zu checks, %.2fs\n", c.number, ok ? "PASS" : "FAIL", c.title, f.checks,
                secs);
    for (const auto& item : f.items) std::printf("    %s\n", item.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
