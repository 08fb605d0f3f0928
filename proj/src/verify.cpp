#include "colpart/verify.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>

#include "colpart/algebra/combinatorics.hpp"
#include "colpart/algebra/poly_io.hpp"
#include "colpart/closed_forms.hpp"
#include "colpart/errors.hpp"
#include "colpart/oracle.hpp"
#include "colpart/transfer.hpp"

namespace colpart {

namespace {

// A check returns the first mismatch it finds, or nothing.
using Outcome = std::optional<std::string>;

struct Check {
  std::string name;
  int criterion;
  bool quick;
  std::function<Outcome(const VerifyOptions&)> run;
};

std::string str(const BigRational& q) { return q.get_den() == 1 ? q.get_num().get_str() : to_fraction_string(q); }

Outcome compare_poly(const std::string& where, const LaurentPoly2& expected, const LaurentPoly2& got) {
  if (expected == got) return std::nullopt;
  for (const auto& [m, c] : (expected - got).terms()) {
    std::ostringstream os;
    os << where << ": coefficient of y^" << m.y;
    if (m.x != 0) os << " x^" << m.x;
    os << " expected " << str(expected.coeff(m.x, m.y)) << ", got " << str(got.coeff(m.x, m.y));
    return os.str();
  }
  return where + ": mismatch";
}

Outcome compare_value(const std::string& where, const BigRational& expected, const BigRational& got) {
  if (expected == got) return std::nullopt;
  return where + ": expected " + str(expected) + ", got " + str(got);
}

std::string at(const char* fmt, int a, int b = 0, int c = 0) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

EnumerationOptions enum_opts(const VerifyOptions& o) {
  EnumerationOptions e;
  e.threads = o.threads;
  return e;
}

Outcome tree_theorem(const VerifyOptions& o, int trees, int max_n, std::initializer_list<int> ks) {
  for (int i = 0; i < trees; ++i) {
    const int n = 1 + i % max_n;
    const Graph t = random_tree(n, 1000 + static_cast<std::uint64_t>(i));
    for (int k : ks) {
      if (auto bad = compare_poly(at("tree #%d n=%d k=%d", i, n, k), tree_distribution(n, k).poly,
                                  distribution_bruteforce(t, k, enum_opts(o)).poly))
        return bad;
    }
  }
  return std::nullopt;
}

Outcome pbt_lemma(const VerifyOptions& o, int max_h2, int max_h3) {
  for (int k : {2, 3}) {
    for (int h = 0; h <= (k == 2 ? max_h2 : max_h3); ++h) {
      if (auto bad = compare_poly(at("height %d k=%d", h, k), pbt_distribution(h, k).poly,
                                  distribution_bruteforce(perfect_binary_tree(h), k, enum_opts(o)).poly))
        return bad;
    }
  }
  return std::nullopt;
}

Outcome cycle_theorem(const VerifyOptions& o, int max_n) {
  for (int k : {2, 3}) {
    for (int n = 3; n <= max_n; ++n) {
      const auto brute = distribution_bruteforce(cycle(n), k, enum_opts(o));
      if (auto bad = compare_poly(at("C_%d k=%d", n, k), cycle_distribution(n, k).poly, brute.poly)) return bad;
      if (auto bad = compare_value(at("E[C_%d] k=%d", n, k), expected_blocks(brute), cycle_expected(n, k)))
        return bad;
    }
  }
  return std::nullopt;
}

Outcome complete_theorem(const VerifyOptions& o, int max_n) {
  for (int k : {2, 3}) {
    for (int n = 1; n <= max_n; ++n) {
      const auto brute = distribution_bruteforce(complete(n), k, enum_opts(o));
      if (auto bad = compare_poly(at("K_%d k=%d", n, k), complete_distribution(n, k).poly, brute.poly)) return bad;
      if (auto bad = compare_value(at("E[K_%d] k=%d", n, k), expected_blocks(brute), complete_expected(n, k)))
        return bad;
    }
  }
  return std::nullopt;
}

Outcome bipartite_theorem(const VerifyOptions& o, int max_side) {
  for (int k : {2, 3}) {
    for (int n = 1; n <= max_side; ++n) {
      for (int m = 1; m <= max_side; ++m) {
        const auto brute = distribution_bruteforce(complete_bipartite(n, m), k, enum_opts(o));
        if (auto bad = compare_value(at("K_{%d,%d} k=%d", n, m, k), expected_blocks(brute),
                                     bipartite_expected(n, m, k)))
          return bad;
      }
    }
  }
  return std::nullopt;
}

Outcome engine_vs_brute(const VerifyOptions& o, const Graph& g, int k, int max_n, const char* label) {
  for (int n = 1; n <= max_n; ++n) {
    const auto brute = distribution_bruteforce(cartesian_product(g, path(n)), k, enum_opts(o));
    if (auto bad = compare_poly(std::string(label) + at(" n=%d k=%d", n, k), brute.poly,
                                prism_distribution(g, k, n).poly))
      return bad;
  }
  return std::nullopt;
}

Outcome engine_vs_fixture(const VerifyOptions& o, FixtureId id, std::optional<int> k_param, const Graph& g, int k,
                          int max_n) {
  const auto s = series_expand(o.fixture(id, k_param).normalized(), max_n);
  if (!s[0].is_zero()) return std::string(fixture_name(id)) + ": nonzero x^0 term";
  for (int n = 1; n <= max_n; ++n) {
    if (auto bad = compare_poly(std::string(fixture_name(id)) + at(" k=%d x^%d", k, n), s[n],
                                prism_distribution(g, k, n).poly))
      return bad;
  }
  return std::nullopt;
}

Outcome fixture_mass(const VerifyOptions& o, FixtureId id, std::optional<int> k_param, int slice, int k, int max_n) {
  const auto s = series_expand(o.fixture(id, k_param).normalized(), max_n);
  for (int n = 1; n <= max_n; ++n) {
    const BigRational mass = poly_eval(s[n], 1, 1);
    const BigRational want = pow_rational(BigRational(k), static_cast<long>(slice) * n);
    if (auto bad = compare_value(std::string(fixture_name(id)) + at(" mass at x^%d", n), want, mass)) return bad;
  }
  return std::nullopt;
}

Outcome expectation_series(int max_n, const Graph& g, int k, const std::function<BigRational(int)>& formula,
                           const char* label) {
  for (int n = 1; n <= max_n; ++n) {
    if (auto bad = compare_value(std::string(label) + at(" n=%d", n), formula(n), prism_expected(g, k, n)))
      return bad;
  }
  return std::nullopt;
}

BigRational k3_corollary(int n) {
  // 2^(3n-5)(37+19n)/2^(3n)
  return BigRational(37 + 19 * n) / 32;
}

BigRational k4_corollary(int n) {
  // 2^(4n-7)(175+65n)/2^(4n)
  return BigRational(175 + 65 * n) / 128;
}

Outcome complete_prism_theorem(int max_l, int max_n) {
  for (int k : {2, 3}) {
    for (int l = 1; l <= max_l; ++l) {
      for (int n = 1; n <= max_n; ++n) {
        if (auto bad = compare_value(at("K_%d x P_%d k=%d", l, n, k), prism_expected(complete(l), k, n),
                                     complete_prism_expected(l, n, k)))
          return bad;
      }
    }
  }
  return std::nullopt;
}

Outcome complete_prism_single_slice() {
  for (int l = 1; l <= 8; ++l) {
    for (int k = 1; k <= 5; ++k) {
      if (auto bad = compare_value(at("l=%d k=%d", l, k), complete_expected(l, k), complete_prism_expected(l, 1, k)))
        return bad;
    }
  }
  return std::nullopt;
}

std::vector<int> random_permutation(int n, SplitMix64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return p;
}

Outcome property_pool(const VerifyOptions& o, int instances) {
  SplitMix64 rng(20240601);
  for (int i = 0; i < instances; ++i) {
    const int k = 1 + static_cast<int>(rng.below(4));
    int max_v = 1;
    while (max_v < 18 && pow_int(BigInt(k), max_v + 1) <= BigInt(1) << 18) ++max_v;
    max_v = std::min(max_v, 12);
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_v)));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.below(3) == 0) edges.emplace_back(u, v);
      }
    }
    const Graph g = Graph::from_edges(n, edges);
    const auto d = distribution_bruteforce(g, k, enum_opts(o));
    const std::string tag = at("instance %d (|V|=%d k=%d)", i, n, k);
    if (poly_eval(d.poly, 1, 1) != BigRational(d.total())) return tag + ": B(1) differs from k^|V|";
    if (d.coefficient(n) != proper_coloring_count(g, k, enum_opts(o))) return tag + ": top coefficient differs";
    if (connected_components(g).size() == 1 && d.coefficient(1) != k) return tag + ": y^1 coefficient differs from k";
    if (k == 2) {
      for (const auto& [m, c] : d.poly.terms()) {
        if (c.get_den() != 1 || c.get_num() % 2 != 0) return tag + at(": odd coefficient at y^%d", m.y);
      }
    }
    const auto perm = random_permutation(n, rng);
    if (!(distribution_bruteforce(relabeled(g, perm), k, enum_opts(o)).poly == d.poly)) {
      return tag + ": relabeled graph has a different distribution";
    }
  }
  return std::nullopt;
}

std::vector<Check> build_checks() {
  std::vector<Check> c;
  auto add = [&c](std::string name, int criterion, bool quick, std::function<Outcome(const VerifyOptions&)> f) {
    c.push_back(Check{std::move(name), criterion, quick, std::move(f)});
  };

  add("random trees, n<=7, k in {2,3}", 1, true,
      [](const VerifyOptions& o) { return tree_theorem(o, 14, 7, {2, 3}); });
  add("50 random trees, n<=9, k in {2,3,4}", 1, false,
      [](const VerifyOptions& o) { return tree_theorem(o, 50, 9, {2, 3, 4}); });
  add("perfect binary trees h<=2 (k=2), h<=1 (k=3)", 2, true,
      [](const VerifyOptions& o) { return pbt_lemma(o, 2, 1); });
  add("perfect binary tree h=2, k=2 coefficients", 2, true, [](const VerifyOptions&) {
    const LaurentPoly2 want = parse_poly("2y + 12y^2 + 30y^3 + 40y^4 + 30y^5 + 12y^6 + 2y^7");
    return compare_poly("h=2 k=2", want, pbt_distribution(2, 2).poly);
  });
  add("perfect binary trees h<=3 (k=2), h<=2 (k=3)", 2, false,
      [](const VerifyOptions& o) { return pbt_lemma(o, 3, 2); });
  add("cycles n<=8, k in {2,3}", 3, true, [](const VerifyOptions& o) { return cycle_theorem(o, 8); });
  add("cycles n<=10, k in {2,3}", 3, false, [](const VerifyOptions& o) { return cycle_theorem(o, 10); });
  add("five-cycle, two colors, four blocks", 3, true, [](const VerifyOptions&) {
    return compare_value("f_2(5,4)", BigRational(10), BigRational(cycle_block_count(5, 4, 2)));
  });
  add("complete graphs n<=6, k in {2,3}", 4, true, [](const VerifyOptions& o) { return complete_theorem(o, 6); });
  add("complete graphs n<=8, k in {2,3}", 4, false, [](const VerifyOptions& o) { return complete_theorem(o, 8); });
  add("K_4, two colors, two blocks", 4, true, [](const VerifyOptions&) {
    return compare_value("g_2(4,2)", BigRational(14), BigRational(complete_block_count(4, 2, 2)));
  });
  add("bipartite expectation n,m<=3", 5, true, [](const VerifyOptions& o) { return bipartite_theorem(o, 3); });
  add("bipartite expectation n,m<=4", 5, false, [](const VerifyOptions& o) { return bipartite_theorem(o, 4); });

  add("K_3 prism engine vs brute force n<=4, k=2", 6, true,
      [](const VerifyOptions& o) { return engine_vs_brute(o, complete(3), 2, 4, "K_3 x P"); });
  add("K_3 prism engine vs brute force n<=6 (k=2), n<=4 (k=3)", 6, false, [](const VerifyOptions& o) {
    if (auto bad = engine_vs_brute(o, complete(3), 2, 6, "K_3 x P")) return bad;
    return engine_vs_brute(o, complete(3), 3, 4, "K_3 x P");
  });
  for (int k : {2, 3, 4}) {
    add("K_3 prism fixture series vs engine n<=5, k=" + std::to_string(k), 6, true, [k](const VerifyOptions& o) {
      return engine_vs_fixture(o, FixtureId::K3_generic_k, k, complete(3), k, 5);
    });
    add("K_3 prism fixture series vs engine n<=8, k=" + std::to_string(k), 6, false, [k](const VerifyOptions& o) {
      return engine_vs_fixture(o, FixtureId::K3_generic_k, k, complete(3), k, 8);
    });
    add("K_3 prism fixture mass n<=8, k=" + std::to_string(k), 6, true, [k](const VerifyOptions& o) {
      return fixture_mass(o, FixtureId::K3_generic_k, k, 3, k, 8);
    });
  }
  add("K_3 prism two-color specialization", 6, true, [](const VerifyOptions& o) {
    const RationalGF shown(parse_poly("2xy(1+3y-x(3-7y+4y^2))"),
                           parse_poly("1-x(4+3y+y^2)+x^2(3-7y+3y^2+y^3)"));
    if (gf_equal(shown, o.fixture(FixtureId::K3_generic_k, 2))) return Outcome{};
    return Outcome{"generic K_3 numerator/denominator at k=2 differ from the two-color form"};
  });
  add("K_3 prism expectation n<=10, k=2", 6, true, [](const VerifyOptions&) {
    return expectation_series(10, complete(3), 2, k3_corollary, "K_3 x P");
  });

  add("K_4 reduced system vs published GF, k=2", 7, true, [](const VerifyOptions& o) {
    if (gf_equal(km_prism_gf(4, 2), o.fixture(FixtureId::K4_k2, std::nullopt))) return Outcome{};
    return Outcome{"km_prism_gf(4,2) differs from K4_k2"};
  });
  add("K_4 prism fixture series vs engine n<=5, k=2", 7, true, [](const VerifyOptions& o) {
    return engine_vs_fixture(o, FixtureId::K4_k2, std::nullopt, complete(4), 2, 5);
  });
  add("K_5 prism fixture series vs engine n<=5, k=2", 7, true, [](const VerifyOptions& o) {
    return engine_vs_fixture(o, FixtureId::K5_k2, std::nullopt, complete(5), 2, 5);
  });
  add("K_6 prism fixture series vs engine n<=5, k=2", 7, false, [](const VerifyOptions& o) {
    return engine_vs_fixture(o, FixtureId::K6_k2, std::nullopt, complete(6), 2, 5);
  });
  add("K_6 reduced system vs published GF, k=2", 7, false, [](const VerifyOptions& o) {
    if (gf_equal(km_prism_gf(6, 2), o.fixture(FixtureId::K6_k2, std::nullopt))) return Outcome{};
    return Outcome{"km_prism_gf(6,2) differs from K6_k2"};
  });
  add("K_4 prism fixture series vs engine n<=5, k=3", 7, false, [](const VerifyOptions& o) {
    return engine_vs_fixture(o, FixtureId::K4_k3, std::nullopt, complete(4), 3, 5);
  });
  add("K_4 prism expectation n<=10, k=2", 7, true, [](const VerifyOptions&) {
    return expectation_series(10, complete(4), 2, k4_corollary, "K_4 x P");
  });
  add("color classes of 4 vertices, 2 colors", 7, true, [](const VerifyOptions&) -> Outcome {
    const auto cls = color_classes(4, 2);
    if (cls.size() != 3) return "expected 3 classes, got " + std::to_string(cls.size());
    const int want[] = {2, 8, 6};
    for (std::size_t i = 0; i < 3; ++i) {
      if (cls[i].class_size != want[i]) return at("class %d: expected size %d", static_cast<int>(i), want[i]);
    }
    return std::nullopt;
  });

  add("complete prism expectation l<=3, n<=4", 8, true,
      [](const VerifyOptions&) { return complete_prism_theorem(3, 4); });
  add("complete prism expectation l<=4, n<=4", 8, false,
      [](const VerifyOptions&) { return complete_prism_theorem(4, 4); });
  add("complete prism at n=1 equals complete graph, l<=8, k<=5", 8, true,
      [](const VerifyOptions&) { return complete_prism_single_slice(); });

  add("star prism fixture series vs engine n<=6", 9, true, [](const VerifyOptions& o) {
    return engine_vs_fixture(o, FixtureId::STAR13_k2, std::nullopt, star(3), 2, 6);
  });
  add("star prism engine vs brute force n<=3", 9, true,
      [](const VerifyOptions& o) { return engine_vs_brute(o, star(3), 2, 3, "K_{1,3} x P"); });
  add("star prism engine vs brute force n<=4", 9, false,
      [](const VerifyOptions& o) { return engine_vs_brute(o, star(3), 2, 4, "K_{1,3} x P"); });
  add("star prism 7-state system vs published GF", 9, true, [](const VerifyOptions& o) {
    const StarSystem sys = star_system();
    const RationalGF solved = combine_solution(bareiss_solve(sys.transition, sys.base), sys.combo);
    if (gf_equal(solved, o.fixture(FixtureId::STAR13_k2, std::nullopt))) return Outcome{};
    return Outcome{"solved 7x7 system differs from STAR13_k2"};
  });
  add("star prism expectation n<=8", 9, true, [](const VerifyOptions&) -> Outcome {
    if (star_prism_expected(1) != BigRational(5, 2)) return "n=1: expected 5/2, got " + str(star_prism_expected(1));
    return expectation_series(8, star(3), 2, star_prism_expected, "K_{1,3} x P");
  });
  add("star reduced configuration count", 9, true, [](const VerifyOptions&) {
    return compare_value("star_profile_count(3)", BigRational(7), BigRational(star_profile_count(3)));
  });

  add("random graph properties, 30 instances", 10, true, [](const VerifyOptions& o) { return property_pool(o, 30); });
  add("random graph properties, 100 instances", 10, false,
      [](const VerifyOptions& o) { return property_pool(o, 100); });
  return c;
}

}  // namespace

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.passed ? 0 : 1;
  return n;
}

std::string format_check_line(const CheckResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2fs", r.seconds);
  std::string line = std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.criterion) + "] " + r.name +
                     " (" + time + ")";
  if (!r.passed) line += ": " + r.detail;
  return line;
}

VerifyReport run_verify(Suite suite, const VerifyOptions& options, std::ostream* progress) {
  using clock = std::chrono::steady_clock;
  VerifyReport report;
  const auto start = clock::now();
  for (const auto& check : build_checks()) {
    if (suite == Suite::Quick && !check.quick) continue;
    CheckResult r{check.name, check.criterion, false, {}, 0};
    const auto t0 = clock::now();
    try {
      const Outcome bad = check.run(options);
      r.passed = !bad.has_value();
      if (bad) r.detail = *bad;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    if (progress) *progress << format_check_line(r) << '\n' << std::flush;
    report.results.push_back(std::move(r));
  }
  report.seconds = std::chrono::duration<double>(clock::now() - start).count();
  return report;
}

}  // namespace colpart
