#include "colpart/cli.hpp"

#include <chrono>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "colpart/algebra/poly_io.hpp"
#include "colpart/errors.hpp"
#include "colpart/fixtures.hpp"
#include "colpart/oracle.hpp"
#include "colpart/transfer.hpp"
#include "colpart/verify.hpp"

namespace colpart {

using nlohmann::ordered_json;

namespace {

struct Settings {
  std::string graph;
  int k = 2;
  std::optional<int> n;
  std::string method = "brute";
  std::string fixture;
  std::optional<int> m;
  int order = 8;
  std::string format = "json";
  unsigned threads = 0;
  std::uint64_t cap = std::uint64_t{1} << 24;
  unsigned precision = 12;
  std::string suite = "quick";
};

std::string integer_string(const BigRational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : to_fraction_string(q);
}

// {"<y exponent>": "<coefficient>"} for a polynomial in y alone.
ordered_json y_map(const LaurentPoly2& p) {
  ordered_json j = ordered_json::object();
  for (const auto& [m, c] : p.terms()) j[std::to_string(m.y)] = integer_string(c);
  return j;
}

void write_csv_rows(std::ostream& out, int x_exp, const LaurentPoly2& p) {
  for (const auto& [m, c] : p.terms()) out << x_exp + m.x << ',' << m.y << ',' << integer_string(c) << '\n';
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

EnumerationOptions enumeration(const Settings& s) {
  EnumerationOptions e;
  e.cap = s.cap;
  e.threads = s.threads;
  return e;
}

// The graph and (when the method is transfer) its slice and length.
struct Target {
  GraphSpec spec;
  std::string echo;
};

Target parse_target(const Settings& s) {
  if (s.graph.empty()) throw InvalidArgument("--graph is required");
  Target t{parse_graph_expression(s.graph), {}};
  t.echo = to_string(t.spec);
  return t;
}

struct Computed {
  std::optional<BlockDistribution> dist;
  BigRational expected;
  std::optional<int> prism_length;
};

Computed compute(const Settings& s, const Target& t, bool need_distribution) {
  if (s.k < 1) throw InvalidArgument("--k must be at least 1");
  Computed c;
  if (s.method == "brute") {
    if (s.n) throw InvalidArgument("--n applies to --method transfer only");
    c.dist = distribution_bruteforce(build_graph(t.spec), s.k, enumeration(s));
    c.expected = expected_blocks(*c.dist);
  } else if (s.method == "transfer") {
    GraphSpec slice = t.spec;
    int length = 0;
    if (s.n) {
      length = *s.n;
    } else if (auto split = split_prism(t.spec)) {
      slice = split->first;
      length = split->second;
    } else {
      throw InvalidArgument("--method transfer needs product(G,path:n) or --graph G --n N");
    }
    c.prism_length = length;
    c.dist = prism_distribution(build_graph(slice), s.k, length);
    c.expected = expected_blocks(*c.dist);
  } else if (s.method == "closed") {
    const auto family = recognize_family(t.spec, s.k);
    if (!family) throw InvalidArgument("no closed form is known for " + t.echo);
    if (need_distribution) {
      c.dist = family_distribution(*family);
      c.expected = expected_blocks(*c.dist);
    } else {
      c.expected = family_expected(*family);
    }
  } else {
    throw InvalidArgument("unknown method '" + s.method + "'");
  }
  return c;
}

int cmd_dist(const Settings& s, std::ostream& out, bool with_distribution) {
  const auto t0 = std::chrono::steady_clock::now();
  const Target t = parse_target(s);
  const Computed c = compute(s, t, with_distribution);
  if (s.format == "csv") {
    if (with_distribution) {
      out << "x_exp,y_exp,coefficient\n";
      write_csv_rows(out, 0, c.dist->poly);
    } else {
      out << "expected,decimal\n" << to_fraction_string(c.expected) << ',' << to_decimal_string(c.expected, s.precision)
          << '\n';
    }
    return kExitOk;
  }
  ordered_json doc;
  doc["command"] = with_distribution ? "dist" : "expect";
  doc["graph"] = t.echo;
  doc["k"] = s.k;
  doc["method"] = s.method;
  if (c.prism_length) doc["n"] = *c.prism_length;
  if (c.dist) {
    doc["distribution"] = y_map(c.dist->poly);
    doc["total"] = c.dist->total().get_str();
  }
  doc["expected"] = to_fraction_string(c.expected);
  doc["expected_decimal"] = to_decimal_string(c.expected, s.precision);
  doc["precision"] = s.precision;
  doc["elapsed_ms"] = elapsed_ms(t0);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

// Either a named fixture or the reduced K_m system.
struct GfSource {
  RationalGF gf;
  std::string label;
};

GfSource select_gf(const Settings& s) {
  if (!s.fixture.empty()) {
    const FixtureId id = fixture_from_name(s.fixture);
    std::optional<int> k;
    if (!fixture_fixed_k(id)) k = s.k;
    return {fixture_gf(id, k), std::string(fixture_name(id))};
  }
  if (s.m) return {km_prism_gf(*s.m, s.k), "K_" + std::to_string(*s.m) + " reduced system"};
  throw InvalidArgument("give --fixture NAME or --m M");
}

int cmd_series(const Settings& s, std::ostream& out) {
  if (s.order < 0 || s.order > 64) throw InvalidArgument("--N must be between 0 and 64");
  const auto t0 = std::chrono::steady_clock::now();
  const GfSource src = select_gf(s);
  const auto coeffs = series_expand(src.gf.normalized(), s.order);
  if (s.format == "csv") {
    out << "x_exp,y_exp,coefficient\n";
    for (int n = 0; n <= s.order; ++n) write_csv_rows(out, n, coeffs[n]);
    return kExitOk;
  }
  ordered_json doc;
  doc["command"] = "series";
  doc["source"] = src.label;
  doc["k"] = s.k;
  doc["N"] = s.order;
  ordered_json terms = ordered_json::object();
  for (int n = 0; n <= s.order; ++n) terms[std::to_string(n)] = y_map(coeffs[n]);
  doc["coefficients"] = terms;
  doc["elapsed_ms"] = elapsed_ms(t0);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_gf(const Settings& s, std::ostream& out) {
  const GfSource src = select_gf(s);
  if (s.format == "csv") throw InvalidArgument("gf supports --format json only");
  ordered_json doc;
  doc["command"] = "gf";
  doc["source"] = src.label;
  doc["k"] = s.k;
  doc["numerator"] = to_string(src.gf.num());
  doc["denominator"] = to_string(src.gf.den());
  doc["numerator_terms"] = poly_to_json(src.gf.num());
  doc["denominator_terms"] = poly_to_json(src.gf.den());
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_classes(const Settings& s, std::ostream& out) {
  if (!s.m) throw InvalidArgument("classes needs --m");
  const auto classes = color_classes(*s.m, s.k);
  if (s.format == "csv") {
    out << "index,part_sizes,class_size,support\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      std::string sizes;
      for (const auto& a : classes[i].subsets) sizes += (sizes.empty() ? "" : " ") + std::to_string(a.size());
      out << i << ',' << sizes << ',' << classes[i].class_size.get_str() << ',' << classes[i].support << '\n';
    }
    return kExitOk;
  }
  ordered_json doc;
  doc["command"] = "classes";
  doc["m"] = *s.m;
  doc["k"] = s.k;
  ordered_json list = ordered_json::array();
  BigInt total = 0;
  for (const auto& c : classes) {
    ordered_json row;
    row["representative"] = c.subsets;
    row["class_size"] = c.class_size.get_str();
    row["support"] = c.support;
    list.push_back(row);
    total += c.class_size;
  }
  doc["classes"] = list;
  doc["total"] = total.get_str();
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const Settings& s, std::ostream& out) {
  Suite suite;
  if (s.suite == "quick") suite = Suite::Quick;
  else if (s.suite == "full") suite = Suite::Full;
  else throw InvalidArgument("--suite must be quick or full");
  VerifyOptions options;
  options.threads = s.threads;
  const VerifyReport report = run_verify(suite, options, &out);
  char summary[96];
  std::snprintf(summary, sizeof summary, "%zu checks, %zu failed, %.2fs", report.results.size(), report.failures(),
                report.seconds);
  out << summary << '\n';
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

std::optional<std::pair<GraphSpec, int>> split_prism(const GraphSpec& spec) {
  if (spec.kind != GraphSpec::Kind::Product) return std::nullopt;
  const GraphSpec& right = spec.factors.at(1);
  if (right.kind != GraphSpec::Kind::Path) return std::nullopt;
  return std::make_pair(spec.factors.at(0), right.params.at(0));
}

std::optional<FamilyParams> recognize_family(const GraphSpec& spec, int k) {
  using K = GraphSpec::Kind;
  using F = FamilyParams::Family;
  FamilyParams p;
  p.k = k;
  switch (spec.kind) {
    case K::Path: p.family = F::Tree; p.n = spec.params[0]; return p;
    case K::Star: p.family = F::Tree; p.n = spec.params[0] + 1; return p;
    case K::PerfectBinaryTree: p.family = F::PerfectBinaryTree; p.n = spec.params[0]; return p;
    case K::Cycle: p.family = F::Cycle; p.n = spec.params[0]; return p;
    case K::Complete: p.family = F::Complete; p.n = spec.params[0]; return p;
    case K::Bipartite: p.family = F::Bipartite; p.n = spec.params[0]; p.m = spec.params[1]; return p;
    case K::Edges: {
      const Graph g = build_graph(spec);
      if (g.edge_count() + 1 == g.vertex_count() && connected_components(g).size() == 1) {
        p.family = F::Tree;
        p.n = g.vertex_count();
        return p;
      }
      return std::nullopt;
    }
    case K::Product: {
      const auto split = split_prism(spec);
      if (!split) return std::nullopt;
      const GraphSpec& slice = split->first;
      p.n = split->second;
      if (slice.kind == K::Complete) {
        p.family = F::CompletePrism;
        p.m = slice.params[0];
        return p;
      }
      if (slice.kind == K::Star && slice.params[0] == 3 && k == 2) {
        p.family = F::StarProfile;
        p.m = 3;
        return p;
      }
      return std::nullopt;
    }
    case K::Grid: return std::nullopt;
  }
  return std::nullopt;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact block-count distributions of colored graphs"};
  app.require_subcommand(1);
  Settings s;

  auto add_graph_flags = [&s](CLI::App* sub) {
    sub->add_option("--graph", s.graph, "graph expression, e.g. product(complete:3,path:4)")->required();
    sub->add_option("--k", s.k, "number of colors")->check(CLI::PositiveNumber);
    sub->add_option("--n", s.n, "prism length when --graph names the slice (transfer only)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--method", s.method, "brute, transfer or closed")
        ->check(CLI::IsMember({"brute", "transfer", "closed"}));
    sub->add_option("--threads", s.threads, "worker threads for enumeration (0 = all cores)");
    sub->add_option("--cap", s.cap, "largest number of colorings brute force may enumerate");
    sub->add_option("--precision", s.precision, "digits in expected_decimal");
  };
  auto add_format = [&s](CLI::App* sub) {
    sub->add_option("--format", s.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_gf_flags = [&s](CLI::App* sub) {
    sub->add_option("--fixture", s.fixture, "published fixture name");
    sub->add_option("--m", s.m, "clique size for the reduced K_m system")->check(CLI::PositiveNumber);
    sub->add_option("--k", s.k, "number of colors")->check(CLI::PositiveNumber);
  };

  CLI::App* dist = app.add_subcommand("dist", "distribution of block counts");
  add_graph_flags(dist);
  add_format(dist);
  CLI::App* expect = app.add_subcommand("expect", "expected number of blocks");
  add_graph_flags(expect);
  add_format(expect);
  CLI::App* series = app.add_subcommand("series", "coefficients of x^0..x^N of a generating function");
  add_gf_flags(series);
  series->add_option("--N", s.order, "highest power of x (at most 64)")->check(CLI::Range(0, 64));
  add_format(series);
  CLI::App* gf = app.add_subcommand("gf", "numerator and denominator of a generating function");
  add_gf_flags(gf);
  CLI::App* classes = app.add_subcommand("classes", "color classes of [m] under k colors");
  classes->add_option("--m", s.m, "number of vertices")->required()->check(CLI::PositiveNumber);
  classes->add_option("--k", s.k, "number of colors")->check(CLI::PositiveNumber);
  add_format(classes);
  CLI::App* verify = app.add_subcommand("verify", "run the built-in cross-checks");
  verify->add_option("--suite", s.suite, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--threads", s.threads, "worker threads for enumeration (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dist) return cmd_dist(s, out, true);
    if (*expect) return cmd_dist(s, out, false);
    if (*series) return cmd_series(s, out);
    if (*gf) return cmd_gf(s, out);
    if (*classes) return cmd_classes(s, out);
    if (*verify) return cmd_verify(s, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace colpart
