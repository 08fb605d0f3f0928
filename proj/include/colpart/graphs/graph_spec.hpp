#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "colpart/graphs/graph.hpp"

namespace colpart {

/// Parsed form of the graph mini-language:
///
///   spec     := family | "product(" spec "," spec ")" | "edges:" INT ":[" edgelist "]"
///   family   := ("path"|"cycle"|"complete"|"star"|"pbt") ":" INT
///             | ("bipartite"|"grid") ":" INT "," INT
///   edgelist := INT "-" INT ("," INT "-" INT)*
///
/// No whitespace; vertex indices are 0-based.
struct GraphSpec {
  enum class Kind { Path, Cycle, Complete, Star, PerfectBinaryTree, Bipartite, Grid, Product, Edges };

  Kind kind = Kind::Path;
  std::vector<int> params;        // family parameters, or {n} for Edges
  std::vector<Edge> edges;        // Edges only
  std::vector<GraphSpec> factors; // Product only: {left, right}
  std::size_t position = 0;       // offset of this node in the source text
};

/// Throws ParseError (with offset) on syntax errors and on out-of-range
/// parameters such as "cycle:2".
GraphSpec parse_graph_expression(std::string_view text);

Graph build_graph(const GraphSpec& spec);

/// parse_graph_expression followed by build_graph.
Graph parse_graph_spec(std::string_view text);

/// Canonical text for a spec; parse_graph_expression(to_string(s)) == s.
std::string to_string(const GraphSpec& spec);

}  // namespace colpart
