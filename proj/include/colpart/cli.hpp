#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "colpart/closed_forms.hpp"
#include "colpart/graphs/graph_spec.hpp"

namespace colpart {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitCap = 3,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The closed-form family a parsed graph belongs to, if any. Trees given as
/// paths, stars or explicit edge lists count as trees.
std::optional<FamilyParams> recognize_family(const GraphSpec& spec, int k);

/// (slice, length) when the expression is product(G, path:n).
std::optional<std::pair<GraphSpec, int>> split_prism(const GraphSpec& spec);

}  // namespace colpart
