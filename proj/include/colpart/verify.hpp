#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "colpart/fixtures.hpp"

namespace colpart {

enum class Suite { Quick, Full };

/// Where the checks obtain published generating functions. Replaceable so a
/// harness can feed a corrupted fixture and watch the suite fail.
using FixtureSource = std::function<RationalGF(FixtureId, std::optional<int>)>;

struct VerifyOptions {
  FixtureSource fixture = [](FixtureId id, std::optional<int> k) { return fixture_gf(id, k); };
  unsigned threads = 0;
};

struct CheckResult {
  std::string name;
  int criterion = 0;
  bool passed = false;
  std::string detail;  // first mismatch, empty on success
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckResult> results;
  double seconds = 0;

  bool all_passed() const;
  std::size_t failures() const;
};

/// Runs every check of the suite (the full suite is a superset of quick).
/// Each finished check is written as one line to `progress` when given.
VerifyReport run_verify(Suite suite, const VerifyOptions& options = {}, std::ostream* progress = nullptr);

std::string format_check_line(const CheckResult& r);

}  // namespace colpart
