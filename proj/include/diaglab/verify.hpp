#pragma once

// Self-checks behind `diaglab verify`: each check reproduces one table or
// one family of identities and reports pass/fail with a short detail line.

#include <cstddef>
#include <string>
#include <vector>

namespace diaglab {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Check ids to run; empty runs everything.
  std::vector<std::string> only;
  /// Directory holding the text-mode golden tables; empty skips that check.
  std::string golden_dir;
  std::size_t penrose_depth = 10000;
  bool parallel = true;
};

/// Ids in report order.
std::vector<std::string> check_ids();

/// Results are ordered by check id, whatever order they finish in. Unknown
/// ids raise std::invalid_argument.
std::vector<CheckResult> run_checks(const VerifyOptions& options);

}  // namespace diaglab
