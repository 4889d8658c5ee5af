#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kat/syntax.hpp"

namespace kat {

struct RunOptions {
  /// When set, compare bounded languages at this letter bound instead of
  /// running the decision procedure.
  std::optional<std::size_t> oracle_bound;
  std::size_t max_states = 100000;
  std::size_t atom_limit = kDefaultAtomLimit;
  /// Extra hypotheses, as equation text parsed against the goal's signature.
  std::vector<std::string> hypotheses;
};

/// Exit codes: 0 proved, 1 not proved, 2 parse or semantic error,
/// 3 resource limit hit.
struct RunReport {
  int exit_code = 0;
  std::string output;                  // report for stdout
  std::vector<std::string> warnings;   // diagnostics for stderr
};

RunReport run_goal_text(std::string_view text, const RunOptions& opts = {});

}  // namespace kat
