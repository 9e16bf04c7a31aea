#pragma once

// Oracle fixtures: {"instance", "oracle", "budget", "result", "command"}.
// Each fixture freezes one oracle run on a named instance; verification reruns
// the oracle from the stored instance and compares the structured algorithm.

#include <string>
#include <vector>

#include "satrank/io.hpp"

namespace satrank {

/// Fixed instance list, e.g. "group-d8-p2", "lie-sl2-F9", "pairs-sl2-F3".
std::vector<std::string> fixture_names();

struct FixtureOutcome {
  io::Json fixture;
  /// Empty when the oracle and the structured code agree.
  std::string mismatch;
};

/// Runs the oracle on a named instance and checks the structured result.
/// Throws InputError for unknown names.
FixtureOutcome run_fixture(const std::string& name, const SearchBudget& budget = {});

/// Reruns the oracle from a stored fixture, requires the same result, and
/// checks the structured result; returns the first disagreement or "".
std::string verify_fixture(const io::Json& fixture);

}  // namespace satrank
