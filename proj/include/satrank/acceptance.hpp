#pragma once

// The nine acceptance criteria as executable checks, shared by the
// acceptance test binary and `satrank reproduce-paper`.

#include <functional>
#include <string>
#include <vector>

namespace satrank {

struct CriterionResult {
  int id = 0;
  std::string title;
  /// Every check held and the run finished inside limit_seconds.
  bool pass = false;
  double seconds = 0;
  /// 0 means no time limit.
  double limit_seconds = 0;
  std::string detail;
};

struct AcceptanceOptions {
  unsigned threads = 1;
  /// Criterion ids to run; empty runs all nine.
  std::vector<int> only;
};

/// Runs the criteria in id order, reporting each to on_result as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  1  <title>  (0.012 s, limit 1 s)  <detail>".
std::string format_result(const CriterionResult& r);

}  // namespace satrank
