#ifndef MONOVA_TOOLS_SCENARIOS_HPP
#define MONOVA_TOOLS_SCENARIOS_HPP

#include <string>
#include <vector>

namespace monova::tools {

// One named check of the built-in reproduction suite.  Pass and Fail always
// carry evidence that can be re-checked by hand or by the verifier
// operations; Skipped states why the claim is not decided here.
struct ScenarioResult {
  enum class Status { pass, fail, skipped };

  std::string id;       // stable label, "S1".."S11"
  std::string title;    // one-line description of the claim
  Status status = Status::fail;
  std::string skip_reason;             // non-empty iff skipped
  std::vector<std::string> evidence;   // certificate lines, fixed order
};

struct SuiteOptions {
  // Lattice-law sweep bound; 6 runs in seconds, 7 takes noticeably longer
  // and sits behind the CLI flag.
  int lattice_max_size = 6;

  // Wall-clock budget in seconds; scenarios that would start after the
  // budget is spent are skipped.  0 means no budget.
  double budget_seconds = 0;
};

// Runs the full scenario suite in fixed order with buffered output.
// Certificates produced along the way are re-verified before being
// reported; a certificate that fails re-verification throws
// InvalidStructure rather than reporting a polished lie.
std::vector<ScenarioResult> run_scenario_suite(const SuiteOptions& options = {});

// True iff every non-skipped scenario passed.
bool suite_passed(const std::vector<ScenarioResult>& results);

}  // namespace monova::tools

#endif
