#ifndef MONOVA_TOOLS_RENDER_HPP
#define MONOVA_TOOLS_RENDER_HPP

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "monova/deduction.hpp"
#include "monova/monoid.hpp"
#include "monova/variety.hpp"
#include "scenarios.hpp"

namespace monova::tools {

// Insertion-ordered JSON so emitted objects have a stable field order and
// golden files can be compared bytewise.
using Json = nlohmann::ordered_json;

std::string direction_name(StepDirection d);
std::string status_name(ScenarioResult::Status s);

// One line per elementary rewrite, with the identity, direction, and the
// matching that places it — enough to re-check the step by hand.
std::string step_line(const DeductionStep& s);

// Header line "w0 -> w1 -> ... (k steps)" followed by one step_line each.
std::vector<std::string> deduction_lines(const Deduction& d);

// "order 3; table [0 1 2] [1 1 1] [2 1 2]" plus the name when present.
std::string monoid_line(const FiniteMonoid& m);

std::string assignment_line(const std::map<Letter, int>& a);
std::string bounds_line(const SearchBounds& b);

// Text rendering of a verdict: the kind and reason first, then whichever
// evidence the verdict carries.
std::vector<std::string> verdict_lines(const Verdict& v);

Json matching_json(const Matching& m);
Json deduction_json(const Deduction& d);
Json monoid_json(const FiniteMonoid& m);
Json assignment_json(const std::map<Letter, int>& a);
Json bounds_json(const SearchBounds& b);
Json verdict_json(const Verdict& v);

Json scenario_json(const ScenarioResult& r);
Json suite_json(const std::vector<ScenarioResult>& results);
std::vector<std::string> scenario_lines(const ScenarioResult& r);

}  // namespace monova::tools

#endif
