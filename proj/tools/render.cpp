#include "render.hpp"

#include <sstream>

namespace monova::tools {

std::string direction_name(StepDirection d) {
  return d == StepDirection::forward ? "forward" : "backward";
}

std::string status_name(ScenarioResult::Status s) {
  switch (s) {
    case ScenarioResult::Status::pass: return "pass";
    case ScenarioResult::Status::fail: return "fail";
    case ScenarioResult::Status::skipped: return "skipped";
  }
  return "?";
}

std::string step_line(const DeductionStep& s) {
  std::ostringstream out;
  out << s.from.str() << " -> " << s.to.str() << " by " << s.used.str() << " ("
      << direction_name(s.direction) << "), prefix " << s.matching.prefix.str() << ", sub "
      << s.matching.sub.str() << ", suffix " << s.matching.suffix.str();
  return out.str();
}

std::vector<std::string> deduction_lines(const Deduction& d) {
  std::vector<std::string> lines;
  std::ostringstream head;
  for (size_t i = 0; i < d.words.size(); ++i) {
    if (i) head << " -> ";
    head << d.words[i].str();
  }
  head << " (" << d.length() << (d.length() == 1 ? " step)" : " steps)");
  lines.push_back(head.str());
  for (const DeductionStep& s : d.steps) lines.push_back("  " + step_line(s));
  return lines;
}

std::string monoid_line(const FiniteMonoid& m) {
  std::ostringstream out;
  if (!m.name().empty()) out << m.name() << ": ";
  out << "order " << m.order() << "; table";
  for (int a = 0; a < m.order(); ++a) {
    out << " [";
    for (int b = 0; b < m.order(); ++b) {
      if (b) out << ' ';
      out << m.product(a, b);
    }
    out << ']';
  }
  return out.str();
}

std::string assignment_line(const std::map<Letter, int>& a) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [letter, value] : a) {
    if (!first) out << ", ";
    first = false;
    out << letter.str() << " -> " << value;
  }
  out << '}';
  return out.str();
}

std::string bounds_line(const SearchBounds& b) {
  return "max_steps " + std::to_string(b.max_steps) + ", max_len " + std::to_string(b.max_len);
}

std::vector<std::string> verdict_lines(const Verdict& v) {
  std::vector<std::string> lines;
  switch (v.kind) {
    case VerdictKind::holds: lines.push_back("holds: " + v.reason); break;
    case VerdictKind::fails: lines.push_back("fails: " + v.reason); break;
    case VerdictKind::unknown: lines.push_back("unknown: " + v.reason); break;
  }
  if (v.deduction) {
    for (const std::string& line : deduction_lines(*v.deduction)) lines.push_back(line);
  }
  if (v.countermodel) lines.push_back("countermodel " + monoid_line(*v.countermodel));
  if (v.assignment) lines.push_back("violating assignment " + assignment_line(*v.assignment));
  if (v.isoterm) lines.push_back("isoterm " + v.isoterm->str());
  if (v.bounds) lines.push_back("bounds tried: " + bounds_line(*v.bounds));
  return lines;
}

Json matching_json(const Matching& m) {
  Json sub = Json::object();
  for (const auto& [letter, image] : m.sub.assignment()) sub[letter.str()] = image.str();
  return Json{{"prefix", m.prefix.str()}, {"sub", sub}, {"suffix", m.suffix.str()}};
}

Json deduction_json(const Deduction& d) {
  Json words = Json::array();
  for (const Word& w : d.words) words.push_back(w.str());
  Json steps = Json::array();
  for (const DeductionStep& s : d.steps) {
    steps.push_back(Json{{"from", s.from.str()},
                         {"to", s.to.str()},
                         {"identity", s.used.str()},
                         {"direction", direction_name(s.direction)},
                         {"matching", matching_json(s.matching)}});
  }
  return Json{{"words", words}, {"length", d.length()}, {"steps", steps}};
}

Json monoid_json(const FiniteMonoid& m) {
  Json table = Json::array();
  for (int a = 0; a < m.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < m.order(); ++b) row.push_back(m.product(a, b));
    table.push_back(row);
  }
  Json j{{"order", m.order()}, {"table", table}};
  if (!m.name().empty()) j["name"] = m.name();
  return j;
}

Json assignment_json(const std::map<Letter, int>& a) {
  Json j = Json::object();
  for (const auto& [letter, value] : a) j[letter.str()] = value;
  return j;
}

Json bounds_json(const SearchBounds& b) {
  return Json{{"max_steps", b.max_steps}, {"max_len", b.max_len}};
}

Json verdict_json(const Verdict& v) {
  const char* kind = v.kind == VerdictKind::holds   ? "holds"
                     : v.kind == VerdictKind::fails ? "fails"
                                                    : "unknown";
  Json j{{"kind", kind}, {"reason", v.reason}};
  if (v.deduction) j["deduction"] = deduction_json(*v.deduction);
  if (v.countermodel) j["countermodel"] = monoid_json(*v.countermodel);
  if (v.assignment) j["assignment"] = assignment_json(*v.assignment);
  if (v.isoterm) j["isoterm"] = v.isoterm->str();
  if (v.bounds) j["bounds"] = bounds_json(*v.bounds);
  return j;
}

Json scenario_json(const ScenarioResult& r) {
  Json j{{"id", r.id}, {"title", r.title}, {"status", status_name(r.status)}};
  if (r.status == ScenarioResult::Status::skipped) j["skip_reason"] = r.skip_reason;
  Json ev = Json::array();
  for (const std::string& line : r.evidence) ev.push_back(line);
  j["evidence"] = ev;
  return j;
}

Json suite_json(const std::vector<ScenarioResult>& results) {
  Json arr = Json::array();
  for (const ScenarioResult& r : results) arr.push_back(scenario_json(r));
  return Json{{"suite", "paper"}, {"passed", suite_passed(results)}, {"results", arr}};
}

std::vector<std::string> scenario_lines(const ScenarioResult& r) {
  std::vector<std::string> lines;
  std::string head = r.id + " " + r.title + ": ";
  switch (r.status) {
    case ScenarioResult::Status::pass: head += "PASS"; break;
    case ScenarioResult::Status::fail: head += "FAIL"; break;
    case ScenarioResult::Status::skipped: head += "SKIPPED (" + r.skip_reason + ")"; break;
  }
  lines.push_back(head);
  for (const std::string& line : r.evidence) lines.push_back("    " + line);
  return lines;
}

}  // namespace monova::tools
