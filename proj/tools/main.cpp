// monova — command-line workbench for monoid varieties: identity deciders,
// bounded deduction search, finite countermodel search, and lattice-element
// analysis, plus the built-in reproduction suite.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "monova/deduction.hpp"
#include "monova/identity.hpp"
#include "monova/lattice.hpp"
#include "monova/monoid.hpp"
#include "monova/variety.hpp"
#include "monova/word.hpp"
#include "render.hpp"
#include "scenarios.hpp"

namespace {

using namespace monova;
using monova::tools::Json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

// Bad user input: unparsable words, unreadable files, unknown names.
// Mapped to exit code 64; everything else escaping a command handler is an
// internal invariant violation and maps to 70.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename Fn>
auto parse_input(Fn&& fn, const std::string& what) {
  try {
    return fn();
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(what + ": " + e.what());
  }
}

Word parse_word_arg(const std::string& text) {
  return parse_input([&] { return Word::parse(text); }, "bad word '" + text + "'");
}

Identity parse_identity_arg(const std::string& text) {
  return parse_input([&] { return Identity::parse(text); }, "bad identity '" + text + "'");
}

// "@NAME" resolves to a built-in basis, anything else is a file of one
// identity per line.
Basis resolve_basis(const std::string& spec) {
  return parse_input(
      [&] {
        if (!spec.empty() && spec.front() == '@') return builtin_basis(spec.substr(1));
        return parse_basis(read_file(spec), spec);
      },
      "bad basis '" + spec + "'");
}

VarietyExpr resolve_variety(const std::string& text) {
  return parse_input(
      [&] {
        return VarietyExpr::parse(text, [](const std::string& path) {
          return parse_basis(read_file(path), path);
        });
      },
      "bad variety expression '" + text + "'");
}

// A monoid argument is a file when such a file exists, otherwise a builtin
// constructor spec like "cyclic_group(3)".
FiniteMonoid resolve_monoid(const std::string& spec) {
  if (std::filesystem::exists(spec))
    return parse_input([&] { return FiniteMonoid::parse(read_file(spec)); },
                       "bad monoid file '" + spec + "'");
  return parse_input([&] { return monoids::builtin(spec); },
                     "'" + spec + "' is neither a readable file nor a built-in monoid");
}

FiniteLattice resolve_lattice(const std::string& spec) {
  if (std::filesystem::exists(spec))
    return parse_input([&] { return FiniteLattice::parse(read_file(spec)); },
                       "bad lattice file '" + spec + "'");
  return parse_input([&] { return lattices::named(spec); },
                     "'" + spec + "' is neither a readable file nor a named lattice");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void emit_lines(const std::vector<std::string>& lines) {
  for (const std::string& line : lines) std::cout << line << "\n";
}

// Any certificate we are about to print must survive its independent
// verifier; a certificate that does not is a bug, not an answer.
void reverify_verdict(const Verdict& v, const VarietyExpr& expr, const Identity& id) {
  if (expr.kind() != VarietyExpr::Kind::basis) return;
  const Basis& basis = expr.basis();
  if (v.deduction && !verify_deduction(*v.deduction, basis))
    throw std::logic_error("deduction certificate failed re-verification");
  if (v.countermodel) {
    bool good = satisfies_all(*v.countermodel, basis);
    if (v.assignment)
      good = good && evaluate(*v.countermodel, id.lhs, *v.assignment) !=
                         evaluate(*v.countermodel, id.rhs, *v.assignment);
    if (!good) throw std::logic_error("countermodel certificate failed re-verification");
  }
  if (v.isoterm && !is_isoterm(*v.isoterm, basis))
    throw std::logic_error("isoterm certificate failed re-verification");
}

Json predicate_json(const PredicateResult& r) {
  Json j{{"holds", r.holds}};
  if (r.witness) j["witness"] = Json::array({r.witness->first, r.witness->second});
  return j;
}

std::string predicate_text(const char* label, const PredicateResult& r) {
  std::string out = std::string(label) + (r.holds ? " yes" : " no");
  if (r.witness)
    out += " (witness " + std::to_string(r.witness->first) + "," +
           std::to_string(r.witness->second) + ")";
  return out;
}

struct DecideArgs {
  std::string variety, identity;
  int max_steps = 0, max_len = 0;
  bool has_steps = false, has_len = false, json = false;
};

int cmd_decide(const DecideArgs& a) {
  const VarietyExpr expr = resolve_variety(a.variety);
  const Identity id = parse_identity_arg(a.identity);

  SearchBounds bounds = default_bounds(id.lhs, id.rhs);
  if (a.has_steps) bounds.max_steps = a.max_steps;
  if (a.has_len) bounds.max_len = a.max_len;

  const Verdict v = decide(expr, id, bounds);
  reverify_verdict(v, expr, id);

  if (a.json) {
    emit(Json{{"command", "decide"},
              {"variety", expr.str()},
              {"identity", id.str()},
              {"verdict", monova::tools::verdict_json(v)}});
  } else {
    emit_lines(monova::tools::verdict_lines(v));
  }
  switch (v.kind) {
    case VerdictKind::holds: return kExitHolds;
    case VerdictKind::fails: return kExitFails;
    case VerdictKind::unknown: return kExitUnknown;
  }
  return kExitInternal;
}

struct DeduceArgs {
  std::string basis, from, to;
  int max_steps = 0, max_len = 0;
  bool has_steps = false, has_len = false, json = false;
};

int cmd_deduce(const DeduceArgs& a) {
  const Basis basis = resolve_basis(a.basis);
  const Word from = parse_word_arg(a.from);
  const Word to = parse_word_arg(a.to);

  SearchBounds bounds = default_bounds(from, to);
  if (a.has_steps) bounds.max_steps = a.max_steps;
  if (a.has_len) bounds.max_len = a.max_len;

  const auto d = deduction_search(from, to, basis, bounds);
  if (d && !verify_deduction(*d, basis))
    throw std::logic_error("deduction certificate failed re-verification");

  if (a.json) {
    Json j{{"command", "deduce"},
           {"basis", basis.name()},
           {"from", from.str()},
           {"to", to.str()},
           {"found", d.has_value()},
           {"bounds", monova::tools::bounds_json(bounds)}};
    if (d) j["deduction"] = monova::tools::deduction_json(*d);
    emit(j);
  } else if (d) {
    std::cout << "derived " << from.str() << " = " << to.str() << "\n";
    emit_lines(monova::tools::deduction_lines(*d));
  } else {
    std::cout << "not within bounds: " << monova::tools::bounds_line(bounds) << "\n";
  }
  return d ? kExitHolds : kExitFails;
}

struct WordBasisArgs {
  std::string word, basis;
  bool json = false;
};

int cmd_successors(const WordBasisArgs& a) {
  const Basis basis = resolve_basis(a.basis);
  const Word w = parse_word_arg(a.word);
  const std::set<Word> succ = step_successors(w, basis);

  if (a.json) {
    Json arr = Json::array();
    for (const Word& v : succ) arr.push_back(v.str());
    emit(Json{{"command", "successors"},
              {"word", w.str()},
              {"basis", basis.name()},
              {"successors", arr}});
  } else {
    for (const Word& v : succ) std::cout << v.str() << "\n";
  }
  return kExitHolds;
}

int cmd_isoterm(const WordBasisArgs& a) {
  const Basis basis = resolve_basis(a.basis);
  const Word w = parse_word_arg(a.word);
  const bool iso = is_isoterm(w, basis);

  std::optional<Word> rewrite;
  if (!iso) {
    for (const Word& v : step_successors(w, basis)) {
      if (v != w) {
        rewrite = v;
        break;
      }
    }
  }

  if (a.json) {
    Json j{{"command", "isoterm"}, {"word", w.str()}, {"basis", basis.name()}, {"isoterm", iso}};
    if (rewrite) j["rewrites_to"] = rewrite->str();
    emit(j);
  } else if (iso) {
    std::cout << w.str() << " is an isoterm for " << basis.name() << "\n";
  } else {
    std::cout << w.str() << " is not an isoterm for " << basis.name();
    if (rewrite) std::cout << ": rewrites to " << rewrite->str();
    std::cout << "\n";
  }
  return iso ? kExitHolds : kExitFails;
}

struct MonoidCheckArgs {
  std::string monoid, identity;
  bool json = false;
};

int cmd_monoid_check(const MonoidCheckArgs& a) {
  const FiniteMonoid m = resolve_monoid(a.monoid);
  const Identity id = parse_identity_arg(a.identity);
  const auto assignment = violating_assignment(m, id);

  if (a.json) {
    Json j{{"command", "monoid-check"},
           {"monoid", monova::tools::monoid_json(m)},
           {"identity", id.str()},
           {"satisfies", !assignment.has_value()}};
    if (assignment) j["assignment"] = monova::tools::assignment_json(*assignment);
    emit(j);
  } else if (assignment) {
    std::cout << monova::tools::monoid_line(m) << "\n"
              << "violates " << id.str() << " under "
              << monova::tools::assignment_line(*assignment) << "\n";
  } else {
    std::cout << monova::tools::monoid_line(m) << "\n"
              << "satisfies " << id.str() << "\n";
  }
  return assignment ? kExitFails : kExitHolds;
}

struct MonoidFindArgs {
  std::string basis, violates;
  int max_order = 5;
  bool json = false;
};

int cmd_monoid_find(const MonoidFindArgs& a) {
  const Basis basis = resolve_basis(a.basis);
  const Identity id = parse_identity_arg(a.violates);
  const auto m = find_countermodel(basis, id, a.max_order);

  std::optional<std::map<Letter, int>> assignment;
  if (m) {
    assignment = violating_assignment(*m, id);
    if (!satisfies_all(*m, basis) || !assignment)
      throw std::logic_error("countermodel certificate failed re-verification");
  }

  if (a.json) {
    Json j{{"command", "monoid-find"},
           {"basis", basis.name()},
           {"violates", id.str()},
           {"max_order", a.max_order},
           {"found", m.has_value()}};
    if (m) {
      j["monoid"] = monova::tools::monoid_json(*m);
      j["assignment"] = monova::tools::assignment_json(*assignment);
    }
    emit(j);
  } else if (m) {
    std::cout << monova::tools::monoid_line(*m) << "\n"
              << "satisfies " << basis.name() << ", violates " << id.str() << " under "
              << monova::tools::assignment_line(*assignment) << "\n";
  } else {
    std::cout << "no monoid of order <= " << a.max_order << " satisfies " << basis.name()
              << " and violates " << id.str() << "\n";
  }
  return m ? kExitHolds : kExitFails;
}

struct LatticeAnalyzeArgs {
  std::string lattice;
  bool json = false;
};

int cmd_lattice_analyze(const LatticeAnalyzeArgs& a) {
  const FiniteLattice l = resolve_lattice(a.lattice);
  const std::vector<ElementReport> reports = analyze(l);

  if (a.json) {
    Json lat{{"size", l.size()}};
    if (!l.name().empty()) lat["name"] = l.name();
    if (!l.note().empty()) lat["note"] = l.note();
    Json elements = Json::array();
    for (const ElementReport& r : reports) {
      elements.push_back(Json{{"element", r.element},
                              {"neutral", predicate_json(r.neutral)},
                              {"costandard", predicate_json(r.costandard)},
                              {"codistributive", predicate_json(r.codistributive)},
                              {"modular", predicate_json(r.modular)},
                              {"upper_modular", predicate_json(r.upper_modular)},
                              {"lower_modular", predicate_json(r.lower_modular)}});
    }
    emit(Json{{"command", "lattice-analyze"}, {"lattice", lat}, {"elements", elements}});
  } else {
    std::cout << (l.name().empty() ? a.lattice : l.name()) << ": size " << l.size() << "\n";
    if (!l.note().empty()) std::cout << "note: " << l.note() << "\n";
    for (const ElementReport& r : reports) {
      std::cout << "element " << r.element << ": " << predicate_text("neutral", r.neutral) << ", "
                << predicate_text("costandard", r.costandard) << ", "
                << predicate_text("codistributive", r.codistributive) << ", "
                << predicate_text("modular", r.modular) << ", "
                << predicate_text("upper-modular", r.upper_modular) << ", "
                << predicate_text("lower-modular", r.lower_modular) << "\n";
    }
  }
  return kExitHolds;
}

struct LatticeLawsArgs {
  int max_size = 6;
  bool json = false;
};

int cmd_lattice_laws(const LatticeLawsArgs& a) {
  if (a.max_size < 1 || a.max_size > 7)
    throw UsageError("--max-size must be between 1 and 7");
  const LawScanResult scan = scan_lattice_laws(a.max_size);

  if (a.json) {
    Json j{{"command", "lattice-laws"},
           {"max_size", a.max_size},
           {"lattices_checked", scan.lattices_checked},
           {"violation_found", scan.violation.has_value()}};
    if (scan.violation) {
      j["violation"] = Json{{"law", scan.violation->law},
                            {"element", scan.violation->element},
                            {"lattice_size", scan.violation->lattice.size()}};
    }
    emit(j);
  } else if (scan.violation) {
    std::cout << "law " << scan.violation->law << " broken at element " << scan.violation->element
              << " of a lattice of size " << scan.violation->lattice.size() << "\n";
  } else {
    std::cout << "sizes 1.." << a.max_size << ": " << scan.lattices_checked
              << " lattices checked; no law violated\n";
  }
  // The law battery consists of proved implications; a violation means the
  // implementation is unsound, not that the input was unusual.
  return scan.violation ? kExitInternal : kExitHolds;
}

struct SuiteArgs {
  std::string which;
  bool json = false;
  bool lattice7 = false;
};

int cmd_suite(const SuiteArgs& a) {
  if (a.which != "paper") throw UsageError("unknown suite '" + a.which + "' (available: paper)");

  monova::tools::SuiteOptions options;
  if (a.lattice7) options.lattice_max_size = 7;
  if (const char* budget = std::getenv("MONOVA_SUITE_BUDGET_SECONDS")) {
    char* end = nullptr;
    const double seconds = std::strtod(budget, &end);
    if (end != budget && seconds > 0) options.budget_seconds = seconds;
  }

  const std::vector<monova::tools::ScenarioResult> results =
      monova::tools::run_scenario_suite(options);

  if (a.json) {
    emit(monova::tools::suite_json(results));
  } else {
    int passed = 0, failed = 0, skipped = 0;
    for (const auto& r : results) {
      emit_lines(monova::tools::scenario_lines(r));
      switch (r.status) {
        case monova::tools::ScenarioResult::Status::pass: ++passed; break;
        case monova::tools::ScenarioResult::Status::fail: ++failed; break;
        case monova::tools::ScenarioResult::Status::skipped: ++skipped; break;
      }
    }
    std::cout << "suite paper: " << passed << " passed, " << failed << " failed, " << skipped
              << " skipped\n";
  }
  return monova::tools::suite_passed(results) ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for identities of monoid varieties: deciders, bounded deduction, "
               "finite countermodels, and lattice-element analysis"};
  app.require_subcommand(1);

  DecideArgs decide_args;
  auto* decide_cmd = app.add_subcommand("decide", "decide an identity in a variety expression");
  decide_cmd->add_option("variety", decide_args.variety,
                         "variety expression: T, SL, MON, COM, A(n), C(n), D, @NAME, "
                         "basis:PATH, joined with 'v'")
      ->required();
  decide_cmd->add_option("identity", decide_args.identity, "identity 'u = v'")->required();
  auto* d_steps = decide_cmd->add_option("--max-steps", decide_args.max_steps,
                                         "deduction step bound (default 8)");
  auto* d_len = decide_cmd->add_option("--max-len", decide_args.max_len,
                                       "intermediate word length bound (default |u|+|v|+4)");
  decide_cmd->add_flag("--json", decide_args.json, "emit JSON");

  DeduceArgs deduce_args;
  auto* deduce_cmd = app.add_subcommand("deduce", "search for a bounded deduction between words");
  deduce_cmd->add_option("--basis", deduce_args.basis, "@NAME or identity file")->required();
  deduce_cmd->add_option("--from", deduce_args.from, "source word")->required();
  deduce_cmd->add_option("--to", deduce_args.to, "target word")->required();
  auto* x_steps = deduce_cmd->add_option("--max-steps", deduce_args.max_steps,
                                         "deduction step bound (default 8)");
  auto* x_len = deduce_cmd->add_option("--max-len", deduce_args.max_len,
                                       "intermediate word length bound (default |from|+|to|+4)");
  deduce_cmd->add_flag("--json", deduce_args.json, "emit JSON");

  WordBasisArgs successors_args;
  auto* successors_cmd =
      app.add_subcommand("successors", "all words one elementary rewrite away");
  successors_cmd->add_option("word", successors_args.word, "word")->required();
  successors_cmd->add_option("--basis", successors_args.basis, "@NAME or identity file")
      ->required();
  successors_cmd->add_flag("--json", successors_args.json, "emit JSON");

  WordBasisArgs isoterm_args;
  auto* isoterm_cmd = app.add_subcommand("isoterm", "check that no identity rewrites the word");
  isoterm_cmd->add_option("word", isoterm_args.word, "word")->required();
  isoterm_cmd->add_option("--basis", isoterm_args.basis, "@NAME or identity file")->required();
  isoterm_cmd->add_flag("--json", isoterm_args.json, "emit JSON");

  MonoidCheckArgs monoid_check_args;
  auto* monoid_check_cmd =
      app.add_subcommand("monoid-check", "evaluate an identity in a finite monoid");
  monoid_check_cmd
      ->add_option("monoid", monoid_check_args.monoid,
                   "table file, or builtin like cyclic_group(3)")
      ->required();
  monoid_check_cmd->add_option("identity", monoid_check_args.identity, "identity 'u = v'")
      ->required();
  monoid_check_cmd->add_flag("--json", monoid_check_args.json, "emit JSON");

  MonoidFindArgs monoid_find_args;
  auto* monoid_find_cmd =
      app.add_subcommand("monoid-find", "search for a monoid satisfying a basis and violating "
                                        "an identity");
  monoid_find_cmd->add_option("--basis", monoid_find_args.basis, "@NAME or identity file")
      ->required();
  monoid_find_cmd->add_option("--violates", monoid_find_args.violates, "identity 'u = v'")
      ->required();
  monoid_find_cmd->add_option("--max-order", monoid_find_args.max_order,
                              "largest order to enumerate (default 5)");
  monoid_find_cmd->add_flag("--json", monoid_find_args.json, "emit JSON");

  LatticeAnalyzeArgs lattice_analyze_args;
  auto* lattice_analyze_cmd =
      app.add_subcommand("lattice-analyze", "six element predicates for every element");
  lattice_analyze_cmd
      ->add_option("lattice", lattice_analyze_args.lattice,
                   "leq-matrix file, or named lattice like M3 or grid(12,4)")
      ->required();
  lattice_analyze_cmd->add_flag("--json", lattice_analyze_args.json, "emit JSON");

  LatticeLawsArgs lattice_laws_args;
  auto* lattice_laws_cmd = app.add_subcommand(
      "lattice-laws", "check predicate implications over all lattices up to a size");
  lattice_laws_cmd->add_option("--max-size", lattice_laws_args.max_size,
                               "largest lattice size to enumerate (default 6, max 7)");
  lattice_laws_cmd->add_flag("--json", lattice_laws_args.json, "emit JSON");

  SuiteArgs suite_args;
  auto* suite_cmd = app.add_subcommand("suite", "run a named scenario suite");
  suite_cmd->add_option("which", suite_args.which, "suite name (paper)")->required();
  suite_cmd->add_flag("--json", suite_args.json, "emit JSON");
  suite_cmd->add_flag("--lattice-size-7", suite_args.lattice7,
                      "extend the lattice-law sweep to size 7");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*decide_cmd) {
      decide_args.has_steps = d_steps->count() > 0;
      decide_args.has_len = d_len->count() > 0;
      return cmd_decide(decide_args);
    }
    if (*deduce_cmd) {
      deduce_args.has_steps = x_steps->count() > 0;
      deduce_args.has_len = x_len->count() > 0;
      return cmd_deduce(deduce_args);
    }
    if (*successors_cmd) return cmd_successors(successors_args);
    if (*isoterm_cmd) return cmd_isoterm(isoterm_args);
    if (*monoid_check_cmd) return cmd_monoid_check(monoid_check_args);
    if (*monoid_find_cmd) return cmd_monoid_find(monoid_find_args);
    if (*lattice_analyze_cmd) return cmd_lattice_analyze(lattice_analyze_args);
    if (*lattice_laws_cmd) return cmd_lattice_laws(lattice_laws_args);
    if (*suite_cmd) return cmd_suite(suite_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
