#include "monova/variety.hpp"

#include <sstream>

namespace monova {

Verdict Verdict::holds(std::string reason) {
  Verdict v;
  v.kind = VerdictKind::holds;
  v.reason = std::move(reason);
  return v;
}

Verdict Verdict::fails(std::string reason) {
  Verdict v;
  v.kind = VerdictKind::fails;
  v.reason = std::move(reason);
  return v;
}

Verdict Verdict::unknown(std::string reason, SearchBounds bounds) {
  Verdict v;
  v.kind = VerdictKind::unknown;
  v.reason = std::move(reason);
  v.bounds = bounds;
  return v;
}

VarietyExpr VarietyExpr::T() {
  VarietyExpr v;
  v.kind_ = Kind::trivial;
  return v;
}

VarietyExpr VarietyExpr::SL() {
  VarietyExpr v;
  v.kind_ = Kind::semilattice;
  return v;
}

VarietyExpr VarietyExpr::MON() {
  VarietyExpr v;
  v.kind_ = Kind::all_monoids;
  return v;
}

VarietyExpr VarietyExpr::COM() {
  VarietyExpr v;
  v.kind_ = Kind::commutative;
  return v;
}

VarietyExpr VarietyExpr::A(int n) {
  if (n < 1) throw std::invalid_argument("A(n): n must be >= 1");
  VarietyExpr v;
  v.kind_ = Kind::abelian;
  v.parameter_ = n;
  return v;
}

VarietyExpr VarietyExpr::C(int n) {
  if (n < 2) throw std::invalid_argument("C(n): n must be >= 2");
  VarietyExpr v;
  v.kind_ = Kind::capped;
  v.parameter_ = n;
  return v;
}

VarietyExpr VarietyExpr::D() {
  VarietyExpr v;
  v.kind_ = Kind::normal_form;
  return v;
}

VarietyExpr VarietyExpr::from_basis(Basis basis) {
  VarietyExpr v;
  v.kind_ = Kind::basis;
  v.basis_ = std::make_shared<const Basis>(std::move(basis));
  return v;
}

VarietyExpr VarietyExpr::join(VarietyExpr left, VarietyExpr right) {
  VarietyExpr v;
  v.kind_ = Kind::join;
  v.left_ = std::make_shared<const VarietyExpr>(std::move(left));
  v.right_ = std::make_shared<const VarietyExpr>(std::move(right));
  return v;
}

std::string VarietyExpr::str() const {
  switch (kind_) {
    case Kind::trivial: return "T";
    case Kind::semilattice: return "SL";
    case Kind::all_monoids: return "MON";
    case Kind::commutative: return "COM";
    case Kind::abelian: return "A(" + std::to_string(parameter_) + ")";
    case Kind::capped: return "C(" + std::to_string(parameter_) + ")";
    case Kind::normal_form: return "D";
    case Kind::basis:
      return basis_->name().empty() ? "basis" + basis_->str() : basis_->name();
    case Kind::join: return left_->str() + " v " + right_->str();
  }
  return "?";
}

namespace {

VarietyExpr parse_atom(const std::string& token, const VarietyExpr::BasisLoader& loader) {
  if (token == "T") return VarietyExpr::T();
  if (token == "SL") return VarietyExpr::SL();
  if (token == "MON") return VarietyExpr::MON();
  if (token == "COM") return VarietyExpr::COM();
  if (token == "D") return VarietyExpr::D();
  if (token.size() > 1 && token[0] == '@') return VarietyExpr::from_basis(builtin_basis(token.substr(1)));
  if (token.rfind("basis:", 0) == 0) {
    if (!loader) throw ParseError("basis:<path> is not available here");
    return VarietyExpr::from_basis(loader(token.substr(6)));
  }
  if ((token[0] == 'A' || token[0] == 'C') && token.size() > 3 && token[1] == '(' &&
      token.back() == ')') {
    std::string inner = token.substr(2, token.size() - 3);
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(inner, &used);
      if (used != inner.size()) throw std::invalid_argument(inner);
    } catch (const std::exception&) {
      throw ParseError("expected an integer parameter in \"" + token + "\"");
    }
    if (token[0] == 'A') {
      if (n < 1) throw ParseError("A(n) needs n >= 1");
      return VarietyExpr::A(n);
    }
    if (n < 2) throw ParseError("C(n) needs n >= 2");
    return VarietyExpr::C(n);
  }
  throw ParseError("unknown variety \"" + token +
                   "\" (expected T, SL, MON, COM, A(n), C(n), D, @NAME, or basis:<path>)");
}

}  // namespace

VarietyExpr VarietyExpr::parse(std::string_view text, const BasisLoader& loader) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  if (tokens.empty()) throw ParseError("empty variety expression");
  std::optional<VarietyExpr> result;
  bool expect_atom = true;
  for (const std::string& t : tokens) {
    if (expect_atom) {
      VarietyExpr atom = parse_atom(t, loader);
      result = result ? join(std::move(*result), std::move(atom)) : std::move(atom);
      expect_atom = false;
    } else {
      if (t != "v")
        throw ParseError("expected 'v' between variety atoms, got \"" + t + "\"");
      expect_atom = true;
    }
  }
  if (expect_atom) throw ParseError("variety expression ends with 'v'");
  return *result;
}

namespace {

std::string letter_list(const std::set<Letter>& letters) {
  std::string out;
  for (Letter l : letters) {
    if (!out.empty()) out += ",";
    out += l.str();
  }
  return out.empty() ? "(none)" : out;
}

Verdict decide_content(const Identity& id) {
  auto cu = content(id.lhs), cv = content(id.rhs);
  if (cu == cv) return Verdict::holds("both sides have content {" + letter_list(cu) + "}");
  Verdict v = Verdict::fails("content differs: {" + letter_list(cu) + "} vs {" + letter_list(cv) + "}");
  FiniteMonoid m = monoids::semilattice_2();
  v.assignment = violating_assignment(m, id);
  v.countermodel = std::move(m);
  return v;
}

Verdict decide_counts(const Identity& id, int modulus, int cap) {
  // modulus > 0 compares counts mod modulus; cap > 0 compares min(count, cap);
  // both zero compares exact counts.
  auto occ_u = occurrence_vector(id.lhs), occ_v = occurrence_vector(id.rhs);
  std::set<Letter> letters;
  for (auto& [l, n] : occ_u) letters.insert(l);
  for (auto& [l, n] : occ_v) letters.insert(l);
  auto reduce = [&](int count) {
    if (modulus > 0) return count % modulus;
    if (cap > 0) return std::min(count, cap);
    return count;
  };
  for (Letter l : letters) {
    int a = occ_u.count(l) ? occ_u.at(l) : 0;
    int b = occ_v.count(l) ? occ_v.at(l) : 0;
    if (reduce(a) != reduce(b)) {
      std::string what = modulus > 0 ? "occurrence counts mod " + std::to_string(modulus)
                         : cap > 0   ? "occurrence counts capped at " + std::to_string(cap)
                                     : "occurrence counts";
      return Verdict::fails(what + " differ at letter " + l.str() + ": " + std::to_string(a) +
                            " vs " + std::to_string(b));
    }
  }
  std::string what = modulus > 0 ? "occurrence counts agree mod " + std::to_string(modulus)
                     : cap > 0   ? "occurrence counts agree capped at " + std::to_string(cap)
                                 : "occurrence counts agree";
  return Verdict::holds(what + " for every letter");
}

Verdict decide_normal_form(const Identity& id) {
  Word su = simple_subsequence(id.lhs), sv = simple_subsequence(id.rhs);
  if (su != sv)
    return Verdict::fails("simple-letter subsequences differ: " + su.str() + " vs " + sv.str());
  std::set<Letter> nu, nv;
  for (auto& [l, n] : occurrence_vector(id.lhs))
    if (n > 1) nu.insert(l);
  for (auto& [l, n] : occurrence_vector(id.rhs))
    if (n > 1) nv.insert(l);
  if (nu != nv)
    return Verdict::fails("non-simple letter sets differ: {" + letter_list(nu) + "} vs {" +
                          letter_list(nv) + "}");
  return Verdict::holds("equal simple-letter subsequence (" + su.str() +
                        ") and non-simple letter set {" + letter_list(nu) + "}");
}

const std::vector<FiniteMonoid>& countermodel_roster() {
  static const std::vector<FiniteMonoid> roster = [] {
    std::vector<FiniteMonoid> r;
    r.push_back(monoids::semilattice_2());
    r.push_back(monoids::cyclic_group(2));
    r.push_back(monoids::cyclic_group(3));
    r.push_back(monoids::cyclic_group(4));
    r.push_back(monoids::cyclic_aperiodic(2));
    r.push_back(monoids::cyclic_aperiodic(3));
    r.push_back(monoids::left_zero_adjoined());
    r.push_back(monoids::right_zero_adjoined());
    r.push_back(monoids::direct_product(monoids::semilattice_2(), monoids::cyclic_group(2)));
    return r;
  }();
  return roster;
}

Verdict decide_basis_variety(const Basis& basis, const Identity& id, SearchBounds bounds) {
  if (id.trivial()) return Verdict::holds("the sides are equal");
  for (const Word& side : {id.lhs, id.rhs}) {
    if (is_isoterm(side, basis)) {
      Verdict v = Verdict::fails("the word " + side.str() +
                                 " is an isoterm for the basis, so no non-trivial identity "
                                 "involving it is derivable");
      v.isoterm = side;
      return v;
    }
  }
  if (auto d = deduction_search(id.lhs, id.rhs, basis, bounds)) {
    Verdict v = Verdict::holds("derived in " + std::to_string(d->length()) + " step(s)");
    v.deduction = std::move(d);
    return v;
  }
  auto separating = [&](const FiniteMonoid& m) {
    return satisfies_all(m, basis) && !satisfies(m, id);
  };
  for (const FiniteMonoid& m : countermodel_roster()) {
    if (separating(m)) {
      Verdict v = Verdict::fails("the monoid " + m.name() + " satisfies the basis but violates "
                                 "the identity");
      v.assignment = violating_assignment(m, id);
      v.countermodel = m;
      return v;
    }
  }
  if (auto m = find_countermodel(basis, id, 5)) {
    Verdict v = Verdict::fails("a monoid of order " + std::to_string(m->order()) +
                               " satisfies the basis but violates the identity");
    v.assignment = violating_assignment(*m, id);
    v.countermodel = std::move(m);
    return v;
  }
  return Verdict::unknown("no derivation within bounds, no isoterm certificate, and no "
                          "countermodel of order <= 5",
                          bounds);
}

}  // namespace

Verdict decide(const VarietyExpr& variety, const Identity& id, SearchBounds bounds) {
  switch (variety.kind()) {
    case VarietyExpr::Kind::trivial:
      return Verdict::holds("every identity holds in the trivial variety");
    case VarietyExpr::Kind::semilattice:
      return decide_content(id);
    case VarietyExpr::Kind::all_monoids:
      if (id.trivial()) return Verdict::holds("the sides are equal");
      return Verdict::fails("the sides differ as words, so the free monoid separates them");
    case VarietyExpr::Kind::commutative:
      return decide_counts(id, 0, 0);
    case VarietyExpr::Kind::abelian:
      return decide_counts(id, variety.parameter(), 0);
    case VarietyExpr::Kind::capped:
      return decide_counts(id, 0, variety.parameter());
    case VarietyExpr::Kind::normal_form:
      return decide_normal_form(id);
    case VarietyExpr::Kind::basis:
      return decide_basis_variety(variety.basis(), id, bounds);
    case VarietyExpr::Kind::join: {
      Verdict left = decide(variety.left(), id, bounds);
      if (left.kind == VerdictKind::fails) {
        left.reason = "fails in " + variety.left().str() + ": " + left.reason;
        return left;
      }
      Verdict right = decide(variety.right(), id, bounds);
      if (right.kind == VerdictKind::fails) {
        right.reason = "fails in " + variety.right().str() + ": " + right.reason;
        return right;
      }
      if (left.kind == VerdictKind::holds && right.kind == VerdictKind::holds)
        return Verdict::holds("holds in both " + variety.left().str() + " and " +
                              variety.right().str());
      const Verdict& u = left.kind == VerdictKind::unknown ? left : right;
      return Verdict::unknown("undecided in " +
                                  (left.kind == VerdictKind::unknown ? variety.left().str()
                                                                     : variety.right().str()) +
                                  ": " + u.reason,
                              u.bounds ? *u.bounds : bounds);
    }
  }
  throw std::logic_error("decide: unhandled variety kind");
}

Verdict decide(const VarietyExpr& variety, const Identity& id) {
  return decide(variety, id, default_bounds(id.lhs, id.rhs));
}

Basis star_basis(const Basis& basis, int n) {
  if (n < 1) throw std::invalid_argument("star_basis: n must be >= 1");
  auto image = [&](const Word& w) {
    Word result;
    for (Letter l : w) result *= pow(to_word(l), n + 1);
    return result;
  };
  Basis result(basis.name().empty() ? std::string() : basis.name() + "*");
  for (const Identity& id : basis.identities()) result.add(Identity{image(id.lhs), image(id.rhs)});
  return result;
}

bool is_group_basis(const Basis& basis) {
  for (const Identity& id : basis.identities())
    if (content(id.lhs) != content(id.rhs)) return true;
  return false;
}

bool is_completely_regular(const VarietyExpr& variety, int max_k) {
  if (max_k < 1) throw std::invalid_argument("is_completely_regular: max_k must be >= 1");
  Word x = Word::parse("x");
  for (int k = 1; k <= max_k; ++k) {
    Identity id{x, pow(x, k + 1)};
    if (decide(variety, id).kind == VerdictKind::holds) return true;
  }
  return false;
}

}  // namespace monova
