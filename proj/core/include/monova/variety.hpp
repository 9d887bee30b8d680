#ifndef MONOVA_VARIETY_HPP
#define MONOVA_VARIETY_HPP

#include <memory>
#include <optional>

#include "monova/deduction.hpp"
#include "monova/identity.hpp"
#include "monova/monoid.hpp"

namespace monova {

enum class VerdictKind { holds, fails, unknown };

// Decision result with re-checkable evidence.  A Fails verdict always
// carries a witness: a separating monoid with a violating assignment, an
// isoterm certificate, or a structural reason from an exact decider.  An
// Unknown verdict records the search bounds that were exhausted.
struct Verdict {
  VerdictKind kind = VerdictKind::unknown;
  std::string reason;

  std::optional<Deduction> deduction;               // Holds via search
  std::optional<FiniteMonoid> countermodel;         // Fails via model
  std::optional<std::map<Letter, int>> assignment;  // violating assignment
  std::optional<Word> isoterm;                      // Fails via isoterm
  std::optional<SearchBounds> bounds;               // Unknown

  static Verdict holds(std::string reason);
  static Verdict fails(std::string reason);
  static Verdict unknown(std::string reason, SearchBounds bounds);
};

// A variety expression: one of the standard varieties with an exact word-
// problem decider, a finitely based variety given by axioms, or a join.
//
//   T    trivial variety            SL   semilattice monoids
//   MON  all monoids                COM  commutative monoids
//   A(n) abelian groups of exponent dividing n (A(1) is T)
//   C(n) commutative monoids with x^n = x^(n+1), n >= 2
//   D    the variety with normal-form decider below
//
// Concrete syntax for parse(): atoms as above, "@NAME" for a builtin basis,
// "basis:PATH" via the loader callback, and "v" for binary join, left
// associative: "A(2) v C(3)".
class VarietyExpr {
 public:
  enum class Kind { trivial, semilattice, all_monoids, commutative, abelian, capped, normal_form, basis, join };

  static VarietyExpr T();
  static VarietyExpr SL();
  static VarietyExpr MON();
  static VarietyExpr COM();
  static VarietyExpr A(int n);
  static VarietyExpr C(int n);
  static VarietyExpr D();
  static VarietyExpr from_basis(Basis basis);
  static VarietyExpr join(VarietyExpr left, VarietyExpr right);

  using BasisLoader = std::function<Basis(const std::string& path)>;
  static VarietyExpr parse(std::string_view text, const BasisLoader& loader = nullptr);

  Kind kind() const { return kind_; }
  int parameter() const { return parameter_; }
  const Basis& basis() const { return *basis_; }
  const VarietyExpr& left() const { return *left_; }
  const VarietyExpr& right() const { return *right_; }

  std::string str() const;

 private:
  VarietyExpr() = default;

  Kind kind_ = Kind::trivial;
  int parameter_ = 0;
  std::shared_ptr<const Basis> basis_;
  std::shared_ptr<const VarietyExpr> left_, right_;
};

// Decides whether the identity holds in the variety.  Exact deciders answer
// Holds or Fails; basis varieties may answer Unknown when bounded search is
// exhausted.  Join answers Holds iff both sides hold, Fails if either side
// fails (the identities of a join are the intersection of the identities).
Verdict decide(const VarietyExpr& variety, const Identity& id, SearchBounds bounds);
Verdict decide(const VarietyExpr& variety, const Identity& id);

// The image of a basis under the endomorphism sending every letter a to
// a^(n+1): each identity u = v becomes image(u) = image(v).  Images of
// nonempty words have no simple letters, which is what makes the result
// decidable by exponent-capped counting.
Basis star_basis(const Basis& basis, int n);

// True iff some identity of the basis has content(lhs) != content(rhs).
// Rewriting preserves content under content-balanced identities, so a
// basis without such an identity admits the two-element semilattice; one
// with it forces every letter to be cancellable.
bool is_group_basis(const Basis& basis);

// True iff decide(variety, x = x^(k+1)) holds for some k in 1..max_k.
bool is_completely_regular(const VarietyExpr& variety, int max_k);

}  // namespace monova

#endif
