#ifndef MONOVA_DEDUCTION_HPP
#define MONOVA_DEDUCTION_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "monova/identity.hpp"
#include "monova/substitution.hpp"
#include "monova/word.hpp"

namespace monova {

// Bounds for bounded-depth equational search.  A search that exhausts its
// bounds reports that outcome explicitly; it never claims underivability.
struct SearchBounds {
  int max_steps = 8;
  int max_len = 0;

  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

// Default bounds for a search between two given words: 8 steps, and no
// intermediate word longer than |from| + |to| + 4 letters.
SearchBounds default_bounds(const Word& from, const Word& to);

enum class StepDirection { forward, backward };

// One elementary rewrite: `from` = prefix * sub(u) * suffix and `to` =
// prefix * sub(v) * suffix, where (u, v) is `used` read in `direction`.
struct DeductionStep {
  Identity used;
  StepDirection direction;
  Matching matching;
  Word from;
  Word to;
};

// A deduction sequence w0, w1, ..., wm with one elementary step between
// consecutive words.  Words are pairwise distinct (revisits are pruned).
// length() is m; a single word with no steps is a valid deduction.
struct Deduction {
  std::vector<Word> words;
  std::vector<DeductionStep> steps;

  int length() const { return static_cast<int>(steps.size()); }
};

// All words obtainable from w by one elementary step, in either direction
// of any basis identity.  Contains w itself whenever some identity matches
// trivially (e.g. with all images empty).
std::set<Word> step_successors(const Word& w, const Basis& basis);

// Enumerates elementary steps from w in canonical order: basis index, then
// forward before backward, then matching order.  Stops early if the callback
// returns false.
void for_each_step(const Word& w, const Basis& basis,
                   const std::function<bool(const DeductionStep&)>& visit);

// Breadth-first ball around `from`: every word reachable within the bounds,
// with its BFS depth and the first step that produced it (absent for the
// root).  First-found parents follow the canonical step order, so shortest
// deductions and their tie-breaks are deterministic.
class ReachableBall {
 public:
  struct Entry {
    int depth = 0;
    std::optional<DeductionStep> via;
  };

  ReachableBall(Word from, const Basis& basis, SearchBounds bounds);

  bool contains(const Word& w) const { return entries_.count(w) != 0; }
  const std::map<Word, Entry>& entries() const { return entries_; }
  const SearchBounds& bounds() const { return bounds_; }

  // Reconstructs the BFS deduction from the root to w; w must be contained.
  Deduction path_to(const Word& w) const;

 private:
  Word from_;
  SearchBounds bounds_;
  std::map<Word, Entry> entries_;
};

// Shortest deduction from `from` to `to`, or nullopt if none exists within
// the bounds.  Among shortest deductions the canonical step order decides.
std::optional<Deduction> deduction_search(const Word& from, const Word& to, const Basis& basis,
                                          SearchBounds bounds);
std::optional<Deduction> deduction_search(const Word& from, const Word& to, const Basis& basis);

// Re-checks every step of a claimed deduction against the basis: matching
// equations, endpoint chaining, membership of the used identities, pairwise
// distinct words.  Independent of the search that produced it.
bool verify_deduction(const Deduction& d, const Basis& basis);

// True iff the only step successor of w (if any) is w itself: no basis
// identity can rewrite w into a different word.
bool is_isoterm(const Word& w, const Basis& basis);

enum class DerivationStatus { proved, not_within_bounds };

struct DerivationReport {
  Identity target;
  DerivationStatus status = DerivationStatus::not_within_bounds;
  std::optional<Deduction> deduction;
  SearchBounds bounds;
};

// Tries to derive each identity of `target` from `source`, with the given
// bounds or per-identity defaults when `bounds.max_len` is 0.
std::vector<DerivationReport> derives_basis(const Basis& source, const Basis& target,
                                            SearchBounds bounds = SearchBounds{8, 0});

}  // namespace monova

#endif
