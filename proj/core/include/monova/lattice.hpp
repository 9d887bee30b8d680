#ifndef MONOVA_LATTICE_HPP
#define MONOVA_LATTICE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monova/word.hpp"

namespace monova {

// A finite lattice given by its order relation on elements 0..n-1.
// Construction validates the order axioms and the existence of unique pair
// meets and joins, derives the meet/join tables, checks absorption, and
// locates bottom and top; any failure throws InvalidStructure naming the
// first violating pair or triple.
class FiniteLattice {
 public:
  // `leq` is row-major: leq[a*n + b] iff a <= b.
  static FiniteLattice from_leq(int size, std::vector<char> leq, std::string name = "",
                                std::string note = "");

  int size() const { return size_; }
  bool leq(int a, int b) const { return leq_[a * size_ + b] != 0; }
  int meet(int a, int b) const { return meet_[a * size_ + b]; }
  int join(int a, int b) const { return join_[a * size_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::string& name() const { return name_; }

  // Free-form modeling caveat carried into every report (empty for most
  // lattices; the divisor grid sets it).
  const std::string& note() const { return note_; }

  bool distributive() const;

  // File format: first line the size, then one 0/1 row of leq per line.
  static FiniteLattice parse(std::string_view text);
  std::string str() const;

 private:
  FiniteLattice() = default;

  int size_ = 0;
  std::vector<char> leq_;
  std::vector<int> meet_, join_;
  int bottom_ = 0, top_ = 0;
  std::string name_, note_;
};

// Outcome of one universally quantified element predicate: on failure,
// `witness` is the lexicographically least violating pair (y, z).
struct PredicateResult {
  bool holds = true;
  std::optional<std::pair<int, int>> witness;
};

// The six element predicates.  Each quantifies over all pairs (y, z); the
// conditional ones skip pairs that fail the antecedent.
//   neutral:        (x|y) & (y|z) & (z|x)  ==  (x&y) | (y&z) | (z&x)
//   costandard:     (x&y) | z  ==  (x|z) & (y|z)
//   codistributive: x & (y|z)  ==  (x&y) | (x&z)
//   modular:        y <= z  ->  (x|y) & z  ==  (x&z) | y
//   upper-modular:  y <= x  ->  x & (y|z)  ==  y | (x&z)
//   lower-modular:  x <= y  ->  x | (y&z)  ==  y & (x|z)
PredicateResult is_neutral(const FiniteLattice& l, int x);
PredicateResult is_costandard(const FiniteLattice& l, int x);
PredicateResult is_codistributive(const FiniteLattice& l, int x);
PredicateResult is_modular(const FiniteLattice& l, int x);
PredicateResult is_upper_modular(const FiniteLattice& l, int x);
PredicateResult is_lower_modular(const FiniteLattice& l, int x);

// Cross-checks of independent characterizations.
// x is neutral iff every {x,y,z} generates a distributive sublattice.
bool neutral_via_triples(const FiniteLattice& l, int x);
// x is modular iff no pair u < w has u&x == w&x and u|x == w|x; the first
// such pair in lexicographic (u, w) order is returned when one exists.
std::optional<std::pair<int, int>> jezek_pair(const FiniteLattice& l, int x);
bool modular_via_pairs(const FiniteLattice& l, int x);

struct ElementReport {
  int element = 0;
  PredicateResult neutral, costandard, codistributive, modular, upper_modular, lower_modular;
};

ElementReport analyze_element(const FiniteLattice& l, int x);
std::vector<ElementReport> analyze(const FiniteLattice& l);

// One broken law found by the consistency battery, with enough data to
// reproduce: the lattice, the element, and the law's short name.
struct LawViolation {
  FiniteLattice lattice;
  int element = 0;
  std::string law;
};

// Checks, for every element: the five implications between the predicates,
// modular & codistributive -> costandard, the two characterization
// equivalences, and validity of the constructed pair behind every
// modularity failure.  Returns the first violation, if any.
std::optional<LawViolation> check_element_laws(const FiniteLattice& l);

// All lattices on `size` labeled elements with bottom 0 and top size-1,
// generated by orienting each middle pair three ways and filtering
// transitivity and the lattice property; deterministic order.  The callback
// returns false to stop.  size must be 1..7.
void enumerate_lattices(int size, const std::function<bool(const FiniteLattice&)>& visit);
long count_lattices(int size);

struct LawScanResult {
  long lattices_checked = 0;
  std::optional<LawViolation> violation;
};

// check_element_laws over every lattice of every size 1..max_size.
LawScanResult scan_lattice_laws(int max_size);

// Named constructions.
namespace lattices {

FiniteLattice chain(int n);
FiniteLattice boolean_cube(int k);
FiniteLattice m3();
FiniteLattice n5();

// Divisor-by-chain grid: elements are pairs (d, h) with d | N and
// 0 <= h <= H, ordered componentwise; element index is divisor_rank *
// (H+1) + h with divisors ascending.  Meets and joins are componentwise
// ((gcd, min) and (lcm, max)); the attached note records that this
// componentwise rule is a modeling assumption of the encoding.
FiniteLattice grid(long N, int H);

// Resolves "chain(4)", "boolean(3)", "M3", "N5", "grid(12,4)".
FiniteLattice named(std::string_view spec);
std::vector<std::string> named_names();

}  // namespace lattices

}  // namespace monova

#endif
