#ifndef MONOVA_MONOID_HPP
#define MONOVA_MONOID_HPP

#include <functional>
#include <optional>
#include <string>

#include "monova/identity.hpp"
#include "monova/word.hpp"

namespace monova {

// A finite monoid as a Cayley table over elements 0..n-1 with the unit
// fixed at index 0.  Construction validates the unit laws and full
// associativity and throws InvalidStructure naming the first failure.
class FiniteMonoid {
 public:
  // `table` is row-major: table[a*n + b] = a*b.
  FiniteMonoid(int order, std::vector<int> table, std::string name = "");

  int order() const { return order_; }
  int product(int a, int b) const { return table_[a * order_ + b]; }
  int power(int a, int k) const;
  const std::vector<int>& table() const { return table_; }
  const std::string& name() const { return name_; }

  // True iff ab = ba for all elements.
  bool commutative() const;

  // Ordering by (order, table); name is ignored.
  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }
  friend std::strong_ordering operator<=>(const FiniteMonoid& a, const FiniteMonoid& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.table_ <=> b.table_;
  }

  // File format: first line the order, then one row of the table per line.
  static FiniteMonoid parse(std::string_view text);
  std::string str() const;

 private:
  int order_;
  std::vector<int> table_;
  std::string name_;
};

// Value of w under an assignment of letters to elements; every letter of w
// must be assigned.  The empty word evaluates to the unit.
int evaluate(const FiniteMonoid& m, const Word& w, const std::map<Letter, int>& assignment);

// True iff the identity holds under every assignment of its letters.
bool satisfies(const FiniteMonoid& m, const Identity& id);

// First violating assignment in lexicographic order, or nullopt.
std::optional<std::map<Letter, int>> violating_assignment(const FiniteMonoid& m,
                                                          const Identity& id);

bool satisfies_all(const FiniteMonoid& m, const Basis& basis);

// The table with elements renamed by a permutation fixing 0 so that the
// table vector is lexicographically least; equal canonical forms mean
// isomorphic monoids.
FiniteMonoid canonical_form(const FiniteMonoid& m);

bool is_isomorphic(const FiniteMonoid& a, const FiniteMonoid& b);

// Named constructions used as test models and countermodel seeds.
namespace monoids {

// {1, g, ..., g^(n-1)} under multiplication mod n exponents.
FiniteMonoid cyclic_group(int n);

// {1, a, a^2, ..., a^n} with a^n = a^(n+1): the smallest model of
// capped-exponent counting.  cyclic_aperiodic(1) is the two-element
// semilattice.
FiniteMonoid cyclic_aperiodic(int n);

// {1, a} with aa = a.
FiniteMonoid semilattice_2();

// {1, a, b} with xy = x for x, y in {a, b}.
FiniteMonoid left_zero_adjoined();

// {1, a, b} with xy = y for x, y in {a, b}.
FiniteMonoid right_zero_adjoined();

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);

// Resolves "cyclic_group(3)", "semilattice_2", "direct_product(...)" etc.;
// throws ParseError on unknown names.
FiniteMonoid builtin(std::string_view spec);
std::vector<std::string> builtin_names();

}  // namespace monoids

struct EnumerationOptions {
  bool up_to_isomorphism = false;
};

// Enumerates all monoid tables of the given order with unit 0, in
// lexicographic table order, by backtracking over cells with incremental
// associativity pruning.  The callback returns false to stop early.  With
// up_to_isomorphism set, only tables equal to their canonical form are
// reported.
void enumerate_monoids(int order, const std::function<bool(const FiniteMonoid&)>& visit,
                       EnumerationOptions options = {});

long count_monoids(int order, EnumerationOptions options = {});

// Smallest-order, lexicographically-first monoid satisfying every identity
// of `basis` but violating `id`; orders 1..max_order are tried in turn.
std::optional<FiniteMonoid> find_countermodel(const Basis& basis, const Identity& id,
                                              int max_order);

}  // namespace monova

#endif
