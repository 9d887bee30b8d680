#ifndef MONOVA_SUBSTITUTION_HPP
#define MONOVA_SUBSTITUTION_HPP

#include <map>
#include <vector>

#include "monova/word.hpp"

namespace monova {

// An endomorphism of the free monoid, given by images for finitely many
// letters; letters outside the assignment map to themselves.  Images may be
// empty (a letter may be erased).
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<Letter, Word> assignment)
      : assignment_(std::move(assignment)) {}

  // Image of a single letter.
  Word image(Letter l) const;

  // Image of a word: letterwise image, concatenated.
  Word apply(const Word& w) const;

  // Composition (*this after inner): compose(inner).apply(w) equals
  // apply(inner.apply(w)).  The result's assignment covers both domains.
  Substitution compose(const Substitution& inner) const;

  const std::map<Letter, Word>& assignment() const { return assignment_; }

  friend bool operator==(const Substitution&, const Substitution&) = default;
  friend std::strong_ordering operator<=>(const Substitution& a, const Substitution& b);

  std::string str() const;

 private:
  std::map<Letter, Word> assignment_;
};

// One way a pattern occurs inside a target word: target = prefix *
// sub.apply(pattern) * suffix.  The assignment of `sub` covers exactly
// content(pattern).
struct Matching {
  Word prefix;
  Substitution sub;
  Word suffix;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend std::strong_ordering operator<=>(const Matching& a, const Matching& b);
};

// Every matching of `pattern` inside `target`, sorted and duplicate-free.
// Completeness over all factorizations and all letter images is the load-
// bearing property; the recursion assigns images left to right and
// backtracks, so cost grows with |target| and |content(pattern)|.
std::vector<Matching> match_instances(const Word& pattern, const Word& target);

}  // namespace monova

#endif
