#ifndef MONOVA_IDENTITY_HPP
#define MONOVA_IDENTITY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "monova/word.hpp"

namespace monova {

// A formal identity u = v between words.  Orientation is kept as written;
// deduction uses both directions.
struct Identity {
  Word lhs;
  Word rhs;

  bool trivial() const { return lhs == rhs; }
  Identity reversed() const { return Identity{rhs, lhs}; }

  // Accepts "u = v" and "u ≈ v" (the UTF-8 almost-equal sign).
  static Identity parse(std::string_view text);

  std::string str() const { return lhs.str() + " = " + rhs.str(); }

  friend bool operator==(const Identity&, const Identity&) = default;
  friend std::strong_ordering operator<=>(const Identity& a, const Identity& b) {
    if (auto c = a.lhs <=> b.lhs; c != 0) return c;
    return a.rhs <=> b.rhs;
  }
};

// An ordered list of non-trivial identities, used as the axioms of an
// equational deduction.  Trivial identities offered to add() are dropped
// and recorded as warnings rather than errors.
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::string name) : name_(std::move(name)) {}
  Basis(std::string name, std::vector<Identity> identities);

  // Returns false (and records a warning) when the identity is trivial.
  bool add(Identity id);

  const std::vector<Identity>& identities() const { return identities_; }
  std::size_t size() const { return identities_.size(); }
  const Identity& operator[](std::size_t i) const { return identities_[i]; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Membership as an ordered pair, exactly as stored.
  bool contains(const Identity& id) const;

  std::string str() const;

 private:
  std::string name_;
  std::vector<Identity> identities_;
  std::vector<std::string> warnings_;
};

// Parses basis file content: one identity per line, blank lines and
// '#'-comments ignored.
Basis parse_basis(std::string_view text, std::string name = "");

// Named bases available as @C2, @D, @B23, @Q, @E, @F.  Unknown names throw
// ParseError listing the valid ones.
const Basis& builtin_basis(std::string_view name);
std::vector<std::string> builtin_basis_names();

}  // namespace monova

#endif
