#ifndef MONOVA_WORD_HPP
#define MONOVA_WORD_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monova {

// Raised when textual input cannot be parsed.  CLI maps this to exit code 64.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a structure violates its defining laws (associativity, lattice
// axioms, a certificate that fails re-verification).  CLI maps this to 70.
struct InvalidStructure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A letter of the countable alphabet x1 < x2 < ...  The first 26 letters
// render as 'a'..'z'; higher indices render as x27, x28, ...  Values are
// ordered by index, which is the only order used anywhere.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr explicit Letter(int index) : index_(index) {
    if (index < 0) throw std::invalid_argument("Letter: negative index");
  }
  static Letter from_char(char c);

  constexpr int index() const { return index_; }
  std::string str() const;

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  int index_ = 0;
};

// An element of the free monoid over Letter: a finite, possibly empty,
// sequence of letters.  The empty word is the identity element and prints
// as "1".  Comparison is shortlex (length first, then position-wise), so
// any sorted container of words lists shorter words first.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Accepts juxtaposed letters with optional caret powers: "xyx", "x^2y",
  // "x^0" (the empty word), and "1" alone for the empty word.  Whitespace
  // between factors is ignored.  Throws ParseError on anything else.
  static Word parse(std::string_view text);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  std::vector<Letter>::const_iterator begin() const { return letters_.begin(); }
  std::vector<Letter>::const_iterator end() const { return letters_.end(); }

  // Monoid product: concatenation.
  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v);

  // Factor of length `len` starting at `pos`; pos+len must be in range.
  Word factor(std::size_t pos, std::size_t len) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);

  // Renders powers: xxyyy prints as "x^2y^3"; the empty word prints as "1".
  std::string str() const;

 private:
  std::vector<Letter> letters_;
};

// w raised to the k-th power; pow(w, 0) is the empty word.
Word pow(const Word& w, int k);

// Single-letter word.
Word to_word(Letter l);

// The set of letters occurring in w.
std::set<Letter> content(const Word& w);

// Letters occurring exactly once in w.
std::set<Letter> simple_letters(const Word& w);

// Occurrence counts, one entry per letter of content(w).
std::map<Letter, int> occurrence_vector(const Word& w);

// Number of times l occurs in w.
int occurrences(const Word& w, Letter l);

// True iff w contains no factor of the form uu with u nonempty.
bool is_square_free(const Word& w);

// Erases every occurrence of the given letters.
Word erase_letters(const Word& w, const std::set<Letter>& kill);

// The subsequence of letters occurring exactly once, in order.
Word simple_subsequence(const Word& w);

// All words of length exactly `len` over the first `k` letters, in
// lexicographic order.
std::vector<Word> words_of_length(int len, int k);

// All words of length <= max_len over the first `k` letters, in shortlex
// order (so the empty word is first).
std::vector<Word> words_up_to_length(int max_len, int k);

}  // namespace monova

#endif
