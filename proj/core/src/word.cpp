#include "monova/word.hpp"

#include <algorithm>
#include <sstream>

namespace monova {

Letter Letter::from_char(char c) {
  if (c < 'a' || c > 'z') throw ParseError(std::string("not a letter: '") + c + "'");
  return Letter(c - 'a');
}

std::string Letter::str() const {
  if (index_ < 26) return std::string(1, static_cast<char>('a' + index_));
  return "x" + std::to_string(index_ + 1);
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_space();
    if (i != text.size()) throw ParseError("'1' must stand alone: \"" + std::string(text) + "\"");
    return Word{};
  }
  bool any_factor = false;
  while (i < text.size()) {
    skip_space();
    if (i == text.size()) break;
    char c = text[i];
    if (c < 'a' || c > 'z')
      throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                       std::to_string(i) + " in \"" + std::string(text) + "\"");
    Letter l = Letter::from_char(c);
    ++i;
    int power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("'^' must be followed by digits in \"" + std::string(text) + "\"");
      power = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        power = power * 10 + (text[i] - '0');
        if (power > 1000000) throw ParseError("power too large in \"" + std::string(text) + "\"");
        ++i;
      }
    }
    for (int p = 0; p < power; ++p) letters.push_back(l);
    any_factor = true;
  }
  if (!any_factor) throw ParseError("empty word text (write \"1\" for the empty word)");
  return Word(std::move(letters));
}

Word operator*(const Word& u, const Word& v) {
  std::vector<Letter> letters = u.letters_;
  letters.insert(letters.end(), v.letters_.begin(), v.letters_.end());
  return Word(std::move(letters));
}

Word& Word::operator*=(const Word& v) {
  letters_.insert(letters_.end(), v.letters_.begin(), v.letters_.end());
  return *this;
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos + len > letters_.size()) throw std::out_of_range("Word::factor");
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  if (auto c = u.letters_.size() <=> v.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(u.letters_.begin(), u.letters_.end(),
                                                v.letters_.begin(), v.letters_.end());
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t run = i + 1;
    while (run < letters_.size() && letters_[run] == letters_[i]) ++run;
    out << letters_[i].str();
    if (run - i > 1) out << '^' << (run - i);
    i = run;
  }
  return out.str();
}

Word pow(const Word& w, int k) {
  Word result;
  for (int i = 0; i < k; ++i) result *= w;
  return result;
}

Word to_word(Letter l) { return Word({l}); }

std::set<Letter> content(const Word& w) {
  return std::set<Letter>(w.begin(), w.end());
}

std::map<Letter, int> occurrence_vector(const Word& w) {
  std::map<Letter, int> occ;
  for (Letter l : w) ++occ[l];
  return occ;
}

std::set<Letter> simple_letters(const Word& w) {
  std::set<Letter> result;
  for (auto& [l, n] : occurrence_vector(w))
    if (n == 1) result.insert(l);
  return result;
}

int occurrences(const Word& w, Letter l) {
  return static_cast<int>(std::count(w.begin(), w.end(), l));
}

bool is_square_free(const Word& w) {
  // A square uu of total length 2k exists iff some position admits two
  // consecutive equal factors of length k; word sizes here are tiny.
  for (std::size_t k = 1; 2 * k <= w.size(); ++k)
    for (std::size_t i = 0; i + 2 * k <= w.size(); ++i)
      if (std::equal(w.begin() + i, w.begin() + i + k, w.begin() + i + k)) return false;
  return true;
}

Word erase_letters(const Word& w, const std::set<Letter>& kill) {
  std::vector<Letter> kept;
  for (Letter l : w)
    if (!kill.count(l)) kept.push_back(l);
  return Word(std::move(kept));
}

Word simple_subsequence(const Word& w) {
  std::set<Letter> simple = simple_letters(w);
  std::vector<Letter> kept;
  for (Letter l : w)
    if (simple.count(l)) kept.push_back(l);
  return Word(std::move(kept));
}

std::vector<Word> words_of_length(int len, int k) {
  std::vector<Word> result;
  std::vector<Letter> current;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      result.emplace_back(current);
      return;
    }
    for (int i = 0; i < k; ++i) {
      current.push_back(Letter(i));
      self(self, remaining - 1);
      current.pop_back();
    }
  };
  rec(rec, len);
  return result;
}

std::vector<Word> words_up_to_length(int max_len, int k) {
  std::vector<Word> result;
  for (int len = 0; len <= max_len; ++len) {
    auto layer = words_of_length(len, k);
    result.insert(result.end(), layer.begin(), layer.end());
  }
  return result;
}

}  // namespace monova
