#ifndef MONOVA_TESTS_SUPPORT_HPP
#define MONOVA_TESTS_SUPPORT_HPP

#include <cstdlib>
#include <random>
#include <string>

#include "monova/word.hpp"

namespace monova::test {

// Seed for randomized property tests: fixed default, overridable through
// MONOVA_TEST_SEED for reproduction of a reported failure.
inline unsigned seed() {
  if (const char* env = std::getenv("MONOVA_TEST_SEED")) {
    return static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  }
  return 0xC0FFEEu;
}

inline Word random_word(std::mt19937& rng, int max_len, int letters) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, letters - 1);
  int len = len_dist(rng);
  std::vector<Letter> ls;
  ls.reserve(len);
  for (int i = 0; i < len; ++i) ls.push_back(Letter(letter_dist(rng)));
  return Word(std::move(ls));
}

}  // namespace monova::test

#endif
