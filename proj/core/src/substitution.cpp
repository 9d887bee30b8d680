#include "monova/substitution.hpp"

#include <algorithm>
#include <sstream>

namespace monova {

Word Substitution::image(Letter l) const {
  auto it = assignment_.find(l);
  if (it != assignment_.end()) return it->second;
  return to_word(l);
}

Word Substitution::apply(const Word& w) const {
  Word result;
  for (Letter l : w) result *= image(l);
  return result;
}

Substitution Substitution::compose(const Substitution& inner) const {
  std::map<Letter, Word> combined;
  for (auto& [l, w] : inner.assignment_) combined[l] = apply(w);
  for (auto& [l, w] : assignment_)
    if (!combined.count(l) && !inner.assignment_.count(l)) combined[l] = w;
  return Substitution(std::move(combined));
}

std::strong_ordering operator<=>(const Substitution& a, const Substitution& b) {
  return std::lexicographical_compare_three_way(
      a.assignment_.begin(), a.assignment_.end(), b.assignment_.begin(), b.assignment_.end(),
      [](const auto& x, const auto& y) -> std::strong_ordering {
        if (auto c = x.first <=> y.first; c != 0) return c;
        return x.second <=> y.second;
      });
}

std::string Substitution::str() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto& [l, w] : assignment_) {
    if (!first) out << ", ";
    first = false;
    out << l.str() << " -> " << w.str();
  }
  out << '}';
  return out.str();
}

std::strong_ordering operator<=>(const Matching& a, const Matching& b) {
  if (auto c = a.prefix <=> b.prefix; c != 0) return c;
  if (auto c = a.sub <=> b.sub; c != 0) return c;
  return a.suffix <=> b.suffix;
}

namespace {

// Matches pattern[pi..] against target[ti..end), extending `images` for
// letters met for the first time and backtracking afterwards.
void match_rec(const Word& pattern, std::size_t pi, const Word& target, std::size_t ti,
               std::size_t end, std::map<Letter, Word>& images, std::size_t start,
               std::vector<Matching>& out) {
  if (pi == pattern.size()) {
    if (ti == end) {
      out.push_back(Matching{target.factor(0, start), Substitution(images),
                             target.factor(end, target.size() - end)});
    }
    return;
  }
  Letter l = pattern[pi];
  auto it = images.find(l);
  if (it != images.end()) {
    const Word& w = it->second;
    if (ti + w.size() <= end &&
        std::equal(w.begin(), w.end(), target.begin() + ti)) {
      match_rec(pattern, pi + 1, target, ti + w.size(), end, images, start, out);
    }
    return;
  }
  for (std::size_t len = 0; ti + len <= end; ++len) {
    images.emplace(l, target.factor(ti, len));
    match_rec(pattern, pi + 1, target, ti + len, end, images, start, out);
    images.erase(l);
  }
}

}  // namespace

std::vector<Matching> match_instances(const Word& pattern, const Word& target) {
  std::vector<Matching> out;
  std::map<Letter, Word> images;
  for (std::size_t start = 0; start <= target.size(); ++start) {
    for (std::size_t end = start; end <= target.size(); ++end) {
      match_rec(pattern, 0, target, start, end, images, start, out);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace monova
