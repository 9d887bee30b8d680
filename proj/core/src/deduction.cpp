#include "monova/deduction.hpp"

#include <deque>

namespace monova {

SearchBounds default_bounds(const Word& from, const Word& to) {
  return SearchBounds{8, static_cast<int>(from.size() + to.size()) + 4};
}

void for_each_step(const Word& w, const Basis& basis,
                   const std::function<bool(const DeductionStep&)>& visit) {
  for (const Identity& id : basis.identities()) {
    for (StepDirection dir : {StepDirection::forward, StepDirection::backward}) {
      const Word& pattern = dir == StepDirection::forward ? id.lhs : id.rhs;
      const Word& replacement = dir == StepDirection::forward ? id.rhs : id.lhs;
      for (const Matching& m : match_instances(pattern, w)) {
        Word to = m.prefix * m.sub.apply(replacement) * m.suffix;
        if (!visit(DeductionStep{id, dir, m, w, std::move(to)})) return;
      }
    }
  }
}

std::set<Word> step_successors(const Word& w, const Basis& basis) {
  std::set<Word> result;
  for_each_step(w, basis, [&](const DeductionStep& s) {
    result.insert(s.to);
    return true;
  });
  return result;
}

namespace {

using Entries = std::map<Word, ReachableBall::Entry>;

// Breadth-first expansion; stops early when `stop_at` is reached.  Parents
// are first-found in canonical step order, making tie-breaks deterministic.
Entries bfs(const Word& from, const Basis& basis, SearchBounds bounds, const Word* stop_at) {
  Entries entries;
  entries[from] = ReachableBall::Entry{0, std::nullopt};
  std::deque<Word> queue{from};
  bool done = false;
  while (!queue.empty() && !done) {
    Word w = queue.front();
    queue.pop_front();
    int depth = entries.at(w).depth;
    if (depth >= bounds.max_steps) continue;
    for_each_step(w, basis, [&](const DeductionStep& s) {
      if (static_cast<int>(s.to.size()) <= bounds.max_len && !entries.count(s.to)) {
        entries[s.to] = ReachableBall::Entry{depth + 1, s};
        queue.push_back(s.to);
        if (stop_at && s.to == *stop_at) {
          done = true;
          return false;
        }
      }
      return true;
    });
  }
  return entries;
}

Deduction path_from_entries(const Entries& entries, const Word& target) {
  std::vector<DeductionStep> steps;
  Word w = target;
  for (;;) {
    const auto& entry = entries.at(w);
    if (!entry.via) break;
    steps.push_back(*entry.via);
    w = entry.via->from;
  }
  Deduction d;
  d.words.push_back(w);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    d.steps.push_back(*it);
    d.words.push_back(it->to);
  }
  return d;
}

}  // namespace

ReachableBall::ReachableBall(Word from, const Basis& basis, SearchBounds bounds)
    : from_(std::move(from)), bounds_(bounds) {
  entries_ = bfs(from_, basis, bounds_, nullptr);
}

Deduction ReachableBall::path_to(const Word& w) const {
  if (!entries_.count(w)) throw std::out_of_range("ReachableBall::path_to: word not in ball");
  return path_from_entries(entries_, w);
}

std::optional<Deduction> deduction_search(const Word& from, const Word& to, const Basis& basis,
                                          SearchBounds bounds) {
  if (from == to) return Deduction{{from}, {}};
  Entries entries = bfs(from, basis, bounds, &to);
  if (!entries.count(to)) return std::nullopt;
  return path_from_entries(entries, to);
}

std::optional<Deduction> deduction_search(const Word& from, const Word& to, const Basis& basis) {
  return deduction_search(from, to, basis, default_bounds(from, to));
}

bool verify_deduction(const Deduction& d, const Basis& basis) {
  if (d.words.empty()) return false;
  if (d.words.size() != d.steps.size() + 1) return false;
  std::set<Word> seen(d.words.begin(), d.words.end());
  if (seen.size() != d.words.size()) return false;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const DeductionStep& s = d.steps[i];
    if (!basis.contains(s.used)) return false;
    if (s.from != d.words[i] || s.to != d.words[i + 1]) return false;
    const Word& u = s.direction == StepDirection::forward ? s.used.lhs : s.used.rhs;
    const Word& v = s.direction == StepDirection::forward ? s.used.rhs : s.used.lhs;
    std::set<Letter> domain;
    for (auto& [l, w] : s.matching.sub.assignment()) domain.insert(l);
    if (domain != content(u)) return false;
    if (s.matching.prefix * s.matching.sub.apply(u) * s.matching.suffix != s.from) return false;
    if (s.matching.prefix * s.matching.sub.apply(v) * s.matching.suffix != s.to) return false;
  }
  return true;
}

bool is_isoterm(const Word& w, const Basis& basis) {
  bool iso = true;
  for_each_step(w, basis, [&](const DeductionStep& s) {
    if (s.to != w) {
      iso = false;
      return false;
    }
    return true;
  });
  return iso;
}

std::vector<DerivationReport> derives_basis(const Basis& source, const Basis& target,
                                            SearchBounds bounds) {
  std::vector<DerivationReport> reports;
  for (const Identity& id : target.identities()) {
    SearchBounds b = bounds;
    if (b.max_len == 0) b.max_len = default_bounds(id.lhs, id.rhs).max_len;
    DerivationReport report;
    report.target = id;
    report.bounds = b;
    if (auto d = deduction_search(id.lhs, id.rhs, source, b)) {
      report.status = DerivationStatus::proved;
      report.deduction = std::move(d);
    } else {
      report.status = DerivationStatus::not_within_bounds;
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace monova
