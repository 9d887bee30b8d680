#include <doctest.h>

#include "monova/deduction.hpp"
#include "support.hpp"

using namespace monova;

namespace {

const Basis& q_basis() { return builtin_basis("Q"); }
const Basis& b23() { return builtin_basis("B23"); }

}  // namespace

TEST_CASE("one-step successors across the six-letter identity are exact") {
  Word s = Word::parse("yxyzxz"), t = Word::parse("yxzxyxz");
  auto succ_s = step_successors(s, q_basis());
  succ_s.erase(s);
  CHECK(succ_s == std::set<Word>{t});
  auto succ_t = step_successors(t, q_basis());
  succ_t.erase(t);
  CHECK(succ_t == std::set<Word>{s});
}

TEST_CASE("successors of a squared letter under exponent collapse") {
  auto succ = step_successors(Word::parse("x^2"), b23());
  CHECK(succ == std::set<Word>{Word::parse("x^2"), Word::parse("x^3")});
  auto succ3 = step_successors(Word::parse("x^3"), b23());
  CHECK(succ3 == std::set<Word>{Word::parse("x^2"), Word::parse("x^3"), Word::parse("x^4")});
}

TEST_CASE("canonical step order is basis index, direction, then matching order") {
  std::vector<DeductionStep> steps;
  for_each_step(Word::parse("x^2"), b23(), [&](const DeductionStep& s) {
    steps.push_back(s);
    return true;
  });
  REQUIRE(!steps.empty());
  for (std::size_t i = 1; i < steps.size(); ++i) {
    bool fwd_before_back = !(steps[i - 1].direction == StepDirection::backward &&
                             steps[i].direction == StepDirection::forward);
    CHECK(fwd_before_back);
    if (steps[i - 1].direction == steps[i].direction)
      CHECK(steps[i - 1].matching <= steps[i].matching);
  }
}

TEST_CASE("isoterm certificates for square-free words under exponent collapse") {
  CHECK(is_isoterm(Word::parse("yxyzxz"), b23()));
  CHECK(is_isoterm(Word::parse("yxzxyxz"), b23()));
  CHECK(is_isoterm(Word::parse("xyx"), b23()));
  CHECK_FALSE(is_isoterm(Word::parse("x^2"), b23()));
  CHECK_FALSE(is_isoterm(Word::parse("x^2"), q_basis()));
  CHECK(is_isoterm(Word::parse("x"), q_basis()));
}

TEST_CASE("a word is an isoterm exactly when it is square-free, for exponent collapse") {
  for (const Word& w : words_up_to_length(5, 3)) {
    CHECK(is_isoterm(w, b23()) == is_square_free(w));
  }
}

TEST_CASE("shortest deduction across one identity instance") {
  auto d = deduction_search(Word::parse("x^2"), Word::parse("x^3"), q_basis());
  REQUIRE(d.has_value());
  CHECK(d->length() == 1);
  CHECK(d->words.front() == Word::parse("x^2"));
  CHECK(d->words.back() == Word::parse("x^3"));
  CHECK(verify_deduction(*d, q_basis()));
}

TEST_CASE("exponent collapse chains x^5 to x^9") {
  auto d = deduction_search(Word::parse("x^5"), Word::parse("x^9"), b23());
  REQUIRE(d.has_value());
  CHECK(d->length() == 2);
  CHECK(verify_deduction(*d, b23()));
}

TEST_CASE("two shrinking identities combine to a longer power") {
  Basis basis("", {Identity::parse("x = x^3"), Identity::parse("x = x^4")});
  auto d = deduction_search(Word::parse("x"), Word::parse("x^7"), basis,
                            SearchBounds{3, 12});
  REQUIRE(d.has_value());
  CHECK(d->length() <= 3);
  CHECK(d->length() == 2);
  CHECK(verify_deduction(*d, basis));
}

TEST_CASE("derivation needing an inflating detour stays within default bounds") {
  const Basis& e = builtin_basis("E");
  auto d = deduction_search(Word::parse("xyx"), Word::parse("xyx^2"), e);
  REQUIRE(d.has_value());
  CHECK(d->length() == 4);
  CHECK(verify_deduction(*d, e));
}

TEST_CASE("unreachable goal reports not-within-bounds instead of guessing") {
  auto d = deduction_search(Word::parse("xyx"), Word::parse("x^2y"), b23());
  CHECK_FALSE(d.has_value());
  // The failure is definitive here: the start is an isoterm.
  CHECK(is_isoterm(Word::parse("xyx"), b23()));
}

TEST_CASE("deduction search respects explicit step bounds") {
  CHECK_FALSE(deduction_search(Word::parse("x^5"), Word::parse("x^9"), b23(),
                               SearchBounds{1, 14}).has_value());
  CHECK(deduction_search(Word::parse("x^5"), Word::parse("x^9"), b23(),
                         SearchBounds{2, 14}).has_value());
}

TEST_CASE("deduction search respects the length bound") {
  // x^5 to x^9 needs an intermediate of length 7; cap below that.
  CHECK_FALSE(deduction_search(Word::parse("x^5"), Word::parse("x^9"), b23(),
                               SearchBounds{8, 6}).has_value());
}

TEST_CASE("trivial search returns the empty deduction") {
  auto d = deduction_search(Word::parse("xy"), Word::parse("xy"), b23());
  REQUIRE(d.has_value());
  CHECK(d->length() == 0);
  CHECK(d->words.size() == 1);
  CHECK(verify_deduction(*d, b23()));
}

TEST_CASE("verification rejects tampered certificates") {
  auto d = deduction_search(Word::parse("x^5"), Word::parse("x^9"), b23());
  REQUIRE(d.has_value());
  REQUIRE(verify_deduction(*d, b23()));

  Deduction wrong_word = *d;
  wrong_word.words.back() = Word::parse("x^10");
  CHECK_FALSE(verify_deduction(wrong_word, b23()));

  Deduction wrong_identity = *d;
  wrong_identity.steps[0].used = Identity::parse("x^2 = x^4");
  CHECK_FALSE(verify_deduction(wrong_identity, b23()));

  Deduction wrong_matching = *d;
  wrong_matching.steps[0].matching.prefix = Word::parse("y");
  CHECK_FALSE(verify_deduction(wrong_matching, b23()));

  Deduction duplicated = *d;
  duplicated.words.push_back(duplicated.words.front());
  CHECK_FALSE(verify_deduction(duplicated, b23()));

  // Foreign basis: same identity shape, different axioms.
  Basis other("", {Identity::parse("xy = yx")});
  CHECK_FALSE(verify_deduction(*d, other));
}

TEST_CASE("verification demands the matching domain equal the pattern content") {
  auto d = deduction_search(Word::parse("x^2"), Word::parse("x^3"), b23());
  REQUIRE(d.has_value());
  Deduction padded = *d;
  auto assignment = padded.steps[0].matching.sub.assignment();
  assignment[Letter::from_char('q')] = Word::parse("y");
  padded.steps[0].matching.sub = Substitution(assignment);
  CHECK_FALSE(verify_deduction(padded, b23()));
}

TEST_CASE("content is preserved by steps of content-balanced bases") {
  for (const char* name : {"C2", "D", "Q", "E", "F"}) {
    const Basis& basis = builtin_basis(name);
    for (const Word& w : words_up_to_length(4, 3)) {
      for (const Word& v : step_successors(w, basis)) {
        CHECK(content(v) == content(w));
      }
    }
  }
}

TEST_CASE("reachable balls record depths and reconstructible paths") {
  ReachableBall ball(Word::parse("x^2"), b23(), SearchBounds{3, 6});
  CHECK(ball.contains(Word::parse("x^2")));
  CHECK(ball.contains(Word::parse("x^3")));
  CHECK(ball.contains(Word::parse("x^6")));
  CHECK_FALSE(ball.contains(Word::parse("x^7")));  // length bound
  for (auto& [w, entry] : ball.entries()) {
    Deduction path = ball.path_to(w);
    CHECK(path.length() == entry.depth);
    CHECK(path.words.back() == w);
    CHECK(verify_deduction(path, b23()));
  }
  CHECK_THROWS_AS(ball.path_to(Word::parse("zzz")), std::out_of_range);
}

TEST_CASE("ball depths agree with individual shortest searches") {
  ReachableBall ball(Word::parse("x^2"), b23(), SearchBounds{4, 8});
  for (auto& [w, entry] : ball.entries()) {
    auto d = deduction_search(Word::parse("x^2"), w, b23(), SearchBounds{4, 8});
    REQUIRE(d.has_value());
    CHECK(d->length() == entry.depth);
  }
}

TEST_CASE("basis derivation reports cover every target identity") {
  const Basis& e = builtin_basis("E");
  Basis target("", {Identity::parse("xyx = xyx^2")});
  auto reports = derives_basis(e, target);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == DerivationStatus::proved);
  REQUIRE(reports[0].deduction.has_value());
  CHECK(verify_deduction(*reports[0].deduction, e));

  Basis blocked("", {Identity::parse("xyx = x^2y")});
  auto blocked_reports = derives_basis(b23(), blocked);
  REQUIRE(blocked_reports.size() == 1);
  CHECK(blocked_reports[0].status == DerivationStatus::not_within_bounds);
  CHECK_FALSE(blocked_reports[0].deduction.has_value());
}

TEST_CASE("default bounds follow the endpoint lengths") {
  SearchBounds b = default_bounds(Word::parse("x^2"), Word::parse("x^3"));
  CHECK(b.max_steps == 8);
  CHECK(b.max_len == 9);
}
