#include <doctest.h>

#include <algorithm>

#include "monova/lattice.hpp"

using namespace monova;

namespace {

// Direct re-evaluation of a reported witness against one element law.
bool modular_at(const FiniteLattice& l, int x, int y, int z) {
  if (!l.leq(y, z)) return true;
  return l.meet(l.join(x, y), z) == l.join(l.meet(x, z), y);
}

bool codistributive_at(const FiniteLattice& l, int x, int y, int z) {
  return l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z));
}

}  // namespace

TEST_CASE("construction rejects non-lattice relations with a named violation") {
  CHECK_NOTHROW(lattices::chain(1));
  try {
    FiniteLattice::from_leq(2, {1, 0, 0, 0});  // irreflexive at 1
    FAIL("expected InvalidStructure");
  } catch (const InvalidStructure& e) {
    CHECK(std::string(e.what()).find("reflexiv") != std::string::npos);
  }
  try {
    FiniteLattice::from_leq(2, {1, 1, 1, 1});  // 0 <= 1 <= 0
    FAIL("expected InvalidStructure");
  } catch (const InvalidStructure& e) {
    CHECK(std::string(e.what()).find("antisymmet") != std::string::npos);
  }
  try {
    // 0 <= 1, 1 <= 2, but not 0 <= 2.
    FiniteLattice::from_leq(3, {1, 1, 0, 0, 1, 1, 0, 0, 1});
    FAIL("expected InvalidStructure");
  } catch (const InvalidStructure& e) {
    CHECK(std::string(e.what()).find("transitiv") != std::string::npos);
  }
  try {
    // Two incomparable elements whose two upper bounds are incomparable
    // have no least upper bound.
    FiniteLattice::from_leq(4, {
        1, 0, 1, 1,
        0, 1, 1, 1,
        0, 0, 1, 0,
        0, 0, 0, 1});
    FAIL("expected InvalidStructure");
  } catch (const InvalidStructure& e) {
    CHECK((std::string(e.what()).find("join") != std::string::npos ||
           std::string(e.what()).find("meet") != std::string::npos));
  }
}

TEST_CASE("meets and joins derived from the order are the actual bounds") {
  FiniteLattice cube = lattices::boolean_cube(3);
  CHECK(cube.size() == 8);
  CHECK(cube.bottom() == 0);
  CHECK(cube.top() == 7);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      CHECK(cube.meet(a, b) == (a & b));
      CHECK(cube.join(a, b) == (a | b));
    }
  }
  CHECK(cube.distributive());
}

TEST_CASE("named lattices have their textbook shapes") {
  FiniteLattice chain = lattices::chain(4);
  CHECK(chain.size() == 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(chain.leq(a, b) == (a <= b));

  FiniteLattice m3 = lattices::m3();
  CHECK(m3.size() == 5);
  CHECK(m3.meet(1, 2) == 0);
  CHECK(m3.join(1, 2) == 4);
  CHECK_FALSE(m3.distributive());

  FiniteLattice n5 = lattices::n5();
  CHECK(n5.size() == 5);
  CHECK(n5.leq(1, 2));
  CHECK_FALSE(n5.leq(1, 3));
  CHECK(n5.join(1, 3) == 4);
  CHECK(n5.meet(2, 3) == 0);
  CHECK_FALSE(n5.distributive());
}

TEST_CASE("the grid order is a distributive lattice with an explicit modeling note") {
  FiniteLattice tiny = lattices::grid(1, 3);
  CHECK(tiny.size() == 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(tiny.leq(a, b) == (lattices::chain(4).leq(a, b)));

  FiniteLattice two = lattices::grid(2, 0);
  CHECK(two.size() == 2);

  FiniteLattice grid = lattices::grid(12, 4);
  CHECK(grid.size() == 30);  // six divisors of 12, five levels
  CHECK(grid.distributive());
  CHECK_FALSE(grid.note().empty());
  for (const ElementReport& row : analyze(grid)) {
    CHECK(row.neutral.holds);
    CHECK(row.modular.holds);
  }
}

TEST_CASE("every element of a chain satisfies all six predicates") {
  FiniteLattice chain = lattices::chain(5);
  for (int x = 0; x < 5; ++x) {
    CHECK(is_neutral(chain, x).holds);
    CHECK(is_costandard(chain, x).holds);
    CHECK(is_codistributive(chain, x).holds);
    CHECK(is_modular(chain, x).holds);
    CHECK(is_upper_modular(chain, x).holds);
    CHECK(is_lower_modular(chain, x).holds);
  }
}

TEST_CASE("diamond atoms are modular but neither neutral nor codistributive") {
  FiniteLattice m3 = lattices::m3();
  for (int atom : {1, 2, 3}) {
    CHECK(is_modular(m3, atom).holds);
    CHECK(is_upper_modular(m3, atom).holds);
    CHECK(is_lower_modular(m3, atom).holds);
    CHECK_FALSE(is_neutral(m3, atom).holds);
    CHECK_FALSE(is_codistributive(m3, atom).holds);
    CHECK_FALSE(is_costandard(m3, atom).holds);
  }
  PredicateResult r = is_codistributive(m3, 1);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->first == 2);
  CHECK(r.witness->second == 3);
  CHECK_FALSE(codistributive_at(m3, 1, r.witness->first, r.witness->second));
  // Bottom and top are neutral in any lattice.
  for (int end : {0, 4}) {
    CHECK(is_neutral(m3, end).holds);
    CHECK(is_costandard(m3, end).holds);
    CHECK(is_codistributive(m3, end).holds);
    CHECK(is_modular(m3, end).holds);
    CHECK(is_upper_modular(m3, end).holds);
    CHECK(is_lower_modular(m3, end).holds);
  }
}

TEST_CASE("the pentagon has exactly one non-modular element with the least witness") {
  FiniteLattice n5 = lattices::n5();
  PredicateResult r = is_modular(n5, 3);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->first == 1);
  CHECK(r.witness->second == 2);
  CHECK_FALSE(modular_at(n5, 3, r.witness->first, r.witness->second));
  for (int x : {0, 1, 2, 4}) CHECK(is_modular(n5, x).holds);

  auto pair = jezek_pair(n5, 3);
  REQUIRE(pair.has_value());
  CHECK(pair->first == 1);
  CHECK(pair->second == 2);
  CHECK(n5.leq(pair->first, pair->second));
  CHECK(n5.meet(pair->first, 3) == n5.meet(pair->second, 3));
  CHECK(n5.join(pair->first, 3) == n5.join(pair->second, 3));
}

TEST_CASE("the closure characterization of neutrality agrees with the definition") {
  for (const FiniteLattice& l :
       {lattices::m3(), lattices::n5(), lattices::chain(4), lattices::boolean_cube(3)}) {
    for (int x = 0; x < l.size(); ++x)
      CHECK(is_neutral(l, x).holds == neutral_via_triples(l, x));
  }
}

TEST_CASE("the interval-pair characterization of modularity agrees with the definition") {
  int lattices_seen = 0;
  for (int n = 1; n <= 5; ++n) {
    enumerate_lattices(n, [&](const FiniteLattice& l) {
      ++lattices_seen;
      for (int x = 0; x < l.size(); ++x)
        CHECK(is_modular(l, x).holds == modular_via_pairs(l, x));
      return true;
    });
  }
  CHECK(lattices_seen == 1 + 1 + 1 + 3 + 19);
}

TEST_CASE("labeled enumeration counts match the frozen census") {
  CHECK(count_lattices(1) == 1);
  CHECK(count_lattices(2) == 1);
  CHECK(count_lattices(3) == 1);
  CHECK(count_lattices(4) == 3);
  CHECK(count_lattices(5) == 19);
  CHECK(count_lattices(6) == 213);
}

TEST_CASE("order-7 census anchors the enumerator") { CHECK(count_lattices(7) == 3761); }

TEST_CASE("enumeration produces valid lattices and finds the two five-element landmarks") {
  bool diamond = false;
  bool pentagon = false;
  enumerate_lattices(5, [&](const FiniteLattice& l) {
    std::vector<char> rows(l.size() * l.size());
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) rows[a * l.size() + b] = l.leq(a, b) ? 1 : 0;
    CHECK_NOTHROW(FiniteLattice::from_leq(l.size(), rows));
    bool modular_everywhere = true;
    for (int x = 0; x < l.size(); ++x) modular_everywhere &= is_modular(l, x).holds;
    if (!l.distributive() && modular_everywhere) diamond = true;
    if (!modular_everywhere) pentagon = true;
    return true;
  });
  CHECK(diamond);
  CHECK(pentagon);
}

TEST_CASE("the element laws hold across the full small-lattice sweep") {
  LawScanResult scan = scan_lattice_laws(5);
  CHECK_FALSE(scan.violation.has_value());
  CHECK(scan.lattices_checked == 1 + 1 + 1 + 3 + 19);
  CHECK_FALSE(check_element_laws(lattices::m3()).has_value());
  CHECK_FALSE(check_element_laws(lattices::n5()).has_value());
  CHECK_FALSE(check_element_laws(lattices::grid(12, 4)).has_value());
}

TEST_CASE("lattice files round-trip and reject malformed input") {
  FiniteLattice n5 = lattices::n5();
  FiniteLattice back = FiniteLattice::parse(n5.str());
  CHECK(back.size() == n5.size());
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) CHECK(back.leq(a, b) == n5.leq(a, b));
  CHECK_THROWS_AS(FiniteLattice::parse(""), ParseError);
  CHECK_THROWS_AS(FiniteLattice::parse("2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(FiniteLattice::parse("2\n1 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(FiniteLattice::parse("2\n1 1\n1 1\n"), InvalidStructure);
  // A lattice whose bottom is not element 0 is still a lattice.
  CHECK(FiniteLattice::parse("2\n1 0\n1 1\n").bottom() == 1);
}

TEST_CASE("named lookup covers the documented constructions") {
  CHECK(lattices::named("chain(3)").size() == 3);
  CHECK(lattices::named("boolean(2)").size() == 4);
  CHECK(lattices::named("M3").size() == 5);
  CHECK(lattices::named("N5").size() == 5);
  CHECK(lattices::named("grid(12,4)").size() == 30);
  CHECK_THROWS_AS(lattices::named("torus"), ParseError);
  CHECK_THROWS_AS(lattices::named("chain(0)"), ParseError);
}
