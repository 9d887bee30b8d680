#include <doctest.h>

#include "monova/identity.hpp"

using namespace monova;

TEST_CASE("identity parsing accepts '=' and the almost-equal sign") {
  Identity id = Identity::parse("x^2 = x^3");
  CHECK(id.lhs.str() == "x^2");
  CHECK(id.rhs.str() == "x^3");
  Identity approx = Identity::parse("xy \xE2\x89\x88 yx");
  CHECK(approx.lhs.str() == "xy");
  CHECK(approx.rhs.str() == "yx");
  CHECK(Identity::parse("1 = x^0").trivial());
}

TEST_CASE("identity parsing rejects missing or repeated separators") {
  CHECK_THROWS_AS(Identity::parse("xy"), ParseError);
  CHECK_THROWS_AS(Identity::parse("x = y = z"), ParseError);
  CHECK_THROWS_AS(Identity::parse("= x"), ParseError);
  CHECK_THROWS_AS(Identity::parse("x ="), ParseError);
}

TEST_CASE("identity helpers") {
  Identity id = Identity::parse("xy = yx");
  CHECK_FALSE(id.trivial());
  CHECK(id.reversed().lhs == id.rhs);
  CHECK(id.str() == "xy = yx");
  CHECK(Identity::parse("x = x").trivial());
  CHECK(id == Identity::parse("xy=yx"));
  CHECK(id != id.reversed());
}

TEST_CASE("a basis drops trivial identities with a warning") {
  Basis b("test");
  CHECK(b.add(Identity::parse("x^2 = x^3")));
  CHECK_FALSE(b.add(Identity::parse("x = x")));
  CHECK(b.size() == 1);
  REQUIRE(b.warnings().size() == 1);
  CHECK(b.warnings()[0].find("trivial") != std::string::npos);
}

TEST_CASE("basis membership is by exact ordered pair") {
  const Basis& c2 = builtin_basis("C2");
  CHECK(c2.contains(Identity::parse("x^2 = x^3")));
  CHECK_FALSE(c2.contains(Identity::parse("x^3 = x^2")));
  CHECK_FALSE(c2.contains(Identity::parse("x^2 = x^4")));
}

TEST_CASE("basis files allow comments and blank lines") {
  Basis b = parse_basis("# exponent collapse\n"
                        "x^2 = x^3\n"
                        "\n"
                        "xy = yx  # commutativity\n",
                        "sample");
  CHECK(b.size() == 2);
  CHECK(b.name() == "sample");
  CHECK(b[0] == Identity::parse("x^2 = x^3"));
  CHECK(b[1] == Identity::parse("xy = yx"));
}

TEST_CASE("basis file errors carry line numbers") {
  try {
    parse_basis("x^2 = x^3\nbroken line\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("builtin bases have the expected shapes") {
  CHECK(builtin_basis("C2").size() == 2);
  CHECK(builtin_basis("D").size() == 3);
  CHECK(builtin_basis("B23").size() == 1);
  CHECK(builtin_basis("Q").size() == 1);
  CHECK(builtin_basis("E").size() == 3);
  CHECK(builtin_basis("F").size() == 4);
  const Identity& q = builtin_basis("Q")[0];
  CHECK(q.lhs.str() == "yxyzxz");
  CHECK(q.rhs.str() == "yxzxyxz");
  CHECK(builtin_basis("B23")[0] == Identity::parse("x^2 = x^3"));
  CHECK_THROWS_AS(builtin_basis("nope"), ParseError);
  CHECK(builtin_basis_names().size() == 6);
}
