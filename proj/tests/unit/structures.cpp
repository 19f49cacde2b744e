#include "doctest.h"

#include "cylgame/algebra_io.hpp"
#include "cylgame/axioms.hpp"
#include "cylgame/builders.hpp"
#include "cylgame/error.hpp"
#include "cylgame/rainbow.hpp"
#include "cylgame/split.hpp"

using namespace cylgame;

TEST_CASE("rainbow atom counts") {
  CHECK(rainbow_ca(3, 4, 3).size() == 1779);
  CHECK(order_rainbow_ca(3, 3, 3).size() == 1671);
  CHECK(red_atoms(rainbow_ca(3, 4, 3)).count() == 1590);
}

TEST_CASE("order rainbow with depth 4") {
  CHECK(order_rainbow_ca(3, 4, 4).size() == 5523);
}

TEST_CASE("maddux structures") {
  const auto e3 = maddux_E(3);
  CHECK(e3.size() == 4);
  CHECK(e3.integral());
  const AtomId a = e3.at("a"), b = e3.at("b");
  CHECK_FALSE(e3.consistent(a, a, a));
  CHECK(e3.consistent(a, a, b));
  CHECK(e3.consistent(a, b, a));
  CHECK(check_ra_axioms(e3).ok);
}

TEST_CASE("axiom checker rejects a missing identity triple") {
  // a is its own converse, so Id must lie under a;a
  std::vector<std::string> names = {"Id", "a"};
  RaAtomStructure s(names, {0}, {0, 1}, [](AtomId x, AtomId y, AtomId z) {
    if (x == 0) return y == z;
    if (y == 0) return x == z;
    if (z == 0) return x == y && x == 0;
    return true;
  });
  CHECK_FALSE(check_ra_axioms(s).ok);
}

TEST_CASE("cylindric axioms on the full set structure") {
  const auto s = full_set_structure(3, 2);
  CHECK(s.size() == 8);
  CHECK(check_ca_axioms(s).ok);
}

TEST_CASE("text format round trip") {
  const auto e2 = maddux_E(2);
  const AtomStructure back = parse_algebra(to_text(e2));
  const auto& r = std::get<RaAtomStructure>(back);
  REQUIRE(r.size() == e2.size());
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      for (std::size_t z = 0; z < r.size(); ++z)
        CHECK(r.consistent(static_cast<AtomId>(x), static_cast<AtomId>(y), static_cast<AtomId>(z)) ==
              e2.consistent(static_cast<AtomId>(x), static_cast<AtomId>(y), static_cast<AtomId>(z)));

  const auto ca = full_set_structure(2, 2);
  const AtomStructure parsed = parse_algebra(to_text(ca));
  const auto& c2 = std::get<CaAtomStructure>(parsed);
  CHECK(c2.size() == ca.size());
  CHECK(to_text(c2) == to_text(ca));
}

TEST_CASE("parse errors carry the parse kind") {
  try {
    parse_algebra(std::string("[dim]\nnonsense\n"));
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}
