#include "doctest.h"

#include "cylgame/axioms.hpp"
#include "cylgame/basis.hpp"
#include "cylgame/builders.hpp"
#include "cylgame/ef.hpp"
#include "cylgame/error.hpp"
#include "cylgame/fc_element.hpp"
#include "cylgame/json_io.hpp"
#include "cylgame/rainbow.hpp"
#include "cylgame/representation.hpp"
#include "cylgame/split.hpp"

using namespace cylgame;

TEST_CASE("certificate and result json round trip") {
  const GameResult r = solve_ef(complete_graph(4), complete_graph(3), 4, 4);
  CHECK(certificate_from_json(to_json(r.certificate)) == r.certificate);
  const GameResult back = game_result_from_json(to_json(r));
  CHECK(back.winner == r.winner);
  CHECK(back.certificate == r.certificate);
  CHECK(back.rounds_solved == r.rounds_solved);
}

TEST_CASE("representation json round trip") {
  const auto e2 = maddux_E(2);
  const auto found = rep_search(e2, 5);
  REQUIRE(found.rep);
  const Representation back = representation_from_json(e2, to_json(e2, *found.rep));
  CHECK(back == *found.rep);
  CHECK(rep_verify(e2, back).ok);
}

TEST_CASE("basis json round trip") {
  const auto e2 = maddux_E(2);
  const auto b = basis_search(e2, 4);
  REQUIRE(b.basis);
  const Basis back = basis_from_json(e2, to_json(e2, *b.basis));
  CHECK(back.m == b.basis->m);
  CHECK(back.matrices == b.basis->matrices);
}

TEST_CASE("report json round trip") {
  const Report r = Report::failure("associativity", {1, 2, 3}, "differ at a");
  const Report back = report_from_json(to_json(r));
  CHECK(back.ok == r.ok);
  CHECK(back.condition == r.condition);
  CHECK(back.witness == r.witness);
  CHECK(back.message == r.message);
}

TEST_CASE("malformed json is a parse error") {
  try {
    certificate_from_json("{\"winner\": ");
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}

TEST_CASE("ra split, theta and merge") {
  const auto s = bsl_structure(3, 2);
  const AtomSet reds = red_atoms(s);
  CHECK(reds.count() == 2);
  for (int c = 1; c <= 3; ++c) {
    const RaSplit t = split_atoms(s, reds, c);
    REQUIRE(t.structure);
    CHECK(t.structure->size() == s.size() + reds.count() * static_cast<std::size_t>(c - 1));
    CHECK(check_ra_axioms(*t.structure).ok);
    CHECK(theta_embedding(s, t).report.ok);
    const RaAtomStructure merged = merge_copies(t);
    CHECK(merged.names() == s.names());
  }
  const RaSplit broken = split_atoms(s, reds, 2, LiftRule::Broken);
  CHECK_FALSE(theta_embedding(s, broken).report.ok);
}

TEST_CASE("symbolic splits") {
  const auto s = bsl_structure(2, 2);
  const RaSplit t = split_atoms(s, red_atoms(s), kOmegaCopies);
  CHECK_FALSE(t.structure);
  REQUIRE(t.term);
  const FcAlgebra& fc = *t.term;
  const FcElement r0 = fc.atom(s.at("r_1"), 0), r5 = fc.atom(s.at("r_1"), 5);
  CHECK(fc.contains(fc.unite(r0, r5), s.at("r_1"), 5));
  CHECK(fc.valid(fc.compose(r0, r5)));
  CHECK(fc.complement(fc.complement(r0)) == r0);
  try {
    split_atoms(s, red_atoms(s), kOmegaCopies, LiftRule::IndexMatching);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUniform);
  }
}

TEST_CASE("ca red split theta") {
  const auto a43 = rainbow_ca(3, 4, 3);
  const CaSplit t = split_atoms(a43, red_atoms(a43), 2);
  CHECK(t.structure.size() == 1779 + 1590);
  CHECK(theta_embedding(a43, t).report.ok);
  CHECK_FALSE(theta_embedding(a43, split_atoms(a43, red_atoms(a43), 2, LiftRule::Broken)).report.ok);
}

TEST_CASE("ca split of a single copy keeps the axioms") {
  const auto a43 = rainbow_ca(3, 4, 3);
  CHECK(check_ca_axioms(split_atoms(a43, red_atoms(a43), 1).structure).ok);
}
