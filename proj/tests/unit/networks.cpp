#include "doctest.h"

#include "cylgame/builders.hpp"
#include "cylgame/network.hpp"
#include "cylgame/rainbow.hpp"

using namespace cylgame;

TEST_CASE("network indexing") {
  Network n(3, 4);
  CHECK(Network::tuple_count(3, 4) == 64);
  std::vector<int> t;
  for (std::size_t i = 0; i < n.label.size(); ++i) {
    n.decode(i, t);
    CHECK(n.index(t) == i);
  }
}

TEST_CASE("matrix validation") {
  const auto e2 = maddux_E(2);
  const AtomId id = e2.at("Id"), a = e2.at("a"), b = e2.at("b");
  BasicMatrix m(3);
  for (int i = 0; i < 3; ++i) m.at(i, i) = id;
  m.at(0, 1) = m.at(1, 0) = a;
  m.at(0, 2) = m.at(2, 0) = a;
  m.at(1, 2) = m.at(2, 1) = b;
  CHECK(matrix_validate(e2, m).ok);
  m.at(1, 2) = m.at(2, 1) = a;
  CHECK_FALSE(matrix_validate(e2, m).ok);
}

TEST_CASE("canonical form ignores node names") {
  const auto e2 = maddux_E(2);
  const AtomId id = e2.at("Id"), a = e2.at("a"), b = e2.at("b");
  BasicMatrix m(3);
  for (int i = 0; i < 3; ++i) m.at(i, i) = id;
  m.at(0, 1) = m.at(1, 0) = a;
  m.at(0, 2) = m.at(2, 0) = a;
  m.at(1, 2) = m.at(2, 1) = b;
  const auto c1 = canonical_matrix(m);
  const auto c2 = canonical_matrix(permute_matrix(m, {2, 0, 1}));
  CHECK(c1.key == c2.key);
}

TEST_CASE("full set networks") {
  const auto s = full_set_structure(2, 2);
  Network n(2, 2);
  // node i is the point i; the tuple (x, y) is labelled by "t<x>.<y>"
  std::vector<int> t;
  for (std::size_t i = 0; i < n.label.size(); ++i) {
    n.decode(i, t);
    n.label[i] = s.at("t" + std::to_string(t[0]) + "." + std::to_string(t[1]));
  }
  CHECK(network_validate(s, n).ok);
  CHECK(canonical_network(n).key == canonical_network(permute_network(n, {1, 0})).key);
}

TEST_CASE("rainbow atom graphs") {
  const auto a43 = rainbow_ca(3, 4, 3);
  int cones = 0;
  for (std::size_t a = 0; a < a43.size(); ++a) {
    const ColouredGraph g = atom_graph(a43, static_cast<AtomId>(a));
    CHECK(check_graph(RuleSet::standard(), g).ok);
    if (g.edges.size() == 9 && detect_cone(g, {0, 1}, 2)) ++cones;
  }
  CHECK(cones > 0);
}
