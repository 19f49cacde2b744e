#include "cylgame/representation.hpp"

#include <functional>
#include <vector>

#include "cylgame/error.hpp"

namespace cylgame {

Report rep_verify(const RaAtomStructure& s, const Representation& r) {
  const int b = r.base_size;
  const auto n = static_cast<AtomId>(s.size());
  if (b < 1 || r.edge.size() != static_cast<std::size_t>(b * b))
    return Report::failure("shape", {b}, "edge table does not match the base size");
  for (int x = 0; x < b; ++x)
    for (int y = 0; y < b; ++y)
      if (r.at(x, y) < 0 || r.at(x, y) >= n) return Report::failure("range", {x, y}, "edge label out of range");
  for (int x = 0; x < b; ++x)
    for (int y = 0; y < b; ++y) {
      const bool id = s.is_identity(r.at(x, y));
      if (x == y && !id) return Report::failure("identity", {x, y}, "diagonal edge is not an identity atom");
      if (x != y && id && s.integral()) return Report::failure("identity", {x, y}, "identity atom off the diagonal");
    }
  for (int x = 0; x < b; ++x)
    for (int y = 0; y < b; ++y)
      if (r.at(y, x) != s.converse(r.at(x, y)))
        return Report::failure("converse", {x, y}, "edge (y,x) is not the converse of edge (x,y)");
  for (int x = 0; x < b; ++x)
    for (int y = 0; y < b; ++y)
      for (int z = 0; z < b; ++z)
        if (!s.consistent(r.at(x, z), r.at(z, y), r.at(x, y)))
          return Report::failure("triangle", {x, z, y}, "inconsistent triangle");
  AtomSet used = s.empty_set();
  for (AtomId a : r.edge) used.insert(a);
  for (AtomId a = 0; a < n; ++a)
    if (!used.contains(a)) return Report::failure("faithful", {a}, "atom " + s.name(a) + " labels no edge");
  for (int x = 0; x < b; ++x)
    for (int y = 0; y < b; ++y) {
      const AtomId c = r.at(x, y);
      for (AtomId a = 0; a < n; ++a)
        for (AtomId d = 0; d < n; ++d) {
          if (!s.consistent(a, d, c)) continue;
          bool found = false;
          for (int z = 0; z < b && !found; ++z) found = r.at(x, z) == a && r.at(z, y) == d;
          if (!found)
            return Report::failure("witness", {x, y, a, d},
                                   "no point z with edge(x,z)=" + s.name(a) + " and edge(z,y)=" + s.name(d));
        }
    }
  return Report::pass();
}

RepSearchResult rep_search(const RaAtomStructure& s, int b, const RepSearchOptions& opt) {
  require(s.integral(), "square representation search needs an integral structure");
  require(b >= 1, "base size must be positive");
  RepSearchResult res;
  const AtomId id = s.identity().first();
  const auto n = static_cast<AtomId>(s.size());
  Representation r(b);
  for (int x = 0; x < b; ++x) r.at(x, x) = id;

  std::vector<std::pair<int, int>> cells;
  for (int j = 1; j < b; ++j)
    for (int i = 0; i < j; ++i) cells.emplace_back(i, j);

  auto triangles_ok = [&](int i, int j) {
    for (int x = 0; x <= i; ++x)
      for (int y = 0; y <= i; ++y) {
        if (x != i && y != i) continue;
        // triangle on {x,y,j}, all three orientations that touch (i,j)
        if (!s.consistent(r.at(x, y), r.at(y, j), r.at(x, j))) return false;
        if (!s.consistent(r.at(x, j), r.at(j, y), r.at(x, y))) return false;
        if (!s.consistent(r.at(j, x), r.at(x, y), r.at(j, y))) return false;
      }
    for (int x = 0; x < i; ++x) {
      // triangle {x,i,j} with x < i
      if (!s.consistent(r.at(x, i), r.at(i, j), r.at(x, j))) return false;
      if (!s.consistent(r.at(i, x), r.at(x, j), r.at(i, j))) return false;
      if (!s.consistent(r.at(x, j), r.at(j, i), r.at(x, i))) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t c) -> bool {
    if (++res.nodes_visited > opt.max_nodes)
      fail(ErrorKind::Budget, "representation search exceeded " + std::to_string(opt.max_nodes) + " nodes");
    if (c == cells.size()) return rep_verify(s, r).ok;
    auto [i, j] = cells[c];
    for (AtomId a = 0; a < n; ++a) {
      if (s.is_identity(a)) continue;
      if (i == 0 && j > 1 && a < r.at(0, j - 1)) continue;
      r.at(i, j) = a;
      r.at(j, i) = s.converse(a);
      if (triangles_ok(i, j) && rec(c + 1)) return true;
    }
    r.at(i, j) = -1;
    r.at(j, i) = -1;
    return false;
  };
  if (rec(0)) res.rep = r;
  return res;
}

}  // namespace cylgame
