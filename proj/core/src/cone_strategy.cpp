#include "cylgame/cone_strategy.hpp"

#include <algorithm>
#include <map>

#include "cylgame/error.hpp"

namespace cylgame {

ColouredGraph network_graph(const CaAtomStructure& s, const Network& net) {
  ColouredGraph g(net.nodes);
  std::vector<int> t(static_cast<std::size_t>(s.dimension()));
  std::vector<int> sur;
  for (int u = 0; u < net.nodes; ++u)
    for (int v = 0; v < net.nodes; ++v) {
      if (u == v) continue;
      std::fill(t.begin(), t.end(), v);
      t[0] = u;
      const AtomId a = net.at(t);
      if (a < 0) continue;
      const ColouredGraph ag = atom_graph(s, a, &sur);
      g.edges[static_cast<std::size_t>(u * net.nodes + v)] = ag.edge(sur[0], sur[1]);
    }
  return g;
}

AtomId cone_atom(const CaAtomStructure& s, int tint) {
  const int n = s.dimension();
  std::string name = "(";
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      if (name.size() > 1) name += ',';
      if (q < n - 1) name += "w0";
      else if (p == 0) name += "g0^" + std::to_string(tint);
      else name += "g" + std::to_string(p);
    }
  name += ")";
  auto a = s.find(name);
  if (!a) fail(ErrorKind::InvalidArgument, "structure has no cone atom " + name);
  return *a;
}

namespace {

struct Cones {
  std::vector<int> base;
  std::map<int, int> apex_of_tint;
};

Cones find_cones(const ColouredGraph& g, int n) {
  Cones best;
  std::vector<int> base;
  std::vector<char> used(static_cast<std::size_t>(g.nodes), 0);
  std::function<void()> rec = [&] {
    if (static_cast<int>(base.size()) == n - 1) {
      Cones c;
      c.base = base;
      for (int v = 0; v < g.nodes; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        if (auto t = detect_cone(g, base, v)) c.apex_of_tint.emplace(*t, v);
      }
      if (c.apex_of_tint.size() > best.apex_of_tint.size()) best = c;
      return;
    }
    for (int v = 0; v < g.nodes; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int u : base) {
        const auto& e = g.edge(u, v);
        ok = ok && e && e->kind == ColourKind::White && e->i == 0;
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(v)] = 1;
      base.push_back(v);
      rec();
      base.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec();
  return best;
}

}  // namespace

ScriptedForall cone_bombardment(const CaAtomStructure& s, int m, std::vector<int> tints) {
  require(!tints.empty(), "cone bombardment needs at least one tint");
  const int n = s.dimension();
  ScriptedForall out;
  out.opening = cone_atom(s, tints.front());
  std::vector<AtomId> atoms;
  for (int t : tints) atoms.push_back(cone_atom(s, t));
  out.move = [&s, n, m, tints, atoms](const Position& p) -> std::optional<Challenge> {
    Network net;
    net.dim = n;
    net.nodes = p.nodes;
    net.label = p.key;
    const Cones c = find_cones(network_graph(s, net), n);
    if (c.apex_of_tint.empty()) return std::nullopt;
    std::size_t latest = 0, earliest = tints.size();
    for (std::size_t k = 0; k < tints.size(); ++k)
      if (c.apex_of_tint.count(tints[k])) {
        latest = k;
        earliest = std::min(earliest, k);
      }
    if (latest + 1 >= tints.size()) return std::nullopt;
    Challenge ch(c.base.begin(), c.base.end());
    ch.push_back(0);
    ch.push_back(n - 1);
    ch.push_back(atoms[latest + 1]);
    ch.push_back(p.nodes < m ? -1 : c.apex_of_tint.at(tints[earliest]));
    return ch;
  };
  return out;
}

ScriptedForall decreasing_sequence(const CaAtomStructure& s, int m, int green_depth) {
  std::vector<int> tints;
  for (int t = 0; t >= -green_depth; --t) tints.push_back(t);
  return cone_bombardment(s, m, std::move(tints));
}

}  // namespace cylgame
