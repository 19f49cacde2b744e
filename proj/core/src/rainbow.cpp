#include "cylgame/rainbow.hpp"

#include <functional>
#include <map>
#include <regex>
#include <unordered_map>

#include "cylgame/error.hpp"

namespace cylgame {

Colour Colour::reversed() const {
  if (kind != ColourKind::Red) return *this;
  return {kind, j, i};
}

std::string Colour::name() const {
  switch (kind) {
    case ColourKind::Green: return "g" + std::to_string(i);
    case ColourKind::Tint: return "g0^" + std::to_string(i);
    case ColourKind::White: return "w" + std::to_string(i);
    case ColourKind::Red: return "r" + std::to_string(i) + ":" + std::to_string(j);
  }
  return "?";
}

std::optional<Colour> parse_colour(const std::string& s) {
  static const std::regex tint("g0\\^(-?[0-9]+)");
  static const std::regex green("g([1-9][0-9]*)");
  static const std::regex white("w([0-9]+)");
  static const std::regex red("r([0-9]+):([0-9]+)");
  std::smatch m;
  if (std::regex_match(s, m, tint)) return Colour{ColourKind::Tint, std::stoi(m[1]), 0};
  if (std::regex_match(s, m, green)) return Colour{ColourKind::Green, std::stoi(m[1]), 0};
  if (std::regex_match(s, m, white)) return Colour{ColourKind::White, std::stoi(m[1]), 0};
  if (std::regex_match(s, m, red)) return Colour{ColourKind::Red, std::stoi(m[1]), std::stoi(m[2])};
  return std::nullopt;
}

namespace {

bool tint_pair_ok(TintRedRule rule, int i, int j, int k, int l) {
  if ((i == j) != (k == l)) return false;
  if (rule == TintRedRule::OrderPreserving) return (i < j) == (k < l);
  return true;
}

// apex u: u->v = a, u->w = b, v->w = c
std::optional<std::string> apex_rule(const RuleSet& rules, const Colour& a, const Colour& b, const Colour& c) {
  if (rules.green_white && c.kind == ColourKind::White) {
    if (a.kind == ColourKind::Tint && b.kind == ColourKind::Tint && c.i == 0) return "green-white";
    if (a.kind == ColourKind::Green && b.kind == ColourKind::Green && a.i == b.i && c.i == a.i) return "green-white";
  }
  if (rules.tint_red && a.kind == ColourKind::Tint && b.kind == ColourKind::Tint && c.kind == ColourKind::Red &&
      !tint_pair_ok(rules.tint_red_rule, a.i, b.i, c.i, c.j))
    return "tint-red";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> forbidden_triangle(const RuleSet& rules, const Colour& xy, const Colour& xz,
                                              const Colour& yz) {
  if (rules.all_green && xy.green() && xz.green() && yz.green()) return "all-green";
  if (rules.red_matching && xy.kind == ColourKind::Red && xz.kind == ColourKind::Red && yz.kind == ColourKind::Red) {
    // each node gets one red index
    if (xy.i != xz.i || xy.j != yz.i || xz.j != yz.j) return "red-matching";
  }
  if (auto r = apex_rule(rules, xy, xz, yz)) return r;
  if (auto r = apex_rule(rules, xy.reversed(), yz, xz)) return r;
  if (auto r = apex_rule(rules, xz.reversed(), yz.reversed(), xy)) return r;
  return std::nullopt;
}

void ColouredGraph::set(int u, int v, const Colour& c) {
  edges[static_cast<std::size_t>(u * nodes + v)] = c;
  edges[static_cast<std::size_t>(v * nodes + u)] = c.reversed();
}

Report check_graph(const RuleSet& rules, const ColouredGraph& g) {
  for (int u = 0; u < g.nodes; ++u)
    for (int v = 0; v < g.nodes; ++v) {
      if (u == v) continue;
      if (!g.edge(u, v)) return Report::failure("complete", {u, v}, "edge is uncoloured");
      if (!(g.edge(u, v)->reversed() == *g.edge(v, u))) return Report::failure("converse", {u, v}, "edge colours disagree");
    }
  for (int x = 0; x < g.nodes; ++x)
    for (int y = x + 1; y < g.nodes; ++y)
      for (int z = y + 1; z < g.nodes; ++z)
        if (auto r = forbidden_triangle(rules, *g.edge(x, y), *g.edge(x, z), *g.edge(y, z)))
          return Report::failure(*r, {x, y, z}, "forbidden triangle " + g.edge(x, y)->name() + ", " +
                                                    g.edge(x, z)->name() + ", " + g.edge(y, z)->name());
  return Report::pass();
}

std::optional<int> detect_cone(const ColouredGraph& g, const std::vector<int>& base, int apex) {
  if (base.empty()) return std::nullopt;
  const auto& e0 = g.edge(base[0], apex);
  if (!e0 || e0->kind != ColourKind::Tint) return std::nullopt;
  for (std::size_t j = 1; j < base.size(); ++j) {
    const auto& e = g.edge(base[j], apex);
    if (!e || !(*e == Colour{ColourKind::Green, static_cast<int>(j), 0})) return std::nullopt;
  }
  return e0->i;
}

namespace {

// coordinate table: cell (p, q), p < q, is nullopt when a(p) = a(q)
using Table = std::vector<std::optional<Colour>>;

std::string table_name(int n, const Table& t) {
  std::string out = "(";
  bool first = true;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      if (!first) out += ',';
      first = false;
      const auto& c = t[static_cast<std::size_t>(p * n + q)];
      out += c ? c->name() : "=";
    }
  return out + ")";
}

std::optional<Colour> cell(int n, const Table& t, int p, int q) {
  if (p < q) return t[static_cast<std::size_t>(p * n + q)];
  const auto& c = t[static_cast<std::size_t>(q * n + p)];
  if (!c) return c;
  return c->reversed();
}

}  // namespace

CaAtomStructure rainbow_ca(const RainbowParams& p) {
  const int n = p.n;
  require(n >= 3, "rainbow structures need dimension >= 3");
  require(!p.tints.empty() && p.reds >= 1, "rainbow structures need at least one tint and one red");
  std::vector<Colour> palette;
  for (int i = 1; i <= n - 2; ++i) palette.push_back({ColourKind::Green, i, 0});
  for (int t : p.tints) palette.push_back({ColourKind::Tint, t, 0});
  for (int i = 0; i <= n - 2; ++i) palette.push_back({ColourKind::White, i, 0});
  for (int k = 0; k < p.reds; ++k)
    for (int l = 0; l < p.reds; ++l)
      if (k != l) palette.push_back({ColourKind::Red, k, l});

  std::vector<Table> atoms;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> patterns = [&](int pos, int classes) {
    if (pos < n) {
      for (int c = 0; c <= classes; ++c) {
        rgs[static_cast<std::size_t>(pos)] = c;
        patterns(pos + 1, std::max(classes, c + 1));
      }
      return;
    }
    ColouredGraph g(classes);
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < classes; ++v)
      for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    std::function<void(std::size_t)> colour = [&](std::size_t e) {
      if (e == pairs.size()) {
        if (atoms.size() >= p.max_atoms)
          fail(ErrorKind::Budget, "rainbow atom count exceeds " + std::to_string(p.max_atoms));
        Table t(static_cast<std::size_t>(n * n));
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b) {
            const int u = rgs[static_cast<std::size_t>(a)], v = rgs[static_cast<std::size_t>(b)];
            if (u != v) t[static_cast<std::size_t>(a * n + b)] = g.edge(u, v);
          }
        atoms.push_back(std::move(t));
        return;
      }
      const auto [u, v] = pairs[e];
      for (const Colour& c : palette) {
        g.set(u, v, c);
        bool ok = true;
        for (int w = 0; w < u && ok; ++w)
          ok = !forbidden_triangle(p.rules, *g.edge(w, u), *g.edge(w, v), *g.edge(u, v));
        if (ok) colour(e + 1);
      }
      g.edges[static_cast<std::size_t>(u * classes + v)].reset();
      g.edges[static_cast<std::size_t>(v * classes + u)].reset();
    };
    colour(0);
  };
  patterns(0, 0);

  std::vector<std::string> names;
  std::unordered_map<std::string, AtomId> id;
  for (const auto& t : atoms) {
    id.emplace(table_name(n, t), static_cast<AtomId>(names.size()));
    names.push_back(table_name(n, t));
  }
  const std::size_t N = atoms.size();
  std::vector<std::vector<int>> class_of(static_cast<std::size_t>(n), std::vector<int>(N));
  for (int i = 0; i < n; ++i) {
    std::map<std::string, int> cls;
    for (std::size_t a = 0; a < N; ++a) {
      std::string key;
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          if (x == i || y == i) continue;
          const auto& c = atoms[a][static_cast<std::size_t>(x * n + y)];
          key += (c ? c->name() : "=") + ";";
        }
      class_of[static_cast<std::size_t>(i)][a] = cls.emplace(key, static_cast<int>(cls.size())).first->second;
    }
  }
  std::vector<std::vector<AtomSet>> diag(static_cast<std::size_t>(n),
                                         std::vector<AtomSet>(static_cast<std::size_t>(n), AtomSet(N)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (std::size_t a = 0; a < N; ++a)
        if (!atoms[a][static_cast<std::size_t>(i * n + j)]) diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].insert(static_cast<AtomId>(a));
  std::vector<std::vector<std::vector<AtomId>>> sub(static_cast<std::size_t>(n),
                                                    std::vector<std::vector<AtomId>>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto& perm = sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      perm.resize(N);
      auto tau = [&](int x) { return x == i ? j : x == j ? i : x; };
      for (std::size_t a = 0; a < N; ++a) {
        Table t(static_cast<std::size_t>(n * n));
        for (int x = 0; x < n; ++x)
          for (int y = x + 1; y < n; ++y) t[static_cast<std::size_t>(x * n + y)] = cell(n, atoms[a], tau(x), tau(y));
        perm[a] = id.at(table_name(n, t));
      }
    }
  return CaAtomStructure::from_classes(n, std::move(names), class_of, std::move(diag), std::move(sub));
}

CaAtomStructure rainbow_ca(int n, int tints, int reds) {
  RainbowParams p;
  p.n = n;
  for (int t = 1; t <= tints; ++t) p.tints.push_back(t);
  p.reds = reds;
  return rainbow_ca(p);
}

CaAtomStructure order_rainbow_ca(int n, int green_depth, int red_depth) {
  require(green_depth >= 1 && red_depth >= 1, "truncation depths must be >= 1");
  RainbowParams p;
  p.n = n;
  for (int t = 0; t >= -green_depth; --t) p.tints.push_back(t);
  p.reds = red_depth;
  p.rules = RuleSet::ordered();
  return rainbow_ca(p);
}

ColouredGraph atom_graph(const CaAtomStructure& s, AtomId a, std::vector<int>* surjection) {
  const int n = s.dimension();
  std::string name = s.name(a);
  if (auto hash = name.find('#'); hash != std::string::npos) name.resize(hash);
  if (name.size() < 2 || name.front() != '(' || name.back() != ')')
    fail(ErrorKind::InvalidArgument, "atom '" + s.name(a) + "' is not a rainbow atom");
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : name.substr(1, name.size() - 2)) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  cells.push_back(cur);
  require(cells.size() == static_cast<std::size_t>(n * (n - 1) / 2), "atom '" + s.name(a) + "' has the wrong arity");
  Table t(static_cast<std::size_t>(n * n));
  std::size_t k = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q, ++k) {
      if (cells[k] == "=") continue;
      auto c = parse_colour(cells[k]);
      if (!c) fail(ErrorKind::InvalidArgument, "unknown colour '" + cells[k] + "'");
      t[static_cast<std::size_t>(p * n + q)] = c;
    }
  std::vector<int> sur(static_cast<std::size_t>(n));
  int nodes = 0;
  for (int p = 0; p < n; ++p) {
    int v = -1;
    for (int q = 0; q < p && v < 0; ++q)
      if (!t[static_cast<std::size_t>(q * n + p)]) v = sur[static_cast<std::size_t>(q)];
    sur[static_cast<std::size_t>(p)] = v >= 0 ? v : nodes++;
  }
  ColouredGraph g(nodes);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      const int u = sur[static_cast<std::size_t>(p)], v = sur[static_cast<std::size_t>(q)];
      if (u != v) g.set(u, v, *t[static_cast<std::size_t>(p * n + q)]);
    }
  if (surjection) *surjection = sur;
  return g;
}

std::optional<AtomId> atom_of(const CaAtomStructure& s, const ColouredGraph& g, const std::vector<int>& x) {
  const int n = s.dimension();
  Table t(static_cast<std::size_t>(n * n));
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      const int u = x[static_cast<std::size_t>(p)], v = x[static_cast<std::size_t>(q)];
      if (u == v) continue;
      if (!g.edge(u, v)) return std::nullopt;
      t[static_cast<std::size_t>(p * n + q)] = g.edge(u, v);
    }
  return s.find(table_name(n, t));
}

RaAtomStructure rainbow_ra(const Structure& g, const Structure& h, const RaRainbowRules& rules) {
  require(g.size >= 1 && h.size >= 1, "rainbow structures need nonempty G and H");
  enum Kind { Id, White, Yellow, Green, Red };
  struct Atom {
    Kind kind;
    int i, j;
  };
  std::vector<Atom> atoms{{Id, 0, 0}, {White, 0, 0}};
  std::vector<std::string> names{"Id", "w"};
  if (rules.yellow) {
    atoms.push_back({Yellow, 0, 0});
    names.push_back("y");
  }
  for (int i = 0; i < g.size; ++i) {
    atoms.push_back({Green, i, 0});
    names.push_back("g" + std::to_string(i));
  }
  for (int k = 0; k < h.size; ++k)
    for (int l = 0; l < h.size; ++l)
      if (k != l) {
        atoms.push_back({Red, k, l});
        names.push_back("r" + std::to_string(k) + ":" + std::to_string(l));
      }
  const auto N = static_cast<AtomId>(atoms.size());
  auto find = [&](Kind kind, int i, int j) {
    for (AtomId a = 0; a < N; ++a)
      if (atoms[static_cast<std::size_t>(a)].kind == kind && atoms[static_cast<std::size_t>(a)].i == i &&
          atoms[static_cast<std::size_t>(a)].j == j)
        return a;
    return AtomId{-1};
  };
  std::vector<AtomId> conv(static_cast<std::size_t>(N));
  for (AtomId a = 0; a < N; ++a) {
    const Atom& x = atoms[static_cast<std::size_t>(a)];
    conv[static_cast<std::size_t>(a)] = x.kind == Red ? find(Red, x.j, x.i) : a;
  }
  auto rev = [&](AtomId a) { return conv[static_cast<std::size_t>(a)]; };
  // apex u: u->v = a, u->w = b, v->w = c
  auto apex_bad = [&](AtomId a, AtomId b, AtomId c) {
    const Atom &x = atoms[static_cast<std::size_t>(a)], &y = atoms[static_cast<std::size_t>(b)],
               &z = atoms[static_cast<std::size_t>(c)];
    if (x.kind != Green || y.kind != Green) return false;
    if (rules.white_apart && z.kind == White && x.i != y.i) return true;
    if (rules.tint_red && z.kind == Red && !partial_iso(g, h, {{x.i, z.i}, {y.i, z.j}})) return true;
    return false;
  };
  // triangle x->y = a, y->z = b, x->z = c
  auto consistent = [&](AtomId a, AtomId b, AtomId c) {
    const Atom &x = atoms[static_cast<std::size_t>(a)], &y = atoms[static_cast<std::size_t>(b)],
               &z = atoms[static_cast<std::size_t>(c)];
    if (x.kind == Id) return b == c;
    if (y.kind == Id) return a == c;
    if (z.kind == Id) return rev(a) == b;
    if (rules.all_green && x.kind == Green && y.kind == Green && z.kind == Green) return false;
    if (rules.red_matching && x.kind == Red && y.kind == Red && z.kind == Red &&
        !(x.i == z.i && x.j == y.i && y.j == z.j))
      return false;
    // apex x: (a, c, b); apex y: (a^, b, c^); apex z: (c^, b^, a)
    return !apex_bad(a, c, b) && !apex_bad(rev(a), b, c) && !apex_bad(rev(c), rev(b), a);
  };
  return RaAtomStructure(names, {0}, conv, consistent);
}

}  // namespace cylgame
