#include "cylgame/split.hpp"

#include <map>

#include "cylgame/error.hpp"
#include "cylgame/rainbow.hpp"

namespace cylgame {

std::string to_string(LiftRule r) {
  switch (r) {
    case LiftRule::Inherit: return "inherit";
    case LiftRule::IndexMatching: return "index-matching";
    case LiftRule::Broken: return "broken";
  }
  return "?";
}

LiftRule lift_rule_from_string(const std::string& s) {
  if (s == "inherit") return LiftRule::Inherit;
  if (s == "index-matching") return LiftRule::IndexMatching;
  if (s == "broken") return LiftRule::Broken;
  fail(ErrorKind::InvalidArgument, "unknown lift rule '" + s + "'");
}

namespace {

CopyMap make_map(std::size_t atoms, const AtomSet& targets, int copies, LiftRule rule,
                 const std::vector<std::string>& names, std::vector<std::string>& out_names) {
  CopyMap m;
  m.targets = targets;
  m.copies = copies;
  m.rule = rule;
  const int c = copies == kOmegaCopies ? 1 : copies;
  for (std::size_t a = 0; a < atoms; ++a) {
    const auto id = static_cast<AtomId>(a);
    if (!targets.contains(id)) {
      m.origin.push_back(id);
      m.copy.push_back(0);
      out_names.push_back(names[a]);
      continue;
    }
    for (int j = 0; j < c; ++j) {
      m.origin.push_back(id);
      m.copy.push_back(j);
      out_names.push_back(names[a] + "#" + std::to_string(j));
    }
  }
  return m;
}

std::string origin_name(const std::string& name) {
  const auto hash = name.rfind('#');
  return hash == std::string::npos ? name : name.substr(0, hash);
}

void check_targets(const AtomSet& targets, std::size_t size, int copies) {
  require(targets.universe() == size, "target set is over a different atom structure");
  require(!targets.empty(), "split needs at least one target atom");
  require(copies >= 1 || copies == kOmegaCopies, "copy count must be positive or omega");
}

}  // namespace

CaSplit split_atoms(const CaAtomStructure& s, const AtomSet& targets, int copies, LiftRule rule) {
  check_targets(targets, s.size(), copies);
  if (copies == kOmegaCopies)
    fail(ErrorKind::InvalidArgument, "symbolic copies are only available for relation algebra structures");
  const int n = s.dimension();
  if (rule == LiftRule::IndexMatching)
    require(s.equivalence_accessibility(), "index matching needs equivalence accessibility");
  CaAtomStructure::Spec spec;
  spec.dimension = n;
  CopyMap m = make_map(s.size(), targets, copies, rule, s.names(), spec.names);
  const std::size_t N = m.origin.size();

  std::vector<std::vector<AtomId>> copies_of(s.size());
  for (std::size_t x = 0; x < N; ++x) copies_of[static_cast<std::size_t>(m.origin[x])].push_back(static_cast<AtomId>(x));
  auto lift = [&](const AtomSet& orig) {
    AtomSet out(N);
    orig.for_each([&](AtomId a) {
      for (AtomId x : copies_of[static_cast<std::size_t>(a)]) out.insert(x);
    });
    return out;
  };

  // classes of acc_i made only of targets
  std::vector<std::vector<char>> pure(static_cast<std::size_t>(n));
  if (rule == LiftRule::IndexMatching)
    for (int i = 0; i < n; ++i)
      for (std::size_t c = 0; c < s.class_count(i); ++c)
        pure[static_cast<std::size_t>(i)].push_back(s.class_members(i, static_cast<int>(c)).subset_of(targets));

  spec.acc.assign(static_cast<std::size_t>(n), std::vector<AtomSet>(N, AtomSet(N)));
  for (int i = 0; i < n; ++i)
    for (std::size_t x = 0; x < N; ++x) {
      const AtomId a = m.origin[x];
      AtomSet row = lift(s.acc_row(i, a));
      if (rule == LiftRule::IndexMatching && targets.contains(a) &&
          pure[static_cast<std::size_t>(i)][static_cast<std::size_t>(s.class_of(i, a))]) {
        for (std::size_t y = 0; y < N; ++y)
          if (row.contains(static_cast<AtomId>(y)) && m.copy[y] != m.copy[x]) row.erase(static_cast<AtomId>(y));
      }
      spec.acc[static_cast<std::size_t>(i)][x] = std::move(row);
    }

  if (rule == LiftRule::Broken) {
    const AtomId a = targets.first();
    AtomId b = -1;
    s.acc_row(0, a).for_each([&](AtomId c) {
      if (b < 0 && c != a) b = c;
    });
    require(b >= 0, "broken lift rule needs an atom c_0-related to the first target");
    const AtomId a0 = copies_of[static_cast<std::size_t>(a)].front();
    for (AtomId y : copies_of[static_cast<std::size_t>(b)]) {
      spec.acc[0][static_cast<std::size_t>(a0)].erase(y);
      spec.acc[0][static_cast<std::size_t>(y)].erase(a0);
    }
  }

  spec.diag.assign(static_cast<std::size_t>(n), std::vector<AtomSet>(static_cast<std::size_t>(n), AtomSet(N)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      spec.diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lift(s.diag(i, j));

  if (s.has_substitutions()) {
    spec.sub.assign(static_cast<std::size_t>(n), std::vector<std::vector<AtomId>>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        auto& perm = spec.sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        perm.resize(N);
        for (std::size_t x = 0; x < N; ++x) {
          const AtomId b = s.substitute(i, j, m.origin[x]);
          require(targets.contains(b) == targets.contains(m.origin[x]),
                  "targets are not closed under substitution s_" + std::to_string(i) + std::to_string(j));
          perm[x] = copies_of[static_cast<std::size_t>(b)][static_cast<std::size_t>(m.copy[x])];
        }
      }
  }
  return CaSplit{CaAtomStructure(std::move(spec)), std::move(m)};
}

RaSplit split_atoms(const RaAtomStructure& s, const AtomSet& targets, int copies, LiftRule rule) {
  check_targets(targets, s.size(), copies);
  targets.for_each([&](AtomId a) {
    require(!s.is_identity(a), "identity atoms cannot be split");
    require(targets.contains(s.converse(a)), "targets must be closed under converse");
  });
  RaSplit out;
  if (copies == kOmegaCopies) {
    if (rule != LiftRule::Inherit)
      fail(ErrorKind::NonUniform, "lift rule '" + to_string(rule) + "' is not supported on symbolic copies");
    std::vector<std::string> names;
    out.map = make_map(s.size(), targets, copies, rule, s.names(), names);
    out.term.emplace(s, targets);
    return out;
  }
  std::vector<std::string> names;
  CopyMap m = make_map(s.size(), targets, copies, rule, s.names(), names);
  const std::size_t N = m.origin.size();
  std::map<std::pair<AtomId, int>, AtomId> id_of;
  for (std::size_t x = 0; x < N; ++x) id_of[{m.origin[x], m.copy[x]}] = static_cast<AtomId>(x);

  std::vector<AtomId> identity, converse(N);
  for (std::size_t x = 0; x < N; ++x) {
    if (s.is_identity(m.origin[x])) identity.push_back(static_cast<AtomId>(x));
    converse[x] = id_of.at({s.converse(m.origin[x]), m.copy[x]});
  }
  const std::vector<AtomId> conv = converse;
  const AtomId cut = targets.first();
  auto is_target = [&](AtomId x) { return targets.contains(m.origin[static_cast<std::size_t>(x)]); };
  auto copy = [&](AtomId x) { return m.copy[static_cast<std::size_t>(x)]; };
  auto consistent = [&](AtomId x, AtomId y, AtomId z) {
    const AtomId a = m.origin[static_cast<std::size_t>(x)], b = m.origin[static_cast<std::size_t>(y)],
                 c = m.origin[static_cast<std::size_t>(z)];
    if (!s.consistent(a, b, c)) return false;
    const bool ex = s.is_identity(a), ey = s.is_identity(b), ez = s.is_identity(c);
    if (ex && y != z) return false;
    if (ey && x != z) return false;
    if (ez && y != conv[static_cast<std::size_t>(x)]) return false;
    if (rule == LiftRule::IndexMatching && is_target(x) && is_target(y) && is_target(z))
      return copy(x) == copy(y) && copy(y) == copy(z);
    if (rule == LiftRule::Broken && !(ex || ey || ez)) {
      for (AtomId w : {x, y, z}) {
        const AtomId o = m.origin[static_cast<std::size_t>(w)];
        if (copy(w) == 0 && (o == cut || o == s.converse(cut))) return false;
      }
    }
    return true;
  };
  out.structure.emplace(std::move(names), std::move(identity), std::move(converse), consistent);
  out.map = std::move(m);
  return out;
}

CaAtomStructure merge_copies(const CaSplit& t) {
  const auto& s = t.structure;
  const int n = s.dimension();
  std::vector<AtomId> first;
  std::map<AtomId, AtomId> merged;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (merged.emplace(t.map.origin[x], static_cast<AtomId>(first.size())).second) first.push_back(static_cast<AtomId>(x));
  const std::size_t M = first.size();
  auto to_merged = [&](AtomId x) { return merged.at(t.map.origin[static_cast<std::size_t>(x)]); };
  CaAtomStructure::Spec spec;
  spec.dimension = n;
  for (AtomId x : first) spec.names.push_back(origin_name(s.name(x)));
  spec.acc.assign(static_cast<std::size_t>(n), std::vector<AtomSet>(M, AtomSet(M)));
  spec.diag.assign(static_cast<std::size_t>(n), std::vector<AtomSet>(static_cast<std::size_t>(n), AtomSet(M)));
  for (int i = 0; i < n; ++i)
    for (std::size_t x = 0; x < s.size(); ++x) {
      const AtomId a = to_merged(static_cast<AtomId>(x));
      s.acc_row(i, static_cast<AtomId>(x)).for_each([&](AtomId y) {
        spec.acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)].insert(to_merged(y));
      });
      for (int j = i + 1; j < n; ++j)
        if (s.diag(i, j).contains(static_cast<AtomId>(x)))
          spec.diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].insert(a);
    }
  if (s.has_substitutions()) {
    spec.sub.assign(static_cast<std::size_t>(n), std::vector<std::vector<AtomId>>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (AtomId x : first)
          spec.sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(to_merged(s.substitute(i, j, x)));
  }
  return CaAtomStructure(std::move(spec));
}

RaAtomStructure merge_copies(const RaSplit& t) {
  if (!t.structure) {
    const auto& base = t.term->base();
    return RaAtomStructure(base.names(),
                           [&] {
                             std::vector<AtomId> id;
                             base.identity().for_each([&](AtomId a) { id.push_back(a); });
                             return id;
                           }(),
                           base.converse_table(),
                           [&](AtomId a, AtomId b, AtomId c) { return base.consistent(a, b, c); });
  }
  const auto& s = *t.structure;
  std::vector<AtomId> first;
  std::map<AtomId, AtomId> merged;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (merged.emplace(t.map.origin[x], static_cast<AtomId>(first.size())).second) first.push_back(static_cast<AtomId>(x));
  const std::size_t M = first.size();
  auto to_merged = [&](AtomId x) { return merged.at(t.map.origin[static_cast<std::size_t>(x)]); };
  std::vector<std::string> names;
  std::vector<AtomId> identity, converse;
  for (AtomId x : first) {
    names.push_back(origin_name(s.name(x)));
    if (s.is_identity(x)) identity.push_back(to_merged(x));
    converse.push_back(to_merged(s.converse(x)));
  }
  std::vector<unsigned char> table(M * M * M, 0);
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      s.compose_atoms(static_cast<AtomId>(x), static_cast<AtomId>(y)).for_each([&](AtomId z) {
        const auto a = static_cast<std::size_t>(to_merged(static_cast<AtomId>(x)));
        const auto b = static_cast<std::size_t>(to_merged(static_cast<AtomId>(y)));
        const auto c = static_cast<std::size_t>(to_merged(z));
        table[(a * M + b) * M + c] = 1;
      });
  return RaAtomStructure(std::move(names), std::move(identity), std::move(converse),
                         [&](AtomId a, AtomId b, AtomId c) {
                           return table[(static_cast<std::size_t>(a) * M + static_cast<std::size_t>(b)) * M +
                                        static_cast<std::size_t>(c)] != 0;
                         });
}

AtomSet red_atoms(const CaAtomStructure& s) {
  AtomSet out(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    const ColouredGraph g = atom_graph(s, static_cast<AtomId>(a));
    for (const auto& e : g.edges)
      if (e && e->kind == ColourKind::Red) {
        out.insert(static_cast<AtomId>(a));
        break;
      }
  }
  return out;
}

AtomSet red_atoms(const RaAtomStructure& s) {
  AtomSet out(s.size());
  for (std::size_t a = 0; a < s.size(); ++a)
    if (!s.name(static_cast<AtomId>(a)).empty() && s.name(static_cast<AtomId>(a))[0] == 'r') out.insert(static_cast<AtomId>(a));
  return out;
}

namespace {

std::vector<AtomSet> theta_images(const CopyMap& m, std::size_t original, std::size_t split) {
  std::vector<AtomSet> image(original, AtomSet(split));
  for (std::size_t x = 0; x < split; ++x) image[static_cast<std::size_t>(m.origin[x])].insert(static_cast<AtomId>(x));
  return image;
}

AtomSet theta_of(const std::vector<AtomSet>& image, const AtomSet& x, std::size_t split) {
  AtomSet out(split);
  x.for_each([&](AtomId a) { out |= image[static_cast<std::size_t>(a)]; });
  return out;
}

// images of distinct atoms are nonempty, disjoint and cover the split universe
Report partition_report(const std::vector<AtomSet>& image, std::size_t split) {
  AtomSet seen(split);
  for (std::size_t a = 0; a < image.size(); ++a) {
    if (image[a].empty())
      return Report::failure("injective", {static_cast<int>(a)}, "atom has an empty image");
    if (image[a].intersects(seen))
      return Report::failure("join", {static_cast<int>(a)}, "images of distinct atoms overlap");
    seen |= image[a];
  }
  if (seen != AtomSet::full(split)) return Report::failure("complement", {}, "images do not cover the split structure");
  return Report::pass();
}

}  // namespace

ThetaResult theta_embedding(const CaAtomStructure& s, const CaSplit& t) {
  const auto& T = t.structure;
  require(t.map.origin.size() == T.size(), "copy map does not match the split structure");
  ThetaResult r;
  r.image = theta_images(t.map, s.size(), T.size());
  r.report = partition_report(r.image, T.size());
  if (!r.report.ok) return r;
  const int n = s.dimension();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (theta_of(r.image, s.diag(i, j), T.size()) != T.diag(i, j)) {
        r.report = Report::failure("diagonal", {i, j}, "theta(d_ij) differs from d_ij");
        return r;
      }
  for (std::size_t a = 0; a < s.size(); ++a) {
    const auto id = static_cast<AtomId>(a);
    AtomSet single(s.size());
    single.insert(id);
    for (int i = 0; i < n; ++i)
      if (theta_of(r.image, s.cylindrify(i, single), T.size()) != T.cylindrify(i, r.image[a])) {
        r.report = Report::failure("cylindrifier", {static_cast<int>(a), i},
                                   "theta(c_" + std::to_string(i) + " " + s.name(id) + ") differs from c_" +
                                       std::to_string(i) + " theta(" + s.name(id) + ")");
        return r;
      }
    if (s.has_substitutions() && T.has_substitutions())
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          AtomSet lhs = r.image[static_cast<std::size_t>(s.substitute(i, j, id))];
          AtomSet rhs(T.size());
          r.image[a].for_each([&](AtomId x) { rhs.insert(T.substitute(i, j, x)); });
          if (lhs != rhs) {
            r.report = Report::failure("substitution", {static_cast<int>(a), i, j},
                                       "theta does not commute with s_" + std::to_string(i) + std::to_string(j));
            return r;
          }
        }
  }
  return r;
}

ThetaResult theta_embedding(const RaAtomStructure& s, const RaSplit& t) {
  require(t.structure.has_value(), "theta_embedding needs a finite split");
  const auto& T = *t.structure;
  ThetaResult r;
  r.image = theta_images(t.map, s.size(), T.size());
  r.report = partition_report(r.image, T.size());
  if (!r.report.ok) return r;
  if (theta_of(r.image, s.identity(), T.size()) != T.identity()) {
    r.report = Report::failure("identity", {}, "theta(Id) differs from Id");
    return r;
  }
  for (std::size_t a = 0; a < s.size(); ++a) {
    AtomSet conv(T.size());
    r.image[a].for_each([&](AtomId x) { conv.insert(T.converse(x)); });
    if (conv != r.image[static_cast<std::size_t>(s.converse(static_cast<AtomId>(a)))]) {
      r.report = Report::failure("converse", {static_cast<int>(a)}, "theta does not commute with converse");
      return r;
    }
  }
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      const AtomSet lhs =
          theta_of(r.image, s.compose_atoms(static_cast<AtomId>(a), static_cast<AtomId>(b)), T.size());
      AtomSet rhs(T.size());
      r.image[a].for_each([&](AtomId x) {
        r.image[b].for_each([&](AtomId y) { rhs |= T.compose_atoms(x, y); });
      });
      if (lhs != rhs) {
        r.report = Report::failure("composition", {static_cast<int>(a), static_cast<int>(b)},
                                   "theta(" + s.name(static_cast<AtomId>(a)) + ";" + s.name(static_cast<AtomId>(b)) +
                                       ") differs from theta(" + s.name(static_cast<AtomId>(a)) + ");theta(" +
                                       s.name(static_cast<AtomId>(b)) + ")");
        return r;
      }
    }
  return r;
}

}  // namespace cylgame
