#include "cylgame/neat_reduct.hpp"

#include <numeric>
#include <string>

#include "cylgame/error.hpp"

namespace cylgame {

NeatReduct neat_reduct(const CaAtomStructure& s, int n) {
  const int m = s.dimension();
  require(n >= 1 && n < m, "neat reduct needs 1 <= n < dimension");
  require(s.equivalence_accessibility(), "neat reduct needs equivalence accessibility relations");
  const std::size_t size = s.size();

  // Components of the join of acc[n..m-1].
  std::vector<std::size_t> parent(size);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int k = n; k < m; ++k)
    for (std::size_t a = 0; a < size; ++a)
      s.acc_row(k, static_cast<AtomId>(a)).for_each([&](AtomId b) {
        parent[find(a)] = find(static_cast<std::size_t>(b));
      });

  std::vector<int> comp_of(size, -1);
  std::vector<AtomSet> extension;
  for (std::size_t a = 0; a < size; ++a) {
    const std::size_t root = find(a);
    if (comp_of[root] < 0) {
      comp_of[root] = static_cast<int>(extension.size());
      extension.emplace_back(size);
    }
    comp_of[a] = comp_of[root];
    extension[static_cast<std::size_t>(comp_of[a])].insert(static_cast<AtomId>(a));
  }
  const std::size_t k = extension.size();

  std::vector<std::string> names;
  for (const auto& ext : extension) {
    std::string name;
    ext.for_each([&](AtomId a) {
      if (!name.empty()) name += '|';
      name += s.name(a);
    });
    names.push_back(std::move(name));
  }

  auto components_of = [&](const AtomSet& x) {
    AtomSet out(k);
    x.for_each([&](AtomId a) { out.insert(comp_of[static_cast<std::size_t>(a)]); });
    return out;
  };

  CaAtomStructure::Spec spec;
  spec.dimension = n;
  spec.names = std::move(names);
  for (int i = 0; i < n; ++i) {
    std::vector<AtomSet> rel;
    for (std::size_t c = 0; c < k; ++c) rel.push_back(components_of(s.cylindrify(i, extension[c])));
    spec.acc.push_back(std::move(rel));
  }
  spec.diag.assign(static_cast<std::size_t>(n), std::vector<AtomSet>(static_cast<std::size_t>(n), AtomSet(k)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const AtomSet& d = s.diag(i, j);
      AtomSet below(k);
      for (std::size_t c = 0; c < k; ++c) {
        if (extension[c].subset_of(d))
          below.insert(static_cast<AtomId>(c));
        else
          require(!extension[c].intersects(d),
                  "d" + std::to_string(i) + std::to_string(j) + " is not fixed by the higher cylindrifiers");
      }
      spec.diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = below;
    }
  if (s.has_substitutions()) {
    bool clean = true;
    std::vector<std::vector<std::vector<AtomId>>> sub(static_cast<std::size_t>(n),
                                                      std::vector<std::vector<AtomId>>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n && clean; ++i)
      for (int j = i + 1; j < n && clean; ++j)
        for (std::size_t c = 0; c < k && clean; ++c) {
          AtomSet image(size);
          extension[c].for_each([&](AtomId a) { image.insert(s.substitute(i, j, a)); });
          const AtomId target = comp_of[static_cast<std::size_t>(image.first())];
          if (!(image == extension[static_cast<std::size_t>(target)])) clean = false;
          sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(target);
        }
    if (clean) spec.sub = std::move(sub);
  }
  return NeatReduct{CaAtomStructure(std::move(spec)), std::move(extension)};
}

AtomSet embed_in_source(const NeatReduct& r, const AtomSet& reduct_element) {
  require(reduct_element.universe() == r.extension.size(), "element is not over the reduct");
  AtomSet out(r.extension.empty() ? 0 : r.extension.front().universe());
  reduct_element.for_each([&](AtomId c) { out |= r.extension[static_cast<std::size_t>(c)]; });
  return out;
}

}  // namespace cylgame
