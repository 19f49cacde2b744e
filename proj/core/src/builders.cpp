#include "cylgame/builders.hpp"

#include "cylgame/error.hpp"

namespace cylgame {

RaAtomStructure maddux_E(int k) {
  require(k >= 1, "maddux_E needs k >= 1");
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i)
    names.push_back(k <= 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i));
  auto s = make_symmetric_integral(std::move(names), [](AtomId a, AtomId b, AtomId c) { return !(a == b && b == c); });
  s.set_rule("monochromatic-forbidden");
  return s;
}

RaAtomStructure bsl_structure(int greens, int reds) {
  require(greens >= 1 && reds >= 1, "bsl_structure needs at least one green and one red");
  std::vector<std::string> names;
  for (int i = 0; i < greens; ++i) names.push_back("g0^" + std::to_string(i));
  for (int j = 1; j <= reds; ++j) names.push_back("r_" + std::to_string(j));
  const AtomId first_red = greens + 1;
  return make_symmetric_integral(std::move(names), [first_red](AtomId a, AtomId b, AtomId c) {
    const bool ga = a < first_red, gb = b < first_red, gc = c < first_red;
    if (ga && gb && gc) return false;
    if (!ga && a == b && b == c) return false;
    return true;
  });
}

CaAtomStructure full_set_structure(int n, int base) {
  require(n >= 1 && base >= 1, "full_set_structure needs n >= 1 and base >= 1");
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= static_cast<std::size_t>(base);
    require(count <= 100000, "full set structure too large");
  }
  std::vector<std::vector<int>> tuples(count, std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> names(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t r = idx;
    for (int i = n - 1; i >= 0; --i) {
      tuples[idx][static_cast<std::size_t>(i)] = static_cast<int>(r % static_cast<std::size_t>(base));
      r /= static_cast<std::size_t>(base);
    }
    names[idx] = "t";
    for (int i = 0; i < n; ++i) names[idx] += (i ? "." : "") + std::to_string(tuples[idx][static_cast<std::size_t>(i)]);
  }
  auto index_of = [&](const std::vector<int>& t) {
    std::size_t idx = 0;
    for (int v : t) idx = idx * static_cast<std::size_t>(base) + static_cast<std::size_t>(v);
    return static_cast<AtomId>(idx);
  };
  std::vector<std::vector<int>> class_of(static_cast<std::size_t>(n), std::vector<int>(count));
  for (int i = 0; i < n; ++i)
    for (std::size_t idx = 0; idx < count; ++idx) {
      auto t = tuples[idx];
      t[static_cast<std::size_t>(i)] = 0;
      class_of[static_cast<std::size_t>(i)][idx] = index_of(t);
    }
  std::vector<std::vector<AtomSet>> diag(static_cast<std::size_t>(n), std::vector<AtomSet>(static_cast<std::size_t>(n), AtomSet(count)));
  std::vector<std::vector<std::vector<AtomId>>> sub(static_cast<std::size_t>(n), std::vector<std::vector<AtomId>>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto& p = sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (std::size_t idx = 0; idx < count; ++idx) {
        const auto& t = tuples[idx];
        if (t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)])
          diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].insert(static_cast<AtomId>(idx));
        auto u = t;
        std::swap(u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(j)]);
        p.push_back(index_of(u));
      }
    }
  return CaAtomStructure::from_classes(n, std::move(names), class_of, std::move(diag), std::move(sub));
}

}  // namespace cylgame
