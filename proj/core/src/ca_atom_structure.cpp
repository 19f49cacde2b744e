#include "cylgame/ca_atom_structure.hpp"

#include <algorithm>

#include "cylgame/error.hpp"

namespace cylgame {

namespace {

bool is_equivalence(const std::vector<AtomSet>& rel) {
  const std::size_t n = rel.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!rel[a].contains(static_cast<AtomId>(a))) return false;
    bool ok = true;
    rel[a].for_each([&](AtomId b) {
      // symmetric and transitive: related atoms have identical rows
      if (ok && !(rel[static_cast<std::size_t>(b)] == rel[a])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

CaAtomStructure::CaAtomStructure(Spec spec) : spec_(std::move(spec)), dim_(spec_.dimension) {
  const std::size_t n = spec_.names.size();
  require(n > 0, "atom structure must have at least one atom");
  require(dim_ >= 1, "dimension must be positive");
  require(spec_.acc.size() == static_cast<std::size_t>(dim_), "acc must have one relation per index");
  for (std::size_t a = 0; a < n; ++a)
    require(by_name_.emplace(spec_.names[a], static_cast<AtomId>(a)).second,
            "duplicate atom name '" + spec_.names[a] + "'");
  for (auto& rel : spec_.acc) {
    require(rel.size() == n, "accessibility relation has wrong size");
    for (auto& row : rel) require(row.universe() == n, "accessibility row has wrong universe");
  }
  full_ = AtomSet::full(n);
  spec_.diag.resize(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    spec_.diag[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(dim_), AtomSet(n));
    for (int j = 0; j < dim_; ++j)
      require(spec_.diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].universe() == n,
              "diagonal has wrong universe");
  }
  // Mirror i<j into j>i and fill d_ii.
  for (int i = 0; i < dim_; ++i) {
    spec_.diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = full_;
    for (int j = i + 1; j < dim_; ++j)
      spec_.diag[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          spec_.diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  if (!spec_.sub.empty()) {
    require(spec_.sub.size() == static_cast<std::size_t>(dim_), "substitution table has wrong size");
    for (int i = 0; i < dim_; ++i) {
      spec_.sub[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(dim_));
      for (int j = i + 1; j < dim_; ++j) {
        auto& p = spec_.sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        require(p.size() == n, "substitution s_[" + std::to_string(i) + "," + std::to_string(j) +
                                   "] must map every atom");
        for (AtomId b : p) require(b >= 0 && static_cast<std::size_t>(b) < n, "substitution out of range");
      }
    }
  }

  equivalence_ = true;
  for (auto& rel : spec_.acc)
    if (!is_equivalence(rel)) equivalence_ = false;
  if (equivalence_) {
    class_of_.assign(static_cast<std::size_t>(dim_), std::vector<int>(n, -1));
    class_members_.assign(static_cast<std::size_t>(dim_), {});
    for (int i = 0; i < dim_; ++i) {
      auto& cls = class_of_[static_cast<std::size_t>(i)];
      auto& mem = class_members_[static_cast<std::size_t>(i)];
      for (std::size_t a = 0; a < n; ++a) {
        if (cls[a] >= 0) continue;
        const int id = static_cast<int>(mem.size());
        mem.push_back(spec_.acc[static_cast<std::size_t>(i)][a]);
        mem.back().for_each([&](AtomId b) { cls[static_cast<std::size_t>(b)] = id; });
      }
    }
  }
}

CaAtomStructure CaAtomStructure::from_classes(int dimension, std::vector<std::string> names,
                                              const std::vector<std::vector<int>>& class_of,
                                              std::vector<std::vector<AtomSet>> diag,
                                              std::vector<std::vector<std::vector<AtomId>>> sub) {
  const std::size_t n = names.size();
  Spec spec;
  spec.dimension = dimension;
  spec.names = std::move(names);
  spec.diag = std::move(diag);
  spec.sub = std::move(sub);
  require(class_of.size() == static_cast<std::size_t>(dimension), "class table has wrong size");
  for (const auto& cls : class_of) {
    require(cls.size() == n, "class table row has wrong size");
    int max_cls = -1;
    for (int c : cls) max_cls = std::max(max_cls, c);
    std::vector<AtomSet> members(static_cast<std::size_t>(max_cls + 1), AtomSet(n));
    for (std::size_t a = 0; a < n; ++a) members[static_cast<std::size_t>(cls[a])].insert(static_cast<AtomId>(a));
    std::vector<AtomSet> rel(n);
    for (std::size_t a = 0; a < n; ++a) rel[a] = members[static_cast<std::size_t>(cls[a])];
    spec.acc.push_back(std::move(rel));
  }
  return CaAtomStructure(std::move(spec));
}

std::optional<AtomId> CaAtomStructure::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

AtomId CaAtomStructure::at(const std::string& name) const {
  auto a = find(name);
  require(a.has_value(), "unknown atom '" + name + "'");
  return *a;
}

const AtomSet& CaAtomStructure::diag(int i, int j) const {
  require(i >= 0 && j >= 0 && i < dim_ && j < dim_, "diagonal index out of range");
  return spec_.diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

AtomId CaAtomStructure::substitute(int i, int j, AtomId a) const {
  require(has_substitutions(), "structure has no substitutions");
  require(i >= 0 && j >= 0 && i < dim_ && j < dim_, "substitution index out of range");
  if (i == j) return a;
  if (i > j) std::swap(i, j);
  return spec_.sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(a)];
}

AtomSet CaAtomStructure::cylindrify(int i, const AtomSet& x) const {
  require(i >= 0 && i < dim_, "cylindrifier index out of range");
  AtomSet out(size());
  if (equivalence_) {
    std::vector<char> seen(class_count(i), 0);
    x.for_each([&](AtomId b) {
      const int c = class_of(i, b);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        out |= class_members(i, c);
      }
    });
    return out;
  }
  for (std::size_t a = 0; a < size(); ++a)
    if (acc_row(i, static_cast<AtomId>(a)).intersects(x)) out.insert(static_cast<AtomId>(a));
  return out;
}

}  // namespace cylgame
