#include "cylgame/ra_atom_structure.hpp"

#include "cylgame/error.hpp"

namespace cylgame {

RaAtomStructure::RaAtomStructure(std::vector<std::string> names, std::vector<AtomId> identity,
                                 std::vector<AtomId> converse,
                                 const TriplePredicate& consistent)
    : names_(std::move(names)), converse_(std::move(converse)) {
  const std::size_t n = names_.size();
  require(n > 0, "atom structure must have at least one atom");
  require(converse_.size() == n, "converse table size does not match atom count");
  for (std::size_t a = 0; a < n; ++a) {
    require(by_name_.emplace(names_[a], static_cast<AtomId>(a)).second,
            "duplicate atom name '" + names_[a] + "'");
    require(converse_[a] >= 0 && static_cast<std::size_t>(converse_[a]) < n,
            "converse of '" + names_[a] + "' out of range");
  }
  identity_ = AtomSet(n);
  for (AtomId e : identity) {
    require(e >= 0 && static_cast<std::size_t>(e) < n, "identity atom out of range");
    identity_.insert(e);
  }

  table_.assign(n * n * n, 0);
  compose_.assign(n * n, AtomSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (consistent(static_cast<AtomId>(a), static_cast<AtomId>(b), static_cast<AtomId>(c))) {
          table_[(a * n + b) * n + c] = 1;
          compose_[a * n + b].insert(static_cast<AtomId>(c));
        }
}

std::optional<AtomId> RaAtomStructure::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

AtomId RaAtomStructure::at(const std::string& name) const {
  auto a = find(name);
  require(a.has_value(), "unknown atom '" + name + "'");
  return *a;
}

RaAtomStructure make_symmetric_integral(std::vector<std::string> non_identity_names,
                                        const RaAtomStructure::TriplePredicate& rule) {
  std::vector<std::string> names{"Id"};
  for (auto& s : non_identity_names) names.push_back(std::move(s));
  std::vector<AtomId> conv(names.size());
  for (std::size_t a = 0; a < names.size(); ++a) conv[a] = static_cast<AtomId>(a);
  auto pred = [&](AtomId a, AtomId b, AtomId c) {
    if (a == 0) return b == c;
    if (b == 0) return a == c;
    if (c == 0) return a == b;
    return rule(a, b, c);
  };
  return RaAtomStructure(std::move(names), {0}, std::move(conv), pred);
}

}  // namespace cylgame
