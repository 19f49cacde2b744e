#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cylgame/atom_set.hpp"

namespace cylgame {

/// Finite relation-algebra atom structure: atoms with display names, a set of
/// identity atoms, a converse involution and a ternary consistency predicate.
/// The predicate is materialised into a dense table on construction, together
/// with the atom-level composition table a;b = {c : (a,b,c) consistent}.
class RaAtomStructure {
 public:
  using TriplePredicate = std::function<bool(AtomId, AtomId, AtomId)>;

  /// Throws InvalidArgument on an empty atom list, duplicate names, an
  /// out-of-range converse entry or an identity atom that is not an atom.
  RaAtomStructure(std::vector<std::string> names, std::vector<AtomId> identity,
                  std::vector<AtomId> converse, const TriplePredicate& consistent);

  std::size_t size() const { return names_.size(); }
  const std::string& name(AtomId a) const { return names_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<AtomId> find(const std::string& name) const;
  AtomId at(const std::string& name) const;  // throws when unknown

  bool is_identity(AtomId a) const { return identity_.contains(a); }
  const AtomSet& identity() const { return identity_; }
  bool integral() const { return identity_.count() == 1; }
  AtomId converse(AtomId a) const { return converse_[static_cast<std::size_t>(a)]; }
  const std::vector<AtomId>& converse_table() const { return converse_; }

  bool consistent(AtomId a, AtomId b, AtomId c) const {
    return table_[index(a, b, c)] != 0;
  }
  /// {c : (a,b,c) consistent}
  const AtomSet& compose_atoms(AtomId a, AtomId b) const {
    return compose_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
  }

  AtomSet empty_set() const { return AtomSet(size()); }
  AtomSet full_set() const { return AtomSet::full(size()); }

  /// Optional intensional rule name (e.g. "monochromatic-forbidden") carried
  /// for round-tripping through the text format.
  const std::string& rule() const { return rule_; }
  void set_rule(std::string rule) { rule_ = std::move(rule); }

 private:
  std::size_t index(AtomId a, AtomId b, AtomId c) const {
    const std::size_t n = size();
    return (static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n +
           static_cast<std::size_t>(c);
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> by_name_;
  AtomSet identity_;
  std::vector<AtomId> converse_;
  std::vector<unsigned char> table_;
  std::vector<AtomSet> compose_;
  std::string rule_;
};

/// Builds a symmetric integral structure from a rule on non-identity atoms.
/// Atom 0 is "Id"; the identity triples are the standard ones.
RaAtomStructure make_symmetric_integral(std::vector<std::string> non_identity_names,
                                        const RaAtomStructure::TriplePredicate& rule);

}  // namespace cylgame
