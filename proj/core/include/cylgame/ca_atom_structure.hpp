#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cylgame/atom_set.hpp"

namespace cylgame {

/// Finite cylindric atom structure of dimension n: per-index accessibility
/// relations acc[i] (for cylindrifier c_i), diagonal sets d_ij and optional
/// transposition substitutions s_[i,j] given as atom permutations.
///
/// Accessibility is stored as a full relation so that malformed inputs can be
/// represented and rejected by the checker; when a relation is an equivalence
/// the class decomposition is cached for fast cylindrification.
class CaAtomStructure {
 public:
  struct Spec {
    int dimension = 0;
    std::vector<std::string> names;
    /// acc[i][a] = atoms related to a under acc_i.
    std::vector<std::vector<AtomSet>> acc;
    /// diag[i][j] for i < j; other entries ignored.
    std::vector<std::vector<AtomSet>> diag;
    /// Optional: sub[i][j] for i < j is a permutation of atom ids.
    std::vector<std::vector<std::vector<AtomId>>> sub;
  };

  explicit CaAtomStructure(Spec spec);

  /// Convenience: accessibility given as class ids per atom (always an
  /// equivalence relation).
  static CaAtomStructure from_classes(int dimension, std::vector<std::string> names,
                                      const std::vector<std::vector<int>>& class_of,
                                      std::vector<std::vector<AtomSet>> diag,
                                      std::vector<std::vector<std::vector<AtomId>>> sub = {});

  int dimension() const { return dim_; }
  std::size_t size() const { return spec_.names.size(); }
  const std::string& name(AtomId a) const { return spec_.names[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& names() const { return spec_.names; }
  std::optional<AtomId> find(const std::string& name) const;
  AtomId at(const std::string& name) const;

  bool related(int i, AtomId a, AtomId b) const {
    return spec_.acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)].contains(b);
  }
  const AtomSet& acc_row(int i, AtomId a) const {
    return spec_.acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
  }

  /// d_ij; d_ii is the full set.
  const AtomSet& diag(int i, int j) const;

  bool has_substitutions() const { return !spec_.sub.empty(); }
  AtomId substitute(int i, int j, AtomId a) const;

  /// True when acc[i] is an equivalence relation for every i (checked once).
  bool equivalence_accessibility() const { return equivalence_; }
  /// Class id of a under acc_i; only meaningful when equivalence_accessibility().
  int class_of(int i, AtomId a) const {
    return class_of_[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
  }
  const AtomSet& class_members(int i, int cls) const {
    return class_members_[static_cast<std::size_t>(i)][static_cast<std::size_t>(cls)];
  }
  std::size_t class_count(int i) const { return class_members_[static_cast<std::size_t>(i)].size(); }

  AtomSet empty_set() const { return AtomSet(size()); }
  AtomSet full_set() const { return AtomSet::full(size()); }

  /// c_i X = {a : exists b in X with a acc_i b}.
  AtomSet cylindrify(int i, const AtomSet& x) const;

  const Spec& spec() const { return spec_; }

 private:
  Spec spec_;
  int dim_;
  std::unordered_map<std::string, AtomId> by_name_;
  AtomSet full_;
  bool equivalence_ = false;
  std::vector<std::vector<int>> class_of_;
  std::vector<std::vector<AtomSet>> class_members_;
};

}  // namespace cylgame
