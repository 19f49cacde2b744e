#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cylgame/atom_set.hpp"
#include "cylgame/ra_atom_structure.hpp"

namespace cylgame {

using CopyIndex = std::uint32_t;

/// A subset of an unbounded, index-addressed block of copies: either the
/// finite set Fin(S) or the cofinite set Cofin(S) = block \ S.
struct CopySet {
  bool cofinite = false;
  std::set<CopyIndex> indices;

  static CopySet none() { return {}; }
  static CopySet all() { return {true, {}}; }
  static CopySet finite(std::set<CopyIndex> s) { return {false, std::move(s)}; }

  bool contains(CopyIndex k) const { return cofinite != (indices.count(k) != 0); }
  bool empty() const { return !cofinite && indices.empty(); }
  bool is_all() const { return cofinite && indices.empty(); }

  CopySet complement() const { return {!cofinite, indices}; }
  friend CopySet operator|(const CopySet& a, const CopySet& b);
  friend CopySet operator&(const CopySet& a, const CopySet& b);
  friend bool operator==(const CopySet&, const CopySet&) = default;
};

/// Element of the term algebra of a symbolically split structure. The atom
/// universe is partitioned into one finite block (the atoms that were not
/// split, stored as an AtomSet over the original structure) and one symbolic
/// block per split atom holding its copies t^0, t^1, ...
struct FcElement {
  AtomSet finite;
  std::vector<CopySet> symbolic;

  friend bool operator==(const FcElement&, const FcElement&) = default;
};

/// Term algebra over split(S, targets, omega) with the inherited lift rule:
/// a triple of copies is consistent iff the triple of originals is, except
/// that identity triples demand equal copies ((e, x^i, y^j) needs x^i = y^j).
/// This rule is index-uniform, so every operation below stays inside the
/// finite/cofinite elements.
class FcAlgebra {
 public:
  /// targets: non-identity atoms closed under converse; must be nonempty.
  FcAlgebra(RaAtomStructure base, const AtomSet& targets);

  const RaAtomStructure& base() const { return base_; }
  const std::vector<AtomId>& targets() const { return targets_; }
  bool is_target(AtomId a) const { return block_of_[static_cast<std::size_t>(a)] >= 0; }
  /// Index of the symbolic block for target atom a, or -1.
  int block_of(AtomId a) const { return block_of_[static_cast<std::size_t>(a)]; }

  FcElement zero() const;
  FcElement one() const;
  FcElement identity() const;
  /// The atom a (non-target) or the copy a^k (target).
  FcElement atom(AtomId a, CopyIndex k = 0) const;

  bool contains(const FcElement& x, AtomId a, CopyIndex k = 0) const;
  bool valid(const FcElement& x) const;

  FcElement complement(const FcElement& x) const;
  FcElement unite(const FcElement& x, const FcElement& y) const;
  FcElement intersect(const FcElement& x, const FcElement& y) const;
  FcElement converse(const FcElement& x) const;
  FcElement compose(const FcElement& x, const FcElement& y) const;

  std::string to_string(const FcElement& x) const;

 private:
  /// Original atoms with a nonempty footprint in x.
  AtomSet support(const FcElement& x) const;

  RaAtomStructure base_;
  std::vector<AtomId> targets_;
  std::vector<int> block_of_;
  AtomSet target_set_;
};

}  // namespace cylgame
