#pragma once

#include <vector>

#include "cylgame/ca_atom_structure.hpp"

namespace cylgame {

/// The n-dimensional neat reduct of Cm(S) for an m-dimensional S: the
/// subalgebra of elements X with c_k X = X for every n <= k < m, equipped with
/// the first n cylindrifiers and diagonals.
struct NeatReduct {
  /// Atoms of the reduct are the minimal nonzero fixed elements.
  CaAtomStructure algebra;
  /// For every reduct atom, the set of source atoms it consists of.
  std::vector<AtomSet> extension;
};

/// Requires 1 <= n < dimension(S) and equivalence accessibility.
NeatReduct neat_reduct(const CaAtomStructure& s, int n);

/// Image of a reduct element (a set of reduct atoms) inside Cm(S).
AtomSet embed_in_source(const NeatReduct& r, const AtomSet& reduct_element);

}  // namespace cylgame
