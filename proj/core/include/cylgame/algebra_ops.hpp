#pragma once

#include <variant>

#include "cylgame/atom_set.hpp"
#include "cylgame/ca_atom_structure.hpp"
#include "cylgame/fc_element.hpp"
#include "cylgame/ra_atom_structure.hpp"

namespace cylgame {

/// Carrier for elements of Cm(At S) (a dense atom set) or of the term algebra
/// of a symbolic split (an FcElement). Operations reject mixed operands.
using AlgebraElement = std::variant<AtomSet, FcElement>;

AtomSet ra_compose(const RaAtomStructure& s, const AtomSet& x, const AtomSet& y);
AlgebraElement ra_compose(const RaAtomStructure& s, const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement ra_compose(const FcAlgebra& t, const AlgebraElement& x, const AlgebraElement& y);

AtomSet ra_converse(const RaAtomStructure& s, const AtomSet& x);
AlgebraElement ra_converse(const FcAlgebra& t, const AlgebraElement& x);

AtomSet ca_cylindrify(const CaAtomStructure& s, int i, const AtomSet& x);
AtomSet ca_diagonal(const CaAtomStructure& s, int i, int j);
/// s_[i,j] X, image of X under the transposition substitution.
AtomSet ca_substitute(const CaAtomStructure& s, int i, int j, const AtomSet& x);

AlgebraElement complement(const FcAlgebra* t, const AlgebraElement& x);
AlgebraElement unite(const FcAlgebra* t, const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement intersect(const FcAlgebra* t, const AlgebraElement& x, const AlgebraElement& y);

}  // namespace cylgame
