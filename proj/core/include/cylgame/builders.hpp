#pragma once

#include <string>

#include "cylgame/ca_atom_structure.hpp"
#include "cylgame/ra_atom_structure.hpp"

namespace cylgame {

/// Maddux E_k(2,3): Id plus k symmetric atoms named a, b, c, ... (a0, a1, ...
/// beyond 26); a triple of non-identity atoms is forbidden iff monochromatic.
RaAtomStructure maddux_E(int k);

/// Finite truncation of the bsl structure: Id, greens g0^0..g0^{g-1}, reds
/// r_1..r_r, all symmetric. Forbidden: non-standard identity triples,
/// (r_j, r_j, r_j) and all-green triangles.
RaAtomStructure bsl_structure(int greens, int reds);

/// Atom structure of the full cylindric set algebra on ^n(base): atoms are the
/// tuples ("t0.1.2"), c_i relates tuples agreeing off i, d_ij holds tuples
/// with equal i and j entries, s_[i,j] swaps entries i and j.
CaAtomStructure full_set_structure(int n, int base);

}  // namespace cylgame
