#pragma once

#include <vector>

#include "cylgame/network.hpp"
#include "cylgame/rainbow.hpp"
#include "cylgame/strategy.hpp"

namespace cylgame {

/// Coloured graph read off a network of a rainbow structure: edge (u, v) is
/// taken from the atom at (u, v, v, ..., v).
ColouredGraph network_graph(const CaAtomStructure& s, const Network& net);

/// Opening atom of a cone: nodes 0..n-2 form the base with w_0 edges,
/// node n-1 is the apex with M(0, n-1) = g_0^tint and M(j, n-1) = g_j.
AtomId cone_atom(const CaAtomStructure& s, int tint);

/// forall's cone bombardment on a rainbow CA structure with m nodes. He opens
/// with a cone of tint tints[0], then keeps challenging the common base for a
/// new apex whose tint is the first entry of `tints` after the lowest-placed
/// one present (so tints are used in order). When the network is full he
/// deletes the apex whose tint comes earliest in `tints`.
ScriptedForall cone_bombardment(const CaAtomStructure& s, int m, std::vector<int> tints);

/// Decreasing-sequence strategy on the order rainbow: tints 0, -1, ..., -depth.
ScriptedForall decreasing_sequence(const CaAtomStructure& s, int m, int green_depth);

}  // namespace cylgame
