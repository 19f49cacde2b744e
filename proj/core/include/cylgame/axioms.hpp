#pragma once

#include "cylgame/ca_atom_structure.hpp"
#include "cylgame/ra_atom_structure.hpp"
#include "cylgame/report.hpp"

namespace cylgame {

/// Atom-level conditions for Cm(S) to be a relation algebra: converse is an
/// involution, identity atoms are self-converse, the identity law, Peircean
/// closure of the triple table, and associativity
///   exists x [(a,b,x) and (x,c,d)]  iff  exists y [(b,c,y) and (a,y,d)].
/// Conditions are checked in that order; the first failure is reported with
/// its witnessing atoms.
Report check_ra_axioms(const RaAtomStructure& s);

/// Atom-level conditions for Cm(S) to be a cylindric algebra: each acc[i] is
/// an equivalence relation, c_i c_j = c_j c_i on atoms, c_k(d_ik . d_kj) = d_ij
/// for k outside {i,j}, c_i d_ij is the unit, and distinct atoms below d_ij are
/// never acc_i-related. Substitutions, when present, must be involutive
/// permutations.
Report check_ca_axioms(const CaAtomStructure& s);

}  // namespace cylgame
