#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cylgame/atom_set.hpp"
#include "cylgame/ca_atom_structure.hpp"
#include "cylgame/fc_element.hpp"
#include "cylgame/ra_atom_structure.hpp"
#include "cylgame/report.hpp"

namespace cylgame {

/// How consistency (RA) or accessibility (CA) is lifted to copies.
///   Inherit        copies behave like their original; identity triples need
///                  equal copies.
///   IndexMatching  RA: a triple of three copies needs one common index.
///                  CA: inside an acc_i class made only of target atoms,
///                  copies are related only with equal indices.
///   Broken         Inherit with copy 0 of the first target cut off (a
///                  negative control for theta_embedding).
enum class LiftRule { Inherit, IndexMatching, Broken };
std::string to_string(LiftRule r);  // "inherit", "index-matching", "broken"
LiftRule lift_rule_from_string(const std::string& s);

inline constexpr int kOmegaCopies = -1;

/// Where each atom of a split structure came from. Targets become copies
/// named "<name>#<j>"; other atoms keep their name and copy index 0.
struct CopyMap {
  std::vector<AtomId> origin;
  std::vector<int> copy;
  AtomSet targets;  // over the original structure
  int copies = 1;
  LiftRule rule = LiftRule::Inherit;
};

struct CaSplit {
  CaAtomStructure structure;
  CopyMap map;
};

/// Symbolic splits carry only the term algebra; finite ones carry the
/// structure.
struct RaSplit {
  std::optional<RaAtomStructure> structure;
  std::optional<FcAlgebra> term;
  CopyMap map;
};

/// copies >= 1. Targets must be closed under every substitution. Symbolic
/// copies are not available for cylindric structures.
CaSplit split_atoms(const CaAtomStructure& s, const AtomSet& targets, int copies,
                    LiftRule rule = LiftRule::Inherit);
/// copies >= 1 or kOmegaCopies. Targets: non-identity, closed under converse.
/// Symbolic copies need the Inherit rule (NonUniform otherwise).
RaSplit split_atoms(const RaAtomStructure& s, const AtomSet& targets, int copies,
                    LiftRule rule = LiftRule::Inherit);

/// Collapses copies back onto their originals (two originals are related or
/// consistent when some of their copies are).
CaAtomStructure merge_copies(const CaSplit& t);
RaAtomStructure merge_copies(const RaSplit& t);

/// Atoms whose graph carries a red edge (rainbow structures).
AtomSet red_atoms(const CaAtomStructure& s);
AtomSet red_atoms(const RaAtomStructure& s);

/// Theta sends each atom to the join of its copies. The report checks
/// injectivity and the preservation equations atom by atom.
struct ThetaResult {
  std::vector<AtomSet> image;
  Report report;
};
ThetaResult theta_embedding(const CaAtomStructure& s, const CaSplit& t);
ThetaResult theta_embedding(const RaAtomStructure& s, const RaSplit& t);

}  // namespace cylgame
