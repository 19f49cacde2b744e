#pragma once

#include <cstddef>
#include <optional>

#include "cylgame/ra_atom_structure.hpp"
#include "cylgame/report.hpp"

namespace cylgame {

/// Square representation on base {0..base_size-1}: every ordered pair of
/// points carries one atom.
struct Representation {
  int base_size = 0;
  std::vector<AtomId> edge;

  Representation() = default;
  explicit Representation(int b) : base_size(b), edge(static_cast<std::size_t>(b * b), -1) {}
  AtomId at(int x, int y) const { return edge[static_cast<std::size_t>(x * base_size + y)]; }
  AtomId& at(int x, int y) { return edge[static_cast<std::size_t>(x * base_size + y)]; }

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Checks, in order: labels in range, identity exactly on the diagonal
/// (integral structures) or on it at least, converse symmetry, consistent
/// triangles, every atom used, and the witness condition.
Report rep_verify(const RaAtomStructure& s, const Representation& r);

struct RepSearchOptions {
  std::size_t max_nodes = 200'000'000;  // search-tree nodes before Budget
};

struct RepSearchResult {
  std::optional<Representation> rep;
  std::size_t nodes_visited = 0;
};

/// Exhaustive backtracking for a square representation of an integral
/// structure on exactly b points. The first point's row is kept sorted to
/// break the symmetry among the others; the first representation found in
/// lexicographic edge order (under that restriction) is returned.
RepSearchResult rep_search(const RaAtomStructure& s, int b, const RepSearchOptions& opt = {});

}  // namespace cylgame
