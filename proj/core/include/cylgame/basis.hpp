#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cylgame/ca_atom_structure.hpp"
#include "cylgame/network.hpp"
#include "cylgame/ra_atom_structure.hpp"

namespace cylgame {

struct BasisOptions {
  /// Require a replacement matrix for every unwitnessed and witnessed
  /// challenge alike (no reuse of an existing witness node).
  bool strict_fresh = false;
  std::size_t max_items = 5'000'000;
  int jobs = 0;
};

struct Basis {
  int m = 0;
  std::vector<BasicMatrix> matrices;
};

struct CaBasis {
  int m = 0;
  std::vector<Network> networks;
};

/// Outcome of a basis search: the greatest fixed point when it is nonempty
/// and covers every atom, otherwise nullopt with a reason.
template <class B>
struct BasisResult {
  std::optional<B> basis;
  std::size_t candidates = 0;
  std::size_t pruning_rounds = 0;
  std::vector<std::size_t> pruned_per_round;
  std::vector<std::string> uncovered;
  std::string reason;
};

/// Greatest fixed point over Mat_m(S) of "every triangle challenge (x,y,a,b)
/// with (a,b,N(x,y)) consistent is met for every z outside {x,y} by a member
/// agreeing with N off z". A challenge already witnessed inside N needs
/// nothing unless strict_fresh is set. Requires m >= 3.
BasisResult<Basis> basis_search(const RaAtomStructure& s, int m, const BasisOptions& opt = {});

/// The same fixed point for networks of a cylindric atom structure on at
/// most m nodes, built by forward closure from the initial networks.
/// Requires dimension <= m.
BasisResult<CaBasis> ca_basis_search(const CaAtomStructure& s, int m, const BasisOptions& opt = {});

}  // namespace cylgame
