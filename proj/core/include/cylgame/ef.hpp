#pragma once

#include <set>
#include <string>
#include <vector>

#include "cylgame/game.hpp"
#include "cylgame/report.hpp"

namespace cylgame {

struct Relation {
  std::string name;
  int arity = 2;
  std::set<std::vector<int>> tuples;
};

/// Finite relational structure on {0..size-1}.
struct Structure {
  std::string name;
  int size = 0;
  std::vector<Relation> relations;

  bool holds(std::size_t rel, const std::vector<int>& t) const { return relations[rel].tuples.count(t) > 0; }
};

// graphs use a single symmetric irreflexive relation E; L_n uses <
Structure complete_graph(int n);
Structure cycle_graph(int n);
Structure path_graph(int n);
Structure empty_graph(int n);
Structure linear_order(int n);
/// "K4", "C5", "P3", "E2", "L4".
Structure structure_by_name(const std::string& name);

/// True when the pebbled pairs (g_i, h_i) form a partial isomorphism G -> H.
bool partial_iso(const Structure& g, const Structure& h, const std::vector<std::pair<int, int>>& pairs);

/// Forth pebble game EF^p_r(G, H): each round forall picks a pebble pair
/// (lifting it if placed) and puts it on an element of G; exists answers in H
/// and must keep the pebbled map a partial isomorphism.
GameResult solve_ef(const Structure& g, const Structure& h, int p, int r, const GameLimits& lim = {});

/// Replays an EF certificate against every legal opposing move.
Report verify_ef_strategy(const Structure& g, const Structure& h, int p, int r, const StrategyCertificate& cert);

}  // namespace cylgame
