#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "cylgame/game.hpp"
#include "cylgame/report.hpp"

namespace cylgame {

struct GameSpec {
  GameVariant variant = GameVariant::Gmk;
  const CaAtomStructure* ca = nullptr;
  const RaAtomStructure* ra = nullptr;
  int m = 0;  // node bound (for Gk: dimension + k, or 2 + k on RA structures)
  int k = 0;  // rounds in bounded mode
};

struct VerifyOptions {
  std::size_t max_positions = 5'000'000;
};

/// Replays the certificate against every legal opposing move. Legality of
/// moves, the set of challenges and the set of responses are computed here
/// from the game rules, independently of the solvers' move generators; only
/// the canonical form is shared (it names certificate keys).
Report verify_strategy(const GameSpec& spec, const StrategyCertificate& cert, const VerifyOptions& opt = {});

/// Why a move is illegal under the verifier's rules, or "" when it is legal.
/// Raw labels are in the position's node coordinates with the new node last.
std::string initial_move_problem(const GameSpec& spec, AtomId a, const std::vector<AtomId>& raw);
std::string challenge_move_problem(const GameSpec& spec, const Position& p, const Challenge& c);
std::string response_move_problem(const GameSpec& spec, const Position& p, const Challenge& c,
                                  const std::vector<AtomId>& raw);

/// forall strategy given as a function on canonical positions (nullopt: no
/// move). Unfolded against every exists response into a certificate.
using ForallStrategy = std::function<std::optional<Challenge>(const Position&)>;

struct ScriptedForall {
  AtomId opening = -1;
  ForallStrategy move;
};

/// Explores the strategy-restricted game tree (depth at most `rounds`, or
/// until exists is stuck when safety is set) and records forall's moves.
StrategyCertificate unfold_forall(const GameModel& g, const ScriptedForall& strategy, bool safety, int rounds,
                                  std::size_t max_positions = 5'000'000);

}  // namespace cylgame
