#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cylgame/ca_atom_structure.hpp"
#include "cylgame/network.hpp"
#include "cylgame/ra_atom_structure.hpp"

namespace cylgame {

enum class Player { Exists, Forall };
std::string to_string(Player p);  // "exists" / "forall"
Player player_from_string(const std::string& s);

enum class GameVariant { Gmk, BoldG, Gk, RA, EF };
std::string to_string(GameVariant v);  // "Gmk", "boldG", "Gk", "RA", "EF"
GameVariant variant_from_string(const std::string& s);

/// Winner plus a move table. Keys and moves are plain strings:
///   "init"                      -> atom id chosen by forall
///   "init:<atom>"               -> initial network chosen by exists
///   "<pos>"                     -> challenge chosen by forall at a position
///   "<pos>|<challenge>"         -> response chosen by exists (safety mode)
///   "<pos>|r<k>|<challenge>"    -> response with k rounds left (bounded mode)
/// where <pos> is "<nodes>:<canonical labels>", a challenge is its integer
/// fields joined by ',' and a network or matrix is its label vector.
struct StrategyCertificate {
  Player winner = Player::Exists;
  GameVariant game = GameVariant::Gmk;
  bool safety = false;
  int rounds = 0;  // bounded mode only
  std::map<std::string, std::string> moves;

  friend bool operator==(const StrategyCertificate&, const StrategyCertificate&) = default;
};

struct GameLimits {
  std::size_t max_positions = 2'000'000;
  int jobs = 0;
};

struct GameResult {
  Player winner = Player::Exists;
  StrategyCertificate certificate;
  int rounds_solved = -1;  // -1 for the unbounded (safety) reading
  std::size_t positions_explored = 0;
  double wall_time_ms = 0;
  std::map<std::string, std::string> params;
};

/// Game position: a network (CA) or matrix (RA) in canonical form.
struct Position {
  int nodes = 0;
  std::vector<AtomId> key;

  friend bool operator==(const Position&, const Position&) = default;
};
std::string position_key(const Position& p);

/// forall's move: CA (face tuple with coordinate i set to 0, i, atom, deleted
/// node or -1); RA (x, y, a, b, deleted node or -1).
using Challenge = std::vector<int>;
std::string challenge_key(const Challenge& c);
Challenge parse_challenge(const std::string& s);

/// Rules of one atomic game on m nodes. Positions handed to the model are
/// canonical; responses are reported both raw (in the position's node
/// coordinates, deleted node removed, new node last) and canonicalised.
class GameModel {
 public:
  virtual ~GameModel() = default;
  virtual GameVariant variant() const = 0;
  virtual int max_nodes() const = 0;
  virtual std::size_t atom_count() const = 0;
  virtual std::string atom_name(AtomId a) const = 0;

  using Sink = std::function<bool(const std::vector<AtomId>& raw, Position&& canonical)>;

  /// exists' initial networks realising atom a, lexicographic in raw labels.
  virtual bool initial_responses(AtomId a, const Sink& f) const = 0;
  virtual bool challenges(const Position& p, const std::function<bool(const Challenge&)>& f) const = 0;
  virtual bool responses(const Position& p, const Challenge& c, const Sink& f) const = 0;
  virtual Position canonical(int nodes, const std::vector<AtomId>& raw) const = 0;
};

/// G^m_k (Gmk), bold G^m (BoldG) and G_k (Gk, node budget n + k) on a
/// cylindric atom structure. Throws InvalidArgument when m < dimension.
std::unique_ptr<GameModel> make_ca_model(const CaAtomStructure& s, int m, GameVariant v);
/// Triangle-move game on basic matrices with m nodes.
std::unique_ptr<GameModel> make_ra_model(const RaAtomStructure& s, int m);

/// Backward induction with k challenge rounds after the initial move.
GameResult solve_bounded(const GameModel& g, int k, const GameLimits& lim = {});
/// omega rounds as a safety game over the finite arena of canonical positions.
GameResult solve_safety(const GameModel& g, const GameLimits& lim = {});

GameResult solve_atomic_game(const CaAtomStructure& s, int m, int k, const GameLimits& lim = {});
GameResult solve_bold_game(const CaAtomStructure& s, int m, const GameLimits& lim = {});
/// G_k: node budget n + k.
GameResult solve_gk(const CaAtomStructure& s, int k, const GameLimits& lim = {});
/// k < 0 means unbounded (safety game).
GameResult solve_ra_game(const RaAtomStructure& s, int m, int k, const GameLimits& lim = {});

struct LyndonResult {
  int k_star = 0;                // largest k <= K with exists winning G_k
  std::vector<Player> winners;   // winners[k] for k = 0..k_star (+1 if exists lost)
};

/// Solves G_0, G_1, ... G_K in turn, stopping at the first forall win.
/// Relation-algebra games use node budget 2 + k.
LyndonResult lyndon_check(const CaAtomStructure& s, int K, const GameLimits& lim = {});
LyndonResult lyndon_check(const RaAtomStructure& s, int K, const GameLimits& lim = {});

}  // namespace cylgame
