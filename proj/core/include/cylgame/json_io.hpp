#pragma once

#include <string>

#include "cylgame/basis.hpp"
#include "cylgame/game.hpp"
#include "cylgame/representation.hpp"
#include "cylgame/report.hpp"
#include "cylgame/split.hpp"

namespace cylgame {

/// JSON documents (schemas under schema/). Printing is deterministic (keys
/// sorted, two-space indent) and parse followed by print is the identity.
/// Parsers throw Error(Parse) on malformed input.

std::string to_json(const StrategyCertificate& c);
StrategyCertificate certificate_from_json(const std::string& text);

/// {game, params, winner, rounds_solved, certificate, positions_explored, wall_time_ms}
std::string to_json(const GameResult& r);
GameResult game_result_from_json(const std::string& text);

/// {base_size, edges: [[i, j, "atom"], ...]}
std::string to_json(const RaAtomStructure& s, const Representation& r);
Representation representation_from_json(const RaAtomStructure& s, const std::string& text);

/// {m, matrices: [[["Id", "a"], ["a", "Id"]], ...]}
std::string to_json(const RaAtomStructure& s, const Basis& b);
Basis basis_from_json(const RaAtomStructure& s, const std::string& text);

/// {m, dim, networks: [{nodes, labels: ["atom", ...]}, ...]}
std::string to_json(const CaAtomStructure& s, const CaBasis& b);
CaBasis ca_basis_from_json(const CaAtomStructure& s, const std::string& text);

/// {ok, condition, witness, message}
std::string to_json(const Report& r);
Report report_from_json(const std::string& text);

/// {rule, copies, map: {"atom": ["atom#0", ...]}, report}
std::string theta_to_json(const std::vector<std::string>& original_names,
                          const std::vector<std::string>& split_names, const ThetaResult& t,
                          const CopyMap& m);

}  // namespace cylgame
