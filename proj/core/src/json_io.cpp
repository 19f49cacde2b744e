#include "cylgame/json_io.hpp"

#include <json.hpp>

#include "cylgame/error.hpp"

namespace cylgame {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("JSON: ") + e.what());
  }
}

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Parse, std::string("JSON: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("JSON: field '") + key + "': " + e.what());
  }
}

AtomId atom_named(const std::vector<std::string>& names, const std::string& n) {
  for (std::size_t a = 0; a < names.size(); ++a)
    if (names[a] == n) return static_cast<AtomId>(a);
  fail(ErrorKind::Parse, "JSON: unknown atom '" + n + "'");
}

json cert_json(const StrategyCertificate& c) {
  json j;
  j["winner"] = to_string(c.winner);
  j["game"] = to_string(c.game);
  j["mode"] = c.safety ? "safety" : "bounded";
  j["rounds"] = c.rounds;
  j["moves"] = c.moves;
  return j;
}

StrategyCertificate cert_from(const json& j) {
  StrategyCertificate c;
  try {
    c.winner = player_from_string(get<std::string>(j, "winner"));
    c.game = variant_from_string(get<std::string>(j, "game"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    fail(ErrorKind::Parse, std::string("JSON: ") + e.what());
  }
  const auto mode = get<std::string>(j, "mode");
  if (mode != "safety" && mode != "bounded") fail(ErrorKind::Parse, "JSON: mode must be safety or bounded");
  c.safety = mode == "safety";
  c.rounds = get<int>(j, "rounds");
  c.moves = get<std::map<std::string, std::string>>(j, "moves");
  return c;
}

json report_json(const Report& r) {
  return json{{"ok", r.ok}, {"condition", r.condition}, {"witness", r.witness}, {"message", r.message}};
}

}  // namespace

std::string to_json(const StrategyCertificate& c) { return cert_json(c).dump(2); }

StrategyCertificate certificate_from_json(const std::string& text) { return cert_from(parse(text)); }

std::string to_json(const GameResult& r) {
  json j;
  j["game"] = to_string(r.certificate.game);
  j["params"] = r.params;
  j["winner"] = to_string(r.winner);
  if (r.rounds_solved < 0)
    j["rounds_solved"] = "omega";
  else
    j["rounds_solved"] = r.rounds_solved;
  j["certificate"] = cert_json(r.certificate);
  j["positions_explored"] = r.positions_explored;
  j["wall_time_ms"] = r.wall_time_ms;
  return j.dump(2);
}

GameResult game_result_from_json(const std::string& text) {
  const json j = parse(text);
  GameResult r;
  r.certificate = cert_from(get<json>(j, "certificate"));
  if (get<std::string>(j, "game") != to_string(r.certificate.game))
    fail(ErrorKind::Parse, "JSON: game does not match the certificate");
  r.params = get<std::map<std::string, std::string>>(j, "params");
  r.winner = player_from_string(get<std::string>(j, "winner"));
  const json& rs = get<json>(j, "rounds_solved");
  if (rs.is_string()) {
    if (rs.get<std::string>() != "omega") fail(ErrorKind::Parse, "JSON: rounds_solved must be a number or omega");
    r.rounds_solved = -1;
  } else {
    r.rounds_solved = get<int>(j, "rounds_solved");
  }
  r.positions_explored = get<std::size_t>(j, "positions_explored");
  r.wall_time_ms = get<double>(j, "wall_time_ms");
  return r;
}

std::string to_json(const RaAtomStructure& s, const Representation& r) {
  json edges = json::array();
  for (int x = 0; x < r.base_size; ++x)
    for (int y = 0; y < r.base_size; ++y) edges.push_back(json::array({x, y, s.name(r.at(x, y))}));
  return json{{"base_size", r.base_size}, {"edges", edges}}.dump(2);
}

Representation representation_from_json(const RaAtomStructure& s, const std::string& text) {
  const json j = parse(text);
  const int b = get<int>(j, "base_size");
  if (b < 0) fail(ErrorKind::Parse, "JSON: negative base_size");
  Representation r(b);
  for (const auto& e : get<json>(j, "edges")) {
    if (!e.is_array() || e.size() != 3) fail(ErrorKind::Parse, "JSON: edge must be [i, j, atom]");
    const int x = e[0].get<int>(), y = e[1].get<int>();
    if (x < 0 || y < 0 || x >= b || y >= b) fail(ErrorKind::Parse, "JSON: edge endpoint out of range");
    r.at(x, y) = atom_named(s.names(), e[2].get<std::string>());
  }
  for (AtomId a : r.edge)
    if (a < 0) fail(ErrorKind::Parse, "JSON: representation leaves a pair unlabelled");
  return r;
}

std::string to_json(const RaAtomStructure& s, const Basis& b) {
  json mats = json::array();
  for (const auto& m : b.matrices) {
    json rows = json::array();
    for (int i = 0; i < m.size; ++i) {
      json row = json::array();
      for (int j = 0; j < m.size; ++j) row.push_back(s.name(m.at(i, j)));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  return json{{"m", b.m}, {"matrices", mats}}.dump(2);
}

Basis basis_from_json(const RaAtomStructure& s, const std::string& text) {
  const json j = parse(text);
  Basis b;
  b.m = get<int>(j, "m");
  for (const auto& rows : get<json>(j, "matrices")) {
    BasicMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.size; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(m.size)) fail(ErrorKind::Parse, "JSON: matrix is not square");
      for (int k = 0; k < m.size; ++k) m.at(i, k) = atom_named(s.names(), row[static_cast<std::size_t>(k)].get<std::string>());
    }
    b.matrices.push_back(std::move(m));
  }
  return b;
}

std::string to_json(const CaAtomStructure& s, const CaBasis& b) {
  json nets = json::array();
  for (const auto& n : b.networks) {
    json labels = json::array();
    for (AtomId a : n.label) labels.push_back(s.name(a));
    nets.push_back(json{{"nodes", n.nodes}, {"labels", labels}});
  }
  return json{{"m", b.m}, {"dim", s.dimension()}, {"networks", nets}}.dump(2);
}

CaBasis ca_basis_from_json(const CaAtomStructure& s, const std::string& text) {
  const json j = parse(text);
  CaBasis b;
  b.m = get<int>(j, "m");
  if (get<int>(j, "dim") != s.dimension()) fail(ErrorKind::Parse, "JSON: basis dimension does not match the structure");
  for (const auto& n : get<json>(j, "networks")) {
    Network net(s.dimension(), get<int>(n, "nodes"));
    const auto labels = get<std::vector<std::string>>(n, "labels");
    if (labels.size() != net.label.size()) fail(ErrorKind::Parse, "JSON: network has the wrong number of labels");
    for (std::size_t i = 0; i < labels.size(); ++i) net.label[i] = atom_named(s.names(), labels[i]);
    b.networks.push_back(std::move(net));
  }
  return b;
}

std::string to_json(const Report& r) { return report_json(r).dump(2); }

Report report_from_json(const std::string& text) {
  const json j = parse(text);
  return Report{get<bool>(j, "ok"), get<std::string>(j, "condition"), get<std::vector<int>>(j, "witness"),
                get<std::string>(j, "message")};
}

std::string theta_to_json(const std::vector<std::string>& original_names, const std::vector<std::string>& split_names,
                          const ThetaResult& t, const CopyMap& m) {
  json map = json::object();
  for (std::size_t a = 0; a < t.image.size(); ++a) {
    json img = json::array();
    t.image[a].for_each([&](AtomId x) { img.push_back(split_names[static_cast<std::size_t>(x)]); });
    map[original_names[a]] = img;
  }
  return json{{"rule", to_string(m.rule)}, {"copies", m.copies}, {"map", map}, {"report", report_json(t.report)}}.dump(2);
}

}  // namespace cylgame
