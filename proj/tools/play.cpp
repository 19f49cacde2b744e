#include "play.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "common.hpp"
#include "cylgame/cone_strategy.hpp"
#include "cylgame/error.hpp"
#include "cylgame/rainbow.hpp"
#include "cylgame/strategy.hpp"

namespace cylgame::cli {

namespace {

using Raw = std::vector<AtomId>;

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

Raw parse_raw(const std::string& s) {
  Raw out;
  for (const auto& p : split_list(s)) out.push_back(to_int(p, "label"));
  return out;
}

// why exists is stuck, for rainbow structures: the colouring of the edges to
// the new node that gets furthest, and the forbidden triangle that ends it
struct RainbowDiagnosis {
  const CaAtomStructure& s;
  RuleSet rules;
  std::vector<Colour> palette;

  explicit RainbowDiagnosis(const CaAtomStructure& st) : s(st) {
    bool ordered = false;
    for (std::size_t a = 0; a < s.size(); ++a) {
      const ColouredGraph g = atom_graph(s, static_cast<AtomId>(a));
      for (const auto& e : g.edges) {
        if (!e) continue;
        if (e->kind == ColourKind::Tint && e->i <= 0) ordered = true;
        bool seen = false;
        for (const auto& c : palette) seen = seen || c == *e;
        if (!seen) palette.push_back(*e);
      }
    }
    rules = ordered ? RuleSet::ordered() : RuleSet::standard();
  }

  std::string explain(const Position& p, const Challenge& c) const {
    const int n = s.dimension();
    Network net(n, p.nodes);
    net.label = p.key;
    std::vector<int> y(c.begin(), c.begin() + n);
    const int i = c[static_cast<std::size_t>(n)];
    const AtomId a = c[static_cast<std::size_t>(n + 1)];
    const int z = c[static_cast<std::size_t>(n + 2)];
    if (z >= 0) {
      std::vector<int> keep;
      for (int v = 0; v < p.nodes; ++v)
        if (v != z) keep.push_back(v);
      net = restrict_network(net, keep);
      for (int j = 0; j < n; ++j)
        if (j != i && y[static_cast<std::size_t>(j)] > z) --y[static_cast<std::size_t>(j)];
    }
    const ColouredGraph g = network_graph(s, net);
    const int fresh = net.nodes;
    std::vector<int> sur;
    const ColouredGraph ag = atom_graph(s, a, &sur);
    std::vector<std::optional<Colour>> to_new(static_cast<std::size_t>(fresh));
    std::vector<char> face(static_cast<std::size_t>(fresh), 0);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const int u = y[static_cast<std::size_t>(j)];
      face[static_cast<std::size_t>(u)] = 1;
      to_new[static_cast<std::size_t>(u)] = ag.edge(sur[static_cast<std::size_t>(j)], sur[static_cast<std::size_t>(i)]);
    }
    std::vector<int> open;
    for (int u = 0; u < fresh; ++u)
      if (!face[static_cast<std::size_t>(u)]) open.push_back(u);

    auto name = [](const std::optional<Colour>& c) { return c ? c->name() : std::string("-"); };
    std::size_t best_depth = 0;
    std::string best;
    std::function<bool(std::size_t)> rec = [&](std::size_t d) -> bool {
      if (d == open.size()) return true;
      const int u = open[d];
      std::string why;
      for (const auto& col : palette) {
        to_new[static_cast<std::size_t>(u)] = col;
        std::string bad;
        for (int v = 0; v < fresh && bad.empty(); ++v) {
          if (v == u || !to_new[static_cast<std::size_t>(v)]) continue;
          const auto& uv = g.edge(u, v);
          if (!uv) continue;
          if (auto r = forbidden_triangle(rules, *uv, col, *to_new[static_cast<std::size_t>(v)]))
            bad = "(" + uv->name() + ", " + col.name() + ", " + name(to_new[static_cast<std::size_t>(v)]) +
                  ") on nodes (" + std::to_string(u) + ", " + std::to_string(v) + ", new): " + *r;
        }
        if (bad.empty()) {
          if (rec(d + 1)) return true;
        } else if (why.empty() || (bad.find("red") != std::string::npos && why.find("red") == std::string::npos)) {
          why = bad;
        }
      }
      to_new[static_cast<std::size_t>(u)].reset();
      if (d >= best_depth && !why.empty()) {
        best_depth = d;
        std::string ctx;
        for (std::size_t e = 0; e < d; ++e)
          ctx += (e ? ", " : "") + std::string("(") + std::to_string(open[e]) + ",new)=" +
                 name(to_new[static_cast<std::size_t>(open[e])]);
        best = "edge (" + std::to_string(u) + ", new) has no colour" + (ctx.empty() ? "" : " once " + ctx) +
               "; every choice closes a forbidden triangle, e.g. " + why;
      }
      return false;
    };
    if (rec(0)) return "";
    return best;
  }
};

struct Session {
  const CaAtomStructure* ca = nullptr;
  const RaAtomStructure* ra = nullptr;
  std::unique_ptr<GameModel> model;
  GameSpec spec;
  bool safety = false;
  int rounds = 0;
  std::optional<StrategyCertificate> cert;
  std::optional<ScriptedForall> script;
  std::vector<std::string> transcript;
  std::optional<RainbowDiagnosis> diagnosis;

  void say(const std::string& line) {
    std::cout << line << "\n";
    std::cout.flush();
    transcript.push_back(line);
  }

  // nullopt on quit or end of input
  std::optional<std::string> ask(const std::string& prompt) {
    while (true) {
      std::cout << prompt << "> ";
      std::cout.flush();
      std::string line;
      if (!std::getline(std::cin, line)) return std::nullopt;
      const auto b = line.find_first_not_of(" \t");
      if (b == std::string::npos) continue;
      line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
      transcript.push_back(prompt + "> " + line);
      if (line == "quit" || line == "q") return std::nullopt;
      if (line == "help") {
        std::cout << "  exists: a response number from the list, or 'raw l1,l2,...' (labels in the listed order)\n"
                     "  forall: CA 'x0,x1,... i atom [deleted]', RA 'x y a b [deleted]', atoms by name or id\n"
                     "  'moves' lists legal moves, 'show' prints the position, 'quit' ends the game\n";
        continue;
      }
      return line;
    }
  }

  AtomId atom_id(const std::string& tok) const {
    const auto& names = ca ? ca->names() : ra->names();
    for (std::size_t a = 0; a < names.size(); ++a)
      if (names[a] == tok) return static_cast<AtomId>(a);
    const int v = to_int(tok, "atom");
    if (v < 0 || static_cast<std::size_t>(v) >= names.size()) fail(ErrorKind::InvalidArgument, "atom out of range");
    return v;
  }

  std::string atom_name(AtomId a) const { return model->atom_name(a); }

  std::string describe(const Position& p) const {
    std::ostringstream o;
    if (ra) {
      for (int x = 0; x < p.nodes; ++x) {
        o << "  ";
        for (int y = 0; y < p.nodes; ++y) o << atom_name(p.key[static_cast<std::size_t>(x * p.nodes + y)]) << "\t";
        o << "\n";
      }
      return o.str();
    }
    Network net(ca->dimension(), p.nodes);
    net.label = p.key;
    try {
      const ColouredGraph g = network_graph(*ca, net);
      for (int u = 0; u < p.nodes; ++u)
        for (int v = u + 1; v < p.nodes; ++v)
          if (const auto& e = g.edge(u, v)) o << "  " << u << "-" << v << ": " << e->name() << "\n";
      return o.str();
    } catch (const Error&) {
    }
    std::vector<int> t;
    for (std::size_t idx = 0; idx < net.label.size(); ++idx) {
      net.decode(idx, t);
      bool increasing = true;
      for (std::size_t j = 1; j < t.size(); ++j) increasing = increasing && t[j - 1] < t[j];
      if (increasing) o << "  (" << join(t) << ") " << atom_name(net.label[idx]) << "\n";
    }
    return o.str();
  }

  std::string describe(const Challenge& c) const {
    if (ra)
      return "find z with N(" + std::to_string(c[0]) + ",z) = " + atom_name(c[2]) + " and N(z," + std::to_string(c[1]) +
             ") = " + atom_name(c[3]) + (c[4] >= 0 ? ", node " + std::to_string(c[4]) + " deleted" : "");
    const int n = ca->dimension();
    std::vector<int> x(c.begin(), c.begin() + n);
    const int i = c[static_cast<std::size_t>(n)];
    std::string t;
    for (int j = 0; j < n; ++j) t += (j ? "," : "") + (j == i ? std::string("_") : std::to_string(x[static_cast<std::size_t>(j)]));
    return "tuple (" + t + "), coordinate " + std::to_string(i) + ": new node with atom " +
           atom_name(c[static_cast<std::size_t>(n + 1)]) +
           (c[static_cast<std::size_t>(n + 2)] >= 0 ? ", node " + std::to_string(c[static_cast<std::size_t>(n + 2)]) + " deleted" : "");
  }

  int new_nodes(const Position& p, const Challenge& c) const { return p.nodes + (c.back() >= 0 ? 0 : 1); }

  std::string exists_key(const Position& p, const Challenge& c, int r) const {
    const std::string pk = position_key(p), ck = challenge_key(c);
    return safety ? pk + "|" + ck : pk + "|r" + std::to_string(r) + "|" + ck;
  }

  std::optional<Challenge> computer_challenge(const Position& p) const {
    if (script) return script->move(p);
    if (cert && cert->winner == Player::Forall) {
      auto it = cert->moves.find(position_key(p));
      if (it != cert->moves.end()) return parse_challenge(it->second);
    }
    std::optional<Challenge> first;
    model->challenges(p, [&](const Challenge& c) {
      first = c;
      return false;
    });
    return first;
  }

  std::optional<Position> computer_response(const Position& p, const Challenge& c, int r) const {
    if (cert && cert->winner == Player::Exists) {
      auto it = cert->moves.find(exists_key(p, c, r));
      if (it != cert->moves.end()) return model->canonical(new_nodes(p, c), parse_raw(it->second));
    }
    std::optional<Position> first;
    model->responses(p, c, [&](const Raw&, Position&& q) {
      first = std::move(q);
      return false;
    });
    return first;
  }

  std::optional<Challenge> read_challenge(const std::string& line, const Position& p) const {
    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    Challenge c;
    if (ra) {
      if (tok.size() != 4 && tok.size() != 5) return std::nullopt;
      c = {to_int(tok[0], "x"), to_int(tok[1], "y"), atom_id(tok[2]), atom_id(tok[3]),
           tok.size() == 5 ? to_int(tok[4], "deleted node") : -1};
    } else {
      if (tok.size() != 3 && tok.size() != 4) return std::nullopt;
      for (const auto& x : split_list(tok[0])) c.push_back(to_int(x, "tuple entry"));
      if (static_cast<int>(c.size()) != ca->dimension()) return std::nullopt;
      const int i = to_int(tok[1], "coordinate");
      if (i < 0 || i >= ca->dimension()) return std::nullopt;
      c[static_cast<std::size_t>(i)] = 0;
      c.push_back(i);
      c.push_back(atom_id(tok[2]));
      c.push_back(tok.size() == 4 ? to_int(tok[3], "deleted node") : -1);
    }
    (void)p;
    return c;
  }
};

}  // namespace

int run_play(const AtomStructure& s, const PlayOptions& o, const GameLimits& lim) {
  Session g;
  g.ca = std::get_if<CaAtomStructure>(&s);
  g.ra = std::get_if<RaAtomStructure>(&s);
  const int k = o.rounds == "omega" || o.rounds == "w" ? -1 : to_int(o.rounds, "--k");
  const bool human_exists = o.side == "exists";
  if (g.ra) {
    if (!o.variant.empty() && o.variant != "RA") fail(ErrorKind::InvalidArgument, "relation algebra structures play the RA game");
    g.model = make_ra_model(*g.ra, o.m);
    g.spec = GameSpec{GameVariant::RA, nullptr, g.ra, o.m, k};
    g.safety = k < 0;
  } else {
    const GameVariant v = variant_from_string(o.variant.empty() ? "boldG" : o.variant);
    if (v != GameVariant::Gmk && v != GameVariant::BoldG) fail(ErrorKind::InvalidArgument, "play supports Gmk and boldG");
    if (v == GameVariant::Gmk && k < 0) fail(ErrorKind::InvalidArgument, "Gmk needs a finite --k");
    g.model = make_ca_model(*g.ca, o.m, v);
    g.spec = GameSpec{v, g.ca, nullptr, o.m, k};
    g.safety = v == GameVariant::BoldG;
    try {
      g.diagnosis.emplace(*g.ca);
    } catch (const Error&) {
    }
  }
  g.rounds = g.safety ? -1 : k;

  if (!o.strategy.empty()) {
    if (!g.ca || human_exists == false) fail(ErrorKind::InvalidArgument, "--strategy scripts the computer's forall on a CA structure");
    const auto colon = o.strategy.find(':');
    const std::string kind = o.strategy.substr(0, colon), args = colon == std::string::npos ? "" : o.strategy.substr(colon + 1);
    if (kind == "cone") {
      std::vector<int> tints;
      for (const auto& t : split_list(args)) tints.push_back(to_int(t, "tint"));
      g.script = cone_bombardment(*g.ca, o.m, tints);
    } else if (kind == "decreasing") {
      g.script = decreasing_sequence(*g.ca, o.m, to_int(args, "depth"));
    } else {
      fail(ErrorKind::InvalidArgument, "unknown strategy '" + o.strategy + "'");
    }
  } else {
    try {
      GameResult r = g.safety ? solve_safety(*g.model, lim) : solve_bounded(*g.model, k, lim);
      g.cert = std::move(r.certificate);
      g.say("solver: " + to_string(r.winner) + " wins this game");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Budget) throw;
      g.say("solver: budget exceeded, the computer plays the first legal move");
    }
  }

  auto finish = [&](int code) {
    if (!o.transcript.empty()) {
      std::ofstream out(o.transcript);
      for (const auto& l : g.transcript) out << l << "\n";
    }
    return code;
  };
  auto quit = [&] {
    g.say("quit: game abandoned");
    return finish(0);
  };
  const int human_wins = 0, human_loses = 1;
  auto exists_wins = [&](const std::string& why) {
    g.say("exists wins: " + why);
    return finish(human_exists ? human_wins : human_loses);
  };
  auto forall_wins = [&](const std::string& why) {
    g.say("forall wins: " + why);
    return finish(human_exists ? human_loses : human_wins);
  };

  // opening
  AtomId opening = -1;
  if (human_exists) {
    if (g.script) {
      opening = g.script->opening;
    } else if (g.cert && g.cert->winner == Player::Forall) {
      opening = static_cast<AtomId>(std::stol(g.cert->moves.at("init")));
    } else {
      opening = 0;
      while (g.ra && g.ra->is_identity(opening) && static_cast<std::size_t>(opening + 1) < g.ra->size()) ++opening;
    }
    g.say("forall opens with atom " + g.atom_name(opening));
  } else {
    while (opening < 0) {
      auto line = g.ask("forall (opening atom)");
      if (!line) return quit();
      try {
        opening = g.atom_id(*line);
      } catch (const Error& e) {
        g.say(std::string("illegal: ") + e.what());
      }
    }
  }

  Position pos;
  if (human_exists) {
    std::vector<std::pair<Raw, Position>> options;
    g.model->initial_responses(opening, [&](const Raw& raw, Position&& p) {
      options.emplace_back(raw, std::move(p));
      return options.size() < 50;
    });
    if (options.empty()) return forall_wins("no network realises the opening atom");
    for (std::size_t j = 0; j < options.size(); ++j) g.say("[" + std::to_string(j) + "]\n" + g.describe(options[j].second));
    while (true) {
      auto line = g.ask("exists (initial network)");
      if (!line) return quit();
      try {
        if (line->rfind("raw ", 0) == 0) {
          const Raw raw = parse_raw(line->substr(4));
          const std::string why = initial_move_problem(g.spec, opening, raw);
          if (!why.empty()) {
            g.say("illegal: " + why);
            continue;
          }
          int nodes = 0;
          for (std::size_t t = 1; t <= raw.size(); ++t) {
            const std::size_t c = g.ra ? t * t : Network::tuple_count(g.ca->dimension(), static_cast<int>(t));
            if (c == raw.size()) nodes = static_cast<int>(t);
          }
          pos = g.model->canonical(nodes, raw);
          break;
        }
        const int j = to_int(*line, "choice");
        if (j < 0 || static_cast<std::size_t>(j) >= options.size()) {
          g.say("illegal: no initial network with that number");
          continue;
        }
        pos = options[static_cast<std::size_t>(j)].second;
        break;
      } catch (const Error& e) {
        g.say(std::string("illegal: ") + e.what());
      }
    }
  } else {
    std::optional<Position> first;
    if (g.cert && g.cert->winner == Player::Exists) {
      const Raw raw = parse_raw(g.cert->moves.at("init:" + std::to_string(opening)));
      int nodes = 0;
      for (std::size_t t = 1; t <= raw.size(); ++t) {
        const std::size_t c = g.ra ? t * t : Network::tuple_count(g.ca->dimension(), static_cast<int>(t));
        if (c == raw.size()) nodes = static_cast<int>(t);
      }
      first = g.model->canonical(nodes, raw);
    } else {
      g.model->initial_responses(opening, [&](const Raw&, Position&& p) {
        first = std::move(p);
        return false;
      });
    }
    if (!first) return forall_wins("no network realises the opening atom");
    pos = *first;
  }
  g.say("position:\n" + g.describe(pos));

  for (int r = g.rounds, played = 1;; ++played) {
    if (!g.safety && r == 0) return exists_wins("all rounds survived");
    Challenge c;
    if (human_exists) {
      auto ch = g.computer_challenge(pos);
      if (!ch) return exists_wins("forall has no further move");
      c = *ch;
    } else {
      while (true) {
        auto line = g.ask("forall (round " + std::to_string(played) + ")");
        if (!line) return quit();
        if (*line == "show") {
          g.say(g.describe(pos));
          continue;
        }
        if (*line == "moves") {
          int shown = 0;
          g.model->challenges(pos, [&](const Challenge& x) {
            g.say("  " + g.describe(x));
            return ++shown < 10;
          });
          continue;
        }
        try {
          auto parsed = g.read_challenge(*line, pos);
          if (!parsed) {
            g.say("illegal: could not read the challenge (type help)");
            continue;
          }
          const std::string why = challenge_move_problem(g.spec, pos, *parsed);
          if (!why.empty()) {
            g.say("illegal: " + why);
            continue;
          }
          c = *parsed;
          break;
        } catch (const Error& e) {
          g.say(std::string("illegal: ") + e.what());
        }
      }
    }
    g.say("round " + std::to_string(played) + ": forall challenges " + g.describe(c));

    if (human_exists) {
      std::vector<std::pair<Raw, Position>> options;
      g.model->responses(pos, c, [&](const Raw& raw, Position&& p) {
        options.emplace_back(raw, std::move(p));
        return options.size() < 50;
      });
      if (options.empty()) {
        std::string why = "exists has no legal response";
        if (g.diagnosis) {
          const std::string d = g.diagnosis->explain(pos, c);
          if (!d.empty()) why += ": " + d;
        }
        return forall_wins(why);
      }
      for (std::size_t j = 0; j < options.size(); ++j) g.say("[" + std::to_string(j) + "]\n" + g.describe(options[j].second));
      bool moved = false;
      while (!moved) {
        auto line = g.ask("exists (round " + std::to_string(played) + ")");
        if (!line) return quit();
        if (*line == "show" || *line == "moves") {
          g.say(g.describe(pos));
          continue;
        }
        try {
          if (line->rfind("raw ", 0) == 0) {
            const Raw raw = parse_raw(line->substr(4));
            const std::string why = response_move_problem(g.spec, pos, c, raw);
            if (!why.empty()) {
              g.say("illegal: " + why);
              continue;
            }
            pos = g.model->canonical(g.new_nodes(pos, c), raw);
            moved = true;
            continue;
          }
          const int j = to_int(*line, "choice");
          if (j < 0 || static_cast<std::size_t>(j) >= options.size()) {
            g.say("illegal: no response with that number");
            continue;
          }
          pos = options[static_cast<std::size_t>(j)].second;
          moved = true;
        } catch (const Error& e) {
          g.say(std::string("illegal: ") + e.what());
        }
      }
    } else {
      auto q = g.computer_response(pos, c, r);
      if (!q) {
        std::string why = "exists has no legal response";
        if (g.diagnosis) {
          const std::string d = g.diagnosis->explain(pos, c);
          if (!d.empty()) why += ": " + d;
        }
        return forall_wins(why);
      }
      pos = *q;
    }
    g.say("position:\n" + g.describe(pos));
    if (!g.safety) --r;
  }
}

}  // namespace cylgame::cli
