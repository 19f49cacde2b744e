#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "common.hpp"
#include "cylgame/axioms.hpp"
#include "cylgame/basis.hpp"
#include "cylgame/cone_strategy.hpp"
#include "cylgame/ef.hpp"
#include "cylgame/error.hpp"
#include "cylgame/game.hpp"
#include "cylgame/json_io.hpp"
#include "cylgame/parallel.hpp"
#include "cylgame/representation.hpp"
#include "cylgame/split.hpp"
#include "cylgame/strategy.hpp"
#include "play.hpp"

using nlohmann::json;
using namespace cylgame;
using namespace cylgame::cli;

namespace {

struct Common {
  std::string structure;
  Output out;
  bool verify = false;
  int jobs = 0;
  std::size_t max_positions = 2'000'000;
  std::size_t max_atoms = 200'000;
  double timeout_s = 0;

  AtomStructure load() const { return load_structure(structure.empty() ? "-" : structure, max_atoms); }
  GameLimits limits() const { return GameLimits{max_positions, jobs}; }
};

std::string report_line(const Report& r) {
  if (r.ok) return "pass";
  std::ostringstream o;
  o << "fail: " << r.condition;
  if (!r.witness.empty()) {
    o << " [";
    for (std::size_t i = 0; i < r.witness.size(); ++i) o << (i ? " " : "") << r.witness[i];
    o << "]";
  }
  if (!r.message.empty()) o << " (" << r.message << ")";
  return o.str();
}

int parse_rounds(const std::string& k) {
  if (k == "omega" || k == "w") return -1;
  return to_int(k, "--k");
}

AtomSet resolve_targets(const std::string& spec, const std::vector<std::string>& names, const AtomSet& red,
                        const AtomSet& all) {
  if (spec == "red") return red;
  if (spec == "all") return all;
  AtomSet out(names.size());
  for (const auto& n : split_list(spec)) {
    bool found = false;
    for (std::size_t a = 0; a < names.size(); ++a)
      if (names[a] == n) {
        out.insert(static_cast<AtomId>(a));
        found = true;
      }
    if (!found) fail(ErrorKind::InvalidArgument, "unknown target atom '" + n + "'");
  }
  return out;
}

AtomSet split_targets(const AtomStructure& s, const std::string& spec) {
  if (auto ra = std::get_if<RaAtomStructure>(&s)) {
    AtomSet all = ra->full_set() - ra->identity();
    return resolve_targets(spec, ra->names(), red_atoms(*ra), all);
  }
  const auto& ca = std::get<CaAtomStructure>(s);
  return resolve_targets(spec, ca.names(), red_atoms(ca), ca.full_set());
}

int parse_copies(const std::string& c) {
  if (c == "omega" || c == "w") return kOmegaCopies;
  return to_int(c, "--copies");
}

ScriptedForall scripted(const CaAtomStructure& s, int m, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "cone") {
    std::vector<int> tints;
    for (const auto& t : split_list(args)) tints.push_back(to_int(t, "cone tint"));
    return cone_bombardment(s, m, tints);
  }
  if (kind == "decreasing") return decreasing_sequence(s, m, to_int(args, "decreasing depth"));
  fail(ErrorKind::InvalidArgument, "unknown strategy '" + spec + "' (cone:t1,t2,... or decreasing:D)");
}

std::string game_text(const GameResult& r) {
  std::ostringstream o;
  o << "game: " << to_string(r.certificate.game) << "\n";
  for (const auto& [k, v] : r.params) o << "  " << k << " = " << v << "\n";
  o << "winner: " << to_string(r.winner) << "\n";
  o << "rounds: " << (r.rounds_solved < 0 ? std::string("omega") : std::to_string(r.rounds_solved)) << "\n";
  o << "positions: " << r.positions_explored << "\n";
  o << "certificate moves: " << r.certificate.moves.size() << "\n";
  o << "time: " << r.wall_time_ms << " ms";
  return o.str();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cylgame: games, bases and representations for finite relation and cylindric algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("-s,--structure", c.structure,
                 "maddux:k | rainbowCA:n,g,r | orderRainbow:n,Dg,Dr | bsl:g,r | fullSet:n,base | "
                 "rainbowRA:G,H | file | - (stdin, the default)");
  app.add_flag("--json", c.out.json, "print JSON instead of text");
  app.add_option("-o,--out", c.out.path, "also write the output to this file");
  app.add_flag("--verify", c.verify, "re-check emitted certificates with the independent verifiers");
  app.add_option("-j,--jobs", c.jobs, "worker threads (default: CYLGAME_JOBS or hardware)");
  app.add_option("--max-positions", c.max_positions, "position / item budget for searches");
  app.add_option("--max-atoms", c.max_atoms, "atom cap for rainbow builders");
  app.add_option("--timeout-s", c.timeout_s, "wall-clock limit; exits 2 when hit");

  std::function<int()> action;

  // check
  auto* check = app.add_subcommand("check", "check the atom-structure axioms");
  check->callback([&] {
    action = [&] {
      const auto s = c.load();
      Report r;
      std::string kind;
      std::size_t atoms = 0;
      if (auto ra = std::get_if<RaAtomStructure>(&s)) {
        r = check_ra_axioms(*ra);
        kind = "RA";
        atoms = ra->size();
      } else {
        const auto& ca = std::get<CaAtomStructure>(s);
        r = check_ca_axioms(ca);
        kind = "CA";
        atoms = ca.size();
      }
      if (c.out.json)
        c.out.emit(json{{"kind", kind}, {"atoms", atoms}, {"report", json::parse(to_json(r))}}.dump(2));
      else
        c.out.emit(kind + " structure, " + std::to_string(atoms) + " atoms\naxioms: " + report_line(r));
      return r.ok ? kPass : kNegative;
    };
  });

  // build
  std::string build_kind, left = "K2", right = "K1";
  int bk = 2, bn = 3, bg = 4, br = 3, bdg = 3, bdr = 3, bbase = 3;
  auto* build = app.add_subcommand("build", "print a built-in structure in the algebra text format");
  build->add_option("kind", build_kind, "maddux | rainbowCA | orderRainbow | bsl | fullSet | rainbowRA")
      ->required()
      ->check(CLI::IsMember({"maddux", "rainbowCA", "orderRainbow", "bsl", "fullSet", "rainbowRA"}));
  build->add_option("--k", bk, "maddux: non-identity atoms");
  build->add_option("--n", bn, "dimension");
  build->add_option("--g", bg, "greens (tints for rainbowCA, greens for bsl)");
  build->add_option("--r", br, "reds");
  build->add_option("--dg", bdg, "orderRainbow green depth");
  build->add_option("--dr", bdr, "orderRainbow red depth");
  build->add_option("--base", bbase, "fullSet base size");
  build->add_option("--left", left, "rainbowRA green structure (K2, C5, ...)");
  build->add_option("--right", right, "rainbowRA red structure");
  build->callback([&] {
    action = [&] {
      std::string spec;
      if (build_kind == "maddux") spec = "maddux:" + std::to_string(bk);
      else if (build_kind == "rainbowCA") spec = "rainbowCA:" + std::to_string(bn) + "," + std::to_string(bg) + "," + std::to_string(br);
      else if (build_kind == "orderRainbow") spec = "orderRainbow:" + std::to_string(bn) + "," + std::to_string(bdg) + "," + std::to_string(bdr);
      else if (build_kind == "bsl") spec = "bsl:" + std::to_string(bg) + "," + std::to_string(br);
      else if (build_kind == "fullSet") spec = "fullSet:" + std::to_string(bn) + "," + std::to_string(bbase);
      else spec = "rainbowRA:" + left + "," + right;
      const auto s = load_structure(spec, c.max_atoms);
      const std::string text = to_text(s);
      if (c.out.json) {
        const std::size_t atoms = std::visit([](const auto& x) { return x.size(); }, s);
        c.out.emit(json{{"structure", spec}, {"atoms", atoms}, {"algebra", text}}.dump(2));
      } else {
        c.out.emit(text);
      }
      return kPass;
    };
  });

  // game
  std::string variant, rounds = "omega", as = "exists", strategy;
  int gm = 0;
  auto* game = app.add_subcommand("game", "solve an atomic game");
  game->add_option("--variant", variant, "Gmk | boldG | Gk | RA (default: Gmk on CA, RA on RA)")
      ->check(CLI::IsMember({"Gmk", "boldG", "Gk", "RA"}));
  game->add_option("--m", gm, "nodes");
  game->add_option("--k", rounds, "rounds, or omega");
  game->add_option("--as", as, "player whose win means exit 0")->check(CLI::IsMember({"exists", "forall"}));
  game->add_option("--strategy", strategy, "scripted forall strategy: cone:t1,t2,... | decreasing:D");
  game->callback([&] {
    action = [&] {
      const auto s = c.load();
      const auto t0 = std::chrono::steady_clock::now();
      const int k = parse_rounds(rounds);
      GameSpec spec;
      GameResult r;
      if (auto ra = std::get_if<RaAtomStructure>(&s)) {
        if (!variant.empty() && variant != "RA") fail(ErrorKind::InvalidArgument, "relation algebra structures play the RA game");
        if (!strategy.empty()) fail(ErrorKind::InvalidArgument, "scripted strategies are for cylindric structures");
        spec = GameSpec{GameVariant::RA, nullptr, ra, gm, k};
        r = solve_ra_game(*ra, gm, k, c.limits());
      } else {
        const auto& ca = std::get<CaAtomStructure>(s);
        const GameVariant v = variant_from_string(variant.empty() ? "Gmk" : variant);
        if (v == GameVariant::RA) fail(ErrorKind::InvalidArgument, "the RA game needs a relation algebra structure");
        if (v == GameVariant::Gmk && k < 0) fail(ErrorKind::InvalidArgument, "Gmk needs a finite --k");
        if (v == GameVariant::Gk && k < 0) fail(ErrorKind::InvalidArgument, "Gk needs a finite --k");
        spec = GameSpec{v, &ca, nullptr, v == GameVariant::Gk ? ca.dimension() + k : gm, k};
        if (!strategy.empty()) {
          if (v == GameVariant::Gk) fail(ErrorKind::InvalidArgument, "scripted strategies run on Gmk or boldG");
          const auto model = make_ca_model(ca, gm, v);
          const bool safety = v == GameVariant::BoldG;
          r.certificate = unfold_forall(*model, scripted(ca, gm, strategy), safety, safety ? 0 : k, c.max_positions);
          r.certificate.game = v;
          r.certificate.winner = Player::Forall;
          r.certificate.safety = safety;
          r.certificate.rounds = safety ? 0 : k;
          const Report vr = verify_strategy(spec, r.certificate, VerifyOptions{c.max_positions});
          r.winner = vr.ok ? Player::Forall : Player::Exists;
          r.rounds_solved = safety ? -1 : k;
          r.positions_explored = r.certificate.moves.size();
          r.params = {{"m", std::to_string(gm)}, {"strategy", strategy}, {"scripted", vr.ok ? "verified" : report_line(vr)}};
          r.wall_time_ms = ms_since(t0);
        } else if (v == GameVariant::Gmk) {
          r = solve_atomic_game(ca, gm, k, c.limits());
        } else if (v == GameVariant::BoldG) {
          r = solve_bold_game(ca, gm, c.limits());
        } else {
          r = solve_gk(ca, k, c.limits());
        }
      }
      if (c.verify && strategy.empty()) {
        const Report vr = verify_strategy(spec, r.certificate, VerifyOptions{c.max_positions * 4});
        if (!vr.ok) {
          std::cerr << "cylgame: certificate failed verification: " << report_line(vr) << "\n";
          return kUsage;
        }
        r.params["verified"] = "true";
      }
      c.out.emit(c.out.json ? to_json(r) : game_text(r));
      return to_string(r.winner) == as ? kPass : kNegative;
    };
  });

  // ef
  std::string ef_left = "K4", ef_right = "K3", ef_as = "exists";
  int ef_p = 2, ef_r = 2;
  auto* ef = app.add_subcommand("ef", "solve the Ehrenfeucht-Fraisse forth pebble game");
  ef->add_option("--left", ef_left, "structure forall plays in (K4, C5, P3, E2, L4, ...)");
  ef->add_option("--right", ef_right, "structure exists answers in");
  ef->add_option("--p", ef_p, "pebble pairs");
  ef->add_option("--r", ef_r, "rounds");
  ef->add_option("--as", ef_as, "player whose win means exit 0")->check(CLI::IsMember({"exists", "forall"}));
  ef->callback([&] {
    action = [&] {
      const Structure g = structure_by_name(ef_left), h = structure_by_name(ef_right);
      GameResult r = solve_ef(g, h, ef_p, ef_r, c.limits());
      if (c.verify) {
        const Report vr = verify_ef_strategy(g, h, ef_p, ef_r, r.certificate);
        if (!vr.ok) {
          std::cerr << "cylgame: certificate failed verification: " << report_line(vr) << "\n";
          return kUsage;
        }
        r.params["verified"] = "true";
      }
      c.out.emit(c.out.json ? to_json(r) : game_text(r));
      return to_string(r.winner) == ef_as ? kPass : kNegative;
    };
  });

  // basis
  int basis_m = 4;
  bool strict_fresh = false;
  auto* basis = app.add_subcommand("basis", "search for an m-dimensional relational basis");
  basis->add_option("--m", basis_m, "nodes");
  basis->add_flag("--strict-fresh", strict_fresh, "demand fresh witnesses for already witnessed challenges");
  basis->callback([&] {
    action = [&] {
      const auto s = c.load();
      BasisOptions opt;
      opt.strict_fresh = strict_fresh;
      opt.max_items = c.max_positions;
      opt.jobs = c.jobs;
      auto none = [&](const std::string& reason, const std::vector<std::string>& uncovered, std::size_t cand) {
        if (c.out.json)
          c.out.emit(json{{"m", basis_m}, {"found", false}, {"reason", reason}, {"uncovered", uncovered}, {"candidates", cand}}.dump(2));
        else
          c.out.emit("basis: none (" + reason + ")");
        return kNegative;
      };
      if (auto ra = std::get_if<RaAtomStructure>(&s)) {
        const auto r = basis_search(*ra, basis_m, opt);
        if (!r.basis) return none(r.reason, r.uncovered, r.candidates);
        if (c.verify)
          for (const auto& m : r.basis->matrices)
            if (!matrix_validate(*ra, m).ok) {
              std::cerr << "cylgame: basis member fails validation\n";
              return kUsage;
            }
        c.out.emit(c.out.json ? to_json(*ra, *r.basis)
                              : "basis: " + std::to_string(r.basis->matrices.size()) + " matrices on " +
                                    std::to_string(basis_m) + " nodes (" + std::to_string(r.candidates) + " candidates, " +
                                    std::to_string(r.pruning_rounds) + " pruning rounds)");
        return kPass;
      }
      const auto& ca = std::get<CaAtomStructure>(s);
      const auto r = ca_basis_search(ca, basis_m, opt);
      if (!r.basis) return none(r.reason, r.uncovered, r.candidates);
      if (c.verify)
        for (const auto& n : r.basis->networks)
          if (!network_validate(ca, n).ok) {
            std::cerr << "cylgame: basis member fails validation\n";
            return kUsage;
          }
      c.out.emit(c.out.json ? to_json(ca, *r.basis)
                            : "basis: " + std::to_string(r.basis->networks.size()) + " networks on at most " +
                                  std::to_string(basis_m) + " nodes");
      return kPass;
    };
  });

  // repsearch
  int base = 5;
  auto* rep = app.add_subcommand("repsearch", "search for a square representation on a fixed base (prints JSON)");
  rep->add_option("--base", base, "base size");
  rep->callback([&] {
    action = [&] {
      const auto s = c.load();
      const auto* ra = std::get_if<RaAtomStructure>(&s);
      if (!ra) fail(ErrorKind::InvalidArgument, "repsearch needs a relation algebra structure");
      RepSearchOptions opt;
      if (c.max_positions != 2'000'000) opt.max_nodes = c.max_positions;
      const auto r = rep_search(*ra, base, opt);
      if (!r.rep) {
        c.out.emit(json{{"base_size", base}, {"found", false}, {"nodes_visited", r.nodes_visited}}.dump(2));
        return kNegative;
      }
      if (c.verify) {
        const Report vr = rep_verify(*ra, *r.rep);
        if (!vr.ok) {
          std::cerr << "cylgame: representation failed verification: " << report_line(vr) << "\n";
          return kUsage;
        }
      }
      c.out.emit(to_json(*ra, *r.rep));
      return kPass;
    };
  });

  // split and theta
  std::string targets = "red", copies = "2", rule = "inherit";
  auto add_split_opts = [&](CLI::App* sub) {
    sub->add_option("--targets", targets, "red | all | comma-separated atom names");
    sub->add_option("--copies", copies, "copies per target (or omega for split)");
    sub->add_option("--rule", rule, "lift rule")->check(CLI::IsMember({"inherit", "index-matching", "broken"}));
  };
  auto* split = app.add_subcommand("split", "split target atoms into copies");
  add_split_opts(split);
  split->callback([&] {
    action = [&] {
      const auto s = c.load();
      const AtomSet t = split_targets(s, targets);
      const int cp = parse_copies(copies);
      const LiftRule lr = lift_rule_from_string(rule);
      if (auto ra = std::get_if<RaAtomStructure>(&s)) {
        const RaSplit sp = split_atoms(*ra, t, cp, lr);
        if (sp.term) {
          std::vector<std::string> names;
          for (AtomId a : sp.term->targets()) names.push_back(ra->name(a));
          if (c.out.json)
            c.out.emit(json{{"copies", "omega"}, {"rule", rule}, {"targets", names}, {"base_atoms", ra->size()}}.dump(2));
          else
            c.out.emit("symbolic split: " + std::to_string(names.size()) + " targets, each an omega block of copies; "
                       "elements are finite or cofinite per block");
          return kPass;
        }
        const std::string text = to_text(*sp.structure);
        c.out.emit(c.out.json ? json{{"copies", cp}, {"rule", rule}, {"atoms", sp.structure->size()}, {"algebra", text}}.dump(2)
                              : text);
        return kPass;
      }
      const CaSplit sp = split_atoms(std::get<CaAtomStructure>(s), t, cp, lr);
      const std::string text = to_text(sp.structure);
      c.out.emit(c.out.json ? json{{"copies", cp}, {"rule", rule}, {"atoms", sp.structure.size()}, {"algebra", text}}.dump(2)
                            : text);
      return kPass;
    };
  });

  auto* theta = app.add_subcommand("theta", "check the sum-of-copies embedding into a finite split");
  add_split_opts(theta);
  theta->callback([&] {
    action = [&] {
      const auto s = c.load();
      const AtomSet t = split_targets(s, targets);
      const int cp = parse_copies(copies);
      if (cp == kOmegaCopies) fail(ErrorKind::InvalidArgument, "theta needs a finite copy count");
      const LiftRule lr = lift_rule_from_string(rule);
      ThetaResult th;
      std::string doc;
      std::size_t before = 0, after = 0;
      if (auto ra = std::get_if<RaAtomStructure>(&s)) {
        const RaSplit sp = split_atoms(*ra, t, cp, lr);
        th = theta_embedding(*ra, sp);
        if (c.out.json) doc = theta_to_json(ra->names(), sp.structure->names(), th, sp.map);
        before = ra->size();
        after = sp.structure->size();
      } else {
        const auto& ca = std::get<CaAtomStructure>(s);
        const CaSplit sp = split_atoms(ca, t, cp, lr);
        th = theta_embedding(ca, sp);
        if (c.out.json) doc = theta_to_json(ca.names(), sp.structure.names(), th, sp.map);
        before = ca.size();
        after = sp.structure.size();
      }
      c.out.emit(c.out.json ? doc
                            : "theta: " + std::to_string(before) + " atoms -> " + std::to_string(after) + " atoms, " +
                                  report_line(th.report));
      return th.report.ok ? kPass : kNegative;
    };
  });

  // lyndon
  int K = 3;
  auto* lyndon = app.add_subcommand("lyndon", "largest k <= K with exists winning G_k");
  lyndon->add_option("--K", K, "round bound");
  lyndon->callback([&] {
    action = [&] {
      const auto s = c.load();
      const LyndonResult r = std::visit([&](const auto& x) { return lyndon_check(x, K, c.limits()); }, s);
      std::vector<std::string> w;
      for (Player p : r.winners) w.push_back(to_string(p));
      if (c.out.json) {
        c.out.emit(json{{"K", K}, {"k_star", r.k_star}, {"winners", w}}.dump(2));
      } else {
        std::string line = "k*: " + std::to_string(r.k_star) + " of " + std::to_string(K) + "\nwinners:";
        for (std::size_t k = 0; k < w.size(); ++k) line += " G_" + std::to_string(k) + "=" + w[k];
        c.out.emit(line);
      }
      return r.k_star == K ? kPass : kNegative;
    };
  });

  // play
  PlayOptions play_opt;
  auto* play = app.add_subcommand("play", "play a game against the solver (type 'help' at the prompt)");
  play->add_option("--variant", play_opt.variant, "Gmk | boldG | RA")->check(CLI::IsMember({"Gmk", "boldG", "RA"}));
  play->add_option("--m", play_opt.m, "nodes");
  play->add_option("--k", play_opt.rounds, "rounds, or omega");
  play->add_option("--side", play_opt.side, "the human plays this side")->check(CLI::IsMember({"exists", "forall"}));
  play->add_option("--strategy", play_opt.strategy, "scripted forall for the computer: cone:... | decreasing:D");
  play->add_option("--transcript", play_opt.transcript, "save the transcript here");
  play->callback([&] {
    action = [&] {
      if (c.structure.empty() || c.structure == "-")
        fail(ErrorKind::InvalidArgument, "play reads moves from stdin; name the structure with --structure");
      const auto s = c.load();
      return run_play(s, play_opt, c.limits());
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (c.jobs <= 0)
    if (const char* env = std::getenv("CYLGAME_JOBS")) c.jobs = std::atoi(env);
  if (c.jobs > 0) set_default_jobs(c.jobs);
  start_watchdog(c.timeout_s);

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "cylgame: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "cylgame: " << e.what() << "\n";
    return kUsage;
  }
}
