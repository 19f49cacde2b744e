#include "cylgame/ef.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <regex>
#include <unordered_map>

#include "cylgame/error.hpp"

namespace cylgame {

namespace {

Structure graph(std::string name, int n, const std::function<bool(int, int)>& edge) {
  require(n >= 0, "structure size must be non-negative");
  Structure s;
  s.name = std::move(name);
  s.size = n;
  Relation e{"E", 2, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && edge(i, j)) e.tuples.insert({i, j});
  s.relations.push_back(std::move(e));
  return s;
}

using Pairs = std::vector<std::pair<int, int>>;

std::string pairs_key(const Pairs& ps) {
  std::string out;
  for (const auto& [a, b] : ps) {
    if (!out.empty()) out += ';';
    out += std::to_string(a) + ":" + std::to_string(b);
  }
  return out;
}

Pairs lift(const Pairs& ps, int j) {
  Pairs out = ps;
  if (j >= 0) out.erase(out.begin() + j);
  return out;
}

Pairs place(Pairs ps, int g, int h) {
  ps.emplace_back(g, h);
  std::sort(ps.begin(), ps.end());
  return ps;
}

class EfSolver {
 public:
  EfSolver(const Structure& g, const Structure& h, int p, const GameLimits& lim) : g_(g), h_(h), p_(p), lim_(lim) {}

  // forall's pebble choices: -1 (fresh pair) while one is free, else each
  // placed index
  std::vector<int> pebbles(const Pairs& ps) const {
    std::vector<int> out;
    if (static_cast<int>(ps.size()) < p_) out.push_back(-1);
    for (std::size_t j = 0; j < ps.size(); ++j)
      if (j == 0 || ps[j] != ps[j - 1]) out.push_back(static_cast<int>(j));
    return out;
  }

  bool exists_wins(const Pairs& ps, int r) {
    if (r == 0 || p_ == 0) return true;
    const std::string key = pairs_key(ps) + "|" + std::to_string(r);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (memo_.size() >= lim_.max_positions)
      fail(ErrorKind::Budget, "EF position cap exceeded (" + std::to_string(memo_.size()) + " positions)");
    bool ok = true;
    for (int j : pebbles(ps)) {
      const Pairs base = lift(ps, j);
      for (int gx = 0; gx < g_.size && ok; ++gx) ok = answer(base, gx, r) >= 0;
      if (!ok) break;
    }
    memo_[key] = ok;
    return ok;
  }

  // least h keeping exists alive, or -1
  int answer(const Pairs& base, int gx, int r) {
    for (int hx = 0; hx < h_.size; ++hx) {
      Pairs next = place(base, gx, hx);
      if (partial_iso(g_, h_, next) && exists_wins(next, r - 1)) return hx;
    }
    return -1;
  }

  std::size_t size() const { return memo_.size(); }

 private:
  const Structure& g_;
  const Structure& h_;
  int p_;
  GameLimits lim_;
  std::unordered_map<std::string, bool> memo_;
};

}  // namespace

Structure complete_graph(int n) { return graph("K" + std::to_string(n), n, [](int, int) { return true; }); }

Structure cycle_graph(int n) {
  return graph("C" + std::to_string(n), n, [n](int i, int j) { return (i + 1) % n == j || (j + 1) % n == i; });
}

Structure path_graph(int n) {
  return graph("P" + std::to_string(n), n, [](int i, int j) { return i + 1 == j || j + 1 == i; });
}

Structure empty_graph(int n) { return graph("E" + std::to_string(n), n, [](int, int) { return false; }); }

Structure linear_order(int n) {
  Structure s = graph("L" + std::to_string(n), n, [](int i, int j) { return i < j; });
  s.relations[0].name = "<";
  return s;
}

Structure structure_by_name(const std::string& name) {
  static const std::regex re("([KCPEL])([0-9]+)");
  std::smatch m;
  if (!std::regex_match(name, m, re)) fail(ErrorKind::InvalidArgument, "unknown structure '" + name + "' (expected K<n>, C<n>, P<n>, E<n> or L<n>)");
  const int n = std::stoi(m[2]);
  switch (m[1].str()[0]) {
    case 'K': return complete_graph(n);
    case 'C': return cycle_graph(n);
    case 'P': return path_graph(n);
    case 'E': return empty_graph(n);
    default: return linear_order(n);
  }
}

bool partial_iso(const Structure& g, const Structure& h, const std::vector<std::pair<int, int>>& pairs) {
  for (const auto& [a, b] : pairs)
    for (const auto& [c, d] : pairs)
      if ((a == c) != (b == d)) return false;
  const std::size_t k = pairs.size();
  for (std::size_t rel = 0; rel < g.relations.size(); ++rel) {
    const int ar = g.relations[rel].arity;
    std::vector<std::size_t> idx(static_cast<std::size_t>(ar), 0);
    std::vector<int> tg(static_cast<std::size_t>(ar)), th(static_cast<std::size_t>(ar));
    if (k == 0) continue;
    for (;;) {
      for (int q = 0; q < ar; ++q) {
        tg[static_cast<std::size_t>(q)] = pairs[idx[static_cast<std::size_t>(q)]].first;
        th[static_cast<std::size_t>(q)] = pairs[idx[static_cast<std::size_t>(q)]].second;
      }
      if (g.holds(rel, tg) != h.holds(rel, th)) return false;
      int q = 0;
      while (q < ar && ++idx[static_cast<std::size_t>(q)] == k) idx[static_cast<std::size_t>(q++)] = 0;
      if (q == ar) break;
    }
  }
  return true;
}

GameResult solve_ef(const Structure& g, const Structure& h, int p, int r, const GameLimits& lim) {
  require(p >= 0 && r >= 0, "EF game needs p, r >= 0");
  require(g.relations.size() == h.relations.size(), "EF structures must share a signature");
  for (std::size_t i = 0; i < g.relations.size(); ++i)
    require(g.relations[i].arity == h.relations[i].arity, "EF structures must share a signature");
  const auto t0 = std::chrono::steady_clock::now();
  EfSolver solver(g, h, p, lim);
  GameResult res;
  const bool exists = solver.exists_wins({}, r);
  res.winner = exists ? Player::Exists : Player::Forall;
  StrategyCertificate& cert = res.certificate;
  cert.winner = res.winner;
  cert.game = GameVariant::EF;
  cert.rounds = r;

  std::unordered_map<std::string, bool> seen;
  std::function<void(const Pairs&, int)> walk = [&](const Pairs& ps, int k) {
    if (k == 0 || p == 0) return;
    const std::string pk = pairs_key(ps) + "|r" + std::to_string(k);
    if (!seen.emplace(pk, true).second) return;
    if (exists) {
      for (int j : solver.pebbles(ps)) {
        const Pairs base = lift(ps, j);
        for (int gx = 0; gx < g.size; ++gx) {
          const int hx = solver.answer(base, gx, k);
          cert.moves[pk + "|" + std::to_string(j) + "," + std::to_string(gx)] = std::to_string(hx);
          walk(place(base, gx, hx), k - 1);
        }
      }
      return;
    }
    for (int j : solver.pebbles(ps)) {
      const Pairs base = lift(ps, j);
      for (int gx = 0; gx < g.size; ++gx) {
        bool wins = true;
        for (int hx = 0; hx < h.size && wins; ++hx) {
          const Pairs next = place(base, gx, hx);
          wins = !partial_iso(g, h, next) || !solver.exists_wins(next, k - 1);
        }
        if (!wins) continue;
        cert.moves[pk] = std::to_string(j) + "," + std::to_string(gx);
        for (int hx = 0; hx < h.size; ++hx) {
          const Pairs next = place(base, gx, hx);
          if (partial_iso(g, h, next)) walk(next, k - 1);
        }
        return;
      }
    }
  };
  walk({}, r);

  res.rounds_solved = r;
  res.positions_explored = solver.size();
  res.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  res.params = {{"left", g.name}, {"right", h.name}, {"p", std::to_string(p)}, {"r", std::to_string(r)}};
  return res;
}

Report verify_ef_strategy(const Structure& g, const Structure& h, int p, int r, const StrategyCertificate& cert) {
  if (cert.game != GameVariant::EF || cert.rounds != r) return Report::failure("mode", {}, "certificate is not for this EF game");
  // all multisets of placements are replayed; nothing shared with the solver
  // beyond the key format
  std::unordered_map<std::string, bool> done;
  std::function<Report(const Pairs&, int)> rec = [&](const Pairs& ps, int k) -> Report {
    const std::string pk = pairs_key(ps) + "|r" + std::to_string(k);
    if (!done.emplace(pk, true).second) return Report::pass();
    std::vector<int> choices;
    if (static_cast<int>(ps.size()) < p) choices.push_back(-1);
    for (std::size_t j = 0; j < ps.size(); ++j)
      if (j == 0 || ps[j] != ps[j - 1]) choices.push_back(static_cast<int>(j));
    if (cert.winner == Player::Exists) {
      if (k == 0 || p == 0) return Report::pass();
      for (int j : choices)
        for (int gx = 0; gx < g.size; ++gx) {
          auto it = cert.moves.find(pk + "|" + std::to_string(j) + "," + std::to_string(gx));
          if (it == cert.moves.end()) return Report::failure("not-covered", {j, gx}, "no answer at " + pk);
          const int hx = std::stoi(it->second);
          if (hx < 0 || hx >= h.size) return Report::failure("illegal-response", {j, gx, hx}, "answer out of range at " + pk);
          Pairs next = lift(ps, j);
          next.emplace_back(gx, hx);
          std::sort(next.begin(), next.end());
          if (!partial_iso(g, h, next)) return Report::failure("illegal-response", {j, gx, hx}, "answer breaks the partial isomorphism at " + pk);
          Report sub = rec(next, k - 1);
          if (!sub.ok) return sub;
        }
      return Report::pass();
    }
    if (k == 0 || p == 0) return Report::failure("rounds", {}, "exists survives all rounds at " + pk);
    auto it = cert.moves.find(pk);
    if (it == cert.moves.end()) return Report::failure("not-covered", {}, "no move at " + pk);
    const auto comma = it->second.find(',');
    if (comma == std::string::npos) return Report::failure("malformed", {}, "unparsable move at " + pk);
    const int j = std::stoi(it->second.substr(0, comma));
    const int gx = std::stoi(it->second.substr(comma + 1));
    if (std::find(choices.begin(), choices.end(), j) == choices.end() || gx < 0 || gx >= g.size)
      return Report::failure("illegal-challenge", {j, gx}, "illegal move at " + pk);
    for (int hx = 0; hx < h.size; ++hx) {
      Pairs next = lift(ps, j);
      next.emplace_back(gx, hx);
      std::sort(next.begin(), next.end());
      if (!partial_iso(g, h, next)) continue;
      Report sub = rec(next, k - 1);
      if (!sub.ok) return sub;
    }
    return Report::pass();
  };
  return rec({}, r);
}

}  // namespace cylgame
