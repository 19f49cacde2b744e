#include <algorithm>
#include <chrono>
#include <climits>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cylgame/error.hpp"
#include "cylgame/game.hpp"

namespace cylgame {

std::string to_string(Player p) { return p == Player::Exists ? "exists" : "forall"; }

Player player_from_string(const std::string& s) {
  if (s == "exists") return Player::Exists;
  if (s == "forall") return Player::Forall;
  fail(ErrorKind::Parse, "unknown player '" + s + "'");
}

std::string to_string(GameVariant v) {
  switch (v) {
    case GameVariant::Gmk: return "Gmk";
    case GameVariant::BoldG: return "boldG";
    case GameVariant::Gk: return "Gk";
    case GameVariant::RA: return "RA";
    case GameVariant::EF: return "EF";
  }
  return "?";
}

GameVariant variant_from_string(const std::string& s) {
  for (auto v : {GameVariant::Gmk, GameVariant::BoldG, GameVariant::Gk, GameVariant::RA, GameVariant::EF})
    if (to_string(v) == s) return v;
  fail(ErrorKind::Parse, "unknown game variant '" + s + "'");
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

struct PosHash {
  std::size_t operator()(const Position& p) const {
    std::size_t h = static_cast<std::size_t>(p.nodes);
    for (AtomId a : p.key) h = h * 1000003ULL ^ static_cast<std::size_t>(a + 1);
    return h;
  }
};

constexpr int kInf = INT_MAX;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string raw_key(const std::vector<AtomId>& raw) { return join(std::vector<int>(raw.begin(), raw.end())); }

}  // namespace

std::string position_key(const Position& p) {
  return std::to_string(p.nodes) + ":" + join(std::vector<int>(p.key.begin(), p.key.end()));
}

std::string challenge_key(const Challenge& c) { return join(c); }

Challenge parse_challenge(const std::string& s) {
  Challenge c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      c.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "malformed challenge '" + s + "'");
    }
  }
  return c;
}

namespace {

class BoundedSolver {
 public:
  BoundedSolver(const GameModel& g, std::size_t cap) : g_(g), cap_(cap) {}

  // kInf when exists survives r rounds from p, else forall's least number of
  // rounds to win
  int query(const Position& p, int r) {
    if (r == 0) return kInf;
    auto it = memo_.find(p);
    if (it == memo_.end()) {
      if (memo_.size() >= cap_)
        fail(ErrorKind::Budget, "position cap " + std::to_string(cap_) + " exceeded (frontier " +
                                    std::to_string(memo_.size()) + " positions)");
      it = memo_.emplace(p, Entry{}).first;
    }
    if (r <= it->second.e_upto) return kInf;
    if (r >= it->second.a_min) return it->second.a_min;
    int best = kInf;
    Challenge best_c;
    g_.challenges(p, [&](const Challenge& c) {
      int worst = 0;
      bool escape = false;
      g_.responses(p, c, [&](const std::vector<AtomId>&, Position&& q) {
        const int d = query(q, r - 1);
        if (d == kInf) {
          escape = true;
          return false;
        }
        worst = std::max(worst, d);
        return true;
      });
      if (!escape && worst + 1 < best) {
        best = worst + 1;
        best_c = c;
      }
      return best > 1;
    });
    auto& e = memo_[p];
    if (best == kInf) {
      e.e_upto = std::max(e.e_upto, r);
    } else {
      e.a_min = best;
      e.best = best_c;
    }
    return best;
  }

  const Challenge& best(const Position& p) const { return memo_.at(p).best; }
  std::size_t size() const { return memo_.size(); }

 private:
  struct Entry {
    int e_upto = 0;
    int a_min = kInf;
    Challenge best;
  };
  const GameModel& g_;
  std::size_t cap_;
  std::unordered_map<Position, Entry, PosHash> memo_;
};

}  // namespace

GameResult solve_bounded(const GameModel& g, int k, const GameLimits& lim) {
  require(k >= 0, "round count must be non-negative");
  const auto t0 = std::chrono::steady_clock::now();
  BoundedSolver solver(g, lim.max_positions);
  GameResult res;
  res.rounds_solved = k;
  auto& cert = res.certificate;
  cert.game = g.variant();
  cert.safety = false;
  cert.rounds = k;

  // forall's best opening: atom whose worst initial network is quickest to beat
  int best_d = kInf;
  AtomId best_atom = -1;
  std::vector<std::vector<AtomId>> exists_init(g.atom_count());
  for (AtomId a = 0; a < static_cast<AtomId>(g.atom_count()); ++a) {
    int worst = 0;
    bool escape = false;
    g.initial_responses(a, [&](const std::vector<AtomId>& raw, Position&& p) {
      const int d = solver.query(p, k);
      if (d == kInf) {
        escape = true;
        exists_init[static_cast<std::size_t>(a)] = raw;
        return false;
      }
      worst = std::max(worst, d);
      return true;
    });
    if (!escape && worst < best_d) {
      best_d = worst;
      best_atom = a;
    }
  }

  if (best_atom < 0) {
    res.winner = Player::Exists;
    cert.winner = Player::Exists;
    std::unordered_set<std::string> seen;
    std::function<void(const Position&, int)> walk = [&](const Position& p, int r) {
      if (r == 0 || !seen.insert(position_key(p) + "|" + std::to_string(r)).second) return;
      g.challenges(p, [&](const Challenge& c) {
        g.responses(p, c, [&](const std::vector<AtomId>& raw, Position&& q) {
          if (solver.query(q, r - 1) != kInf) return true;
          cert.moves[position_key(p) + "|r" + std::to_string(r) + "|" + challenge_key(c)] = raw_key(raw);
          walk(q, r - 1);
          return false;
        });
        return true;
      });
    };
    for (AtomId a = 0; a < static_cast<AtomId>(g.atom_count()); ++a) {
      const auto& raw = exists_init[static_cast<std::size_t>(a)];
      cert.moves["init:" + std::to_string(a)] = raw_key(raw);
    }
    for (AtomId a = 0; a < static_cast<AtomId>(g.atom_count()); ++a) {
      g.initial_responses(a, [&](const std::vector<AtomId>& raw, Position&& p) {
        if (raw != exists_init[static_cast<std::size_t>(a)]) return true;
        walk(p, k);
        return false;
      });
    }
  } else {
    res.winner = Player::Forall;
    cert.winner = Player::Forall;
    cert.moves["init"] = std::to_string(best_atom);
    std::unordered_set<std::string> seen;
    std::function<void(const Position&, int)> walk = [&](const Position& p, int r) {
      const std::string key = position_key(p);
      if (!seen.insert(key).second) return;
      const int d = solver.query(p, r);
      if (d == kInf) fail(ErrorKind::InvalidArgument, "internal: forall strategy reached a losing position");
      const Challenge c = solver.best(p);
      cert.moves[key] = challenge_key(c);
      g.responses(p, c, [&](const std::vector<AtomId>&, Position&& q) {
        walk(q, r - 1);
        return true;
      });
    };
    g.initial_responses(best_atom, [&](const std::vector<AtomId>&, Position&& p) {
      walk(p, k);
      return true;
    });
  }
  res.positions_explored = solver.size();
  res.wall_time_ms = ms_since(t0);
  return res;
}

namespace {

struct Arena {
  std::vector<Position> pos;
  std::unordered_map<Position, std::uint32_t, PosHash> index;
  // per position: challenges, each with deduplicated successor ids
  std::vector<std::vector<Challenge>> challenges;
  std::vector<std::vector<std::vector<std::uint32_t>>> succ;
  std::vector<std::vector<std::uint32_t>> initial;  // per atom

  std::uint32_t intern(Position&& p, std::size_t cap, std::deque<std::uint32_t>& queue) {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    if (pos.size() >= cap)
      fail(ErrorKind::Budget, "position cap " + std::to_string(cap) + " exceeded (frontier " +
                                  std::to_string(queue.size()) + " positions)");
    const auto id = static_cast<std::uint32_t>(pos.size());
    index.emplace(p, id);
    pos.push_back(std::move(p));
    queue.push_back(id);
    return id;
  }
};

}  // namespace

GameResult solve_safety(const GameModel& g, const GameLimits& lim) {
  const auto t0 = std::chrono::steady_clock::now();
  Arena ar;
  std::deque<std::uint32_t> queue;
  const auto atoms = static_cast<AtomId>(g.atom_count());
  ar.initial.resize(static_cast<std::size_t>(atoms));
  for (AtomId a = 0; a < atoms; ++a)
    g.initial_responses(a, [&](const std::vector<AtomId>&, Position&& p) {
      ar.initial[static_cast<std::size_t>(a)].push_back(ar.intern(std::move(p), lim.max_positions, queue));
      return true;
    });
  while (!queue.empty()) {
    const std::uint32_t id = queue.front();
    queue.pop_front();
    std::vector<Challenge> cs;
    std::vector<std::vector<std::uint32_t>> ss;
    const Position p = ar.pos[id];
    g.challenges(p, [&](const Challenge& c) {
      std::vector<std::uint32_t> out;
      g.responses(p, c, [&](const std::vector<AtomId>&, Position&& q) {
        out.push_back(ar.intern(std::move(q), lim.max_positions, queue));
        return true;
      });
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      cs.push_back(c);
      ss.push_back(std::move(out));
      return true;
    });
    if (ar.challenges.size() <= id) {
      ar.challenges.resize(ar.pos.size());
      ar.succ.resize(ar.pos.size());
    }
    ar.challenges[id] = std::move(cs);
    ar.succ[id] = std::move(ss);
  }
  const std::size_t P = ar.pos.size();
  ar.challenges.resize(P);
  ar.succ.resize(P);

  // forall attractor by increasing rank
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pred(P);
  std::vector<std::vector<std::uint32_t>> live_count(P);
  std::vector<int> rank(P, kInf);
  std::vector<std::int32_t> best(P, -1);
  for (std::uint32_t p = 0; p < P; ++p) {
    live_count[p].resize(ar.succ[p].size());
    for (std::uint32_t c = 0; c < ar.succ[p].size(); ++c) {
      live_count[p][c] = static_cast<std::uint32_t>(ar.succ[p][c].size());
      for (std::uint32_t q : ar.succ[p][c]) pred[q].emplace_back(p, c);
      if (ar.succ[p][c].empty() && rank[p] == kInf) {
        rank[p] = 1;
        best[p] = static_cast<std::int32_t>(c);
      }
    }
  }
  std::vector<std::uint32_t> layer;
  for (std::uint32_t p = 0; p < P; ++p)
    if (rank[p] == 1) layer.push_back(p);
  int r = 1;
  while (!layer.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t q : layer)
      for (auto [p, c] : pred[q]) {
        if (--live_count[p][c] == 0 && rank[p] == kInf) {
          rank[p] = r + 1;
          best[p] = static_cast<std::int32_t>(c);
          next.push_back(p);
        }
      }
    // deterministic challenge choice: lowest challenge index among those that close at this rank
    for (std::uint32_t p : next)
      for (std::uint32_t c = 0; c < live_count[p].size(); ++c)
        if (live_count[p][c] == 0) {
          best[p] = static_cast<std::int32_t>(c);
          break;
        }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
    ++r;
  }

  GameResult res;
  res.rounds_solved = -1;
  auto& cert = res.certificate;
  cert.game = g.variant();
  cert.safety = true;
  cert.rounds = 0;
  int best_rank = kInf;
  AtomId best_atom = -1;
  for (AtomId a = 0; a < atoms; ++a) {
    int worst = 0;
    for (std::uint32_t p : ar.initial[static_cast<std::size_t>(a)]) worst = std::max(worst, rank[p]);
    if (worst < best_rank) {
      best_rank = worst;
      best_atom = a;
    }
  }
  if (best_atom < 0) {
    res.winner = Player::Exists;
    cert.winner = Player::Exists;
    std::vector<char> seen(P, 0);
    std::function<void(std::uint32_t)> walk = [&](std::uint32_t id) {
      if (seen[id]) return;
      seen[id] = 1;
      const Position p = ar.pos[id];
      for (const auto& c : ar.challenges[id]) {
        g.responses(p, c, [&](const std::vector<AtomId>& raw, Position&& q) {
          const std::uint32_t qid = ar.index.at(q);
          if (rank[qid] != kInf) return true;
          cert.moves[position_key(p) + "|" + challenge_key(c)] = raw_key(raw);
          walk(qid);
          return false;
        });
      }
    };
    for (AtomId a = 0; a < atoms; ++a)
      g.initial_responses(a, [&](const std::vector<AtomId>& raw, Position&& p) {
        const std::uint32_t id = ar.index.at(p);
        if (rank[id] != kInf) return true;
        cert.moves["init:" + std::to_string(a)] = raw_key(raw);
        walk(id);
        return false;
      });
  } else {
    res.winner = Player::Forall;
    cert.winner = Player::Forall;
    cert.moves["init"] = std::to_string(best_atom);
    std::vector<char> seen(P, 0);
    std::function<void(std::uint32_t)> walk = [&](std::uint32_t id) {
      if (seen[id]) return;
      seen[id] = 1;
      const auto c = static_cast<std::size_t>(best[id]);
      cert.moves[position_key(ar.pos[id])] = challenge_key(ar.challenges[id][c]);
      for (std::uint32_t q : ar.succ[id][c]) walk(q);
    };
    for (std::uint32_t p : ar.initial[static_cast<std::size_t>(best_atom)]) walk(p);
  }
  res.positions_explored = P;
  res.wall_time_ms = ms_since(t0);
  return res;
}

}  // namespace cylgame
