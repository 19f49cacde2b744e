#include "cylgame/strategy.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cylgame/error.hpp"

namespace cylgame {

namespace {

std::vector<AtomId> parse_labels(const std::string& s) {
  std::vector<AtomId> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(static_cast<AtomId>(std::stol(tok)));
  return out;
}

int root_of(std::size_t size, int dim) {
  for (int k = 0; k <= 64; ++k)
    if (Network::tuple_count(dim, k) == size) return k;
  return -1;
}

using RawSink = std::function<bool(const std::vector<AtomId>&)>;

// Game rules re-derived for replay. Deliberately plain: no shared move
// generators with the solvers.
class Rules {
 public:
  virtual ~Rules() = default;
  virtual std::size_t atoms() const = 0;
  virtual int dim() const = 0;
  virtual std::string initial_problem(AtomId a, const std::vector<AtomId>& raw) const = 0;
  virtual void initial_networks(AtomId a, const RawSink& f) const = 0;
  virtual void challenges(const Position& p, const std::function<void(const Challenge&)>& f) const = 0;
  virtual std::string challenge_problem(const Position& p, const Challenge& c) const = 0;
  virtual std::string response_problem(const Position& p, const Challenge& c, const std::vector<AtomId>& raw) const = 0;
  virtual void responses(const Position& p, const Challenge& c, const RawSink& f) const = 0;
  virtual Position canon(const std::vector<AtomId>& raw) const = 0;
};

class CaRules final : public Rules {
 public:
  CaRules(const CaAtomStructure& s, int m) : s_(s), m_(m), n_(s.dimension()) {}
  std::size_t atoms() const override { return s_.size(); }
  int dim() const override { return n_; }

  Position canon(const std::vector<AtomId>& raw) const override {
    Network net;
    net.dim = n_;
    net.nodes = root_of(raw.size(), n_);
    net.label = raw;
    return Position{net.nodes, canonical_network(net).key};
  }

  bool fits_pattern(AtomId a, const std::vector<int>& t) const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (s_.diag(i, j).contains(a) != (t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)])) return false;
    return true;
  }

  std::vector<int> pattern(AtomId a) const {
    std::vector<int> t(static_cast<std::size_t>(n_));
    int next = 0;
    for (int i = 0; i < n_; ++i) {
      int v = -1;
      for (int j = 0; j < i && v < 0; ++j)
        if (s_.diag(i, j).contains(a)) v = t[static_cast<std::size_t>(j)];
      t[static_cast<std::size_t>(i)] = v >= 0 ? v : next++;
    }
    return t;
  }

  std::string initial_problem(AtomId a, const std::vector<AtomId>& raw) const override {
    const auto t = pattern(a);
    int nodes = 0;
    for (int v : t) nodes = std::max(nodes, v + 1);
    if (raw.size() != Network::tuple_count(n_, nodes)) return "initial network has the wrong node count";
    Network net;
    net.dim = n_;
    net.nodes = nodes;
    net.label = raw;
    if (net.at(t) != a) return "initial network does not realise the chosen atom";
    auto r = network_validate(s_, net);
    return r.ok ? "" : "initial network invalid: " + r.condition;
  }

  AtomSet pattern_set(const std::vector<int>& t) const {
    AtomSet out = s_.full_set();
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        if (t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)]) out &= s_.diag(i, j);
        else out -= s_.diag(i, j);
      }
    return out;
  }

  AtomSet candidates(const Network& net, const std::vector<int>& t, bool symmetric) const {
    AtomSet cand = pattern_set(t);
    std::vector<int> u;
    for (int i = 0; i < n_; ++i) {
      u = t;
      for (int v = 0; v < net.nodes; ++v) {
        u[static_cast<std::size_t>(i)] = v;
        const AtomId c = net.at(u);
        if (c < 0) continue;
        if (symmetric) {
          cand &= s_.acc_row(i, c);
        } else {
          for (AtomId b = cand.first(); b >= 0; b = cand.next(b + 1))
            if (!s_.related(i, b, c)) cand.erase(b);
        }
      }
    }
    return cand;
  }

  // fewest candidates first; an empty domain cuts the branch
  void complete(Network& net, const RawSink& f) const {
    std::vector<std::size_t> open;
    for (std::size_t idx = 0; idx < net.label.size(); ++idx)
      if (net.label[idx] < 0) open.push_back(idx);
    const bool symmetric = s_.equivalence_accessibility();
    std::function<bool(std::size_t)> rec = [&](std::size_t left) -> bool {
      if (left == 0) return f(net.label);
      std::size_t best = 0;
      AtomSet best_cand;
      std::size_t best_count = ~std::size_t{0};
      std::vector<int> t;
      for (std::size_t k = 0; k < left; ++k) {
        net.decode(open[k], t);
        AtomSet cand = candidates(net, t, symmetric);
        const std::size_t c = cand.count();
        if (c < best_count) {
          best = k;
          best_count = c;
          best_cand = std::move(cand);
          if (c == 0) return true;
        }
      }
      std::swap(open[best], open[left - 1]);
      const std::size_t idx = open[left - 1];
      for (AtomId b = best_cand.first(); b >= 0; b = best_cand.next(b + 1)) {
        net.label[idx] = b;
        if (!rec(left - 1)) {
          net.label[idx] = -1;
          return false;
        }
      }
      net.label[idx] = -1;
      return true;
    };
    rec(open.size());
  }

  void initial_networks(AtomId a, const RawSink& f) const override {
    const auto t = pattern(a);
    if (!fits_pattern(a, t)) return;
    int nodes = 0;
    for (int v : t) nodes = std::max(nodes, v + 1);
    Network net(n_, nodes);
    net.at(t) = a;
    complete(net, f);
  }

  Network as_net(const Position& p) const {
    Network net;
    net.dim = n_;
    net.nodes = p.nodes;
    net.label = p.key;
    return net;
  }

  void challenges(const Position& p, const std::function<void(const Challenge&)>& f) const override {
    const Network net = as_net(p);
    std::set<Challenge> seen;
    std::vector<int> x;
    for (std::size_t idx = 0; idx < net.label.size(); ++idx) {
      net.decode(idx, x);
      for (int i = 0; i < n_; ++i)
        for (AtomId a = 0; a < static_cast<AtomId>(s_.size()); ++a) {
          Challenge c(x.begin(), x.end());
          c[static_cast<std::size_t>(i)] = 0;
          c.push_back(i);
          c.push_back(a);
          c.push_back(-1);
          for (int z = p.nodes < m_ ? -1 : 0; z < (p.nodes < m_ ? 0 : p.nodes); ++z) {
            c.back() = z;
            if (challenge_problem(p, c).empty() && seen.insert(c).second) f(c);
          }
        }
    }
  }

  std::string challenge_problem(const Position& p, const Challenge& c) const override {
    if (c.size() != static_cast<std::size_t>(n_ + 3)) return "challenge has the wrong arity";
    const Network net = as_net(p);
    std::vector<int> x(c.begin(), c.begin() + n_);
    const int i = c[static_cast<std::size_t>(n_)];
    const AtomId a = c[static_cast<std::size_t>(n_ + 1)];
    const int z = c[static_cast<std::size_t>(n_ + 2)];
    if (i < 0 || i >= n_ || a < 0 || a >= static_cast<AtomId>(s_.size())) return "challenge out of range";
    for (int v : x)
      if (v < 0 || v >= p.nodes) return "challenge tuple out of range";
    if (!s_.related(i, net.at(x), a)) return "atom is not below the cylindrification";
    for (int w = 0; w < p.nodes; ++w) {
      auto y = x;
      y[static_cast<std::size_t>(i)] = w;
      if (net.at(y) == a) return "challenge is already witnessed";
    }
    auto fresh = x;
    fresh[static_cast<std::size_t>(i)] = p.nodes;
    if (!fits_pattern(a, fresh)) return "atom cannot sit on a fresh node";
    if (p.nodes < m_) return z == -1 ? "" : "deletion while nodes remain";
    if (z < 0 || z >= p.nodes) return "network is full and no node is deleted";
    for (int j = 0; j < n_; ++j)
      if (j != i && x[static_cast<std::size_t>(j)] == z) return "deleted node lies on the challenged face";
    return "";
  }

  Network base_for(const Position& p, const Challenge& c, std::vector<int>& y) const {
    Network net = as_net(p);
    const int i = c[static_cast<std::size_t>(n_)];
    const int z = c[static_cast<std::size_t>(n_ + 2)];
    y.assign(c.begin(), c.begin() + n_);
    if (z >= 0) {
      std::vector<int> keep;
      for (int v = 0; v < p.nodes; ++v)
        if (v != z) keep.push_back(v);
      net = restrict_network(net, keep);
      for (int j = 0; j < n_; ++j) {
        int& v = y[static_cast<std::size_t>(j)];
        if (j == i) continue;
        if (v > z) --v;
      }
    }
    Network ext(n_, net.nodes + 1);
    std::vector<int> t;
    for (std::size_t idx = 0; idx < net.label.size(); ++idx) {
      net.decode(idx, t);
      ext.at(t) = net.label[idx];
    }
    y[static_cast<std::size_t>(i)] = net.nodes;
    return ext;
  }

  std::string response_problem(const Position& p, const Challenge& c, const std::vector<AtomId>& raw) const override {
    std::vector<int> y;
    Network ext = base_for(p, c, y);
    if (raw.size() != ext.label.size()) return "response has the wrong size";
    for (std::size_t idx = 0; idx < raw.size(); ++idx)
      if (ext.label[idx] >= 0 && ext.label[idx] != raw[idx]) return "response changes an existing tuple";
    Network out = ext;
    out.label = raw;
    if (out.at(y) != c[static_cast<std::size_t>(n_ + 1)]) return "response does not realise the challenged atom";
    auto r = network_validate(s_, out);
    return r.ok ? "" : "response invalid: " + r.condition;
  }

  void responses(const Position& p, const Challenge& c, const RawSink& f) const override {
    std::vector<int> y;
    Network ext = base_for(p, c, y);
    ext.at(y) = c[static_cast<std::size_t>(n_ + 1)];
    complete(ext, [&](const std::vector<AtomId>& raw) {
      Network out = ext;
      out.label = raw;
      return network_validate(s_, out).ok ? f(raw) : true;
    });
  }

 private:
  const CaAtomStructure& s_;
  int m_;
  int n_;
};

class RaRules final : public Rules {
 public:
  RaRules(const RaAtomStructure& s, int m) : s_(s), m_(m) {}
  std::size_t atoms() const override { return s_.size(); }
  int dim() const override { return 2; }

  Position canon(const std::vector<AtomId>& raw) const override {
    BasicMatrix mt(root_of(raw.size(), 2));
    mt.entry = raw;
    return Position{mt.size, canonical_matrix(mt).key};
  }

  std::string initial_problem(AtomId a, const std::vector<AtomId>& raw) const override {
    if (raw.size() != 4) return "initial matrix must have two nodes";
    BasicMatrix mt(2);
    mt.entry = raw;
    if (mt.at(0, 1) != a) return "initial matrix does not realise the chosen atom";
    auto r = matrix_validate(s_, mt);
    return r.ok ? "" : "initial matrix invalid: " + r.condition;
  }

  void initial_networks(AtomId a, const RawSink& f) const override {
    const auto n = static_cast<AtomId>(s_.size());
    for (AtomId e0 = 0; e0 < n; ++e0)
      for (AtomId e1 = 0; e1 < n; ++e1) {
        BasicMatrix mt(2);
        mt.at(0, 0) = e0;
        mt.at(1, 1) = e1;
        mt.at(0, 1) = a;
        mt.at(1, 0) = s_.converse(a);
        if (matrix_validate(s_, mt).ok && !f(mt.entry)) return;
      }
  }

  void challenges(const Position& p, const std::function<void(const Challenge&)>& f) const override {
    const auto n = static_cast<AtomId>(s_.size());
    for (int x = 0; x < p.nodes; ++x)
      for (int y = 0; y < p.nodes; ++y)
        for (AtomId a = 0; a < n; ++a)
          for (AtomId b = 0; b < n; ++b)
            for (int z = -1; z < p.nodes; ++z) {
              Challenge c{x, y, a, b, z};
              if (challenge_problem(p, c).empty()) f(c);
            }
  }

  std::string challenge_problem(const Position& p, const Challenge& c) const override {
    if (c.size() != 5) return "challenge has the wrong arity";
    const int k = p.nodes;
    const int x = c[0], y = c[1], z = c[4];
    const AtomId a = c[2], b = c[3];
    const auto n = static_cast<AtomId>(s_.size());
    if (x < 0 || y < 0 || x >= k || y >= k || a < 0 || b < 0 || a >= n || b >= n) return "challenge out of range";
    auto at = [&](int i, int j) { return p.key[static_cast<std::size_t>(i * k + j)]; };
    if (!s_.consistent(a, b, at(x, y))) return "triangle (a, b, N(x,y)) is inconsistent";
    for (int w = 0; w < k; ++w)
      if (at(x, w) == a && at(w, y) == b) return "challenge is already witnessed";
    if (k < m_) return z == -1 ? "" : "deletion while nodes remain";
    if (z < 0 || z >= k) return "matrix is full and no node is deleted";
    if (z == x || z == y) return "deleted node is x or y";
    return "";
  }

  BasicMatrix base_for(const Position& p, const Challenge& c, int& x, int& y) const {
    BasicMatrix mt(p.nodes);
    mt.entry = p.key;
    x = c[0];
    y = c[1];
    const int z = c[4];
    if (z >= 0) {
      std::vector<int> keep;
      for (int v = 0; v < p.nodes; ++v)
        if (v != z) keep.push_back(v);
      mt = restrict_matrix(mt, keep);
      if (x > z) --x;
      if (y > z) --y;
    }
    BasicMatrix ext(mt.size + 1);
    for (int i = 0; i < mt.size; ++i)
      for (int j = 0; j < mt.size; ++j) ext.at(i, j) = mt.at(i, j);
    return ext;
  }

  std::string response_problem(const Position& p, const Challenge& c, const std::vector<AtomId>& raw) const override {
    int x, y;
    BasicMatrix ext = base_for(p, c, x, y);
    if (raw.size() != ext.entry.size()) return "response has the wrong size";
    for (std::size_t idx = 0; idx < raw.size(); ++idx)
      if (ext.entry[idx] >= 0 && ext.entry[idx] != raw[idx]) return "response changes an existing entry";
    BasicMatrix out = ext;
    out.entry = raw;
    const int z = out.size - 1;
    if (out.at(x, z) != c[2] || out.at(z, y) != c[3]) return "response does not witness the triangle";
    auto r = matrix_validate(s_, out);
    return r.ok ? "" : "response invalid: " + r.condition;
  }

  void responses(const Position& p, const Challenge& c, const RawSink& f) const override {
    int x, y;
    BasicMatrix ext = base_for(p, c, x, y);
    const int z = ext.size - 1;
    const auto n = static_cast<AtomId>(s_.size());
    std::function<bool(int)> rec = [&](int v) -> bool {
      if (v == z) {
        for (AtomId e = 0; e < n; ++e) {
          ext.at(z, z) = e;
          if (matrix_validate(s_, ext).ok && !f(ext.entry)) return false;
        }
        ext.at(z, z) = -1;
        return true;
      }
      for (AtomId a = 0; a < n; ++a) {
        if (v == x && a != c[2]) continue;
        if (v == y && s_.converse(a) != c[3]) continue;
        ext.at(v, z) = a;
        ext.at(z, v) = s_.converse(a);
        bool ok = true;
        for (int u = 0; u <= v && ok; ++u)
          for (int w = 0; w <= v && ok; ++w)
            ok = s_.consistent(ext.at(u, w), ext.at(w, z), ext.at(u, z));
        if (ok && !rec(v + 1)) return false;
      }
      ext.at(v, z) = -1;
      ext.at(z, v) = -1;
      return true;
    };
    rec(0);
  }

 private:
  const RaAtomStructure& s_;
  int m_;
};

struct Replay {
  const Rules& rules;
  const StrategyCertificate& cert;
  const VerifyOptions& opt;
  std::size_t visited = 0;
  Report failure;

  bool budget() {
    if (++visited > opt.max_positions) {
      failure = Report::failure("budget", {}, "verification exceeded the position budget");
      return false;
    }
    return true;
  }

  const std::string* lookup(const std::string& key) const {
    auto it = cert.moves.find(key);
    return it == cert.moves.end() ? nullptr : &it->second;
  }

  // exists certificate
  bool exists_from(const Position& p, int r, std::unordered_set<std::string>& done) {
    if (!cert.safety && r == 0) return true;
    const std::string pk = position_key(p);
    const std::string memo = cert.safety ? pk : pk + "|r" + std::to_string(r);
    if (!done.insert(memo).second) return true;
    if (!budget()) return false;
    bool ok = true;
    std::vector<std::pair<Challenge, Position>> next;
    rules.challenges(p, [&](const Challenge& c) {
      if (!ok) return;
      const std::string key = cert.safety ? pk + "|" + challenge_key(c)
                                          : pk + "|r" + std::to_string(r) + "|" + challenge_key(c);
      const std::string* mv = lookup(key);
      if (!mv) {
        failure = Report::failure("not-covered", c, "no response for challenge at position " + pk);
        ok = false;
        return;
      }
      std::vector<AtomId> raw;
      try {
        raw = parse_labels(*mv);
      } catch (const std::exception&) {
        failure = Report::failure("malformed", c, "unparsable response at " + key);
        ok = false;
        return;
      }
      const std::string prob = rules.response_problem(p, c, raw);
      if (!prob.empty()) {
        failure = Report::failure("illegal-response", c, prob + " at " + key);
        ok = false;
        return;
      }
      next.emplace_back(c, rules.canon(raw));
    });
    if (!ok) return false;
    for (auto& [c, q] : next)
      if (!exists_from(q, r - 1, done)) return false;
    return true;
  }

  // forall certificate; returns false on failure
  bool forall_from(const Position& p, int r, std::unordered_map<std::string, int>& state) {
    const std::string pk = position_key(p);
    const std::string memo = cert.safety ? pk : pk + "|r" + std::to_string(r);
    auto it = state.find(memo);
    if (it != state.end()) {
      if (it->second == 1) {
        failure = Report::failure("cycle", {}, "exists can revisit position " + pk + " forever");
        return false;
      }
      return true;
    }
    if (!budget()) return false;
    if (!cert.safety && r == 0) {
      failure = Report::failure("rounds", {}, "exists survives all rounds at " + pk);
      return false;
    }
    const std::string* mv = lookup(pk);
    if (!mv) {
      failure = Report::failure("not-covered", {}, "no challenge for position " + pk);
      return false;
    }
    Challenge c;
    try {
      c = parse_challenge(*mv);
    } catch (const std::exception&) {
      failure = Report::failure("malformed", {}, "unparsable challenge at " + pk);
      return false;
    }
    const std::string prob = rules.challenge_problem(p, c);
    if (!prob.empty()) {
      failure = Report::failure("illegal-challenge", c, prob + " at " + pk);
      return false;
    }
    state[memo] = 1;
    std::vector<Position> next;
    std::unordered_set<std::string> uniq;
    rules.responses(p, c, [&](const std::vector<AtomId>& raw) {
      Position q = rules.canon(raw);
      if (uniq.insert(position_key(q)).second) next.push_back(std::move(q));
      return true;
    });
    for (const auto& q : next)
      if (!forall_from(q, r - 1, state)) return false;
    state[memo] = 2;
    return true;
  }
};

std::unique_ptr<Rules> make_rules(const GameSpec& spec) {
  if (spec.variant == GameVariant::RA) {
    require(spec.ra != nullptr, "RA game spec needs a relation-algebra structure");
    return std::make_unique<RaRules>(*spec.ra, spec.m);
  }
  require(spec.ca != nullptr, "cylindric game spec needs a cylindric structure");
  return std::make_unique<CaRules>(*spec.ca, spec.m);
}

}  // namespace

Report verify_strategy(const GameSpec& spec, const StrategyCertificate& cert, const VerifyOptions& opt) {
  if (spec.variant == GameVariant::EF)
    return Report::failure("mode", {}, "EF certificates are checked by verify_ef_strategy");
  if (cert.game != spec.variant) return Report::failure("mode", {}, "certificate is for a different game");
  const bool want_safety = spec.variant == GameVariant::BoldG || (spec.variant == GameVariant::RA && spec.k < 0);
  if (cert.safety != want_safety) return Report::failure("mode", {}, "certificate mode does not match the game");
  if (!cert.safety && cert.rounds != spec.k) return Report::failure("mode", {}, "certificate is for a different round count");
  auto rules = make_rules(spec);
  Replay rp{*rules, cert, opt, 0, {}};
  const int k = cert.safety ? -1 : spec.k;

  if (cert.winner == Player::Exists) {
    std::unordered_set<std::string> done;
    for (AtomId a = 0; a < static_cast<AtomId>(rules->atoms()); ++a) {
      const std::string* mv = rp.lookup("init:" + std::to_string(a));
      if (!mv) return Report::failure("not-covered", {a}, "no initial network for atom " + std::to_string(a));
      std::vector<AtomId> raw;
      try {
        raw = parse_labels(*mv);
      } catch (const std::exception&) {
        return Report::failure("malformed", {a}, "unparsable initial network");
      }
      const std::string prob = rules->initial_problem(a, raw);
      if (!prob.empty()) return Report::failure("illegal-response", {a}, prob);
      if (!rp.exists_from(rules->canon(raw), k, done)) return rp.failure;
    }
    return Report::pass();
  }

  const std::string* init = rp.lookup("init");
  if (!init) return Report::failure("not-covered", {}, "no opening atom");
  AtomId a = -1;
  try {
    a = static_cast<AtomId>(std::stol(*init));
  } catch (const std::exception&) {
    return Report::failure("malformed", {}, "unparsable opening atom");
  }
  if (a < 0 || a >= static_cast<AtomId>(rules->atoms())) return Report::failure("illegal-challenge", {a}, "opening atom out of range");
  std::unordered_map<std::string, int> state;
  bool ok = true;
  std::unordered_set<std::string> seen;
  rules->initial_networks(a, [&](const std::vector<AtomId>& raw) {
    Position p = rules->canon(raw);
    if (!seen.insert(position_key(p)).second) return true;
    ok = rp.forall_from(p, k, state);
    return ok;
  });
  return ok ? Report::pass() : rp.failure;
}

StrategyCertificate unfold_forall(const GameModel& g, const ScriptedForall& strategy, bool safety, int rounds,
                                  std::size_t max_positions) {
  StrategyCertificate cert;
  cert.winner = Player::Forall;
  cert.game = g.variant();
  cert.safety = safety;
  cert.rounds = safety ? 0 : rounds;
  cert.moves["init"] = std::to_string(strategy.opening);
  std::unordered_set<std::string> seen;
  std::size_t count = 0;
  std::function<void(const Position&, int)> walk = [&](const Position& p, int r) {
    const std::string key = position_key(p);
    if (!seen.insert(safety ? key : key + "|r" + std::to_string(r)).second) return;
    if (++count > max_positions) fail(ErrorKind::Budget, "strategy unfolding exceeded the position cap");
    if (!safety && r == 0) return;
    auto c = strategy.move(p);
    if (!c) return;
    cert.moves[key] = challenge_key(*c);
    g.responses(p, *c, [&](const std::vector<AtomId>&, Position&& q) {
      walk(q, r - 1);
      return true;
    });
  };
  g.initial_responses(strategy.opening, [&](const std::vector<AtomId>&, Position&& p) {
    walk(p, rounds);
    return true;
  });
  return cert;
}

}  // namespace cylgame

namespace cylgame {

std::string initial_move_problem(const GameSpec& spec, AtomId a, const std::vector<AtomId>& raw) {
  auto rules = make_rules(spec);
  if (a < 0 || a >= static_cast<AtomId>(rules->atoms())) return "atom out of range";
  return rules->initial_problem(a, raw);
}

std::string challenge_move_problem(const GameSpec& spec, const Position& p, const Challenge& c) {
  return make_rules(spec)->challenge_problem(p, c);
}

std::string response_move_problem(const GameSpec& spec, const Position& p, const Challenge& c,
                                  const std::vector<AtomId>& raw) {
  auto rules = make_rules(spec);
  const std::string cp = rules->challenge_problem(p, c);
  if (!cp.empty()) return "challenge is illegal: " + cp;
  return rules->response_problem(p, c, raw);
}

}  // namespace cylgame
