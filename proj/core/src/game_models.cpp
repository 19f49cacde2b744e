#include <algorithm>
#include <chrono>
#include <mutex>
#include <unordered_map>

#include "cylgame/error.hpp"
#include "cylgame/game.hpp"

namespace cylgame {

namespace {

/// Node ids for the tuple 0..n-1 of an atom's equality pattern.
std::vector<int> atom_pattern(const CaAtomStructure& s, AtomId a) {
  const int n = s.dimension();
  std::vector<int> t(static_cast<std::size_t>(n));
  int next = 0;
  for (int i = 0; i < n; ++i) {
    t[static_cast<std::size_t>(i)] = -1;
    for (int j = 0; j < i; ++j)
      if (s.diag(i, j).contains(a)) {
        t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(j)];
        break;
      }
    if (t[static_cast<std::size_t>(i)] < 0) t[static_cast<std::size_t>(i)] = next++;
  }
  return t;
}

struct RawHash {
  std::size_t operator()(const std::vector<AtomId>& v) const {
    std::size_t h = v.size();
    for (AtomId a : v) h = h * 1000003ULL ^ static_cast<std::size_t>(a + 1);
    return h;
  }
};

// Responses repeat across challenges; canonical forms are memoised per model.
class CanonicalCache {
 public:
  template <class F>
  Position get(int nodes, const std::vector<AtomId>& raw, F&& compute) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(raw);
      if (it != map_.end()) return it->second;
    }
    Position p = compute();
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.size() > 500'000) map_.clear();
    map_.emplace(raw, p);
    (void)nodes;
    return p;
  }

 private:
  mutable std::mutex mu_;
  mutable std::unordered_map<std::vector<AtomId>, Position, RawHash> map_;
};

class CaModel final : public GameModel {
 public:
  CaModel(const CaAtomStructure& s, int m, GameVariant v) : s_(s), m_(m), v_(v) {
    require(m >= s.dimension(), "game needs at least as many nodes as the dimension (m=" + std::to_string(m) +
                                    ", n=" + std::to_string(s.dimension()) + ")");
  }

  GameVariant variant() const override { return v_; }
  int max_nodes() const override { return m_; }
  std::size_t atom_count() const override { return s_.size(); }
  std::string atom_name(AtomId a) const override { return s_.name(a); }

  Position canonical(int nodes, const std::vector<AtomId>& raw) const override {
    return cache_.get(nodes, raw, [&] {
      Network net;
      net.dim = s_.dimension();
      net.nodes = nodes;
      net.label = raw;
      return Position{nodes, canonical_network(net).key};
    });
  }

  bool initial_responses(AtomId a, const Sink& f) const override {
    const auto t = atom_pattern(s_, a);
    if (!pattern_atoms(s_, t).contains(a)) return true;
    const int nodes = *std::max_element(t.begin(), t.end()) + 1;
    Network net(s_.dimension(), nodes);
    net.at(t) = a;
    return for_each_completion(s_, net, [&](const Network& done) {
      return f(done.label, canonical(nodes, done.label));
    });
  }

  bool challenges(const Position& p, const std::function<bool(const Challenge&)>& f) const override {
    const Network net = as_network(p);
    const int n = s_.dimension();
    const int k = p.nodes;
    std::vector<int> x;
    std::vector<int> y;
    for (int i = 0; i < n; ++i)
      for (std::size_t idx = 0; idx < net.label.size(); ++idx) {
        net.decode(idx, x);
        if (x[static_cast<std::size_t>(i)] != 0) continue;
        const AtomId cur = net.label[idx];
        y = x;
        y[static_cast<std::size_t>(i)] = k;  // a fresh node
        const AtomSet fresh = pattern_atoms(s_, y);
        bool go = true;
        s_.acc_row(i, cur).for_each([&](AtomId a) {
          if (!go || !fresh.contains(a)) return;
          auto w = x;
          for (int v = 0; v < k; ++v) {
            w[static_cast<std::size_t>(i)] = v;
            if (net.at(w) == a) return;  // already witnessed
          }
          Challenge c(x.begin(), x.end());
          c.push_back(i);
          c.push_back(a);
          if (k < m_) {
            c.push_back(-1);
            go = f(c);
            return;
          }
          c.push_back(-1);
          for (int z = 0; z < k && go; ++z) {
            bool in_face = false;
            for (int j = 0; j < n; ++j)
              if (j != i && x[static_cast<std::size_t>(j)] == z) in_face = true;
            if (in_face) continue;
            c.back() = z;
            go = f(c);
          }
        });
        if (!go) return false;
      }
    return true;
  }

  bool responses(const Position& p, const Challenge& c, const Sink& f) const override {
    const int n = s_.dimension();
    require(c.size() == static_cast<std::size_t>(n + 3), "malformed challenge");
    Network net = as_network(p);
    std::vector<int> x(c.begin(), c.begin() + n);
    const int i = c[static_cast<std::size_t>(n)];
    const AtomId a = c[static_cast<std::size_t>(n + 1)];
    const int z = c[static_cast<std::size_t>(n + 2)];
    if (z >= 0) {
      std::vector<int> keep;
      for (int v = 0; v < p.nodes; ++v)
        if (v != z) keep.push_back(v);
      net = restrict_network(net, keep);
      for (int j = 0; j < n; ++j) {
        int& xj = x[static_cast<std::size_t>(j)];
        if (j == i || xj == z) {
          xj = 0;
          continue;
        }
        if (xj > z) --xj;
      }
    }
    const int nodes = net.nodes + 1;
    return for_each_extension(s_, net, x, i, a, [&](const Network& done) {
      return f(done.label, canonical(nodes, done.label));
    });
  }

 private:
  Network as_network(const Position& p) const {
    Network net;
    net.dim = s_.dimension();
    net.nodes = p.nodes;
    net.label = p.key;
    return net;
  }

  const CaAtomStructure& s_;
  int m_;
  GameVariant v_;
  CanonicalCache cache_;
};

class RaModel final : public GameModel {
 public:
  RaModel(const RaAtomStructure& s, int m) : s_(s), m_(m) {
    require(m >= 3, "relation-algebra game needs at least 3 nodes");
  }

  GameVariant variant() const override { return GameVariant::RA; }
  int max_nodes() const override { return m_; }
  std::size_t atom_count() const override { return s_.size(); }
  std::string atom_name(AtomId a) const override { return s_.name(a); }

  Position canonical(int nodes, const std::vector<AtomId>& raw) const override {
    return cache_.get(nodes, raw, [&] {
      BasicMatrix mt(nodes);
      mt.entry = raw;
      return Position{nodes, canonical_matrix(mt).key};
    });
  }

  bool initial_responses(AtomId a, const Sink& f) const override {
    const auto n = static_cast<AtomId>(s_.size());
    for (AtomId e0 = 0; e0 < n; ++e0)
      for (AtomId e1 = 0; e1 < n; ++e1) {
        if (!s_.is_identity(e0) || !s_.is_identity(e1)) continue;
        BasicMatrix mt(2);
        mt.at(0, 0) = e0;
        mt.at(1, 1) = e1;
        mt.at(0, 1) = a;
        mt.at(1, 0) = s_.converse(a);
        if (!matrix_validate(s_, mt).ok) continue;
        if (!f(mt.entry, canonical(2, mt.entry))) return false;
      }
    return true;
  }

  bool challenges(const Position& p, const std::function<bool(const Challenge&)>& f) const override {
    const int k = p.nodes;
    const auto n = static_cast<AtomId>(s_.size());
    auto at = [&](int i, int j) { return p.key[static_cast<std::size_t>(i * k + j)]; };
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        for (AtomId a = 0; a < n; ++a)
          for (AtomId b = 0; b < n; ++b) {
            if (!s_.consistent(a, b, at(x, y))) continue;
            bool witnessed = false;
            for (int w = 0; w < k && !witnessed; ++w) witnessed = at(x, w) == a && at(w, y) == b;
            if (witnessed) continue;
            if (k < m_) {
              if (!f({x, y, a, b, -1})) return false;
              continue;
            }
            for (int z = 0; z < k; ++z)
              if (z != x && z != y && !f({x, y, a, b, z})) return false;
          }
    return true;
  }

  bool responses(const Position& p, const Challenge& c, const Sink& f) const override {
    require(c.size() == 5, "malformed challenge");
    BasicMatrix mt(p.nodes);
    mt.entry = p.key;
    int x = c[0], y = c[1];
    const int z = c[4];
    if (z >= 0) {
      std::vector<int> keep;
      for (int v = 0; v < p.nodes; ++v)
        if (v != z) keep.push_back(v);
      mt = restrict_matrix(mt, keep);
      if (x > z) --x;
      if (y > z) --y;
    }
    const int nodes = mt.size + 1;
    return for_each_matrix_extension(s_, mt, x, y, c[2], c[3], [&](const BasicMatrix& done) {
      return f(done.entry, canonical(nodes, done.entry));
    });
  }

 private:
  const RaAtomStructure& s_;
  int m_;
  CanonicalCache cache_;
};

}  // namespace

std::unique_ptr<GameModel> make_ca_model(const CaAtomStructure& s, int m, GameVariant v) {
  return std::make_unique<CaModel>(s, m, v);
}

std::unique_ptr<GameModel> make_ra_model(const RaAtomStructure& s, int m) { return std::make_unique<RaModel>(s, m); }

namespace {

void tag(GameResult& r, std::initializer_list<std::pair<const char*, std::string>> kv) {
  for (auto& [k, v] : kv) r.params[k] = v;
}

}  // namespace

GameResult solve_atomic_game(const CaAtomStructure& s, int m, int k, const GameLimits& lim) {
  auto g = make_ca_model(s, m, GameVariant::Gmk);
  auto r = solve_bounded(*g, k, lim);
  tag(r, {{"m", std::to_string(m)}, {"k", std::to_string(k)}});
  return r;
}

GameResult solve_bold_game(const CaAtomStructure& s, int m, const GameLimits& lim) {
  auto g = make_ca_model(s, m, GameVariant::BoldG);
  auto r = solve_safety(*g, lim);
  tag(r, {{"m", std::to_string(m)}});
  return r;
}

GameResult solve_gk(const CaAtomStructure& s, int k, const GameLimits& lim) {
  auto g = make_ca_model(s, s.dimension() + k, GameVariant::Gk);
  auto r = solve_bounded(*g, k, lim);
  tag(r, {{"k", std::to_string(k)}, {"nodes", std::to_string(s.dimension() + k)}});
  return r;
}

GameResult solve_ra_game(const RaAtomStructure& s, int m, int k, const GameLimits& lim) {
  auto g = make_ra_model(s, m);
  auto r = k < 0 ? solve_safety(*g, lim) : solve_bounded(*g, k, lim);
  tag(r, {{"m", std::to_string(m)}, {"k", k < 0 ? "omega" : std::to_string(k)}});
  return r;
}

namespace {

template <class Solve>
LyndonResult lyndon(int K, Solve&& solve) {
  require(K >= 0, "lyndon_check needs K >= 0");
  LyndonResult out;
  for (int k = 0; k <= K; ++k) {
    const Player w = k == 0 ? Player::Exists : solve(k);
    out.winners.push_back(w);
    if (w == Player::Forall) break;
    out.k_star = k;
  }
  return out;
}

}  // namespace

LyndonResult lyndon_check(const CaAtomStructure& s, int K, const GameLimits& lim) {
  return lyndon(K, [&](int k) { return solve_gk(s, k, lim).winner; });
}

LyndonResult lyndon_check(const RaAtomStructure& s, int K, const GameLimits& lim) {
  return lyndon(K, [&](int k) { return solve_ra_game(s, 2 + k, k, lim).winner; });
}

}  // namespace cylgame
