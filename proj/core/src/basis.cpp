#include "cylgame/basis.hpp"

#include <algorithm>
#include <unordered_map>

#include "cylgame/error.hpp"
#include "cylgame/game.hpp"
#include "cylgame/parallel.hpp"

namespace cylgame {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<AtomId>& v) const {
    std::size_t h = v.size();
    for (AtomId a : v) h = h * 1000003ULL ^ static_cast<std::size_t>(a + 1);
    return h;
  }
};

}  // namespace

BasisResult<Basis> basis_search(const RaAtomStructure& s, int m, const BasisOptions& opt) {
  require(m >= 3, "basis search needs m >= 3");
  BasisResult<Basis> res;
  const auto mats = enumerate_basic_matrices(s, m, opt.max_items);
  res.candidates = mats.size();
  const std::size_t N = mats.size();
  const auto n = static_cast<std::size_t>(s.size());
  const std::size_t W = (n * n + 63) / 64;
  const auto M = static_cast<std::size_t>(m);

  std::vector<std::vector<std::uint64_t>> cons(n, std::vector<std::uint64_t>(W, 0));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (s.consistent(static_cast<AtomId>(a), static_cast<AtomId>(b), static_cast<AtomId>(c)))
          cons[c][(a * n + b) / 64] |= 1ULL << ((a * n + b) % 64);

  // group = (z, matrix with row and column z removed)
  std::vector<std::size_t> group_of(N * M);
  std::vector<std::vector<std::size_t>> members;
  std::vector<int> group_z;
  {
    std::unordered_map<std::vector<AtomId>, std::size_t, VecHash> index;
    std::vector<AtomId> key;
    for (std::size_t id = 0; id < N; ++id)
      for (int z = 0; z < m; ++z) {
        key.assign(1, z);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            if (i != z && j != z) key.push_back(mats[id].at(i, j));
        auto [it, fresh] = index.emplace(key, members.size());
        if (fresh) {
          members.emplace_back();
          group_z.push_back(z);
        }
        members[it->second].push_back(id);
        group_of[id * M + static_cast<std::size_t>(z)] = it->second;
      }
  }
  const std::size_t G = members.size();
  std::vector<char> alive(N, 1);
  std::vector<std::uint64_t> avail(G * M * M * W, 0);
  auto recompute = [&](std::size_t g) {
    std::uint64_t* base = avail.data() + g * M * M * W;
    std::fill(base, base + M * M * W, 0);
    const int z = group_z[g];
    for (std::size_t id : members[g]) {
      if (!alive[id]) continue;
      const auto& mt = mats[id];
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
          if (x == z || y == z) continue;
          const std::size_t bit = static_cast<std::size_t>(mt.at(x, z)) * n + static_cast<std::size_t>(mt.at(z, y));
          base[(static_cast<std::size_t>(x) * M + static_cast<std::size_t>(y)) * W + bit / 64] |= 1ULL << (bit % 64);
        }
    }
  };
  auto doomed = [&](std::size_t id) {
    const auto& mt = mats[id];
    std::vector<std::uint64_t> need(W);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        need = cons[static_cast<std::size_t>(mt.at(x, y))];
        if (!opt.strict_fresh)
          for (int w = 0; w < m; ++w) {
            const std::size_t bit = static_cast<std::size_t>(mt.at(x, w)) * n + static_cast<std::size_t>(mt.at(w, y));
            need[bit / 64] &= ~(1ULL << (bit % 64));
          }
        for (int z = 0; z < m; ++z) {
          if (z == x || z == y) continue;
          const std::size_t g = group_of[id * M + static_cast<std::size_t>(z)];
          const std::uint64_t* av = avail.data() + (g * M * M + static_cast<std::size_t>(x) * M + static_cast<std::size_t>(y)) * W;
          for (std::size_t w = 0; w < W; ++w)
            if (need[w] & ~av[w]) return true;
        }
      }
    return false;
  };

  std::vector<char> dirty(G, 1);
  std::vector<std::size_t> live(N);
  for (std::size_t i = 0; i < N; ++i) live[i] = i;
  while (true) {
    std::vector<std::size_t> todo;
    for (std::size_t g = 0; g < G; ++g)
      if (dirty[g]) todo.push_back(g);
    parallel_for(todo.size(), opt.jobs, [&](std::size_t t) { recompute(todo[t]); });
    std::fill(dirty.begin(), dirty.end(), 0);
    std::vector<char> kill(live.size(), 0);
    parallel_for(live.size(), opt.jobs, [&](std::size_t t) { kill[t] = doomed(live[t]) ? 1 : 0; });
    std::vector<std::size_t> keep;
    std::size_t pruned = 0;
    for (std::size_t t = 0; t < live.size(); ++t) {
      if (!kill[t]) {
        keep.push_back(live[t]);
        continue;
      }
      ++pruned;
      alive[live[t]] = 0;
      for (std::size_t z = 0; z < M; ++z) dirty[group_of[live[t] * M + z]] = 1;
    }
    live = std::move(keep);
    ++res.pruning_rounds;
    res.pruned_per_round.push_back(pruned);
    if (pruned == 0) break;
  }

  AtomSet covered = s.empty_set();
  for (std::size_t id : live) covered.insert(mats[id].at(0, 1));
  for (AtomId a = 0; a < static_cast<AtomId>(n); ++a)
    if (!covered.contains(a)) res.uncovered.push_back(s.name(a));
  if (live.empty()) {
    res.reason = "fixed point is empty";
    return res;
  }
  if (!res.uncovered.empty()) {
    res.reason = "no surviving matrix realises atom " + res.uncovered.front();
    return res;
  }
  Basis b;
  b.m = m;
  for (std::size_t id : live) b.matrices.push_back(mats[id]);
  res.basis = std::move(b);
  return res;
}

BasisResult<CaBasis> ca_basis_search(const CaAtomStructure& s, int m, const BasisOptions& opt) {
  auto g = make_ca_model(s, m, GameVariant::BoldG);
  BasisResult<CaBasis> res;
  std::vector<Position> pos;
  std::unordered_map<std::vector<AtomId>, std::size_t, VecHash> index;
  // succ[p][c] = successors of challenge c at p
  std::vector<std::vector<std::vector<std::size_t>>> succ;
  auto intern = [&](Position&& q) {
    auto [it, fresh] = index.emplace(q.key, pos.size());
    if (fresh) {
      if (pos.size() >= opt.max_items)
        fail(ErrorKind::Budget, "network closure exceeded " + std::to_string(opt.max_items) + " networks");
      pos.push_back(std::move(q));
    }
    return it->second;
  };
  const auto n = static_cast<AtomId>(s.size());
  std::vector<std::vector<std::size_t>> init(static_cast<std::size_t>(n));
  for (AtomId a = 0; a < n; ++a)
    g->initial_responses(a, [&](const std::vector<AtomId>&, Position&& q) {
      init[static_cast<std::size_t>(a)].push_back(intern(std::move(q)));
      return true;
    });
  for (std::size_t id = 0; id < pos.size(); ++id) {
    std::vector<std::vector<std::size_t>> row;
    const Position p = pos[id];
    g->challenges(p, [&](const Challenge& c) {
      std::vector<std::size_t> out;
      g->responses(p, c, [&](const std::vector<AtomId>&, Position&& q) {
        out.push_back(intern(std::move(q)));
        return true;
      });
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      row.push_back(std::move(out));
      return true;
    });
    succ.push_back(std::move(row));
  }
  res.candidates = pos.size();

  std::vector<char> alive(pos.size(), 1);
  for (;;) {
    std::size_t pruned = 0;
    for (std::size_t id = 0; id < pos.size(); ++id) {
      if (!alive[id]) continue;
      for (const auto& out : succ[id]) {
        bool met = false;
        for (std::size_t q : out) met = met || alive[q];
        if (!met) {
          alive[id] = 0;
          ++pruned;
          break;
        }
      }
    }
    ++res.pruning_rounds;
    res.pruned_per_round.push_back(pruned);
    if (pruned == 0) break;
  }

  for (AtomId a = 0; a < n; ++a) {
    bool ok = false;
    for (std::size_t q : init[static_cast<std::size_t>(a)]) ok = ok || alive[q];
    if (!ok) res.uncovered.push_back(s.name(a));
  }
  CaBasis b;
  b.m = m;
  for (std::size_t id = 0; id < pos.size(); ++id)
    if (alive[id]) {
      Network net;
      net.dim = s.dimension();
      net.nodes = pos[id].nodes;
      net.label = pos[id].key;
      b.networks.push_back(std::move(net));
    }
  if (b.networks.empty()) {
    res.reason = "fixed point is empty";
    return res;
  }
  if (!res.uncovered.empty()) {
    res.reason = "no surviving network realises atom " + res.uncovered.front();
    return res;
  }
  res.basis = std::move(b);
  return res;
}

}  // namespace cylgame
