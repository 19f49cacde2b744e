#include "cylgame/network.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cylgame/error.hpp"

namespace cylgame {

Network::Network(int d, int k) : dim(d), nodes(k), label(tuple_count(d, k), -1) {}

std::size_t Network::tuple_count(int dim, int nodes) {
  std::size_t c = 1;
  for (int i = 0; i < dim; ++i) c *= static_cast<std::size_t>(nodes);
  return c;
}

std::size_t Network::index(std::span<const int> t) const {
  std::size_t idx = 0;
  for (int v : t) idx = idx * static_cast<std::size_t>(nodes) + static_cast<std::size_t>(v);
  return idx;
}

void Network::decode(std::size_t idx, std::vector<int>& t) const {
  t.resize(static_cast<std::size_t>(dim));
  for (int i = dim - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(nodes));
    idx /= static_cast<std::size_t>(nodes);
  }
}

AtomSet pattern_atoms(const CaAtomStructure& s, std::span<const int> t) {
  AtomSet out = s.full_set();
  const int n = s.dimension();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)])
        out &= s.diag(i, j);
      else
        out -= s.diag(i, j);
    }
  return out;
}

Report network_validate(const CaAtomStructure& s, const Network& n) {
  if (n.dim != s.dimension())
    return Report::failure("dimension", {n.dim, s.dimension()}, "network dimension does not match");
  if (n.label.size() != Network::tuple_count(n.dim, n.nodes))
    return Report::failure("total", {}, "label table has the wrong size");
  std::vector<int> t, u;
  for (std::size_t idx = 0; idx < n.label.size(); ++idx) {
    n.decode(idx, t);
    const AtomId a = n.label[idx];
    if (a < 0 || static_cast<std::size_t>(a) >= s.size())
      return Report::failure("total", t, "tuple is unlabelled");
    for (int i = 0; i < n.dim; ++i)
      for (int j = i + 1; j < n.dim; ++j) {
        const bool eq = t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)];
        if (s.diag(i, j).contains(a) != eq) {
          auto w = t;
          w.push_back(i);
          w.push_back(j);
          return Report::failure("diagonal", w,
                                 "atom " + s.name(a) + (eq ? " is not below" : " is below") + " d_" +
                                     std::to_string(i) + std::to_string(j));
        }
      }
    for (int i = 0; i < n.dim; ++i) {
      u = t;
      for (int v = 0; v < n.nodes; ++v) {
        u[static_cast<std::size_t>(i)] = v;
        const AtomId b = n.at(u);
        if (b < 0 || !s.related(i, a, b)) {
          auto w = t;
          w.insert(w.end(), u.begin(), u.end());
          w.push_back(i);
          return Report::failure("cylindrifier", w, "tuples agree off " + std::to_string(i) +
                                                         " but their atoms are not c_" + std::to_string(i) +
                                                         "-related");
        }
      }
    }
  }
  return Report::pass();
}

Report matrix_validate(const RaAtomStructure& s, const BasicMatrix& m) {
  const int k = m.size;
  if (m.entry.size() != static_cast<std::size_t>(k * k)) return Report::failure("total", {}, "wrong size");
  for (AtomId a : m.entry)
    if (a < 0 || static_cast<std::size_t>(a) >= s.size()) return Report::failure("total", {}, "entry out of range");
  for (int i = 0; i < k; ++i)
    if (!s.is_identity(m.at(i, i))) return Report::failure("identity-diagonal", {i}, "diagonal entry is not an identity atom");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (m.at(j, i) != s.converse(m.at(i, j)))
        return Report::failure("converse", {i, j}, "entry (j,i) is not the converse of (i,j)");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        if (!s.consistent(m.at(i, j), m.at(j, l), m.at(i, l)))
          return Report::failure("triangle", {i, j, l}, "inconsistent triangle");
  return Report::pass();
}

namespace {

// Cells are filled column by column: (j,j) then (0,j)..(j-1,j).
struct MatrixFiller {
  const RaAtomStructure& s;
  BasicMatrix m;

  bool triangles_ok(int i, int j) const {
    // every triangle on nodes {0..i} U {j} that uses both i and j
    std::vector<int> nodes;
    if (i != j)
      for (int v = 0; v <= i; ++v) nodes.push_back(v);
    nodes.push_back(j);
    for (int x : nodes)
      for (int y : nodes)
        for (int z : nodes) {
          const bool has_i = x == i || y == i || z == i;
          const bool has_j = x == j || y == j || z == j;
          if (has_i && has_j && !s.consistent(m.at(x, y), m.at(y, z), m.at(x, z))) return false;
        }
    return true;
  }
};

}  // namespace

std::vector<BasicMatrix> enumerate_basic_matrices(const RaAtomStructure& s, int m, std::size_t cap) {
  require(m >= 1, "matrix size must be positive");
  std::vector<BasicMatrix> out;
  MatrixFiller f{s, BasicMatrix(m)};
  const auto n = static_cast<AtomId>(s.size());
  std::vector<std::pair<int, int>> cells;
  for (int j = 0; j < m; ++j) {
    cells.emplace_back(j, j);
    for (int i = 0; i < j; ++i) cells.emplace_back(i, j);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      if (out.size() >= cap)
        fail(ErrorKind::Budget, "more than " + std::to_string(cap) + " basic matrices of size " + std::to_string(m));
      out.push_back(f.m);
      return;
    }
    auto [i, j] = cells[c];
    for (AtomId a = 0; a < n; ++a) {
      if (i == j && !s.is_identity(a)) continue;
      f.m.at(i, j) = a;
      f.m.at(j, i) = s.converse(a);
      if (f.triangles_ok(i, j)) rec(c + 1);
    }
    f.m.at(i, j) = -1;
    f.m.at(j, i) = -1;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Network restrict_network(const Network& n, const std::vector<int>& keep) {
  Network r(n.dim, static_cast<int>(keep.size()));
  std::vector<int> t, u(static_cast<std::size_t>(n.dim));
  for (std::size_t idx = 0; idx < r.label.size(); ++idx) {
    r.decode(idx, t);
    for (int i = 0; i < n.dim; ++i) u[static_cast<std::size_t>(i)] = keep[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
    r.label[idx] = n.at(u);
  }
  return r;
}

BasicMatrix restrict_matrix(const BasicMatrix& m, const std::vector<int>& keep) {
  BasicMatrix r(static_cast<int>(keep.size()));
  for (int i = 0; i < r.size; ++i)
    for (int j = 0; j < r.size; ++j) r.at(i, j) = m.at(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
  return r;
}

Network permute_network(const Network& n, const std::vector<int>& perm) {
  Network r(n.dim, n.nodes);
  std::vector<int> t, u(static_cast<std::size_t>(n.dim));
  for (std::size_t idx = 0; idx < n.label.size(); ++idx) {
    n.decode(idx, t);
    for (int i = 0; i < n.dim; ++i) u[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
    r.at(u) = n.label[idx];
  }
  return r;
}

BasicMatrix permute_matrix(const BasicMatrix& m, const std::vector<int>& perm) {
  BasicMatrix r(m.size);
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) r.at(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) = m.at(i, j);
  return r;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

Canonical canonical_network(const Network& n) {
  const int k = n.nodes;
  const int d = n.dim;
  const std::size_t T = n.label.size();
  std::vector<std::vector<int>> tuples(T);
  for (std::size_t idx = 0; idx < T; ++idx) n.decode(idx, tuples[idx]);

  // colour refinement on nodes
  std::vector<std::uint64_t> colour(static_cast<std::size_t>(k), 0);
  std::size_t classes = 1;
  for (int round = 0; round <= k; ++round) {
    std::vector<std::vector<std::uint64_t>> sig(static_cast<std::size_t>(k));
    for (std::size_t idx = 0; idx < T; ++idx) {
      const auto& t = tuples[idx];
      std::uint64_t h = static_cast<std::uint64_t>(n.label[idx]) + 1;
      for (int i = 0; i < d; ++i) h = mix(h, colour[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])]);
      for (int i = 0; i < d; ++i) {
        std::uint64_t pos = 0;
        for (int j = 0; j < d; ++j)
          if (t[static_cast<std::size_t>(j)] == t[static_cast<std::size_t>(i)]) pos |= 1ULL << j;
        sig[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])].push_back(mix(h, pos));
      }
    }
    std::vector<std::uint64_t> next(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      std::sort(s.begin(), s.end());
      std::uint64_t h = colour[static_cast<std::size_t>(v)];
      for (auto x : s) h = mix(h, x);
      next[static_cast<std::size_t>(v)] = h;
    }
    std::vector<std::uint64_t> uniq = next;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    colour = std::move(next);
    if (uniq.size() == classes && round > 0) break;
    classes = uniq.size();
  }

  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)];
  });
  std::vector<std::pair<int, int>> blocks;
  for (int s = 0; s < k;) {
    int e = s + 1;
    while (e < k && colour[static_cast<std::size_t>(order[static_cast<std::size_t>(e)])] ==
                        colour[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])])
      ++e;
    blocks.emplace_back(s, e);
    s = e;
  }

  Canonical best;
  std::vector<AtomId> key(T);
  std::vector<int> perm(static_cast<std::size_t>(k));
  auto evaluate = [&]() {
    for (int p = 0; p < k; ++p) perm[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
    for (std::size_t idx = 0; idx < T; ++idx) {
      std::size_t ni = 0;
      for (int v : tuples[idx]) ni = ni * static_cast<std::size_t>(k) + static_cast<std::size_t>(perm[static_cast<std::size_t>(v)]);
      key[ni] = n.label[idx];
    }
    if (best.key.empty() || key < best.key) {
      best.key = key;
      best.perm = perm;
    }
  };
  for (auto [s, e] : blocks) std::sort(order.begin() + s, order.begin() + e);
  while (true) {
    evaluate();
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto [s, e] = blocks[b];
      if (std::next_permutation(order.begin() + s, order.begin() + e)) break;
    }
    if (b == blocks.size()) break;
  }
  if (k == 0) best.key = n.label;
  return best;
}

Canonical canonical_matrix(const BasicMatrix& m) {
  Network n;
  n.dim = 2;
  n.nodes = m.size;
  n.label = m.entry;
  return canonical_network(n);
}

bool for_each_completion(const CaAtomStructure& s, const Network& partial,
                         const std::function<bool(const Network&)>& f) {
  const int d = partial.dim;
  const int k = partial.nodes;
  const std::size_t T = partial.label.size();
  const std::size_t W = (s.size() + 63) / 64;
  std::vector<std::size_t> open;
  std::vector<long> slot(T, -1);
  for (std::size_t idx = 0; idx < T; ++idx)
    if (partial.label[idx] < 0) {
      slot[idx] = static_cast<long>(open.size());
      open.push_back(idx);
    }
  // neighbours[o][i] = tuple indices agreeing with open tuple o off i
  std::vector<std::vector<std::size_t>> nbr(open.size() * static_cast<std::size_t>(d));
  std::vector<std::uint64_t> dom(open.size() * W, 0);
  std::vector<int> t;
  for (std::size_t o = 0; o < open.size(); ++o) {
    partial.decode(open[o], t);
    const AtomSet p = pattern_atoms(s, t);
    std::copy(p.words().begin(), p.words().end(), dom.begin() + static_cast<long>(o * W));
    for (int i = 0; i < d; ++i) {
      auto u = t;
      for (int v = 0; v < k; ++v) {
        if (v == t[static_cast<std::size_t>(i)]) continue;
        u[static_cast<std::size_t>(i)] = v;
        nbr[o * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)].push_back(partial.index(u));
      }
    }
  }
  auto restrict_by = [&](std::vector<std::uint64_t>& dm, std::size_t o, int i, AtomId b) {
    const auto& row = s.acc_row(i, b).words();
    bool nonempty = false;
    for (std::size_t w = 0; w < W; ++w) {
      dm[o * W + w] &= row[w];
      nonempty |= dm[o * W + w] != 0;
    }
    return nonempty;
  };
  for (std::size_t o = 0; o < open.size(); ++o)
    for (int i = 0; i < d; ++i)
      for (std::size_t u : nbr[o * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)])
        if (partial.label[u] >= 0 && !restrict_by(dom, o, i, partial.label[u])) return true;

  Network cur = partial;
  std::vector<char> done(open.size(), 0);
  auto popcount = [&](const std::vector<std::uint64_t>& dm, std::size_t o) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < W; ++w) c += static_cast<std::size_t>(std::popcount(dm[o * W + w]));
    return c;
  };
  std::function<bool(std::size_t, const std::vector<std::uint64_t>&)> rec =
      [&](std::size_t left, const std::vector<std::uint64_t>& dm) -> bool {
    if (left == 0) return f(cur);
    std::size_t o = open.size(), best = ~std::size_t{0};
    for (std::size_t q = 0; q < open.size(); ++q) {
      if (done[q]) continue;
      const std::size_t c = popcount(dm, q);
      if (c < best) {
        best = c;
        o = q;
        if (c <= 1) break;
      }
    }
    if (best == 0) return true;
    done[o] = 1;
    for (std::size_t w = 0; w < W; ++w) {
      std::uint64_t bits = dm[o * W + w];
      while (bits) {
        const auto a = static_cast<AtomId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
        std::vector<std::uint64_t> next = dm;
        bool ok = true;
        for (int i = 0; i < d && ok; ++i)
          for (std::size_t u : nbr[o * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)]) {
            const long su = slot[u];
            if (su >= 0 && !done[static_cast<std::size_t>(su)] &&
                !restrict_by(next, static_cast<std::size_t>(su), i, a)) {
              ok = false;
              break;
            }
          }
        if (!ok) continue;
        cur.label[open[o]] = a;
        if (!rec(left - 1, next)) {
          cur.label[open[o]] = -1;
          done[o] = 0;
          return false;
        }
      }
    }
    cur.label[open[o]] = -1;
    done[o] = 0;
    return true;
  };
  return rec(open.size(), dom);
}

bool for_each_extension(const CaAtomStructure& s, const Network& n, std::span<const int> x, int i,
                        AtomId a, const std::function<bool(const Network&)>& f) {
  const int k = n.nodes;
  Network ext(n.dim, k + 1);
  std::vector<int> t;
  for (std::size_t idx = 0; idx < n.label.size(); ++idx) {
    n.decode(idx, t);
    ext.at(t) = n.label[idx];
  }
  std::vector<int> y(x.begin(), x.end());
  y[static_cast<std::size_t>(i)] = k;
  ext.at(y) = a;
  if (!pattern_atoms(s, y).contains(a)) return true;
  return for_each_completion(s, ext, f);
}

bool for_each_matrix_extension(const RaAtomStructure& s, const BasicMatrix& m, int x, int y, AtomId a,
                               AtomId b, const std::function<bool(const BasicMatrix&)>& f) {
  const int k = m.size;
  const int z = k;
  BasicMatrix e(k + 1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) e.at(i, j) = m.at(i, j);
  const auto na = static_cast<AtomId>(s.size());
  // order: diagonal, then column entries (v,z) for v = 0..k-1
  auto ok_upto = [&](int v) {
    // triangles among {0..v} U {z} using both v and z
    for (int p = 0; p <= v; ++p)
      for (int q = 0; q <= v; ++q) {
        if (!s.consistent(e.at(p, q), e.at(q, z), e.at(p, z))) return false;
        if (!s.consistent(e.at(p, z), e.at(z, q), e.at(p, q))) return false;
        if (!s.consistent(e.at(z, p), e.at(p, q), e.at(z, q))) return false;
      }
    for (int p = 0; p <= v; ++p) {
      if (!s.consistent(e.at(p, z), e.at(z, z), e.at(p, z))) return false;
      if (!s.consistent(e.at(z, p), e.at(p, z), e.at(z, z))) return false;
      if (!s.consistent(e.at(p, z), e.at(z, p), e.at(p, p))) return false;
    }
    return true;
  };
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == k) return f(e);
    for (AtomId c = 0; c < na; ++c) {
      if (v == x && c != a) continue;
      if (v == y && s.converse(c) != b) continue;
      e.at(v, z) = c;
      e.at(z, v) = s.converse(c);
      if (ok_upto(v) && !rec(v + 1)) return false;
    }
    e.at(v, z) = -1;
    e.at(z, v) = -1;
    return true;
  };
  for (AtomId id = 0; id < na; ++id) {
    if (!s.is_identity(id)) continue;
    e.at(z, z) = id;
    if (!s.consistent(id, id, id)) continue;
    if (k == 0) {
      if (!f(e)) return false;
      continue;
    }
    if (!rec(0)) return false;
  }
  return true;
}

}  // namespace cylgame
