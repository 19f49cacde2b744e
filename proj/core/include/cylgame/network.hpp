#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cylgame/ca_atom_structure.hpp"
#include "cylgame/ra_atom_structure.hpp"
#include "cylgame/report.hpp"

namespace cylgame {

/// Atomic network of dimension n on nodes 0..nodes-1: every n-tuple of nodes
/// carries an atom. Tuples are stored row-major (first coordinate most
/// significant). Unassigned labels are -1 while a network is being built.
struct Network {
  int dim = 0;
  int nodes = 0;
  std::vector<AtomId> label;

  Network() = default;
  Network(int dim, int nodes);

  static std::size_t tuple_count(int dim, int nodes);
  std::size_t index(std::span<const int> t) const;
  void decode(std::size_t idx, std::vector<int>& t) const;
  AtomId at(std::span<const int> t) const { return label[index(t)]; }
  AtomId& at(std::span<const int> t) { return label[index(t)]; }

  friend bool operator==(const Network&, const Network&) = default;
};

/// m x m atom matrix over an RA atom structure.
struct BasicMatrix {
  int size = 0;
  std::vector<AtomId> entry;

  BasicMatrix() = default;
  explicit BasicMatrix(int m) : size(m), entry(static_cast<std::size_t>(m * m), -1) {}
  AtomId at(int i, int j) const { return entry[static_cast<std::size_t>(i * size + j)]; }
  AtomId& at(int i, int j) { return entry[static_cast<std::size_t>(i * size + j)]; }

  friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;
  friend bool operator<(const BasicMatrix& a, const BasicMatrix& b) {
    return a.size != b.size ? a.size < b.size : a.entry < b.entry;
  }
};

Report network_validate(const CaAtomStructure& s, const Network& n);
Report matrix_validate(const RaAtomStructure& s, const BasicMatrix& m);

/// Mat_m(S) in lexicographic order of the row-major entry vector. Off-diagonal
/// identity entries are allowed (they identify two points). Throws Budget
/// when more than `cap` matrices would be produced.
std::vector<BasicMatrix> enumerate_basic_matrices(const RaAtomStructure& s, int m,
                                                  std::size_t cap = 5'000'000);

/// Node k is kept as node position-of-k in `keep`.
Network restrict_network(const Network& n, const std::vector<int>& keep);
BasicMatrix restrict_matrix(const BasicMatrix& m, const std::vector<int>& keep);
/// Node v becomes node perm[v].
Network permute_network(const Network& n, const std::vector<int>& perm);
BasicMatrix permute_matrix(const BasicMatrix& m, const std::vector<int>& perm);

/// Canonical form up to node renaming: `perm` sends each node to its
/// canonical name and `key` is the relabelled label vector, lexicographically
/// least among relabellings that respect an invariant-based node ordering.
struct Canonical {
  std::vector<AtomId> key;
  std::vector<int> perm;
};
Canonical canonical_network(const Network& n);
Canonical canonical_matrix(const BasicMatrix& m);

/// Atoms allowed on a tuple with the given equality pattern: below d_ij
/// exactly when t_i = t_j.
AtomSet pattern_atoms(const CaAtomStructure& s, std::span<const int> t);

/// Enumerates, in lexicographic order of the labels of the unassigned tuples
/// (by tuple index), all consistent completions of a partially labelled
/// network. The callback returns false to stop. Returns false iff stopped.
bool for_each_completion(const CaAtomStructure& s, const Network& partial,
                         const std::function<bool(const Network&)>& f);

/// Completions of `n` extended by one fresh node (numbered n.nodes) such that
/// the tuple x[i/new] carries atom a.
bool for_each_extension(const CaAtomStructure& s, const Network& n, std::span<const int> x, int i,
                        AtomId a, const std::function<bool(const Network&)>& f);

/// Matrices extending `m` by a fresh last node z with m'(x,z)=a, m'(z,y)=b, in
/// lexicographic order of the new row.
bool for_each_matrix_extension(const RaAtomStructure& s, const BasicMatrix& m, int x, int y, AtomId a,
                               AtomId b, const std::function<bool(const BasicMatrix&)>& f);

}  // namespace cylgame
