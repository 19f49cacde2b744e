#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cylgame/ca_atom_structure.hpp"
#include "cylgame/ef.hpp"
#include "cylgame/ra_atom_structure.hpp"
#include "cylgame/report.hpp"

namespace cylgame {

enum class ColourKind { Green, Tint, White, Red };

/// g_i (Green, i >= 1), g_0^i (Tint), w_i (White) or r_{ij} (Red, read from
/// the first node of the edge to the second).
struct Colour {
  ColourKind kind = ColourKind::Green;
  int i = 0;
  int j = 0;

  bool green() const { return kind == ColourKind::Green || kind == ColourKind::Tint; }
  Colour reversed() const;
  std::string name() const;
  friend bool operator==(const Colour&, const Colour&) = default;
};

std::optional<Colour> parse_colour(const std::string& s);

enum class TintRedRule {
  PartialIso,      // {(i,k),(j,l)} a partial isomorphism between the complete graphs
  OrderPreserving  // ... an order preserving partial function
};

/// Forbidden triangle rules. Each is named in reports.
struct RuleSet {
  bool all_green = true;        // (g, g', g*)
  bool green_white = true;      // (g_0^i, g_0^j, w_0), (g_i, g_i, w_i)
  bool tint_red = true;         // (g_0^i, g_0^j, r_kl) per tint_red_rule
  TintRedRule tint_red_rule = TintRedRule::PartialIso;
  bool red_matching = true;     // (r_ij, r_j'k', r_i*k*) unless indices match

  static RuleSet standard() { return {}; }
  static RuleSet ordered() {
    RuleSet r;
    r.tint_red_rule = TintRedRule::OrderPreserving;
    return r;
  }
};

/// Name of the rule forbidding the triangle x, y, z with the given edge
/// colours (xy, xz, yz, each read in that direction), or nullopt.
std::optional<std::string> forbidden_triangle(const RuleSet& rules, const Colour& xy, const Colour& xz,
                                              const Colour& yz);

/// Complete coloured graph; edge(u, v) read from u to v.
struct ColouredGraph {
  int nodes = 0;
  std::vector<std::optional<Colour>> edges;

  explicit ColouredGraph(int n = 0) : nodes(n), edges(static_cast<std::size_t>(n * n)) {}
  const std::optional<Colour>& edge(int u, int v) const { return edges[static_cast<std::size_t>(u * nodes + v)]; }
  void set(int u, int v, const Colour& c);
};

/// Checks completeness and every triangle.
Report check_graph(const RuleSet& rules, const ColouredGraph& g);

/// Tint of the cone with base x (n-1 nodes) and apex z: M(x_0, z) = g_0^t and
/// M(x_j, z) = g_j for 1 <= j <= n-2.
std::optional<int> detect_cone(const ColouredGraph& g, const std::vector<int>& base, int apex);

struct RainbowParams {
  int n = 3;
  std::vector<int> tints;  // superscripts of g_0
  int reds = 3;            // red indices 0..reds-1
  RuleSet rules;
  std::size_t max_atoms = 200'000;
};

/// Cylindric rainbow atom structure: atoms are surjections from n onto
/// complete coloured graphs (no forbidden triangle), up to isomorphism. With
/// substitutions. No yellow shades.
CaAtomStructure rainbow_ca(const RainbowParams& p);

/// A_{n+1,n}: tints 1..n+1, n reds, standard rules.
CaAtomStructure rainbow_ca(int n, int tints, int reds);

/// Greens g_0^0, g_0^-1, ..., g_0^-Dg; reds 0..Dr-1; order preserving rule.
CaAtomStructure order_rainbow_ca(int n, int green_depth, int red_depth);

/// Coloured graph of a rainbow CA atom on its own nodes 0..k-1, with the
/// surjection from n.
ColouredGraph atom_graph(const CaAtomStructure& s, AtomId a, std::vector<int>* surjection = nullptr);

/// Atom realising the tuple x of a coloured graph.
std::optional<AtomId> atom_of(const CaAtomStructure& s, const ColouredGraph& g, const std::vector<int>& x);

struct RaRainbowRules {
  bool all_green = true;     // (g_i, g_j, g_k)
  bool white_apart = true;   // (g_i, g_j, w) for i != j
  bool tint_red = true;      // (g_i, g_j, r_kl) unless (i,k),(j,l) is a partial iso G -> H
  bool red_matching = true;  // (r_ij, r_j'k', r_i*k*) unless i = i*, j = j', k' = k*
  bool yellow = true;        // extra symmetric atom y, in no forbidden triple; without it
                             // the structure is not associative
};

/// Relation-algebra rainbow atom structure of G (greens g_i) and H (reds
/// r_kl for k != l in H, converse r_lk): Id, w, y, greens, reds.
RaAtomStructure rainbow_ra(const Structure& g, const Structure& h, const RaRainbowRules& rules = {});

}  // namespace cylgame
