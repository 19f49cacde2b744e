#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "cylgame/ca_atom_structure.hpp"
#include "cylgame/ra_atom_structure.hpp"

namespace cylgame {

/// Line-oriented text format for finite atom structures.
///
///   # comment
///   [atoms]            atom names, whitespace separated, any number per line
///   [identity]         identity atoms (RA)
///   [converse]         lines "a b": converse(a) = b and converse(b) = a;
///                      unlisted atoms are self-converse (RA)
///   [triples]          lines "a b c": (a,b,c) is consistent (RA, literal)
///   [rule]             one rule name instead of [triples] (RA):
///                      monochromatic-forbidden | all-consistent
///   [dim]              the dimension n (presence makes the file a CA)
///   [acc i]            one equivalence class per line, or "a -> b c ..."
///                      adjacency lines giving the raw relation row of a
///   [diag i j]         atoms below d_ij, for i < j
///   [sub i j]          lines "a b": s_[i,j] swaps a and b (optional)
///
/// Any other section name is a parse error. Errors report line and column.
using AtomStructure = std::variant<RaAtomStructure, CaAtomStructure>;

AtomStructure parse_algebra(std::istream& in);
AtomStructure parse_algebra(const std::string& text);

void print_algebra(std::ostream& out, const RaAtomStructure& s);
void print_algebra(std::ostream& out, const CaAtomStructure& s);
std::string to_text(const RaAtomStructure& s);
std::string to_text(const CaAtomStructure& s);
std::string to_text(const AtomStructure& s);

}  // namespace cylgame
