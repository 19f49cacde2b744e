#include "cylgame/fc_element.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "cylgame/error.hpp"

namespace cylgame {

CopySet operator|(const CopySet& a, const CopySet& b) {
  CopySet r;
  if (!a.cofinite && !b.cofinite) {
    r.cofinite = false;
    std::set_union(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                   std::inserter(r.indices, r.indices.end()));
  } else if (a.cofinite && b.cofinite) {
    r.cofinite = true;
    std::set_intersection(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                          std::inserter(r.indices, r.indices.end()));
  } else {
    const CopySet& cof = a.cofinite ? a : b;
    const CopySet& fin = a.cofinite ? b : a;
    r.cofinite = true;
    std::set_difference(cof.indices.begin(), cof.indices.end(), fin.indices.begin(), fin.indices.end(),
                        std::inserter(r.indices, r.indices.end()));
  }
  return r;
}

CopySet operator&(const CopySet& a, const CopySet& b) {
  return (a.complement() | b.complement()).complement();
}

FcAlgebra::FcAlgebra(RaAtomStructure base, const AtomSet& targets)
    : base_(std::move(base)), block_of_(base_.size(), -1), target_set_(targets) {
  require(targets.universe() == base_.size(), "target set has the wrong universe");
  require(!targets.empty(), "split targets must be nonempty");
  require(!targets.intersects(base_.identity()), "identity atoms cannot be split");
  targets.for_each([&](AtomId a) {
    require(targets.contains(base_.converse(a)),
            "split targets must be closed under converse ('" + base_.name(a) + "')");
    block_of_[static_cast<std::size_t>(a)] = static_cast<int>(targets_.size());
    targets_.push_back(a);
  });
}

FcElement FcAlgebra::zero() const {
  return {AtomSet(base_.size()), std::vector<CopySet>(targets_.size())};
}

FcElement FcAlgebra::one() const {
  return {AtomSet::full(base_.size()) - target_set_,
          std::vector<CopySet>(targets_.size(), CopySet::all())};
}

FcElement FcAlgebra::identity() const {
  FcElement e = zero();
  e.finite = base_.identity();
  return e;
}

FcElement FcAlgebra::atom(AtomId a, CopyIndex k) const {
  require(a >= 0 && static_cast<std::size_t>(a) < base_.size(), "atom out of range");
  FcElement e = zero();
  if (is_target(a))
    e.symbolic[static_cast<std::size_t>(block_of(a))] = CopySet::finite({k});
  else
    e.finite.insert(a);
  return e;
}

bool FcAlgebra::contains(const FcElement& x, AtomId a, CopyIndex k) const {
  if (is_target(a)) return x.symbolic[static_cast<std::size_t>(block_of(a))].contains(k);
  return x.finite.contains(a);
}

bool FcAlgebra::valid(const FcElement& x) const {
  return x.finite.universe() == base_.size() && !x.finite.intersects(target_set_) &&
         x.symbolic.size() == targets_.size();
}

FcElement FcAlgebra::complement(const FcElement& x) const {
  FcElement r{(x.finite.complement()) - target_set_, {}};
  r.symbolic.reserve(x.symbolic.size());
  for (const auto& b : x.symbolic) r.symbolic.push_back(b.complement());
  return r;
}

FcElement FcAlgebra::unite(const FcElement& x, const FcElement& y) const {
  FcElement r{x.finite | y.finite, {}};
  for (std::size_t i = 0; i < x.symbolic.size(); ++i) r.symbolic.push_back(x.symbolic[i] | y.symbolic[i]);
  return r;
}

FcElement FcAlgebra::intersect(const FcElement& x, const FcElement& y) const {
  FcElement r{x.finite & y.finite, {}};
  for (std::size_t i = 0; i < x.symbolic.size(); ++i) r.symbolic.push_back(x.symbolic[i] & y.symbolic[i]);
  return r;
}

FcElement FcAlgebra::converse(const FcElement& x) const {
  FcElement r = zero();
  x.finite.for_each([&](AtomId a) { r.finite.insert(base_.converse(a)); });
  for (std::size_t i = 0; i < targets_.size(); ++i)
    r.symbolic[static_cast<std::size_t>(block_of(base_.converse(targets_[i])))] = x.symbolic[i];
  return r;
}

AtomSet FcAlgebra::support(const FcElement& x) const {
  AtomSet s = x.finite;
  for (std::size_t i = 0; i < targets_.size(); ++i)
    if (!x.symbolic[i].empty()) s.insert(targets_[i]);
  return s;
}

FcElement FcAlgebra::compose(const FcElement& x, const FcElement& y) const {
  require(valid(x) && valid(y), "operand is not an element of this term algebra");
  const AtomSet& ids = base_.identity();
  const AtomSet sx = support(x) - ids;
  const AtomSet sy = support(y) - ids;

  // Non-identity originals a in x, b in y: any copies witness (a,b,c).
  AtomSet generic(base_.size());
  sx.for_each([&](AtomId a) { sy.for_each([&](AtomId b) { generic |= base_.compose_atoms(a, b); }); });

  FcElement r = zero();
  for (std::size_t c = 0; c < base_.size(); ++c) {
    const auto atom_c = static_cast<AtomId>(c);
    if (is_target(atom_c)) continue;
    if (ids.contains(atom_c)) {
      // Needs some p in x with converse(p) in y, and (p, p^, e) consistent.
      bool hit = false;
      x.finite.for_each([&](AtomId p) {
        if (!hit && y.finite.contains(base_.converse(p)) && base_.consistent(p, base_.converse(p), atom_c))
          hit = true;
      });
      for (std::size_t i = 0; i < targets_.size() && !hit; ++i) {
        const AtomId t = targets_[i];
        const AtomId tc = base_.converse(t);
        if (base_.consistent(t, tc, atom_c) &&
            !(x.symbolic[i] & y.symbolic[static_cast<std::size_t>(block_of(tc))]).empty())
          hit = true;
      }
      if (hit) r.finite.insert(atom_c);
      continue;
    }
    bool hit = generic.contains(atom_c);
    x.finite.for_each([&](AtomId e) {
      if (ids.contains(e) && y.finite.contains(atom_c) && base_.consistent(e, atom_c, atom_c)) hit = true;
    });
    y.finite.for_each([&](AtomId e) {
      if (ids.contains(e) && x.finite.contains(atom_c) && base_.consistent(atom_c, e, atom_c)) hit = true;
    });
    if (hit) r.finite.insert(atom_c);
  }
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    const AtomId t = targets_[i];
    CopySet block = generic.contains(t) ? CopySet::all() : CopySet::none();
    x.finite.for_each([&](AtomId e) {
      if (ids.contains(e) && base_.consistent(e, t, t)) block = block | y.symbolic[i];
    });
    y.finite.for_each([&](AtomId e) {
      if (ids.contains(e) && base_.consistent(t, e, t)) block = block | x.symbolic[i];
    });
    r.symbolic[i] = std::move(block);
  }
  return r;
}

std::string FcAlgebra::to_string(const FcElement& x) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  auto sep = [&] {
    if (!first) os << ", ";
    first = false;
  };
  x.finite.for_each([&](AtomId a) {
    sep();
    os << base_.name(a);
  });
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    const auto& b = x.symbolic[i];
    if (b.empty()) continue;
    sep();
    os << base_.name(targets_[i]) << (b.cofinite ? "^[cofin" : "^[fin");
    for (CopyIndex k : b.indices) os << ' ' << k;
    os << ']';
  }
  os << '}';
  return os.str();
}

}  // namespace cylgame
