#include "cylgame/algebra_ops.hpp"

#include "cylgame/error.hpp"

namespace cylgame {

namespace {

const AtomSet& dense(const AlgebraElement& x) {
  if (const auto* d = std::get_if<AtomSet>(&x)) return *d;
  fail(ErrorKind::MixedAlgebra, "expected a complex-algebra element, got a term-algebra element");
}

const FcElement& symbolic(const AlgebraElement& x) {
  if (const auto* f = std::get_if<FcElement>(&x)) return *f;
  fail(ErrorKind::MixedAlgebra, "expected a term-algebra element, got a complex-algebra element");
}

void same_universe(const AtomSet& x, const AtomSet& y, std::size_t n) {
  require(x.universe() == n && y.universe() == n, "operand is not over this atom structure");
}

}  // namespace

AtomSet ra_compose(const RaAtomStructure& s, const AtomSet& x, const AtomSet& y) {
  same_universe(x, y, s.size());
  AtomSet out(s.size());
  x.for_each([&](AtomId a) { y.for_each([&](AtomId b) { out |= s.compose_atoms(a, b); }); });
  return out;
}

AlgebraElement ra_compose(const RaAtomStructure& s, const AlgebraElement& x, const AlgebraElement& y) {
  return ra_compose(s, dense(x), dense(y));
}

AlgebraElement ra_compose(const FcAlgebra& t, const AlgebraElement& x, const AlgebraElement& y) {
  return t.compose(symbolic(x), symbolic(y));
}

AtomSet ra_converse(const RaAtomStructure& s, const AtomSet& x) {
  require(x.universe() == s.size(), "operand is not over this atom structure");
  AtomSet out(s.size());
  x.for_each([&](AtomId a) { out.insert(s.converse(a)); });
  return out;
}

AlgebraElement ra_converse(const FcAlgebra& t, const AlgebraElement& x) {
  return t.converse(symbolic(x));
}

AtomSet ca_cylindrify(const CaAtomStructure& s, int i, const AtomSet& x) {
  require(x.universe() == s.size(), "operand is not over this atom structure");
  return s.cylindrify(i, x);
}

AtomSet ca_diagonal(const CaAtomStructure& s, int i, int j) { return s.diag(i, j); }

AtomSet ca_substitute(const CaAtomStructure& s, int i, int j, const AtomSet& x) {
  require(x.universe() == s.size(), "operand is not over this atom structure");
  AtomSet out(s.size());
  x.for_each([&](AtomId a) { out.insert(s.substitute(i, j, a)); });
  return out;
}

AlgebraElement complement(const FcAlgebra* t, const AlgebraElement& x) {
  if (const auto* d = std::get_if<AtomSet>(&x)) return d->complement();
  require(t != nullptr, "term-algebra operation needs its algebra");
  return t->complement(std::get<FcElement>(x));
}

AlgebraElement unite(const FcAlgebra* t, const AlgebraElement& x, const AlgebraElement& y) {
  if (x.index() != y.index()) fail(ErrorKind::MixedAlgebra, "cannot join elements of different algebras");
  if (const auto* d = std::get_if<AtomSet>(&x)) {
    const auto& e = std::get<AtomSet>(y);
    same_universe(*d, e, d->universe());
    return *d | e;
  }
  require(t != nullptr, "term-algebra operation needs its algebra");
  return t->unite(std::get<FcElement>(x), std::get<FcElement>(y));
}

AlgebraElement intersect(const FcAlgebra* t, const AlgebraElement& x, const AlgebraElement& y) {
  if (x.index() != y.index()) fail(ErrorKind::MixedAlgebra, "cannot meet elements of different algebras");
  if (const auto* d = std::get_if<AtomSet>(&x)) {
    const auto& e = std::get<AtomSet>(y);
    same_universe(*d, e, d->universe());
    return *d & e;
  }
  require(t != nullptr, "term-algebra operation needs its algebra");
  return t->intersect(std::get<FcElement>(x), std::get<FcElement>(y));
}

}  // namespace cylgame
