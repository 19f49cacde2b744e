#include "cylgame/axioms.hpp"

#include <string>

namespace cylgame {

namespace {

std::string names(const RaAtomStructure& s, std::initializer_list<AtomId> atoms) {
  std::string out = "(";
  bool first = true;
  for (AtomId a : atoms) {
    if (!first) out += ", ";
    first = false;
    out += s.name(a);
  }
  return out + ")";
}

}  // namespace

Report check_ra_axioms(const RaAtomStructure& s) {
  const auto n = static_cast<AtomId>(s.size());
  for (AtomId a = 0; a < n; ++a)
    if (s.converse(s.converse(a)) != a)
      return Report::failure("converse", {a}, "converse is not an involution at " + s.name(a));
  if (s.identity().empty()) return Report::failure("identity", {}, "no identity atom");
  for (AtomId e = 0; e < n; ++e)
    if (s.is_identity(e) && s.converse(e) != e)
      return Report::failure("identity-converse", {e}, "identity atom " + s.name(e) + " is not self-converse");

  for (AtomId b = 0; b < n; ++b) {
    bool left = false, right = false;
    for (AtomId e = 0; e < n; ++e) {
      if (!s.is_identity(e)) continue;
      left = left || s.consistent(e, b, b);
      right = right || s.consistent(b, e, b);
      for (AtomId c = 0; c < n; ++c) {
        if (c == b) continue;
        if (s.consistent(e, b, c))
          return Report::failure("identity", {e, b, c}, "identity triple " + names(s, {e, b, c}) + " relates distinct atoms");
        if (s.consistent(b, e, c))
          return Report::failure("identity", {b, e, c}, "identity triple " + names(s, {b, e, c}) + " relates distinct atoms");
      }
    }
    if (!left || !right)
      return Report::failure("identity", {b}, "no identity atom acts on " + s.name(b));
  }

  for (AtomId a = 0; a < n; ++a)
    for (AtomId b = 0; b < n; ++b)
      for (AtomId c = 0; c < n; ++c) {
        if (!s.consistent(a, b, c)) continue;
        if (!s.consistent(s.converse(a), c, b))
          return Report::failure("peircean", {a, b, c},
                                 names(s, {a, b, c}) + " consistent but " +
                                     names(s, {s.converse(a), c, b}) + " is not");
        if (!s.consistent(c, s.converse(b), a))
          return Report::failure("peircean", {a, b, c},
                                 names(s, {a, b, c}) + " consistent but " +
                                     names(s, {c, s.converse(b), a}) + " is not");
      }

  for (AtomId a = 0; a < n; ++a)
    for (AtomId b = 0; b < n; ++b) {
      const AtomSet& ab = s.compose_atoms(a, b);
      for (AtomId c = 0; c < n; ++c) {
        AtomSet left(s.size()), right(s.size());
        ab.for_each([&](AtomId x) { left |= s.compose_atoms(x, c); });
        s.compose_atoms(b, c).for_each([&](AtomId y) { right |= s.compose_atoms(a, y); });
        if (left == right) continue;
        const AtomId d = (left - right).empty() ? (right - left).first() : (left - right).first();
        return Report::failure("associativity", {a, b, c, d},
                               "(" + s.name(a) + ";" + s.name(b) + ");" + s.name(c) + " and " + s.name(a) +
                                   ";(" + s.name(b) + ";" + s.name(c) + ") differ at " + s.name(d));
      }
    }
  return Report::pass();
}

Report check_ca_axioms(const CaAtomStructure& s) {
  const int dim = s.dimension();
  const auto n = static_cast<AtomId>(s.size());
  const std::string idx = "acc[";

  for (int i = 0; i < dim; ++i) {
    for (AtomId a = 0; a < n; ++a)
      if (!s.related(i, a, a))
        return Report::failure("acc-reflexive", {i, a}, idx + std::to_string(i) + "] not reflexive at " + s.name(a));
    for (AtomId a = 0; a < n; ++a) {
      bool bad = false;
      AtomId wb = -1;
      s.acc_row(i, a).for_each([&](AtomId b) {
        if (!bad && !s.related(i, b, a)) { bad = true; wb = b; }
      });
      if (bad)
        return Report::failure("acc-symmetric", {i, a, wb},
                               idx + std::to_string(i) + "] not symmetric at " + s.name(a) + ", " + s.name(wb));
    }
    for (AtomId a = 0; a < n; ++a) {
      const AtomSet& row = s.acc_row(i, a);
      AtomId wb = -1, wc = -1;
      row.for_each([&](AtomId b) {
        if (wb >= 0) return;
        AtomSet extra = s.acc_row(i, b) - row;
        if (!extra.empty()) { wb = b; wc = extra.first(); }
      });
      if (wb >= 0)
        return Report::failure("acc-transitive", {i, a, wb, wc},
                               idx + std::to_string(i) + "] not transitive at " + s.name(a) + ", " +
                                   s.name(wb) + ", " + s.name(wc));
    }
  }

  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (AtomId a = 0; a < n; ++a) {
        AtomSet single(s.size(), {a});
        if (!(s.cylindrify(i, s.cylindrify(j, single)) == s.cylindrify(j, s.cylindrify(i, single))))
          return Report::failure("commutativity", {i, j, a},
                                 "c" + std::to_string(i) + "c" + std::to_string(j) + " != c" + std::to_string(j) +
                                     "c" + std::to_string(i) + " at " + s.name(a));
      }

  const AtomSet full = s.full_set();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      if (!(s.cylindrify(i, s.diag(i, j)) == full))
        return Report::failure("diagonal-cylinder", {i, j},
                               "c" + std::to_string(i) + " d" + std::to_string(i) + std::to_string(j) + " is not the unit");
      for (int k = 0; k < dim; ++k) {
        if (k == i || k == j || i > j) continue;
        if (!(s.cylindrify(k, s.diag(i, k) & s.diag(k, j)) == s.diag(i, j)))
          return Report::failure("diagonal", {i, j, k},
                                 "c" + std::to_string(k) + "(d" + std::to_string(i) + std::to_string(k) + ".d" +
                                     std::to_string(k) + std::to_string(j) + ") != d" + std::to_string(i) +
                                     std::to_string(j));
      }
      const AtomSet& d = s.diag(i, j);
      AtomId wa = -1, wb = -1;
      d.for_each([&](AtomId a) {
        if (wa >= 0) return;
        AtomSet clash = (s.acc_row(i, a) & d);
        clash.erase(a);
        if (!clash.empty()) { wa = a; wb = clash.first(); }
      });
      if (wa >= 0)
        return Report::failure("diagonal-unique", {i, j, wa, wb},
                               "distinct atoms " + s.name(wa) + ", " + s.name(wb) + " below d" + std::to_string(i) +
                                   std::to_string(j) + " are acc[" + std::to_string(i) + "]-related");
    }

  if (s.has_substitutions())
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        for (AtomId a = 0; a < n; ++a)
          if (s.substitute(i, j, s.substitute(i, j, a)) != a)
            return Report::failure("substitution", {i, j, a},
                                   "s_[" + std::to_string(i) + "," + std::to_string(j) + "] is not an involution at " +
                                       s.name(a));
  return Report::pass();
}

}  // namespace cylgame
