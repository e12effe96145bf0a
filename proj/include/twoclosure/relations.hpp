#pragma once

#include <vector>

#include "twoclosure/actions.hpp"

namespace twoclosure {

inline bool is_invariant(const EquivRelation &e, const PermGroup &G) {
  if (e.degree() != G.degree())
    throw InputError("relation degree does not match group degree");
  for (const auto &g : G.generators())
    if (!is_invariant_under(e, g))
      return false;
  return true;
}

/// e is normal iff the kernel G_e is transitive on every class.
inline bool is_normal_equivalence(const EquivRelation &e, const PermGroup &G) {
  if (!is_invariant(e, G))
    throw PreconditionError("equivalence relation is not invariant under the group");
  return kernel_of_quotient_action(G, e).kernel.orbit_partition() == e;
}

/// e restricted to delta, relabelled by position in sorted delta.
inline EquivRelation restrict(const EquivRelation &e, std::vector<Point> delta) {
  std::sort(delta.begin(), delta.end());
  delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
  std::vector<int> lab;
  for (Point a : delta) {
    if (a < 0 || static_cast<std::size_t>(a) >= e.degree())
      throw InputError("restriction point out of range");
    lab.push_back(e.class_of(a));
  }
  return EquivRelation::from_labels(lab);
}

/// The relation on the classes of `inner` grouping those that lie in one
/// class of `outer`.
inline EquivRelation lift_to_quotient(const EquivRelation &outer, const EquivRelation &inner) {
  if (!inner.refines(outer))
    throw PreconditionError("inner relation does not refine outer relation");
  std::vector<int> lab(inner.num_classes());
  for (std::size_t c = 0; c < inner.num_classes(); ++c)
    lab[c] = outer.class_of(inner.class_members(static_cast<int>(c)).front());
  return EquivRelation::from_labels(lab);
}

/// The relation on Omega whose classes are unions of `inner` classes grouped
/// by a relation on the class set of `inner`.
inline EquivRelation expand_from_quotient(const EquivRelation &inner, const EquivRelation &on_classes) {
  std::vector<int> lab(inner.degree());
  for (std::size_t a = 0; a < inner.degree(); ++a)
    lab[a] = on_classes.class_of(inner.class_of(static_cast<Point>(a)));
  return EquivRelation::from_labels(lab);
}

} // namespace twoclosure
