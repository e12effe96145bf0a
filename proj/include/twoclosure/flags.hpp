#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "twoclosure/relations.hpp"
#include "twoclosure/structure.hpp"

namespace twoclosure {

/// A strictly increasing chain e_0 = 1 < e_1 < ... < e_m of equivalence
/// relations. Which group it is a flag for is decided at validation time.
struct Flag {
  std::size_t degree = 0;
  std::vector<EquivRelation> members;
  std::string owner_hint;

  std::size_t length() const { return members.empty() ? 0 : members.size() - 1; }

  int index_of(const EquivRelation &e) const {
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i] == e)
        return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const Flag &a, const Flag &b) { return a.members == b.members; }
};

/// Chain from series of the form 1 = L_0 < ... < L_m = G where each L_i acts
/// on Omega/e_{i-1} as a minimal normal subgroup of the induced group; only
/// the orbit relations are kept.
inline Flag maximal_normal_flag(const PermGroup &G) {
  Flag F;
  F.degree = G.degree();
  F.owner_hint = "input group";
  F.members.push_back(EquivRelation::identity(G.degree()));
  while (true) {
    const EquivRelation &e = F.members.back();
    auto q = kernel_of_quotient_action(G, e);
    if (q.image.is_trivial())
      break;
    PermGroup N = minimal_normal_subgroup(q.image);
    F.members.push_back(expand_from_quotient(e, N.orbit_partition()));
  }
  return F;
}

struct FlagVerdict {
  bool chain = false;     // 1 = e_0 < ... < e_m = orbit partition
  bool invariant = false; // every member invariant
  bool normal = false;    // every member normal
  bool maximal = false;   // nothing normal fits strictly between neighbours
  bool maximality_checked = false;
  std::string reason;

  bool ok(bool require_normal, bool require_maximal) const {
    return chain && invariant && (!require_normal || normal) && (!require_maximal || maximal);
  }
};

inline constexpr std::size_t kMaximalityCheckMaxDegree = 10;

namespace detail {

// Calls f on every relation e with lower <= e <= upper, as labels on Omega.
inline void for_each_between(const EquivRelation &lower, const EquivRelation &upper,
                             const std::function<void(const EquivRelation &)> &f) {
  const std::size_t m = lower.num_classes();
  auto up = lift_to_quotient(upper, lower);
  std::vector<int> lab(m, -1);
  std::function<void(std::size_t, int)> rec = [&](std::size_t c, int used) {
    if (c == m) {
      f(expand_from_quotient(lower, EquivRelation::from_labels(lab)));
      return;
    }
    for (int l = 0; l <= used; ++l) {
      if (l < used) {
        // may only join an existing block from the same upper class
        std::size_t rep = 0;
        while (lab[rep] != l)
          ++rep;
        if (up.class_of(static_cast<Point>(rep)) != up.class_of(static_cast<Point>(c)))
          continue;
      }
      lab[c] = l;
      rec(c + 1, l == used ? used + 1 : used);
    }
    lab[c] = -1;
  };
  rec(0, 0);
}

} // namespace detail

inline FlagVerdict check_flag(const Flag &F, const PermGroup &G, bool check_maximal) {
  FlagVerdict v;
  if (F.members.empty() || F.degree != G.degree()) {
    v.reason = "empty flag or degree mismatch";
    return v;
  }
  if (!F.members.front().is_identity()) {
    v.reason = "first member is not the identity relation";
    return v;
  }
  for (std::size_t i = 0; i + 1 < F.members.size(); ++i)
    if (!F.members[i].strictly_refines(F.members[i + 1])) {
      v.reason = "member " + std::to_string(i) + " does not strictly refine the next";
      return v;
    }
  if (!(F.members.back() == G.orbit_partition())) {
    v.reason = "top member is not the orbit partition";
    return v;
  }
  v.chain = true;
  for (const auto &e : F.members)
    if (!is_invariant(e, G)) {
      v.reason = "member " + e.to_string() + " is not invariant";
      return v;
    }
  v.invariant = true;
  v.normal = true;
  for (const auto &e : F.members)
    if (!is_normal_equivalence(e, G)) {
      v.normal = false;
      v.reason = "member " + e.to_string() + " is not normal";
      break;
    }
  if (check_maximal && v.normal && G.degree() <= kMaximalityCheckMaxDegree) {
    v.maximality_checked = true;
    v.maximal = true;
    for (std::size_t i = 0; i + 1 < F.members.size() && v.maximal; ++i) {
      const auto &lo = F.members[i], &hi = F.members[i + 1];
      detail::for_each_between(lo, hi, [&](const EquivRelation &e) {
        if (!v.maximal || e == lo || e == hi)
          return;
        if (is_invariant(e, G) && is_normal_equivalence(e, G)) {
          v.maximal = false;
          v.reason = "normal relation " + e.to_string() + " fits between members " +
                     std::to_string(i) + " and " + std::to_string(i + 1);
        }
      });
    }
  } else if (check_maximal && v.normal) {
    v.maximal = true; // trusted to the construction above the exhaustive limit
  }
  return v;
}

inline bool validate_flag(const Flag &F, const PermGroup &G, bool require_normal,
                          bool require_maximal) {
  return check_flag(F, G, require_maximal).ok(require_normal, require_maximal);
}

inline Flag induced_flag_on_set(const Flag &F, const std::vector<Point> &delta) {
  Flag out;
  out.degree = restrict(F.members.front(), delta).degree();
  out.owner_hint = F.owner_hint;
  for (const auto &e : F.members) {
    auto r = restrict(e, delta);
    if (out.members.empty() || !(out.members.back() == r))
      out.members.push_back(std::move(r));
  }
  return out;
}

inline Flag induced_flag_on_quotient(const Flag &F, const EquivRelation &e) {
  int idx = F.index_of(e);
  if (idx < 0)
    throw PreconditionError("relation is not a member of the flag");
  Flag out;
  out.degree = e.num_classes();
  out.owner_hint = F.owner_hint;
  for (std::size_t j = static_cast<std::size_t>(idx); j < F.members.size(); ++j)
    out.members.push_back(lift_to_quotient(F.members[j], e));
  return out;
}

/// Extends a normal K-flag to a maximal one. For each member e (in order),
/// each orbit L of K on Omega/e (by least class) on which the next member
/// is nontrivial, and the group P of elements of K_{next} acting on Omega/e
/// and fixing L pointwise: if P is nontrivial, the orbits of a minimal normal
/// subgroup of K^{Omega/e} inside P give a relation strictly between e and
/// the next member, which is inserted, and the scan restarts. When the scan
/// finds nothing, no normal relation fits anywhere.
inline Flag extend_to_maximal_k_flag(const PermGroup &K, const Flag &F) {
  auto verdict = check_flag(F, K, false);
  if (!verdict.ok(true, false))
    throw PreconditionError("flag is not a normal flag of the group: " + verdict.reason);
  Flag out = F;
  out.owner_hint = "relative closure";
  std::size_t insertions = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t idx = 0; idx + 1 < out.members.size() && !changed; ++idx) {
      const EquivRelation e = out.members[idx], ov = out.members[idx + 1];
      auto q = kernel_of_quotient_action(K, e);
      const PermGroup &Q = q.image;
      auto kov = kernel_of_quotient_action(K, ov).kernel;
      std::vector<Permutation> on_classes;
      for (const auto &g : kov.generators())
        on_classes.push_back(induced_on_classes(g, e));
      PermGroup P0(e.num_classes(), on_classes);
      auto ov_classes = lift_to_quotient(ov, e);
      const EquivRelation orbits = Q.orbit_partition();
      for (const auto &lam : orbits.classes()) {
        if (lam.size() < 2)
          continue;
        std::vector<int> seen;
        for (Point c : lam)
          seen.push_back(ov_classes.class_of(c));
        std::sort(seen.begin(), seen.end());
        bool splits = std::adjacent_find(seen.begin(), seen.end()) != seen.end();
        if (!splits)
          continue;
        PermGroup P = pointwise_stabilizer(P0, lam);
        if (P.is_trivial())
          continue;
        PermGroup N = minimal_normal_subgroup_within(Q, P);
        EquivRelation ins = expand_from_quotient(e, N.orbit_partition());
        TWOCLOSURE_ASSERT(e.strictly_refines(ins) && ins.strictly_refines(ov),
                          "inserted relation is not strictly between its neighbours");
        out.members.insert(out.members.begin() + static_cast<long>(idx) + 1, ins);
        if (++insertions > K.degree())
          throw InternalError("flag extension exceeded degree many insertions");
        changed = true;
        break;
      }
    }
  }
  return out;
}

} // namespace twoclosure
