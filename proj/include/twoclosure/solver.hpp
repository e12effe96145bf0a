#pragma once

#include <optional>

#include "twoclosure/coloring.hpp"
#include "twoclosure/search.hpp"
#include "twoclosure/structure.hpp"

namespace twoclosure {

/// The right coset subgroup * representative.
struct GroupCoset {
  PermGroup subgroup;
  Permutation representative;

  bool contains(const Permutation &x) const {
    return subgroup.contains(x * representative.inverse());
  }
};

namespace detail {

inline void check_solver_input(const OrbitalColoring &col, const PermGroup &W) {
  if (col.degree() != W.degree())
    throw InputError("coloring degree does not match group degree");
  if (!is_solvable(W))
    throw PreconditionError("color-preserving subgroup search requires a solvable group");
}

// aut_in_group without the solvability check, for callers that know it.
inline PermGroup aut_in_solvable_group(const OrbitalColoring &col, const PermGroup &W,
                                       const PermGroup *known = nullptr) {
  // cheap exit: every generator already preserves the coloring
  bool all = true;
  for (const auto &g : W.generators())
    if (!col.preserved_by(g)) {
      all = false;
      break;
    }
  if (all)
    return W;
  ColorSearch search(W, col.cells(), col.cells());
  return search.automorphisms(known);
}

} // namespace detail

/// Elements of W preserving every color class. The search is a backtrack over
/// the stabilizer chain of W; see detail::ColorSearch. `known`, if given, is
/// a subgroup of the answer.
inline PermGroup aut_in_group(const OrbitalColoring &col, const PermGroup &W,
                              const PermGroup *known = nullptr) {
  detail::check_solver_input(col, W);
  return detail::aut_in_solvable_group(col, W, known);
}

/// Color-preserving elements of the coset W*k, as a coset of aut_in_group.
inline std::optional<GroupCoset> aut_in_coset(const OrbitalColoring &col, const GroupCoset &C) {
  detail::check_solver_input(col, C.subgroup);
  // w*k preserves X iff w maps X onto X pulled back through k
  auto Y = col.raw_pulled_back(C.representative);
  detail::ColorSearch search(C.subgroup, col.cells(), Y);
  auto w = search.find_one();
  if (!w)
    return std::nullopt;
  return GroupCoset{aut_in_group(col, C.subgroup), *w * C.representative};
}

inline constexpr long long kBruteForceCosetLimit = 1000000;

/// Reference implementation by enumerating the coset.
inline std::optional<GroupCoset> brute_force_in_coset(const OrbitalColoring &col,
                                                      const GroupCoset &C) {
  if (col.degree() != C.subgroup.degree())
    throw InputError("coloring degree does not match group degree");
  if (C.subgroup.order() > kBruteForceCosetLimit)
    throw PreconditionError("coset too large to enumerate");
  std::vector<Permutation> good;
  PermGroup stab(col.degree());
  C.subgroup.for_each_element([&](const Permutation &w) {
    if (col.preserved_by(w * C.representative))
      good.push_back(w * C.representative);
    if (col.preserved_by(w))
      stab.add_generator(w);
  });
  if (good.empty())
    return std::nullopt;
  return GroupCoset{stab, *std::min_element(good.begin(), good.end())};
}

/// Same element set.
inline bool same_coset(const std::optional<GroupCoset> &a, const std::optional<GroupCoset> &b) {
  if (!a || !b)
    return !a && !b;
  return a->subgroup.order() == b->subgroup.order() && a->subgroup.contains_group(b->subgroup) &&
         a->contains(b->representative);
}

} // namespace twoclosure
