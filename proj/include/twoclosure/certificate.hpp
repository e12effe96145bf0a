#pragma once

#include <string>
#include <vector>

#include "twoclosure/majorant.hpp"
#include "twoclosure/sections.hpp"

namespace twoclosure {

enum class EmptyReason {
  none,
  not_feasible,
  not_plain,
  empty_intersection,
  // kept for reports that skip the search on purpose; find_certificate never sets it
  solvable_by_construction,
};

inline const char *to_string(EmptyReason r) {
  switch (r) {
  case EmptyReason::none:
    return "none";
  case EmptyReason::not_feasible:
    return "not-feasible";
  case EmptyReason::not_plain:
    return "not-plain";
  case EmptyReason::empty_intersection:
    return "empty-intersection";
  case EmptyReason::solvable_by_construction:
    return "solvable-by-construction";
  }
  return "unknown";
}

struct Certificate {
  std::size_t section_index = 0;
  std::vector<Permutation> xbar;   // on the section's local points
  std::vector<Permutation> lifted; // k_x on Omega
  std::vector<Permutation> X;      // one color-preserving element per x, or empty
  EmptyReason empty_reason = EmptyReason::none;
};

/// One permutation per class of the standard equivalence: a 3-cycle on the
/// three least points of the class's least orbit, copied to the other orbits
/// of the class through the plain bijections.
inline std::vector<Permutation> build_xbar(const Section &S, const PlainStructure &P) {
  std::vector<Permutation> out;
  for (const auto &cls : P.classes) {
    const auto &R = S.orbits[cls.front()];
    if (R.size() < 3)
      throw PreconditionError("orbit too small for a 3-cycle");
    std::vector<Point> img(S.degree());
    for (std::size_t a = 0; a < img.size(); ++a)
      img[a] = static_cast<Point>(a);
    const Point r[3] = {R[0], R[1], R[2]};
    for (int t = 0; t < 3; ++t)
      img[r[t]] = r[(t + 1) % 3];
    for (std::size_t j = 1; j < cls.size(); ++j) {
      const auto &f = P.bijection(cls.front(), cls[j]); // throws if not unique
      for (int t = 0; t < 3; ++t)
        img[f[r[t]]] = f[r[(t + 1) % 3]];
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

/// The permutation of Omega that is trivial on Omega/e_S, induces x on the
/// section's classes, and moves each e_{i-1}-class onto its image by the
/// canonical bijection (so every lower coordinate is the identity).
inline Permutation lift_kx(const Permutation &x, const Section &S, const Identification &id) {
  if (x.degree() != S.degree())
    throw InputError("permutation degree does not match the section");
  std::vector<Point> img(id.degree);
  for (std::size_t a = 0; a < id.degree; ++a)
    img[a] = static_cast<Point>(a);
  for (std::size_t a = 0; a < S.degree(); ++a) {
    const Point target = S.points_of(x[static_cast<Point>(a)]).front();
    for (Point p : S.points_of(static_cast<Point>(a)))
      img[p] = id.transport(p, target, S.index);
  }
  return Permutation(img);
}

/// The induced action of k on the section's classes (k must fix Omega/e_S).
inline Permutation induced_on_section(const Permutation &k, const Section &S) {
  std::vector<int> local(S.below.num_classes(), -1);
  for (std::size_t a = 0; a < S.degree(); ++a)
    local[S.classes[a]] = static_cast<int>(a);
  std::vector<Point> img(S.degree());
  for (std::size_t a = 0; a < S.degree(); ++a) {
    int c = S.below.class_of(k[S.points_of(static_cast<Point>(a)).front()]);
    if (local[c] < 0)
      throw PreconditionError("permutation does not preserve the section domain");
    img[a] = local[c];
  }
  return Permutation(img);
}

/// The certificate search for one section. `W` is the majorant for `id`.
inline Certificate find_certificate(const Section &S, const Identification &id, const PermGroup &W,
                                    const OrbitalColoring &coloring) {
  Certificate cert;
  cert.section_index = S.index;
  if (!is_feasible(S)) {
    cert.empty_reason = EmptyReason::not_feasible;
    return cert;
  }
  auto P = try_plain_structure(S);
  if (!P) {
    cert.empty_reason = EmptyReason::not_plain;
    return cert;
  }
  cert.xbar = build_xbar(S, *P);
  for (const auto &O : id.orbits)
    for (std::size_t L = 1; L <= O.levels(); ++L)
      TWOCLOSURE_ASSERT(is_solvable(O.slice_groups[L]), "majorant is not solvable");
  PermGroup We = kernel_of_quotient_action(W, id.flag.members[S.index - 1]).kernel;
  for (const auto &x : cert.xbar) {
    Permutation k = lift_kx(x, S, id);
    cert.lifted.push_back(k);
    auto Y = coloring.raw_pulled_back(k);
    detail::ColorSearch search(We, coloring.cells(), Y);
    auto w = search.find_one();
    if (!w) {
      cert.X.clear();
      cert.empty_reason = EmptyReason::empty_intersection;
      return cert;
    }
    Permutation y = *w * k;
    TWOCLOSURE_ASSERT(coloring.preserved_by(y), "certificate element does not preserve the coloring");
    TWOCLOSURE_ASSERT(induced_on_section(y, S) == x,
                      "certificate element does not induce its 3-cycle on the section");
    cert.X.push_back(std::move(y));
  }
  return cert;
}

inline Certificate find_certificate(const PermGroup &K, const Flag &F, const Section &S,
                                    const OrbitalColoring &coloring) {
  auto id = build_identification(K, F);
  return find_certificate(S, id, majorant(id), coloring);
}

} // namespace twoclosure
