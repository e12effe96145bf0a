#pragma once

#include <vector>

#include "twoclosure/actions.hpp"
#include "twoclosure/coloring.hpp"
#include "twoclosure/search.hpp"

namespace twoclosure {

/// Orbits of G on ordered pairs, as a canonically numbered coloring.
inline OrbitalColoring two_orbits(const PermGroup &G) {
  const std::size_t n = G.degree();
  std::vector<int> parent(n * n);
  for (std::size_t c = 0; c < n * n; ++c)
    parent[c] = static_cast<int>(c);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &g : G.generators()) {
    auto img = g.images();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        int x = find(static_cast<int>(a * n + b));
        int y = find(static_cast<int>(static_cast<std::size_t>(img[a]) * n + img[b]));
        if (x != y)
          parent[std::max(x, y)] = std::min(x, y);
      }
  }
  std::vector<int> lab(n * n);
  for (std::size_t c = 0; c < n * n; ++c)
    lab[c] = find(static_cast<int>(c));
  return OrbitalColoring(n, lab);
}

inline bool same_two_orbits(const OrbitalColoring &A, const OrbitalColoring &B) {
  if (A.degree() != B.degree())
    throw InputError("colorings have different degrees");
  return A == B; // both canonically numbered
}

inline PermGroup symmetric_group(std::size_t n) {
  if (n < 2)
    return PermGroup(n);
  std::vector<Point> c(n);
  for (std::size_t i = 0; i < n; ++i)
    c[i] = static_cast<Point>(i);
  std::vector<Point> base(c.begin(), c.end() - 1);
  return PermGroup::build(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {c})},
                          base, factorial(static_cast<long long>(n)));
}

/// Direct product of the symmetric groups on the orbits of G.
inline PermGroup one_closure(const PermGroup &G) {
  const std::size_t n = G.degree();
  std::vector<Permutation> gens;
  BigInt ord = 1;
  const EquivRelation orbits = G.orbit_partition();
  for (const auto &orb : orbits.classes()) {
    if (orb.size() < 2)
      continue;
    ord *= factorial(static_cast<long long>(orb.size()));
    gens.push_back(Permutation::from_cycles(n, {{orb[0], orb[1]}}));
    if (orb.size() > 2)
      gens.push_back(Permutation::from_cycles(n, {orb}));
  }
  return PermGroup::build(n, gens, {}, ord);
}

inline constexpr std::size_t kOracleMaxDegree = 12;

/// The full automorphism group of the 2-orbit coloring of G, by backtrack
/// over Sym(n) pruned by colors. Reference implementation for small degree.
inline PermGroup brute_force_closure(const PermGroup &G) {
  if (G.degree() > kOracleMaxDegree)
    throw PreconditionError("brute-force closure refused above degree " +
                            std::to_string(kOracleMaxDegree));
  auto col = two_orbits(G);
  // the 1-closure contains the answer and is a much smaller search space
  PermGroup S = one_closure(G);
  detail::ColorSearch search(S, col.cells(), col.cells());
  return search.automorphisms(&G);
}

} // namespace twoclosure
