#pragma once

#include <map>
#include <vector>

#include "twoclosure/flags.hpp"
#include "twoclosure/orbitals.hpp"

namespace twoclosure {

/// The action of G_{e_i} on the union of its non-singleton orbits in
/// Omega/e_{i-1}. Points of `group` are positions in `classes`.
struct Section {
  std::size_t index = 0;      // i
  EquivRelation e;            // e_i
  EquivRelation below;        // e_{i-1}
  std::vector<int> classes;   // e_{i-1}-classes making up the section domain, increasing
  PermGroup group;
  std::vector<std::vector<Point>> orbits; // local points, by least point
  BigInt kernel_order = 1;    // |G_{e_i}| / |group|

  std::size_t degree() const { return classes.size(); }

  /// Points of Omega covered by local point `a`.
  const std::vector<Point> &points_of(Point a) const { return below.class_members(classes[a]); }
};

inline std::vector<Section> sections_of(const PermGroup &G, const Flag &F) {
  auto v = check_flag(F, G, false);
  if (!v.ok(true, false))
    throw PreconditionError("flag is not a normal flag of the group: " + v.reason);
  std::vector<Section> out;
  for (std::size_t i = 1; i < F.members.size(); ++i) {
    const EquivRelation &lo = F.members[i - 1];
    PermGroup Ke = kernel_of_quotient_action(G, F.members[i]).kernel;
    std::vector<Permutation> on_classes;
    for (const auto &g : Ke.generators())
      on_classes.push_back(induced_on_classes(g, lo));
    PermGroup H(lo.num_classes(), on_classes);
    const EquivRelation orbits = H.orbit_partition();
    std::vector<Point> dom;
    for (const auto &o : orbits.classes())
      if (o.size() > 1)
        dom.insert(dom.end(), o.begin(), o.end());
    if (dom.empty())
      continue;
    std::sort(dom.begin(), dom.end());
    auto img = restrict_to_invariant(H, dom);
    Section S;
    S.index = i;
    S.e = F.members[i];
    S.below = lo;
    S.classes.assign(dom.begin(), dom.end());
    S.group = img.image;
    S.orbits = S.group.orbit_partition().classes();
    S.kernel_order = Ke.order() / S.group.order();
    out.push_back(std::move(S));
  }
  return out;
}

/// The standard equivalence on the orbits of a plain section, with the plain
/// bijections between related orbits. A bijection is stored as an image
/// vector over the local points, -1 outside its source orbit.
struct PlainStructure {
  std::vector<std::vector<int>> classes; // orbit indices, each increasing; by least orbit
  std::vector<int> class_of_orbit;
  std::map<std::pair<int, int>, std::vector<std::vector<Point>>> bijections;
  bool unique = true;

  /// The representative of an orbit's class: its least orbit.
  int representative(int orbit) const { return classes[class_of_orbit[orbit]].front(); }

  const std::vector<Point> &bijection(int from, int to) const {
    auto it = bijections.find({from, to});
    if (it == bijections.end())
      throw PreconditionError("orbits are not related");
    if (it->second.size() != 1)
      throw PreconditionError("plain bijection between orbits is not unique");
    return it->second.front();
  }
};

namespace detail {

// Colors meeting Delta x Gamma, and the bijective ones among them.
struct PairColors {
  std::size_t count = 0;
  std::vector<std::vector<Point>> bijections;
};

inline PairColors pair_colors(const OrbitalColoring &col, const std::vector<Point> &D,
                              const std::vector<Point> &G, std::size_t n) {
  auto cells = col.cells();
  std::map<int, std::vector<std::pair<Point, Point>>> by_color;
  for (Point a : D)
    for (Point b : G)
      by_color[cells[static_cast<std::size_t>(a) * n + b]].emplace_back(a, b);
  PairColors pc;
  pc.count = by_color.size();
  if (D.size() != G.size())
    return pc;
  for (const auto &[c, list] : by_color) {
    if (list.size() != D.size())
      continue;
    std::vector<Point> f(n, -1);
    std::vector<char> hit(n, 0);
    bool ok = true;
    for (auto [a, b] : list) {
      if (f[a] >= 0 || hit[b]) {
        ok = false;
        break;
      }
      f[a] = b;
      hit[b] = 1;
    }
    if (ok)
      pc.bijections.push_back(std::move(f));
  }
  return pc;
}

inline void check_commutes(const PermGroup &S, const std::vector<Point> &f) {
  for (const auto &g : S.generators())
    for (std::size_t a = 0; a < f.size(); ++a)
      if (f[a] >= 0)
        TWOCLOSURE_ASSERT(f[g[static_cast<Point>(a)]] == g[f[a]],
                          "plain bijection does not commute with the section group");
}

} // namespace detail

/// nullopt when some pair of orbits is neither a single 2-orbit nor joined
/// by a bijective 2-orbit.
inline std::optional<PlainStructure> try_plain_structure(const Section &S) {
  const std::size_t n = S.degree();
  auto col = two_orbits(S.group);
  const int k = static_cast<int>(S.orbits.size());
  PlainStructure ps;
  std::vector<int> parent(k);
  for (int i = 0; i < k; ++i)
    parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int d = 0; d < k; ++d)
    for (int g = 0; g < k; ++g) {
      if (d == g)
        continue;
      auto pc = detail::pair_colors(col, S.orbits[d], S.orbits[g], n);
      if (pc.bijections.empty()) {
        if (pc.count != 1)
          return std::nullopt;
        continue;
      }
      for (const auto &f : pc.bijections)
        detail::check_commutes(S.group, f);
      if (pc.bijections.size() > 1)
        ps.unique = false;
      ps.bijections[{d, g}] = std::move(pc.bijections);
      int a = find(d), b = find(g);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  ps.class_of_orbit.assign(k, -1);
  for (int d = 0; d < k; ++d) {
    int r = find(d);
    if (ps.class_of_orbit[r] < 0) {
      ps.class_of_orbit[r] = static_cast<int>(ps.classes.size());
      ps.classes.emplace_back();
    }
    ps.class_of_orbit[d] = ps.class_of_orbit[r];
    ps.classes[ps.class_of_orbit[d]].push_back(d);
  }
  // the relation is transitive: every pair in a class is directly joined
  for (const auto &cls : ps.classes)
    for (int a : cls)
      for (int b : cls)
        TWOCLOSURE_ASSERT(a == b || ps.bijections.count({a, b}),
                          "standard equivalence on orbits is not transitive");
  return ps;
}

inline bool is_plain(const Section &S) { return try_plain_structure(S).has_value(); }

inline PlainStructure plain_structure(const Section &S) {
  auto ps = try_plain_structure(S);
  if (!ps)
    throw PreconditionError("section is not plain");
  return *ps;
}

/// Every transitive constituent is nonregular of prime degree at least 5.
inline bool is_feasible(const Section &S) {
  for (const auto &o : S.orbits) {
    if (o.size() < 5 || !is_prime(static_cast<long long>(o.size())))
      return false;
    if (restrict_to_invariant(S.group, o).image.order() <= BigInt(o.size()))
      return false;
  }
  return true;
}

inline bool section_orbit_sizes_prime(const Section &S) {
  if (S.orbits.empty())
    return false;
  const std::size_t p = S.orbits.front().size();
  if (!is_prime(static_cast<long long>(p)))
    return false;
  for (const auto &o : S.orbits)
    if (o.size() != p)
      return false;
  return true;
}

/// The section acts faithfully on each of its orbits.
/// S acts faithfully on every orbit of G on the section's classes. G must be
/// the group the section was taken from; a union of S-orbits that G leaves
/// invariant is the smallest set the faithfulness law speaks about.
inline bool faithful_on_invariant_sets(const Section &S, const PermGroup &G) {
  std::vector<int> local(S.below.num_classes(), -1);
  for (std::size_t a = 0; a < S.degree(); ++a)
    local[S.classes[a]] = static_cast<int>(a);
  std::vector<Permutation> induced;
  for (const auto &g : G.generators()) {
    auto h = induced_on_classes(g, S.below);
    std::vector<Point> img(S.degree());
    for (std::size_t a = 0; a < S.degree(); ++a) {
      int b = local[h[S.classes[a]]];
      if (b < 0)
        throw PreconditionError("group does not preserve the section domain");
      img[a] = static_cast<Point>(b);
    }
    induced.emplace_back(std::move(img));
  }
  const EquivRelation orbits = PermGroup(S.degree(), induced).orbit_partition();
  const auto classes = orbits.classes();
  for (const auto &o : classes)
    if (pointwise_stabilizer(S.group, o).order() != 1)
      return false;
  return true;
}

} // namespace twoclosure
