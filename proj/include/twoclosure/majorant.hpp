#pragma once

#include <deque>
#include <vector>

#include "twoclosure/flags.hpp"
#include "twoclosure/orbitals.hpp"
#include "twoclosure/solver.hpp"

namespace twoclosure {

/// One orbit written as a product of the level sets Delta_L / e_{L-1}, where
/// L runs over the levels at which the flag actually changes on the orbit.
struct OrbitCoordinates {
  std::vector<Point> points;               // increasing
  std::vector<int> level_of_member;        // flag member j -> level L on this orbit
  std::vector<std::size_t> dims;           // dims[L], L = 1..m; dims[0] = 1
  std::vector<std::size_t> strides;        // mixed radix, level 1 varies fastest
  std::vector<std::vector<Point>> chosen;  // Delta_L
  std::vector<PermGroup> slice_groups;     // G^{ov Delta_L} on dims[L] points
  std::vector<Point> decode;               // radix index -> point

  std::size_t levels() const { return dims.size() - 1; }
};

/// Identification of every orbit of G with a Cartesian product, pinned by
/// choosing the classes through the least point of each orbit and group
/// elements found by breadth-first search over the generators.
struct Identification {
  std::size_t degree = 0;
  Flag flag;
  std::vector<OrbitCoordinates> orbits;
  std::vector<int> orbit_of;               // point -> orbit index
  std::vector<std::vector<int>> coords;    // point -> (x_1, ..., x_m), x_L at [L-1]

  const OrbitCoordinates &orbit(Point a) const { return orbits[orbit_of[a]]; }

  /// Level on a's orbit that separates e_{i-1} from e_i, or 0 if they agree there.
  std::size_t level_between(Point a, std::size_t i) const {
    const auto &O = orbit(a);
    int hi = O.level_of_member[i], lo = O.level_of_member[i - 1];
    return hi == lo ? 0 : static_cast<std::size_t>(hi);
  }

  Point point_at(std::size_t orb, const std::vector<int> &x) const {
    const auto &O = orbits[orb];
    std::size_t idx = 0;
    for (std::size_t L = 1; L <= O.levels(); ++L)
      idx += static_cast<std::size_t>(x[L - 1]) * O.strides[L];
    return O.decode[idx];
  }

  /// The canonical bijection between the e_{i-1}-classes of a and b (which
  /// lie in one e_i-class), evaluated at a: keep every coordinate of a except
  /// the one at level i, which is taken from b.
  Point transport(Point a, Point b, std::size_t i) const {
    std::size_t L = level_between(a, i);
    if (L == 0)
      return a;
    auto x = coords[a];
    x[L - 1] = coords[b][L - 1];
    return point_at(static_cast<std::size_t>(orbit_of[a]), x);
  }
};

namespace detail {

// Setwise stabilizer of class c of the G-invariant relation e, via the point
// stabilizer in the combined action on Omega and Omega/e.
inline PermGroup class_stabilizer(const PermGroup &G, const EquivRelation &e, int c) {
  const std::size_t n = G.degree(), m = e.num_classes();
  std::vector<Permutation> combined;
  for (const auto &g : G.strong_generators()) {
    Permutation q = induced_on_classes(g, e);
    std::vector<Point> img(n + m);
    for (std::size_t a = 0; a < n; ++a)
      img[a] = g[static_cast<Point>(a)];
    for (std::size_t k = 0; k < m; ++k)
      img[n + k] = static_cast<Point>(n) + q[static_cast<Point>(k)];
    combined.emplace_back(std::move(img));
  }
  PermGroup comb =
      PermGroup::build(n + m, combined, {static_cast<Point>(n + static_cast<std::size_t>(c))}, G.order());
  PermGroup tail = comb.chain_tail(1);
  std::vector<Permutation> gens;
  for (const auto &g : tail.generators())
    gens.emplace_back(std::vector<Point>(g.images().begin(), g.images().begin() + n));
  return PermGroup::build(n, gens, {}, tail.order());
}

} // namespace detail

inline Identification build_identification(const PermGroup &G, const Flag &F) {
  auto v = check_flag(F, G, false);
  if (!v.ok(true, false))
    throw PreconditionError("flag is not a normal flag of the group: " + v.reason);
  const std::size_t n = G.degree();
  Identification id;
  id.degree = n;
  id.flag = F;
  id.orbit_of.assign(n, -1);
  id.coords.assign(n, {});
  const EquivRelation orbit_rel = G.orbit_partition();
  const std::size_t M = F.length();
  for (const auto &orb : orbit_rel.classes()) {
    OrbitCoordinates O;
    O.points = orb;
    const Point p0 = orb.front();
    // levels where the flag changes on this orbit, and the member behind each
    std::vector<std::size_t> member_of_level{0};
    O.level_of_member.assign(M + 1, 0);
    for (std::size_t j = 1; j <= M; ++j) {
      const auto &hi = F.members[j];
      const auto &lo = F.members[member_of_level.back()];
      bool changes = false;
      for (Point a : orb)
        if (hi.class_of(a) == hi.class_of(p0) && lo.class_of(a) != lo.class_of(p0)) {
          changes = true;
          break;
        }
      if (changes)
        member_of_level.push_back(j);
      O.level_of_member[j] = static_cast<int>(member_of_level.size() - 1);
    }
    const std::size_t m = member_of_level.size() - 1;
    O.dims.assign(m + 1, 1);
    O.chosen.assign(m + 1, {});
    O.slice_groups.assign(m + 1, PermGroup(1));
    O.chosen[0] = {p0};
    // per level: local index of each lo-class inside Delta_L, and an element
    // g_D mapping Delta_{L-1} onto each lo-class D (stored inverted)
    std::vector<std::vector<int>> local(m + 1);
    std::vector<std::vector<std::optional<Permutation>>> back(m + 1);
    for (std::size_t L = 1; L <= m; ++L) {
      const auto &hi = F.members[member_of_level[L]];
      const auto &lo = F.members[member_of_level[L - 1]];
      const auto &delta = hi.class_members(hi.class_of(p0));
      O.chosen[L] = delta;
      local[L].assign(lo.num_classes(), -1);
      int next = 0;
      for (Point a : delta) // delta is increasing, so classes come by least point
        if (local[L][lo.class_of(a)] < 0)
          local[L][lo.class_of(a)] = next++;
      O.dims[L] = static_cast<std::size_t>(next);
      back[L].assign(lo.num_classes(), std::nullopt);
      const int root = lo.class_of(p0);
      back[L][root] = Permutation::identity(n);
      std::deque<int> queue{root};
      std::vector<Permutation> fwd(lo.num_classes(), Permutation::identity(n));
      while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (const auto &g : G.generators()) {
          int d = lo.class_of(g[lo.class_members(c).front()]);
          if (back[L][d])
            continue;
          fwd[d] = fwd[c] * g;
          back[L][d] = fwd[d].inverse();
          queue.push_back(d);
        }
      }
      // G^{ov Delta_L}
      PermGroup stab = detail::class_stabilizer(G, hi, hi.class_of(p0));
      std::vector<Permutation> gens;
      for (const auto &h : stab.generators()) {
        std::vector<Point> img(O.dims[L]);
        for (Point a : delta)
          img[local[L][lo.class_of(a)]] = local[L][lo.class_of(h[a])];
        Permutation q(img);
        if (!q.is_identity())
          gens.push_back(q);
      }
      O.slice_groups[L] = PermGroup(O.dims[L], gens);
    }
    O.strides.assign(m + 1, 1);
    std::size_t size = 1;
    for (std::size_t L = 1; L <= m; ++L) {
      O.strides[L] = size;
      size *= O.dims[L];
    }
    TWOCLOSURE_ASSERT(size == orb.size(), "orbit is not the product of its level sets");
    O.decode.assign(size, -1);
    const int oi = static_cast<int>(id.orbits.size());
    for (Point a : orb) {
      std::vector<int> x(m);
      Point b = a;
      for (std::size_t L = m; L >= 1; --L) {
        const auto &lo = F.members[member_of_level[L - 1]];
        int c = lo.class_of(b);
        x[L - 1] = local[L][c];
        TWOCLOSURE_ASSERT(x[L - 1] >= 0, "coordinate point left the chosen class");
        b = (*back[L][c])[b];
      }
      TWOCLOSURE_ASSERT(b == p0, "coordinates do not reach the base point");
      std::size_t idx = 0;
      for (std::size_t L = 1; L <= m; ++L)
        idx += static_cast<std::size_t>(x[L - 1]) * O.strides[L];
      TWOCLOSURE_ASSERT(O.decode[idx] < 0, "two points share coordinates");
      O.decode[idx] = a;
      id.orbit_of[a] = oi;
      id.coords[a] = std::move(x);
    }
    id.orbits.push_back(std::move(O));
  }
  return id;
}

/// Generators of the iterated wreath product on each orbit: the slice group
/// at level L acts on coordinate x_L of the points whose higher coordinates
/// are all zero; conjugation by the higher levels moves it to every slice.
inline std::vector<Permutation> majorant_generators(const Identification &id) {
  const std::size_t n = id.degree;
  std::vector<Permutation> gens;
  for (std::size_t oi = 0; oi < id.orbits.size(); ++oi) {
    const auto &O = id.orbits[oi];
    for (std::size_t L = 1; L <= O.levels(); ++L)
      for (const auto &a : O.slice_groups[L].generators()) {
        std::vector<Point> img(n);
        for (std::size_t p = 0; p < n; ++p)
          img[p] = static_cast<Point>(p);
        for (Point p : O.points) {
          const auto &x = id.coords[p];
          bool base_slice = true;
          for (std::size_t L2 = L + 1; L2 <= O.levels() && base_slice; ++L2)
            base_slice = x[L2 - 1] == 0;
          if (!base_slice)
            continue;
          auto y = x;
          y[L - 1] = a[x[L - 1]];
          img[p] = id.point_at(oi, y);
        }
        gens.emplace_back(std::move(img));
      }
  }
  return gens;
}

inline BigInt majorant_order(const Identification &id) {
  BigInt ord = 1;
  for (const auto &O : id.orbits) {
    std::size_t copies = O.points.size();
    for (std::size_t L = 1; L <= O.levels(); ++L) {
      copies /= O.dims[L];
      BigInt s = O.slice_groups[L].order();
      for (std::size_t c = 0; c < copies; ++c)
        ord *= s;
    }
  }
  return ord;
}

inline PermGroup majorant(const Identification &id) {
  return PermGroup::build(id.degree, majorant_generators(id), {}, majorant_order(id));
}

/// Coordinates of k at flag member i: for every e_i-class B, the permutation
/// of the level-i coordinate induced by k from B to B^k (a one-point
/// permutation where the flag does not change on B), and k on Omega/e_i.
struct StandardRep {
  std::size_t level = 0;
  std::vector<Permutation> coords; // by e_i-class index
  Permutation residual;
};

namespace detail {

inline std::optional<StandardRep> try_delta_coordinates(const Identification &id,
                                                        const Permutation &k, std::size_t i) {
  const auto &e = id.flag.members[i];
  if (!is_invariant_under(e, k))
    return std::nullopt;
  StandardRep rep;
  rep.level = i;
  rep.residual = induced_on_classes(k, e);
  for (std::size_t c = 0; c < e.num_classes(); ++c) {
    const auto &B = e.class_members(static_cast<int>(c));
    if (id.orbit_of[k[B.front()]] != id.orbit_of[B.front()])
      return std::nullopt;
    std::size_t L = id.level_between(B.front(), i);
    if (L == 0) {
      rep.coords.push_back(Permutation::identity(1));
      continue;
    }
    const auto &O = id.orbit(B.front());
    std::vector<Point> img(O.dims[L], -1);
    for (Point a : B) {
      int from = id.coords[a][L - 1], to = id.coords[k[a]][L - 1];
      if (img[from] >= 0 && img[from] != to)
        return std::nullopt;
      img[from] = to;
    }
    std::vector<char> seen(img.size(), 0);
    for (Point t : img) {
      if (t < 0 || seen[t])
        return std::nullopt;
      seen[t] = 1;
    }
    Permutation q(img);
    if (!O.slice_groups[L].contains(q))
      return std::nullopt;
    rep.coords.push_back(std::move(q));
  }
  return rep;
}

} // namespace detail

/// Whether k lies in the majorant, decided from its coordinates.
inline bool in_majorant(const Identification &id, const Permutation &k) {
  if (k.degree() != id.degree)
    return false;
  for (std::size_t i = 1; i <= id.flag.length(); ++i)
    if (!detail::try_delta_coordinates(id, k, i))
      return false;
  return true;
}

inline StandardRep delta_coordinates(const Identification &id, const Permutation &k,
                                     std::size_t i) {
  if (i < 1 || i > id.flag.length())
    throw PreconditionError("flag level out of range");
  if (!in_majorant(id, k))
    throw PreconditionError("permutation is not in the majorant");
  return *detail::try_delta_coordinates(id, k, i);
}

/// Rebuilds a permutation from its coordinates at every level (reps[i-1] is
/// the representation at member i).
inline Permutation recompose(const Identification &id, const std::vector<StandardRep> &reps) {
  std::vector<Point> img(id.degree);
  for (std::size_t a = 0; a < id.degree; ++a) {
    const Point p = static_cast<Point>(a);
    auto y = id.coords[p];
    for (std::size_t i = 1; i <= id.flag.length(); ++i) {
      std::size_t L = id.level_between(p, i);
      if (L == 0)
        continue;
      int c = id.flag.members[i].class_of(p);
      y[L - 1] = reps[i - 1].coords[c][y[L - 1]];
    }
    img[a] = id.point_at(static_cast<std::size_t>(id.orbit_of[p]), y);
  }
  return Permutation(img);
}

/// The relative closure with its majorant.
struct RelativeClosure {
  Identification id;
  PermGroup majorant;
  PermGroup group;
};

inline RelativeClosure relative_closure_data(const PermGroup &G, const Flag &F) {
  if (!is_solvable(G))
    throw PreconditionError("relative closure requires a solvable group");
  RelativeClosure rc;
  rc.id = build_identification(G, F);
  rc.majorant = majorant(rc.id);
  auto col = two_orbits(G);
  // the majorant of a solvable group is solvable (its slice groups are sections of G)
  rc.group = detail::aut_in_solvable_group(col, rc.majorant, &G);
  return rc;
}

inline PermGroup relative_closure(const PermGroup &G, const Flag &F) {
  return relative_closure_data(G, F).group;
}

} // namespace twoclosure
