#pragma once

#include <optional>
#include <vector>

#include "twoclosure/equivalence.hpp"
#include "twoclosure/group.hpp"
#include "twoclosure/search.hpp"

namespace twoclosure {

/// The action induced on a quotient set, an invariant subset, or a union.
/// `points[k]` names the source object behind target point k: a class index
/// for quotient actions, an original point for restrictions.
struct ActionImage {
  std::size_t target_degree = 0;
  std::vector<Point> points;
  PermGroup image;
  PermGroup kernel;
};

inline PermGroup trivial_group(std::size_t degree) { return PermGroup(degree); }

/// Rebuilds the chain of G so that `prefix` are the first base points.
inline PermGroup with_base_prefix(const PermGroup &G, const std::vector<Point> &prefix) {
  return PermGroup::build(G.degree(), G.strong_generators(), prefix, G.order());
}

inline PermGroup pointwise_stabilizer(const PermGroup &G, const std::vector<Point> &pts) {
  if (pts.empty())
    return G;
  for (Point p : pts)
    if (p < 0 || static_cast<std::size_t>(p) >= G.degree())
      throw InputError("stabilized point out of range");
  std::vector<Point> uniq;
  for (Point p : pts)
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end())
      uniq.push_back(p);
  return with_base_prefix(G, uniq).chain_tail(uniq.size());
}

inline bool is_invariant_under(const EquivRelation &e, const Permutation &g) {
  for (const auto &cls : e.classes()) {
    int target = e.class_of(g[cls.front()]);
    for (Point a : cls)
      if (e.class_of(g[a]) != target)
        return false;
  }
  return true;
}

/// Permutation of class indices induced by g (e must be g-invariant).
inline Permutation induced_on_classes(const Permutation &g, const EquivRelation &e) {
  std::vector<Point> img(e.num_classes());
  for (std::size_t c = 0; c < e.num_classes(); ++c)
    img[c] = e.class_of(g[e.class_members(static_cast<int>(c)).front()]);
  return Permutation(std::move(img));
}

/// g restricted to an invariant point list, relabelled by position.
inline Permutation restrict_to(const Permutation &g, const std::vector<Point> &pts,
                               const std::vector<int> &local) {
  std::vector<Point> img(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k)
    img[k] = local[g[pts[k]]];
  return Permutation(std::move(img));
}

/// G^{Omega/e} together with its kernel G_e. Kernel via the stabilizer of the
/// class points in the combined action on Omega plus the class set.
inline ActionImage kernel_of_quotient_action(const PermGroup &G, const EquivRelation &e) {
  if (e.degree() != G.degree())
    throw InputError("relation degree does not match group degree");
  for (const auto &g : G.generators())
    if (!is_invariant_under(e, g))
      throw PreconditionError("equivalence relation is not invariant under the group");
  const std::size_t n = G.degree(), m = e.num_classes();
  ActionImage out;
  out.target_degree = m;
  for (std::size_t c = 0; c < m; ++c)
    out.points.push_back(static_cast<Point>(c));
  std::vector<Permutation> img_gens, combined;
  for (const auto &g : G.strong_generators()) {
    Permutation q = induced_on_classes(g, e);
    std::vector<Point> c(n + m);
    for (std::size_t a = 0; a < n; ++a)
      c[a] = g[static_cast<Point>(a)];
    for (std::size_t k = 0; k < m; ++k)
      c[n + k] = static_cast<Point>(n) + q[static_cast<Point>(k)];
    combined.emplace_back(std::move(c));
    img_gens.push_back(std::move(q));
  }
  std::vector<Point> prefix;
  for (std::size_t k = 0; k < m; ++k)
    prefix.push_back(static_cast<Point>(n + k));
  PermGroup comb = PermGroup::build(n + m, combined, prefix, G.order());
  out.kernel = comb.chain_tail(m).truncated(n);
  out.image = PermGroup::build(m, img_gens, {}, G.order() / out.kernel.order());
  return out;
}

/// Image of G on an invariant point set (union of orbits), relabelled in
/// increasing point order.
inline ActionImage restrict_to_invariant(const PermGroup &G, std::vector<Point> delta) {
  std::sort(delta.begin(), delta.end());
  delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
  std::vector<int> local(G.degree(), -1);
  for (std::size_t k = 0; k < delta.size(); ++k)
    local[delta[k]] = static_cast<int>(k);
  for (const auto &g : G.generators())
    for (Point a : delta)
      if (local[g[a]] < 0)
        throw PreconditionError("point set is not invariant");
  ActionImage out;
  out.target_degree = delta.size();
  out.points = delta;
  out.kernel = pointwise_stabilizer(G, delta);
  std::vector<Permutation> gens;
  for (const auto &g : G.strong_generators())
    gens.push_back(restrict_to(g, delta, local));
  out.image = PermGroup::build(delta.size(), gens, {}, G.order() / out.kernel.order());
  return out;
}

/// {g in G : block^g = block}, by backtrack over the chain of G.
inline PermGroup setwise_stabilizer(const PermGroup &G, const std::vector<Point> &block) {
  const std::size_t n = G.degree();
  std::vector<char> in(n, 0);
  for (Point p : block) {
    if (p < 0 || static_cast<std::size_t>(p) >= n)
      throw InputError("block point out of range");
    in[p] = 1;
  }
  bool invariant = true;
  for (const auto &g : G.generators())
    for (Point p : block)
      if (!in[g[p]])
        invariant = false;
  if (invariant)
    return G;
  std::vector<int> col(n * n, 2);
  for (std::size_t a = 0; a < n; ++a)
    col[a * n + a] = in[a];
  detail::ColorSearch s(G, col, col);
  return s.automorphisms();
}

/// G^delta := (G_{delta})^delta, for an arbitrary point set.
inline ActionImage restricted_action(const PermGroup &G, const std::vector<Point> &delta) {
  return restrict_to_invariant(setwise_stabilizer(G, delta), delta);
}

/// Smallest normal subgroup of G containing the seeds.
inline PermGroup normal_closure(const PermGroup &G, const std::vector<Permutation> &seeds) {
  for (const auto &s : seeds)
    if (!G.contains(s))
      throw PreconditionError("normal closure seed is not in the group");
  PermGroup N(G.degree());
  std::vector<Permutation> queue;
  for (const auto &s : seeds)
    if (N.add_generator(s))
      queue.push_back(s);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto &g : G.generators()) {
      Permutation c = queue[i].conjugate_by(g);
      if (N.add_generator(c))
        queue.push_back(std::move(c));
    }
  return N;
}

inline PermGroup derived_subgroup(const PermGroup &G) {
  std::vector<Permutation> comms;
  const auto &gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  return normal_closure(G, comms);
}

/// G = D_0 > D_1 > ... ending at the trivial group (solvable) or at a perfect
/// group (the last entry then equals its own derived subgroup).
inline std::vector<PermGroup> derived_series(const PermGroup &G) {
  std::vector<PermGroup> s{G};
  while (!s.back().is_trivial()) {
    PermGroup d = derived_subgroup(s.back());
    if (d.order() == s.back().order())
      break;
    s.push_back(std::move(d));
  }
  return s;
}

inline bool is_solvable(const PermGroup &G) { return derived_series(G).back().is_trivial(); }

inline bool is_abelian(const PermGroup &G) {
  const auto &g = G.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g[i] * g[j] != g[j] * g[i])
        return false;
  return true;
}

inline bool is_normal_subgroup(const PermGroup &N, const PermGroup &G) {
  if (!G.contains_group(N))
    return false;
  for (const auto &n : N.generators())
    for (const auto &g : G.generators())
      if (!N.contains(n.conjugate_by(g)))
        return false;
  return true;
}

inline PermGroup join(const PermGroup &A, const std::vector<Permutation> &extra) {
  std::vector<Permutation> gens = A.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return PermGroup(A.degree(), gens);
}

} // namespace twoclosure
