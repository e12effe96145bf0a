#pragma once

#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "twoclosure/equivalence.hpp"
#include "twoclosure/perm.hpp"

namespace twoclosure {

/// A permutation group given by generators, carrying a base and strong
/// generating set with explicit transversals.
///
/// The chain is built by deterministic Schreier-Sims. When the group order is
/// known in advance (base changes, kernels, majorants) a seeded random variant
/// is used instead; it stops exactly when the chain reaches the known order,
/// which certifies completeness, so the result is exact and reproducible.
class PermGroup {
public:
  struct Level {
    Point base = 0;
    std::vector<std::size_t> gens; // indices into strong generators
    std::vector<Point> orbit;
    std::vector<int> pos; // point -> index in orbit, or -1
    std::vector<Permutation> u;    // u[k] maps base to orbit[k]
    std::vector<Permutation> uinv; // inverses of u
    std::vector<std::vector<char>> checked;

    bool in_orbit(Point a) const { return pos[a] >= 0; }
    const Permutation &transversal(Point a) const { return u[pos[a]]; }
    const Permutation &transversal_inverse(Point a) const { return uinv[pos[a]]; }
  };

  PermGroup() = default;

  explicit PermGroup(std::size_t degree) : degree_(degree) {}

  PermGroup(std::size_t degree, std::vector<Permutation> gens)
      : PermGroup(build(degree, std::move(gens))) {}

  /// General constructor: optional base prefix (those points become the first
  /// base points in order) and optional known order.
  static PermGroup build(std::size_t degree, std::vector<Permutation> gens,
                         const std::vector<Point> &base_prefix = {},
                         const std::optional<BigInt> &known_order = std::nullopt) {
    PermGroup g(degree);
    for (auto &p : gens) {
      if (p.degree() != degree)
        throw InputError("generator degree " + std::to_string(p.degree()) +
                         " does not match group degree " + std::to_string(degree));
      if (!p.is_identity() &&
          std::find(g.gens_.begin(), g.gens_.end(), p) == g.gens_.end())
        g.gens_.push_back(std::move(p));
    }
    for (Point b : base_prefix)
      g.push_level(b);
    if (known_order)
      g.random_schreier_sims(*known_order);
    else
      g.deterministic_schreier_sims();
    return g;
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return gens_; }
  const std::vector<Permutation> &strong_generators() const { return strong_; }
  const std::vector<Level> &levels() const { return levels_; }
  std::size_t base_length() const { return levels_.size(); }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto &l : levels_)
      b.push_back(l.base);
    return b;
  }

  BigInt order() const {
    BigInt r = 1;
    for (const auto &l : levels_)
      r *= static_cast<long long>(l.orbit.size());
    return r;
  }

  bool is_trivial() const { return gens_.empty(); }

  /// Sifts `g` from level `start`; returns the residue and the level where
  /// sifting stopped (levels().size() if it ran through).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start = 0) const {
    for (std::size_t l = start; l < levels_.size(); ++l) {
      const Level &L = levels_[l];
      Point b = g[L.base];
      if (!L.in_orbit(b))
        return {std::move(g), l};
      g = g * L.transversal_inverse(b);
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation &p) const {
    if (p.degree() != degree_)
      throw InputError("degree mismatch in membership test");
    auto [h, l] = sift(p);
    return l == levels_.size() && h.is_identity();
  }

  bool contains_group(const PermGroup &h) const {
    for (const auto &g : h.generators())
      if (!contains(g))
        return false;
    return true;
  }

  /// Adds a generator, extending the chain; returns false if already a member.
  bool add_generator(const Permutation &g) {
    if (contains(g))
      return false;
    gens_.push_back(g);
    insert_strong(g, 0);
    deterministic_loop();
    return true;
  }

  /// The stabilizer G^{(l)} of the first l base points, sharing this chain.
  PermGroup chain_tail(std::size_t l) const {
    PermGroup t(degree_);
    std::vector<long> remap(strong_.size(), -1);
    for (std::size_t k = l; k < levels_.size(); ++k) {
      Level L = levels_[k];
      for (auto &gi : L.gens) {
        if (remap[gi] < 0) {
          remap[gi] = static_cast<long>(t.strong_.size());
          t.strong_.push_back(strong_[gi]);
        }
        gi = static_cast<std::size_t>(remap[gi]);
      }
      L.checked.clear();
      t.levels_.push_back(std::move(L));
    }
    if (!t.levels_.empty())
      for (auto gi : t.levels_.front().gens)
        t.gens_.push_back(t.strong_[gi]);
    t.mark_complete();
    return t;
  }

  /// Restricts to the first `n2` points; every strong generator must map
  /// {0..n2-1} to itself and act trivially on the remaining points.
  PermGroup truncated(std::size_t n2) const {
    PermGroup t(n2);
    auto cut = [n2](const Permutation &p) {
      std::vector<Point> img(p.images().begin(), p.images().begin() + n2);
      return Permutation(std::move(img));
    };
    for (const auto &s : strong_)
      t.strong_.push_back(cut(s));
    for (const auto &lv : levels_) {
      if (static_cast<std::size_t>(lv.base) >= n2)
        throw PreconditionError("truncation would drop a base point");
      Level L;
      L.base = lv.base;
      L.gens = lv.gens;
      L.orbit = lv.orbit;
      L.pos.assign(lv.pos.begin(), lv.pos.begin() + n2);
      for (const auto &u : lv.u)
        L.u.push_back(cut(u));
      for (const auto &u : lv.uinv)
        L.uinv.push_back(cut(u));
      t.levels_.push_back(std::move(L));
    }
    for (const auto &g : gens_) {
      auto c = cut(g);
      if (!c.is_identity())
        t.gens_.push_back(std::move(c));
    }
    t.mark_complete();
    return t;
  }

  /// Calls f on every element. Intended for small groups only.
  void for_each_element(const std::function<void(const Permutation &)> &f) const {
    Permutation id(degree_);
    enumerate(0, id, f);
  }

  std::vector<Permutation> elements() const {
    std::vector<Permutation> out;
    for_each_element([&](const Permutation &p) { out.push_back(p); });
    return out;
  }

  /// Orbit partition of the generators.
  EquivRelation orbit_partition() const {
    std::vector<int> parent(degree_);
    for (std::size_t i = 0; i < degree_; ++i)
      parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto &g : gens_)
      for (std::size_t a = 0; a < degree_; ++a) {
        int x = find(static_cast<int>(a)), y = find(g[static_cast<Point>(a)]);
        if (x != y)
          parent[std::max(x, y)] = std::min(x, y);
      }
    std::vector<int> lab(degree_);
    for (std::size_t a = 0; a < degree_; ++a)
      lab[a] = find(static_cast<int>(a));
    return EquivRelation::from_labels(lab);
  }

  std::vector<Point> orbit_of(Point a) const {
    std::vector<char> seen(degree_, 0);
    std::vector<Point> orb{a};
    seen[a] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto &g : gens_) {
        Point b = g[orb[i]];
        if (!seen[b]) {
          seen[b] = 1;
          orb.push_back(b);
        }
      }
    std::sort(orb.begin(), orb.end());
    return orb;
  }

  bool is_transitive() const {
    return degree_ <= 1 || orbit_of(0).size() == degree_;
  }

private:
  void mark_complete() {
    for (auto &L : levels_)
      L.checked.clear();
  }

  void push_level(Point b) {
    for (const auto &L : levels_)
      if (L.base == b)
        throw InputError("repeated base point");
    Level L;
    L.base = b;
    L.pos.assign(degree_, -1);
    L.orbit.push_back(b);
    L.pos[b] = 0;
    L.u.emplace_back(degree_);
    L.uinv.emplace_back(degree_);
    levels_.push_back(std::move(L));
  }

  void extend_orbit(Level &L) {
    for (std::size_t a = 0; a < L.orbit.size(); ++a) {
      Point beta = L.orbit[a];
      for (auto gi : L.gens) {
        const Permutation &s = strong_[gi];
        Point g = s[beta];
        if (L.pos[g] < 0) {
          L.pos[g] = static_cast<int>(L.orbit.size());
          L.orbit.push_back(g);
          L.u.push_back(L.u[a] * s);
          L.uinv.push_back(L.u.back().inverse());
        }
      }
    }
  }

  Point first_moved(const Permutation &h) const {
    for (std::size_t a = 0; a < degree_; ++a)
      if (h[static_cast<Point>(a)] != static_cast<Point>(a))
        return static_cast<Point>(a);
    return -1;
  }

  /// Adds `h` (which fixes the base points of levels < from) as a strong
  /// generator of levels from..j, where j is the first level whose base point
  /// h moves; appends a level if h fixes every base point.
  std::size_t insert_strong(const Permutation &h, std::size_t from) {
    std::size_t j = from;
    while (j < levels_.size() && h[levels_[j].base] == levels_[j].base)
      ++j;
    if (j == levels_.size())
      push_level(first_moved(h));
    std::size_t idx = strong_.size();
    strong_.push_back(h);
    for (std::size_t l = from; l <= j; ++l) {
      levels_[l].gens.push_back(idx);
      extend_orbit(levels_[l]);
    }
    return j;
  }

  void deterministic_schreier_sims() {
    for (const auto &g : gens_)
      if (!contains(g))
        insert_strong(g, 0);
    deterministic_loop();
  }

  void deterministic_loop() {
    long i = static_cast<long>(levels_.size()) - 1;
    while (i >= 0) {
      Level &L = levels_[i];
      bool jumped = false;
      for (std::size_t a = 0; a < L.orbit.size() && !jumped; ++a) {
        if (L.checked.size() <= a)
          L.checked.resize(a + 1);
        auto &row = L.checked[a];
        if (row.size() < L.gens.size())
          row.resize(L.gens.size(), 0);
        for (std::size_t s = 0; s < L.gens.size(); ++s) {
          if (row[s])
            continue;
          row[s] = 1;
          const Permutation &g = strong_[L.gens[s]];
          Point beta = L.orbit[a];
          Point gamma = g[beta];
          Permutation sch = L.u[a] * g * L.transversal_inverse(gamma);
          if (sch.is_identity())
            continue;
          auto [h, j] = sift(std::move(sch), static_cast<std::size_t>(i) + 1);
          if (j < levels_.size() || !h.is_identity()) {
            std::size_t jj = insert_strong(h, static_cast<std::size_t>(i) + 1);
            i = static_cast<long>(jj);
            jumped = true;
            break;
          }
        }
      }
      if (!jumped)
        --i;
    }
  }

  void random_schreier_sims(const BigInt &target) {
    for (const auto &g : gens_) {
      auto [h, j] = sift(g);
      if (j < levels_.size() || !h.is_identity())
        insert_strong(h, 0);
    }
    if (gens_.empty()) {
      if (target != 1)
        throw InternalError("known order does not match trivial generator set");
      return;
    }
    std::mt19937_64 rng(0x2c1057a9u);
    std::vector<Permutation> pool;
    while (pool.size() < std::max<std::size_t>(10, gens_.size()))
      for (const auto &g : gens_)
        pool.push_back(g);
    Permutation acc(degree_);
    auto next = [&]() {
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      std::size_t i = pick(rng), j = pick(rng);
      while (j == i)
        j = pick(rng);
      if (rng() & 1)
        pool[i] = pool[i] * pool[j];
      else
        pool[i] = pool[i] * pool[j].inverse();
      acc = acc * pool[i];
      return acc;
    };
    for (int k = 0; k < 40; ++k)
      next();
    long stale = 0;
    while (order() < target) {
      auto [h, j] = sift(next());
      if (j < levels_.size() || !h.is_identity()) {
        insert_strong(h, 0);
        stale = 0;
      } else if (++stale > 20000) {
        throw InternalError("random Schreier-Sims failed to reach the known order");
      }
    }
    if (order() != target)
      throw InternalError("known order overshot during Schreier-Sims");
    mark_complete();
  }

  // Elements are u_{k-1} ... u_1 u_0 with u_l from the level-l transversal.
  void enumerate(std::size_t l, const Permutation &right,
                 const std::function<void(const Permutation &)> &f) const {
    if (l == levels_.size()) {
      f(right);
      return;
    }
    for (const auto &u : levels_[l].u)
      enumerate(l + 1, u * right, f);
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

} // namespace twoclosure
