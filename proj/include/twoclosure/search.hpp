#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "twoclosure/group.hpp"

namespace twoclosure::detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Backtrack over the stabilizer chain of a group H, looking for elements g
/// with X(a,b) == Y(a^g, b^g) for all points a, b.
///
/// Nodes are pruned by pairwise color consistency of the fixed base images and
/// by comparing the multisets of point signatures (each point's colors towards
/// the fixed points). When the signatures of X become discrete the only
/// possible element of the subtree is read off directly.
class ColorSearch {
public:
  ColorSearch(const PermGroup &h, std::span<const int> x, std::span<const int> y)
      : H_(h), n_(h.degree()), X_(x), Y_(y), base_(h.base()) {
    const std::size_t k = base_.size();
    sigX_.assign(k + 1, {});
    sortedX_.assign(k + 1, {});
    discrete_.assign(k + 1, false);
    sigX_[0] = initial_signature(X_);
    for (std::size_t j = 0; j <= k; ++j) {
      if (j > 0)
        sigX_[j] = refine(sigX_[j - 1], X_, base_[j - 1]);
      sortedX_[j] = sigX_[j];
      std::sort(sortedX_[j].begin(), sortedX_[j].end());
      discrete_[j] = std::adjacent_find(sortedX_[j].begin(), sortedX_[j].end()) ==
                     sortedX_[j].end();
    }
    sigY_.assign(k + 1, {});
    sigY_[0] = initial_signature(Y_);
  }

  std::uint64_t nodes() const { return nodes_; }

  /// First element of H (in search order) mapping X onto Y.
  std::optional<Permutation> find_one() {
    images_.clear();
    if (!same_multiset(sigY_[0], sortedX_[0]))
      return std::nullopt;
    return dfs(0, Permutation(n_));
  }

  /// All elements of H preserving X (X and Y must coincide). `known`, if
  /// given, is a subgroup of the answer; its elements are never searched for.
  PermGroup automorphisms(const PermGroup *known = nullptr) {
    const std::size_t k = base_.size();
    std::vector<Permutation> found, seeded;
    if (known && !known->is_trivial())
      seeded = PermGroup::build(n_, known->strong_generators(), base_, known->order())
                   .strong_generators();
    std::vector<std::size_t> orbit_sizes(k, 1);
    for (std::size_t ii = k; ii-- > 0;) {
      const auto &L = H_.levels()[ii];
      // union-find over points of the basic orbit under the gens found so far
      std::vector<int> parent(n_, -1);
      for (Point p : L.orbit)
        parent[p] = p;
      std::vector<char> failed(n_, 0);
      auto find = [&](int v) {
        while (parent[v] != v)
          v = parent[v] = parent[parent[v]];
        return v;
      };
      auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
          return;
        if (a > b)
          std::swap(a, b);
        parent[b] = a;
        failed[a] = failed[a] || failed[b];
      };
      auto absorb = [&](const Permutation &g) {
        for (Point p : L.orbit)
          unite(p, g[p]);
      };
      for (const auto &g : found)
        absorb(g);
      for (const auto &g : seeded) {
        bool fixes = true;
        for (std::size_t a = 0; a < ii && fixes; ++a)
          fixes = g[base_[a]] == base_[a];
        if (fixes)
          absorb(g);
      }
      std::vector<Point> targets(L.orbit.begin(), L.orbit.end());
      std::sort(targets.begin(), targets.end());
      for (Point gamma : targets) {
        if (gamma == L.base)
          continue;
        int r = find(gamma);
        if (r == find(L.base) || failed[r])
          continue;
        auto g = search_at(ii, gamma);
        if (g) {
          found.push_back(*g);
          absorb(*g);
        } else {
          failed[find(gamma)] = 1;
        }
      }
      std::size_t cnt = 0;
      int root = find(L.base);
      for (Point p : L.orbit)
        if (find(p) == root)
          ++cnt;
      orbit_sizes[ii] = cnt;
    }
    BigInt ord = 1;
    for (auto s : orbit_sizes)
      ord *= static_cast<long long>(s);
    found.insert(found.end(), seeded.begin(), seeded.end());
    return PermGroup::build(n_, found, base_, ord);
  }

private:
  std::vector<std::uint64_t> initial_signature(std::span<const int> M) const {
    std::vector<std::uint64_t> s(n_);
    std::vector<int> row(n_), col(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        row[b] = M[a * n_ + b];
        col[b] = M[b * n_ + a];
      }
      std::sort(row.begin(), row.end());
      std::sort(col.begin(), col.end());
      std::uint64_t h = mix64(static_cast<std::uint64_t>(M[a * n_ + a]));
      for (int c : row)
        h = mix64(h ^ static_cast<std::uint64_t>(c));
      h = mix64(h ^ 0x51ed27u);
      for (int c : col)
        h = mix64(h ^ static_cast<std::uint64_t>(c));
      s[a] = h;
    }
    return s;
  }

  std::vector<std::uint64_t> refine(const std::vector<std::uint64_t> &prev,
                                    std::span<const int> M, Point fixed) const {
    std::vector<std::uint64_t> s(n_);
    const std::size_t f = static_cast<std::size_t>(fixed);
    for (std::size_t a = 0; a < n_; ++a) {
      std::uint64_t c1 = static_cast<std::uint64_t>(M[f * n_ + a]);
      std::uint64_t c2 = static_cast<std::uint64_t>(M[a * n_ + f]);
      s[a] = mix64(prev[a] ^ mix64(c1 * 0x100000001b3ull + c2 + (a == f ? 0x7777u : 0)));
    }
    return s;
  }

  static bool same_multiset(std::vector<std::uint64_t> v, const std::vector<std::uint64_t> &sorted) {
    std::sort(v.begin(), v.end());
    return v == sorted;
  }

  int xc(Point a, Point b) const { return X_[static_cast<std::size_t>(a) * n_ + b]; }
  int yc(Point a, Point b) const { return Y_[static_cast<std::size_t>(a) * n_ + b]; }

  bool is_isomorphism(const Permutation &g) const {
    for (std::size_t a = 0; a < n_; ++a) {
      Point ga = g[static_cast<Point>(a)];
      for (std::size_t b = 0; b < n_; ++b)
        if (xc(static_cast<Point>(a), static_cast<Point>(b)) != yc(ga, g[static_cast<Point>(b)]))
          return false;
    }
    return true;
  }

  // Checks and installs the image gamma for base point j; fills sigY_[j+1].
  bool accept_image(std::size_t j, Point gamma) {
    Point b = base_[j];
    if (sigY_[j][gamma] != sigX_[j][b])
      return false;
    if (xc(b, b) != yc(gamma, gamma))
      return false;
    for (std::size_t a = 0; a < j; ++a) {
      if (images_[a] == gamma)
        return false;
      if (xc(base_[a], b) != yc(images_[a], gamma) || xc(b, base_[a]) != yc(gamma, images_[a]))
        return false;
    }
    sigY_[j + 1] = refine(sigY_[j], Y_, gamma);
    return same_multiset(sigY_[j + 1], sortedX_[j + 1]);
  }

  std::optional<Permutation> discrete_candidate(std::size_t j) {
    std::unordered_map<std::uint64_t, Point> where;
    where.reserve(n_ * 2);
    for (std::size_t b = 0; b < n_; ++b)
      where.emplace(sigY_[j][b], static_cast<Point>(b));
    std::vector<Point> img(n_);
    std::vector<char> used(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      auto it = where.find(sigX_[j][a]);
      if (it == where.end() || used[it->second])
        return std::nullopt;
      used[it->second] = 1;
      img[a] = it->second;
    }
    Permutation g(std::move(img));
    for (std::size_t a = 0; a < j; ++a)
      if (g[base_[a]] != images_[a])
        return std::nullopt;
    if (!H_.contains(g) || !is_isomorphism(g))
      return std::nullopt;
    return g;
  }

  std::optional<Permutation> dfs(std::size_t j, const Permutation &right) {
    ++nodes_;
    if (j == base_.size()) {
      if (is_isomorphism(right))
        return right;
      return std::nullopt;
    }
    if (discrete_[j])
      return discrete_candidate(j);
    const auto &L = H_.levels()[j];
    std::vector<Point> cands(L.orbit.begin(), L.orbit.end());
    std::sort(cands.begin(), cands.end(),
              [&](Point a, Point b) { return right[a] < right[b]; });
    for (Point delta : cands) {
      Point gamma = right[delta];
      if (!accept_image(j, gamma))
        continue;
      images_.push_back(gamma);
      auto r = dfs(j + 1, L.transversal(delta) * right);
      images_.pop_back();
      if (r)
        return r;
    }
    return std::nullopt;
  }

  // Element of H^{(i)} mapping base_[i] to gamma and preserving X.
  std::optional<Permutation> search_at(std::size_t i, Point gamma) {
    images_.assign(base_.begin(), base_.begin() + static_cast<long>(i));
    for (std::size_t a = 0; a <= i; ++a)
      sigY_[a] = sigX_[a];
    std::optional<Permutation> r;
    if (accept_image(i, gamma)) {
      images_.push_back(gamma);
      r = dfs(i + 1, H_.levels()[i].transversal(gamma));
    }
    images_.clear();
    return r;
  }

  const PermGroup &H_;
  std::size_t n_;
  std::span<const int> X_, Y_;
  std::vector<Point> base_;
  std::vector<std::vector<std::uint64_t>> sigX_, sortedX_, sigY_;
  std::vector<char> discrete_;
  std::vector<Point> images_;
  std::uint64_t nodes_ = 0;
};

} // namespace twoclosure::detail
