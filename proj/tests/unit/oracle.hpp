#pragma once

// Brute-force reference computations for the unit tests. Everything here works
// on raw image vectors and avoids the library's stabilizer chains, so that a
// bug in the chain code cannot make an oracle agree with it.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline Perm compose(const Perm &a, const Perm &b) { // a then b
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = b[a[i]];
  return r;
}

inline Perm inverse(const Perm &a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[a[i]] = static_cast<int>(i);
  return r;
}

inline Perm identity(std::size_t n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

/// All elements of <gens>, by closing under right multiplication.
inline std::set<Perm> closure(std::size_t n, const std::vector<Perm> &gens,
                              std::size_t limit = 2000000) {
  std::set<Perm> seen{identity(n)};
  std::vector<Perm> queue{identity(n)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto &g : gens) {
      Perm h = compose(queue[i], g);
      if (seen.insert(h).second) {
        queue.push_back(h);
        if (seen.size() > limit)
          throw std::runtime_error("oracle closure too large");
      }
    }
  return seen;
}

/// Orbits of the group on ordered pairs, as an n*n label matrix.
inline std::vector<int> pair_orbits(std::size_t n, const std::vector<Perm> &gens) {
  std::vector<int> lab(n * n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n * n; ++s) {
    if (lab[s] >= 0)
      continue;
    std::vector<std::size_t> q{s};
    lab[s] = next;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (const auto &g : gens) {
        std::size_t a = q[i] / n, b = q[i] % n;
        std::size_t t = static_cast<std::size_t>(g[a]) * n + g[b];
        if (lab[t] < 0) {
          lab[t] = next;
          q.push_back(t);
        }
      }
    ++next;
  }
  return lab;
}

/// Every permutation of {0..n-1} preserving the labels, by plain
/// backtracking over all images (no group structure used). n <= 9.
inline std::vector<Perm> label_automorphisms(std::size_t n, const std::vector<int> &lab) {
  std::vector<Perm> out;
  Perm img(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t a) {
    if (a == n) {
      out.push_back(img);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c])
        continue;
      bool ok = lab[a * n + a] == lab[c * n + c];
      for (std::size_t b = 0; b < a && ok; ++b)
        ok = lab[a * n + b] == lab[c * n + img[b]] && lab[b * n + a] == lab[img[b] * n + c];
      if (!ok)
        continue;
      used[c] = 1;
      img[a] = static_cast<int>(c);
      rec(a + 1);
      used[c] = 0;
    }
    img[a] = -1;
  };
  rec(0);
  return out;
}

/// Whether two labellings of the same cells define the same partition.
inline bool same_partition(const std::vector<int> &a, const std::vector<int> &b) {
  if (a.size() != b.size())
    return false;
  std::map<int, int> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [it1, new1] = ab.emplace(a[i], b[i]);
    auto [it2, new2] = ba.emplace(b[i], a[i]);
    if (it1->second != b[i] || it2->second != a[i])
      return false;
  }
  return true;
}

/// All normal subgroups of a small group, each as an element set. Every
/// normal subgroup is a join of normal closures of conjugacy classes.
inline std::vector<std::set<Perm>> normal_subgroups(std::size_t n, const std::set<Perm> &G) {
  std::vector<Perm> elems(G.begin(), G.end());
  std::set<Perm> done;
  std::set<std::set<Perm>> found;
  std::vector<std::set<Perm>> cyc;
  for (const auto &x : elems) {
    if (done.count(x))
      continue;
    std::set<Perm> cls;
    for (const auto &g : elems)
      cls.insert(compose(compose(inverse(g), x), g));
    done.insert(cls.begin(), cls.end());
    auto N = closure(n, std::vector<Perm>(cls.begin(), cls.end()));
    if (found.insert(N).second)
      cyc.push_back(N);
  }
  // close the family under joins
  std::vector<std::set<Perm>> all(found.begin(), found.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      std::vector<Perm> seeds(all[i].begin(), all[i].end());
      seeds.insert(seeds.end(), cyc[j].begin(), cyc[j].end());
      auto J = closure(n, seeds);
      if (found.insert(J).second)
        all.push_back(J);
    }
  return all;
}

/// Supersolvability by searching for a chain of normal subgroups from 1 up to
/// G with prime-order steps. A cyclic step of composite order always splits
/// through its characteristic subgroups, so this is no restriction.
inline bool supersolvable_by_search(std::size_t n, const std::set<Perm> &G) {
  auto normals = normal_subgroups(n, G);
  std::sort(normals.begin(), normals.end(),
            [](const auto &a, const auto &b) { return a.size() < b.size(); });
  auto subset = [](const std::set<Perm> &a, const std::set<Perm> &b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  auto prime = [](std::size_t k) {
    if (k < 2)
      return false;
    for (std::size_t d = 2; d * d <= k; ++d)
      if (k % d == 0)
        return false;
    return true;
  };
  // reachable[i]: there is a prime-step normal chain from 1 to normals[i]
  std::vector<char> reach(normals.size(), 0);
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() == 1) {
      reach[i] = 1;
      continue;
    }
    for (std::size_t j = 0; j < i && !reach[i]; ++j)
      if (reach[j] && normals[i].size() % normals[j].size() == 0 &&
          prime(normals[i].size() / normals[j].size()) && subset(normals[j], normals[i]))
        reach[i] = 1;
  }
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (normals[i].size() == G.size())
      return reach[i];
  return false;
}

} // namespace oracle
