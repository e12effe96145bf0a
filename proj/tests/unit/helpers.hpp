#pragma once

#include <set>
#include <vector>

#include "oracle.hpp"
#include "twoclosure/group.hpp"

namespace th {

using twoclosure::Permutation;
using twoclosure::PermGroup;
using twoclosure::Point;

inline oracle::Perm raw(const Permutation &p) {
  return oracle::Perm(p.images().begin(), p.images().end());
}

inline Permutation perm(const oracle::Perm &p) {
  return Permutation(std::vector<Point>(p.begin(), p.end()));
}

inline std::vector<oracle::Perm> raw_gens(const PermGroup &G) {
  std::vector<oracle::Perm> out;
  for (const auto &g : G.generators())
    out.push_back(raw(g));
  return out;
}

inline std::set<oracle::Perm> elements_by_closure(const PermGroup &G) {
  return oracle::closure(G.degree(), raw_gens(G));
}

/// x -> a*x + b (mod n) on {0..n-1}.
inline Permutation affine(int n, int a, int b) {
  std::vector<Point> img(n);
  for (int x = 0; x < n; ++x)
    img[x] = static_cast<Point>(((static_cast<long>(a) * x + b) % n + n) % n);
  return Permutation(std::move(img));
}

inline Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

inline PermGroup group(std::size_t n, std::vector<Permutation> gens) {
  return PermGroup(n, std::move(gens));
}

inline PermGroup agl1(int p) {
  int g = 2;
  while (true) { // least primitive root
    long x = 1;
    int ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1)
      break;
    ++g;
  }
  return group(p, {affine(p, 1, 1), affine(p, g, 0)});
}

inline PermGroup sym(std::size_t n) {
  std::vector<Point> c(n);
  for (std::size_t i = 0; i < n; ++i)
    c[i] = static_cast<Point>(i);
  if (n < 2)
    return PermGroup(n);
  return group(n, {cyc(n, {{0, 1}}), cyc(n, {c})});
}

inline PermGroup cyclic(std::size_t n) {
  std::vector<Point> c(n);
  for (std::size_t i = 0; i < n; ++i)
    c[i] = static_cast<Point>(i);
  return group(n, {cyc(n, {c})});
}

} // namespace th
