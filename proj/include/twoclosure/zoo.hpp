#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twoclosure/structure.hpp"

namespace twoclosure {

/// Where an entry's expected closure comes from.
enum class ExpectedBasis {
  theory,  // a known closure: Sym(p) for AGL1(p), the group itself when 2-closed
  oracle,  // only the brute-force oracle knows it
};

struct ZooEntry {
  std::string name;
  PermGroup group;
  std::optional<BigInt> expected_order; // closure order when known in advance
  bool expect_self = false;             // closure equals the group
  ExpectedBasis basis = ExpectedBasis::oracle;
};

namespace zoo {

inline Permutation shift_mult(std::size_t n, long a, long b) {
  std::vector<Point> img(n);
  for (std::size_t x = 0; x < n; ++x)
    img[x] = static_cast<Point>((a * static_cast<long>(x) + b) % static_cast<long>(n));
  return Permutation(std::move(img));
}

inline int least_primitive_root(int p) {
  if (p == 2)
    return 1;
  for (int g = 2;; ++g) {
    long x = 1;
    int ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1)
      return g;
  }
}

inline PermGroup cyclic(std::size_t n) { return PermGroup(n, {shift_mult(n, 1, 1)}); }

inline PermGroup dihedral(std::size_t n) {
  return PermGroup(n, {shift_mult(n, 1, 1), shift_mult(n, static_cast<long>(n) - 1, 0)});
}

/// The subgroup of AGL1(p) of order p*d, d | p-1.
inline PermGroup affine_subgroup(int p, int d) {
  std::vector<Permutation> gens{shift_mult(p, 1, 1)};
  if (d > 1) {
    long g = 1;
    const int r = least_primitive_root(p);
    for (int k = 0; k < (p - 1) / d; ++k)
      g = g * r % p;
    gens.push_back(shift_mult(p, g, 0));
  }
  return PermGroup(p, gens);
}

inline PermGroup agl1(int p) { return affine_subgroup(p, p - 1); }

/// A on blocks of size deg(A), B permuting the deg(B) blocks.
inline PermGroup wreath(const PermGroup &A, const PermGroup &B) {
  const std::size_t m = A.degree(), k = B.degree(), n = m * k;
  std::vector<Permutation> gens;
  for (const auto &a : A.generators()) {
    std::vector<Point> img(n);
    for (std::size_t p = 0; p < n; ++p)
      img[p] = static_cast<Point>(p < m ? a[static_cast<Point>(p)] : p);
    gens.emplace_back(std::move(img));
  }
  for (const auto &b : B.generators()) {
    std::vector<Point> img(n);
    for (std::size_t p = 0; p < n; ++p)
      img[p] = static_cast<Point>(b[static_cast<Point>(p / m)] * m + p % m);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, gens);
}

/// Independent actions on disjoint point sets.
inline PermGroup direct_product(const std::vector<PermGroup> &parts) {
  std::size_t n = 0;
  for (const auto &P : parts)
    n += P.degree();
  std::vector<Permutation> gens;
  std::size_t off = 0;
  for (const auto &P : parts) {
    for (const auto &g : P.generators()) {
      std::vector<Point> img(n);
      for (std::size_t p = 0; p < n; ++p)
        img[p] = static_cast<Point>(p);
      for (std::size_t x = 0; x < P.degree(); ++x)
        img[off + x] = static_cast<Point>(off + g[static_cast<Point>(x)]);
      gens.emplace_back(std::move(img));
    }
    off += P.degree();
  }
  return PermGroup(n, gens);
}

/// Generator-wise concatenation: the i-th generators of all parts act
/// together. Parts must have the same number of generators.
inline PermGroup diagonal(const std::vector<std::vector<Permutation>> &parts) {
  std::size_t n = 0;
  for (const auto &P : parts)
    n += P.front().degree();
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < parts.front().size(); ++i) {
    std::vector<Point> img;
    img.reserve(n);
    std::size_t off = 0;
    for (const auto &P : parts) {
      for (std::size_t x = 0; x < P[i].degree(); ++x)
        img.push_back(static_cast<Point>(off + P[i][static_cast<Point>(x)]));
      off += P[i].degree();
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, gens);
}

/// C_m x C_k acting regularly on m*k points.
inline PermGroup regular_product(std::size_t m, std::size_t k) {
  std::vector<Point> a(m * k), b(m * k);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      a[x * k + y] = static_cast<Point>(((x + 1) % m) * k + y);
      b[x * k + y] = static_cast<Point>(x * k + (y + 1) % k);
    }
  return PermGroup(m * k, {Permutation(a), Permutation(b)});
}

inline std::vector<Permutation> gens_of(const PermGroup &G) { return G.generators(); }

} // namespace zoo

/// Deterministic supersolvable test groups of degree at most max_degree.
/// Names are stable; nothing here depends on the order groups are visited.
inline std::vector<ZooEntry> generate_zoo(std::size_t max_degree) {
  if (max_degree < 4)
    throw PreconditionError("max_degree must be at least 4");
  std::vector<ZooEntry> out;
  auto add = [&](std::string name, PermGroup G, std::optional<BigInt> order, bool self,
                 ExpectedBasis basis) {
    if (G.degree() > max_degree)
      return;
    if (self)
      order = G.order();
    out.push_back({std::move(name), std::move(G), order, self, basis});
  };
  auto self = [&](std::string name, PermGroup G) {
    add(std::move(name), std::move(G), std::nullopt, true, ExpectedBasis::theory);
  };
  auto oracle = [&](std::string name, PermGroup G) {
    add(std::move(name), std::move(G), std::nullopt, false, ExpectedBasis::oracle);
  };
  using namespace zoo;
  const auto N = [](std::size_t n) { return std::to_string(n); };

  add("trivial_deg4", trivial_group(4), BigInt(1), true, ExpectedBasis::theory);
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_degree, 16); ++n)
    self("C" + N(n) + "_regular", cyclic(n));
  for (std::size_t n = 3; n <= std::min<std::size_t>(max_degree, 12); ++n)
    oracle("D" + N(2 * n) + "_deg" + N(n), dihedral(n));

  for (int p : {3, 5, 7, 11, 13}) {
    const std::string P = std::to_string(p);
    add("AGL1(" + P + ")", agl1(p), p >= 5 ? std::optional<BigInt>(factorial(p)) : std::nullopt,
        p == 3, ExpectedBasis::theory);
    for (int d = 2; d < p - 1; ++d)
      if ((p - 1) % d == 0)
        self("F" + N(static_cast<std::size_t>(p * d)) + "_in_AGL1(" + P + ")", affine_subgroup(p, d));
  }

  oracle("C2wrC2_deg4", wreath(cyclic(2), cyclic(2)));
  oracle("C3wrC2_deg6", wreath(cyclic(3), cyclic(2)));
  oracle("C2wrC4_deg8", wreath(cyclic(2), cyclic(4)));
  oracle("C4wrC2_deg8", wreath(cyclic(4), cyclic(2)));
  oracle("C2wrC2wrC2_deg8", wreath(wreath(cyclic(2), cyclic(2)), cyclic(2)));
  oracle("C3wrC3_deg9", wreath(cyclic(3), cyclic(3)));
  oracle("C5wrC2_deg10", wreath(cyclic(5), cyclic(2)));
  oracle("D8wrC2_deg8", wreath(dihedral(4), cyclic(2)));

  // diagonal actions on equivalent orbits (the twisted one relabels by x -> 2x+1)
  oracle("S3_diag_deg6", diagonal({gens_of(agl1(3)), gens_of(agl1(3))}));
  oracle("C3_diag_deg6", diagonal({gens_of(cyclic(3)), gens_of(cyclic(3))}));
  oracle("C4_diag_deg8", diagonal({gens_of(cyclic(4)), gens_of(cyclic(4))}));
  oracle("C2_diag_deg6", diagonal({gens_of(cyclic(2)), gens_of(cyclic(2)), gens_of(cyclic(2))}));
  oracle("AGL1(5)_diag_deg10", diagonal({gens_of(agl1(5)), gens_of(agl1(5))}));
  oracle("F10_diag_deg10", diagonal({gens_of(affine_subgroup(5, 2)), gens_of(affine_subgroup(5, 2))}));
  oracle("C5_diag_deg10", diagonal({gens_of(cyclic(5)), gens_of(cyclic(5))}));
  oracle("AGL1(5)_twisted_diag_deg10",
         diagonal({{shift_mult(5, 1, 1), shift_mult(5, 2, 0)}, {shift_mult(5, 1, 2), shift_mult(5, 2, 4)}}));

  // direct products on disjoint orbits
  oracle("C2xC3_deg5", direct_product({cyclic(2), cyclic(3)}));
  oracle("S3xS3_deg6", direct_product({agl1(3), agl1(3)}));
  oracle("S3xC4_deg7", direct_product({agl1(3), cyclic(4)}));
  oracle("AGL1(5)xC2_deg7", direct_product({agl1(5), cyclic(2)}));
  oracle("AGL1(5)xS3_deg8", direct_product({agl1(5), agl1(3)}));
  oracle("C3xC5_deg8", direct_product({cyclic(3), cyclic(5)}));
  oracle("C2xC2xC2_deg6", direct_product({cyclic(2), cyclic(2), cyclic(2)}));
  oracle("F10xC5_deg10", direct_product({affine_subgroup(5, 2), cyclic(5)}));
  oracle("AGL1(7)xC3_deg10", direct_product({agl1(7), cyclic(3)}));

  // intransitive mixtures: a group next to one of its quotients
  oracle("S3_with_C2_quotient_deg5", diagonal({gens_of(agl1(3)), {Permutation::identity(2), shift_mult(2, 1, 1)}}));
  oracle("D10_with_C2_quotient_deg7",
         diagonal({gens_of(dihedral(5)), {Permutation::identity(2), shift_mult(2, 1, 1)}}));
  oracle("AGL1(5)_with_C4_quotient_deg9",
         diagonal({gens_of(agl1(5)), {Permutation::identity(4), shift_mult(4, 1, 1)}}));
  oracle("AGL1(5)_with_C2_quotient_deg7",
         diagonal({gens_of(agl1(5)), {Permutation::identity(2), shift_mult(2, 1, 1)}}));
  oracle("AGL1(7)_with_C3_quotient_deg10",
         diagonal({gens_of(agl1(7)), {Permutation::identity(3), shift_mult(3, 1, 1)}}));
  oracle("C6_on_2+3_deg5", diagonal({gens_of(cyclic(2)), gens_of(cyclic(3))}));

  // beyond the oracle
  oracle("AGL1(11)_diag_deg22", diagonal({gens_of(agl1(11)), gens_of(agl1(11))}));
  oracle("C5wrC5_deg25", wreath(cyclic(5), cyclic(5)));
  oracle("AGL1(5)_diag_x8_deg40", diagonal(std::vector<std::vector<Permutation>>(8, gens_of(agl1(5)))));
  oracle("C5wrC5wrC2_deg50", wreath(wreath(cyclic(5), cyclic(5)), cyclic(2)));
  oracle("C5wrC5wrC4_deg100", wreath(wreath(cyclic(5), cyclic(5)), cyclic(4)));
  oracle("C2wrC2wrC2wrC2wrC2wrC2wrC2_deg128",
         wreath(wreath(wreath(wreath(wreath(wreath(cyclic(2), cyclic(2)), cyclic(2)), cyclic(2)), cyclic(2)),
                       cyclic(2)),
                cyclic(2)));
  oracle("AGL1(5)_diag_x40_deg200", diagonal(std::vector<std::vector<Permutation>>(40, gens_of(agl1(5)))));
  oracle("C5wrC5wr(C4xC2)_deg200", wreath(wreath(cyclic(5), cyclic(5)), regular_product(4, 2)));
  oracle("C5wrC5wrC4_x_AGL1(5)_diag_x20_deg200",
         direct_product({wreath(wreath(cyclic(5), cyclic(5)), cyclic(4)),
                         diagonal(std::vector<std::vector<Permutation>>(20, gens_of(agl1(5))))}));
  return out;
}

inline std::optional<ZooEntry> find_zoo_entry(const std::string &name, std::size_t max_degree = 200) {
  for (auto &e : generate_zoo(max_degree))
    if (e.name == name)
      return e;
  return std::nullopt;
}

} // namespace twoclosure
