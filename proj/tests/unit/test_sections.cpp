#include <gtest/gtest.h>

#include "helpers.hpp"
#include "twoclosure/sections.hpp"

using namespace twoclosure;
using namespace th;

namespace {

// The single section of G for the flag 1 < orbits.
Section whole(const PermGroup &G) {
  Flag F;
  F.degree = G.degree();
  F.members = {EquivRelation::identity(G.degree()), G.orbit_partition()};
  auto s = sections_of(G, F);
  EXPECT_EQ(s.size(), 1u);
  return s.front();
}

// Two copies of AGL1(5) on 5+5 points, the second relabelled by x -> 2x+1.
PermGroup twisted_diagonal_agl1_5() {
  auto lift = [](const Permutation &g) {
    std::vector<Point> img(10);
    auto t = [](int x) { return (2 * x + 1) % 5; };
    for (int x = 0; x < 5; ++x) {
      img[x] = g[x];
      img[5 + t(x)] = static_cast<Point>(5 + t(g[x]));
    }
    return Permutation(img);
  };
  return group(10, {lift(affine(5, 1, 1)), lift(affine(5, 2, 0))});
}

} // namespace

TEST(Sections, Examples) {
  auto c4 = cyclic(4);
  auto s = sections_of(c4, maximal_normal_flag(c4));
  ASSERT_EQ(s.size(), 2u);
  // kernel <(0 2)(1 3)> moves both e_0-classes pairs; then C2 on the two halves
  EXPECT_EQ(s[0].degree(), 4u);
  EXPECT_EQ(s[0].orbits.size(), 2u);
  EXPECT_EQ(s[1].degree(), 2u);
  for (const auto &S : s)
    EXPECT_EQ(S.group.order(), 2);
  auto a = agl1(5);
  auto sa = sections_of(a, maximal_normal_flag(a));
  ASSERT_EQ(sa.size(), 1u);
  EXPECT_EQ(sa[0].group.order(), 20);
  EXPECT_TRUE(sections_of(PermGroup(4), maximal_normal_flag(PermGroup(4))).empty());
  Flag bad;
  bad.degree = 4;
  bad.members = {EquivRelation::identity(4), EquivRelation::from_classes(4, {{0, 1}, {2, 3}}),
                 EquivRelation::full(4)};
  EXPECT_THROW(sections_of(c4, bad), PreconditionError);
}

TEST(Sections, Plainness) {
  auto diag = group(6, {cyc(6, {{0, 1, 2}, {3, 4, 5}})});
  auto ps = plain_structure(whole(diag));
  ASSERT_EQ(ps.classes.size(), 1u);
  EXPECT_FALSE(ps.unique);
  EXPECT_EQ(ps.bijections.at({0, 1}).size(), 3u);

  auto prod = group(6, {cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4, 5}})});
  auto pp = plain_structure(whole(prod));
  EXPECT_EQ(pp.classes.size(), 2u);
  EXPECT_TRUE(pp.bijections.empty());

  auto tw = plain_structure(whole(twisted_diagonal_agl1_5()));
  ASSERT_EQ(tw.classes.size(), 1u);
  EXPECT_TRUE(tw.unique);
  const auto &f = tw.bijection(0, 1);
  for (int x = 0; x < 5; ++x)
    EXPECT_EQ(f[x], 5 + (2 * x + 1) % 5);
  EXPECT_EQ(tw.bijection(1, 0)[5 + 1], 0);

  // C4 on four points coupled to its C2 quotient: two colors, neither a bijection
  auto np = group(6, {cyc(6, {{0, 1, 2, 3}, {4, 5}})});
  EXPECT_FALSE(is_plain(whole(np)));
  EXPECT_THROW(plain_structure(whole(np)), PreconditionError);

  Section id;
  id.classes = {0, 1, 2};
  id.group = PermGroup(3);
  id.orbits = {{0}, {1}, {2}};
  EXPECT_TRUE(is_plain(id));
}

TEST(Sections, Feasibility) {
  EXPECT_TRUE(is_feasible(whole(agl1(5))));
  EXPECT_FALSE(is_feasible(whole(cyclic(5))));
  auto c4 = cyclic(4);
  for (const auto &S : sections_of(c4, maximal_normal_flag(c4))) {
    EXPECT_FALSE(is_feasible(S));
    EXPECT_TRUE(section_orbit_sizes_prime(S));
  }
  EXPECT_TRUE(section_orbit_sizes_prime(whole(agl1(5))));
  auto mixed = group(5, {cyc(5, {{0, 1}}), cyc(5, {{2, 3, 4}})});
  EXPECT_FALSE(section_orbit_sizes_prime(whole(mixed)));
}

// Same prime orbit size and solvable constituents give a plain section, and
// every plain bijection commutes with the group.
TEST(SectionsProperty, SamePrimeSizeIsPlainAndBijectionsCommute) {
  std::vector<std::pair<std::string, PermGroup>> groups;
  groups.emplace_back("diag C5", group(10, {cyc(10, {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}})}));
  groups.emplace_back("C5xC5", group(10, {cyc(10, {{0, 1, 2, 3, 4}}), cyc(10, {{5, 6, 7, 8, 9}})}));
  groups.emplace_back("twisted AGL1(5)", twisted_diagonal_agl1_5());
  groups.emplace_back("diag C3 x3", group(9, {cyc(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}})}));
  groups.emplace_back("C3 diag+free", group(9, {cyc(9, {{0, 1, 2}, {3, 4, 5}}), cyc(9, {{6, 7, 8}})}));
  groups.emplace_back("C7:C3 diag",
                      group(14, {Permutation([] {
                                   std::vector<Point> v(14);
                                   for (int x = 0; x < 7; ++x) {
                                     v[x] = (x + 1) % 7;
                                     v[7 + x] = 7 + (x + 1) % 7;
                                   }
                                   return v;
                                 }()),
                                 Permutation([] {
                                   std::vector<Point> v(14);
                                   for (int x = 0; x < 7; ++x) {
                                     v[x] = (2 * x) % 7;
                                     v[7 + x] = 7 + (2 * x) % 7;
                                   }
                                   return v;
                                 }())}));
  for (const auto &[name, G] : groups) {
    SCOPED_TRACE(name);
    auto S = whole(G);
    ASSERT_TRUE(section_orbit_sizes_prime(S));
    auto ps = try_plain_structure(S);
    ASSERT_TRUE(ps.has_value());
    auto elems = G.elements();
    for (const auto &[pair, fs] : ps->bijections)
      for (const auto &f : fs)
        for (const auto &g : elems)
          for (Point a : S.orbits[pair.first])
            EXPECT_EQ(f[g[a]], g[f[a]]);
    // the relation is an equivalence: symmetric
    for (const auto &[pair, fs] : ps->bijections)
      EXPECT_TRUE(ps->bijections.count({pair.second, pair.first}));
  }
}
