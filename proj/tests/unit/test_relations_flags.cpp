#include <gtest/gtest.h>

#include "helpers.hpp"
#include "twoclosure/flags.hpp"
#include "twoclosure/orbitals.hpp"

using namespace twoclosure;
using namespace th;

namespace {

EquivRelation rel(std::size_t n, std::vector<std::vector<Point>> classes) {
  return EquivRelation::from_classes(n, classes);
}

// Invariance and normality by element enumeration.
bool oracle_normal_relation(const std::set<oracle::Perm> &G, const std::vector<int> &lab) {
  std::size_t n = lab.size();
  std::vector<oracle::Perm> kernel;
  for (const auto &g : G) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if ((lab[a] == lab[b]) != (lab[g[a]] == lab[g[b]]))
          return false;
    bool fixes = true;
    for (std::size_t a = 0; a < n && fixes; ++a)
      fixes = lab[a] == lab[g[a]];
    if (fixes)
      kernel.push_back(g);
  }
  // orbits of the kernel are exactly the classes
  for (std::size_t a = 0; a < n; ++a) {
    std::set<int> o;
    for (const auto &k : kernel)
      o.insert(k[a]);
    for (std::size_t b = 0; b < n; ++b)
      if ((lab[a] == lab[b]) != (o.count(static_cast<int>(b)) > 0))
        return false;
  }
  return true;
}

void all_partitions(std::size_t n, const std::function<void(const std::vector<int> &)> &f) {
  std::vector<int> lab(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == n) {
      f(lab);
      return;
    }
    for (int l = 0; l <= used; ++l) {
      lab[i] = l;
      rec(i + 1, l == used ? used + 1 : used);
    }
  };
  rec(0, 0);
}

std::vector<std::pair<std::string, PermGroup>> flag_groups() {
  std::vector<std::pair<std::string, PermGroup>> g;
  g.emplace_back("C4", cyclic(4));
  g.emplace_back("C6", cyclic(6));
  g.emplace_back("C8", cyclic(8));
  g.emplace_back("AGL1(5)", agl1(5));
  g.emplace_back("AGL1(7)", agl1(7));
  g.emplace_back("D8", group(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})}));
  g.emplace_back("C2wrC3", group(6, {cyc(6, {{0, 1}}), cyc(6, {{0, 2, 4}, {1, 3, 5}})}));
  g.emplace_back("C3wrC2", group(6, {cyc(6, {{0, 1, 2}}), cyc(6, {{0, 3}, {1, 4}, {2, 5}})}));
  g.emplace_back("S3xC2 on 5", group(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1}}), cyc(5, {{3, 4}})}));
  g.emplace_back("C2^3 on 8", group(8, {cyc(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}),
                                        cyc(8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}}),
                                        cyc(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})}));
  g.emplace_back("trivial on 3", PermGroup(3));
  return g;
}

} // namespace

TEST(Relations, Examples) {
  auto e = rel(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(restrict(e, {0, 2, 3}).to_string(), "{0} {1,2}");
  auto c4 = cyclic(4);
  EXPECT_TRUE(is_normal_equivalence(rel(4, {{0, 2}, {1, 3}}), c4));
  EXPECT_FALSE(is_invariant(rel(4, {{0, 1}, {2, 3}}), c4));
  EXPECT_THROW(is_normal_equivalence(rel(4, {{0, 1}, {2, 3}}), c4), PreconditionError);
  EXPECT_THROW(is_invariant(EquivRelation::identity(3), c4), InputError);
  // invariant but not normal: blocks of S3 x 1 on 6 points acting diagonally
  auto d = group(6, {cyc(6, {{0, 2, 4}, {1, 3, 5}}), cyc(6, {{0, 2}, {1, 3}})});
  auto blocks = rel(6, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_TRUE(is_invariant(blocks, d));
  EXPECT_FALSE(is_normal_equivalence(blocks, d));
}

TEST(Relations, QuotientRoundTrip) {
  auto inner = rel(6, {{0, 3}, {1, 4}, {2, 5}});
  auto outer = rel(6, {{0, 1, 3, 4}, {2, 5}});
  auto q = lift_to_quotient(outer, inner);
  EXPECT_EQ(q.degree(), 3u);
  EXPECT_EQ(expand_from_quotient(inner, q), outer);
  EXPECT_THROW(lift_to_quotient(inner, outer), PreconditionError);
}

TEST(TwoOrbits, Examples) {
  EXPECT_EQ(two_orbits(sym(5)).num_colors(), 2);
  EXPECT_EQ(two_orbits(agl1(5)).num_colors(), 2);
  EXPECT_EQ(two_orbits(PermGroup(2)).num_colors(), 4);
  EXPECT_EQ(two_orbits(cyclic(5)).num_colors(), 5);
  EXPECT_THROW(same_two_orbits(two_orbits(cyclic(3)), two_orbits(cyclic(4))), InputError);
}

TEST(TwoOrbitsProperty, MatchesPairOrbitOracle) {
  for (const auto &[name, G] : flag_groups()) {
    SCOPED_TRACE(name);
    auto col = two_orbits(G);
    auto lab = oracle::pair_orbits(G.degree(), raw_gens(G));
    std::vector<int> mine(col.cells().begin(), col.cells().end());
    EXPECT_TRUE(oracle::same_partition(mine, lab));
  }
}

TEST(BruteForceClosure, Examples) {
  EXPECT_EQ(brute_force_closure(agl1(5)).order(), 120);
  EXPECT_EQ(brute_force_closure(cyclic(5)).order(), 5);
  auto f10 = group(5, {affine(5, 1, 1), affine(5, 4, 0)});
  EXPECT_EQ(brute_force_closure(f10).order(), 10);
  EXPECT_EQ(brute_force_closure(agl1(7)).order(), 5040);
  EXPECT_THROW(brute_force_closure(cyclic(13)), PreconditionError);
}

TEST(BruteForceClosureProperty, AgreesWithPlainBacktrackAndIsIdempotent) {
  auto groups = flag_groups();
  groups.emplace_back("F10", group(5, {affine(5, 1, 1), affine(5, 4, 0)}));
  groups.emplace_back("C7:C3", group(7, {affine(7, 1, 1), affine(7, 2, 0)}));
  for (const auto &[name, G] : groups) {
    SCOPED_TRACE(name);
    auto C = brute_force_closure(G);
    auto lab = oracle::pair_orbits(G.degree(), raw_gens(G));
    auto expect = oracle::label_automorphisms(G.degree(), lab);
    EXPECT_EQ(C.order(), BigInt(expect.size()));
    for (const auto &x : expect) {
      EXPECT_TRUE(C.contains(perm(x)));
    }
    EXPECT_TRUE(C.contains_group(G));
    EXPECT_TRUE(same_two_orbits(two_orbits(C), two_orbits(G)));
    EXPECT_EQ(brute_force_closure(C).order(), C.order());
  }
}

TEST(Flags, MaximalNormalFlagShape) {
  auto F = maximal_normal_flag(agl1(5));
  ASSERT_EQ(F.members.size(), 2u);
  EXPECT_TRUE(F.members[1] == EquivRelation::full(5));
  auto c4 = maximal_normal_flag(cyclic(4));
  ASSERT_EQ(c4.members.size(), 3u);
  EXPECT_EQ(c4.members[1].to_string(), "{0,2} {1,3}");
  auto triv = maximal_normal_flag(PermGroup(3));
  EXPECT_EQ(triv.length(), 0u);
}

TEST(FlagsProperty, MaximalNormalFlagIsMaximal) {
  for (const auto &[name, G] : flag_groups()) {
    SCOPED_TRACE(name);
    auto F = maximal_normal_flag(G);
    auto v = check_flag(F, G, true);
    EXPECT_TRUE(v.ok(true, true)) << v.reason;
    EXPECT_TRUE(v.maximality_checked);
    // independent check: no normal relation strictly between neighbours
    auto elems = elements_by_closure(G);
    all_partitions(G.degree(), [&](const std::vector<int> &lab) {
      auto e = EquivRelation::from_labels(lab);
      for (std::size_t i = 0; i + 1 < F.members.size(); ++i) {
        if (F.members[i].strictly_refines(e) && e.strictly_refines(F.members[i + 1])) {
          EXPECT_FALSE(oracle_normal_relation(elems, lab)) << e.to_string();
        }
      }
    });
  }
}

TEST(Flags, ValidateRejectsBadChains) {
  auto c4 = cyclic(4);
  Flag bad;
  bad.degree = 4;
  bad.members = {EquivRelation::identity(4), EquivRelation::full(4)};
  EXPECT_TRUE(validate_flag(bad, c4, true, false));
  EXPECT_FALSE(validate_flag(bad, c4, true, true));
  bad.members = {EquivRelation::identity(4), rel(4, {{0, 1}, {2, 3}}), EquivRelation::full(4)};
  EXPECT_FALSE(validate_flag(bad, c4, false, false));
  bad.members = {EquivRelation::identity(4)};
  EXPECT_FALSE(validate_flag(bad, c4, false, false));
}

TEST(Flags, InducedFlags) {
  auto G = cyclic(8);
  auto F = maximal_normal_flag(G);
  auto on_set = induced_flag_on_set(F, {0, 4});
  EXPECT_EQ(on_set.members.size(), 2u);
  auto q = induced_flag_on_quotient(F, F.members[1]);
  EXPECT_EQ(q.degree, 4u);
  EXPECT_EQ(q.members.size(), F.members.size() - 1);
  EXPECT_TRUE(q.members.front().is_identity());
  EXPECT_THROW(induced_flag_on_quotient(F, rel(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}})),
               PreconditionError);
}

// K = product of the transitive constituents of G keeps every member of a
// maximal G-flag normal, which is the setting the extension is built for.
PermGroup constituent_product(const PermGroup &G) {
  const std::size_t n = G.degree();
  const EquivRelation orbits = G.orbit_partition();
  std::vector<Permutation> gens;
  for (const auto &orb : orbits.classes())
    for (const auto &g : G.generators()) {
      std::vector<Point> img(n);
      for (std::size_t a = 0; a < n; ++a)
        img[a] = static_cast<Point>(a);
      for (Point a : orb)
        img[a] = g.images()[a];
      Permutation h(img);
      if (!h.is_identity())
        gens.push_back(h);
    }
  return PermGroup(n, gens);
}

TEST(Flags, ExtensionExamples) {
  // C3 x C3 on two 3-point orbits, flag of the diagonal C3
  auto diag = group(6, {cyc(6, {{0, 1, 2}, {3, 4, 5}})});
  auto K = group(6, {cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4, 5}})});
  auto F = maximal_normal_flag(diag);
  ASSERT_EQ(F.members.size(), 2u);
  auto E = extend_to_maximal_k_flag(K, F);
  ASSERT_EQ(E.members.size(), 3u);
  EXPECT_EQ(E.members[1].to_string(), "{0} {1} {2} {3,4,5}");
  EXPECT_TRUE(validate_flag(E, K, true, true));
  // transitive and already maximal: unchanged
  auto A = agl1(7);
  EXPECT_EQ(extend_to_maximal_k_flag(A, maximal_normal_flag(A)), maximal_normal_flag(A));
  // trivial group
  auto T = PermGroup(3);
  EXPECT_EQ(extend_to_maximal_k_flag(T, maximal_normal_flag(T)).length(), 0u);
  // not a normal flag of the group
  Flag bad;
  bad.degree = 4;
  bad.members = {EquivRelation::identity(4), rel(4, {{0, 1}, {2, 3}}), EquivRelation::full(4)};
  EXPECT_THROW(extend_to_maximal_k_flag(cyclic(4), bad), PreconditionError);
}

TEST(FlagsProperty, ExtensionIsMaximalAndAgreesOnOrbits) {
  auto groups = flag_groups();
  groups.emplace_back("diag C3 on 6", group(6, {cyc(6, {{0, 1, 2}, {3, 4, 5}})}));
  groups.emplace_back("diag C2 on 3 pairs",
                      group(6, {cyc(6, {{0, 1}, {2, 3}, {4, 5}})}));
  groups.emplace_back("C2 x diag on 7", group(7, {cyc(7, {{0, 1}, {2, 3}}), cyc(7, {{4, 5, 6}, {2, 3}})}));
  for (const auto &[name, G] : groups) {
    SCOPED_TRACE(name);
    auto F = maximal_normal_flag(G);
    auto K = constituent_product(G);
    ASSERT_TRUE(validate_flag(F, K, true, false));
    auto E = extend_to_maximal_k_flag(K, F);
    auto v = check_flag(E, K, true);
    EXPECT_TRUE(v.ok(true, true)) << v.reason;
    for (const auto &e : F.members)
      EXPECT_GE(E.index_of(e), 0);
    const EquivRelation orbits = K.orbit_partition();
    for (const auto &orb : orbits.classes())
      EXPECT_EQ(induced_flag_on_set(E, orb), induced_flag_on_set(F, orb));
  }
}
