#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "twoclosure.hpp"

using namespace twoclosure;
using namespace th;

namespace {

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST(GroupText, ParsesCommentsAndBlankLines) {
  auto g = parse_group_text("# AGL1(5)\n\ndegree 5\n  1 2 3 4 0  \n# x -> 2x\n0 2 4 1 3\n\n");
  EXPECT_EQ(g.degree, 5u);
  ASSERT_EQ(g.generators.size(), 2u);
  EXPECT_EQ(g.generators[1], affine(5, 2, 0));
  EXPECT_EQ(PermGroup(g.degree, g.generators).order(), 20);
  EXPECT_EQ(parse_group("degree 3\n").order(), 1);
}

TEST(GroupText, RejectsMalformedInput) {
  EXPECT_THROW(parse_group_text(""), InputError);
  EXPECT_THROW(parse_group_text("degre 3\n0 1 2\n"), InputError);
  EXPECT_THROW(parse_group_text("degree 3\n0 1\n"), InputError);
  EXPECT_THROW(parse_group_text("degree 3\n0 1 3\n"), InputError);
  EXPECT_THROW(parse_group_text("degree 3\n0 0 1\n"), InputError);
  EXPECT_THROW(parse_group_text("degree 3\n0 -1 2\n"), InputError);
  EXPECT_THROW(parse_group_text("degree 3\n0 x 2\n"), InputError);
  try {
    parse_group_text("degree 4\n\n1 0 2\n");
    FAIL();
  } catch (const InputError &e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 3:", 0), 0u);
  }
}

TEST(GroupTextProperty, RoundTripKeepsGeneratorLists) {
  for (const auto &e : generate_zoo(200)) {
    SCOPED_TRACE(e.name);
    auto text = format_group(e.group);
    auto back = parse_group(text);
    EXPECT_EQ(back.generators(), e.group.generators());
    EXPECT_EQ(format_group(back), text);
  }
}

TEST(GroupText, SampleFiles) {
  const std::string dir = TWOCLOSURE_DATA_DIR;
  EXPECT_EQ(parse_group(slurp(dir + "/agl1_5.txt")).order(), 20);
  EXPECT_EQ(parse_group(slurp(dir + "/c5wrc2.txt")).order(), 50);
  EXPECT_EQ(parse_group(slurp(dir + "/d8.txt")).order(), 8);
  EXPECT_THROW(parse_group(slurp(dir + "/malformed.txt")), InputError);
  EXPECT_THROW(parse_group(slurp(dir + "/not_a_bijection.txt")), InputError);
}

TEST(PartitionText, ParseAndFormat) {
  auto e = parse_partition("{2,3} {0, 1} {4}", 5);
  EXPECT_EQ(e.to_string(), "{0,1} {2,3} {4}");
  EXPECT_EQ(parse_partition(e.to_string(), 5), e);
  EXPECT_THROW(parse_partition("{0,1} {1,2}", 3), InputError);
  EXPECT_THROW(parse_partition("{0,1}", 3), InputError);
  EXPECT_THROW(parse_partition("{0,1} 2", 3), InputError);
  EXPECT_THROW(parse_partition("{0,1} {2", 3), InputError);
  EXPECT_THROW(parse_partition("{0,5} {1,2}", 3), InputError);
}

TEST(Report, ClosureReportIsStable) {
  auto r = two_closure(agl1(5));
  auto a = closure_report(r).str();
  EXPECT_EQ(a, closure_report(two_closure(agl1(5))).str());
  EXPECT_NE(a.find("input.order=20\n"), std::string::npos);
  EXPECT_NE(a.find("output.order=120\n"), std::string::npos);
  EXPECT_NE(a.find("section.0.certificate=1\n"), std::string::npos);
  EXPECT_NE(a.find("verification.oracle_check=skipped\n"), std::string::npos);
}

TEST(Zoo, Examples) {
  auto agl = find_zoo_entry("AGL1(5)");
  ASSERT_TRUE(agl);
  EXPECT_EQ(*agl->expected_order, 120);
  auto c7 = find_zoo_entry("C7_regular");
  ASSERT_TRUE(c7);
  EXPECT_TRUE(c7->expect_self);
  auto f10 = find_zoo_entry("F10_in_AGL1(5)");
  ASSERT_TRUE(f10);
  EXPECT_TRUE(f10->expect_self);
  EXPECT_EQ(f10->group.order(), 10);
  auto w = find_zoo_entry("C5wrC2_deg10");
  ASSERT_TRUE(w);
  EXPECT_EQ(two_closure(w->group).output.order(), brute_force_closure(w->group).order());
  EXPECT_THROW(generate_zoo(3), PreconditionError);
}

TEST(ZooProperty, EntriesAreSupersolvableAndNamedOnce) {
  auto zoo = generate_zoo(200);
  std::set<std::string> names;
  std::size_t small = 0;
  for (const auto &e : zoo) {
    SCOPED_TRACE(e.name);
    EXPECT_TRUE(names.insert(e.name).second);
    EXPECT_TRUE(is_supersolvable(e.group));
    small += e.group.degree() <= 10;
  }
  EXPECT_GE(small, 40u);
  // a smaller bound gives a prefix-closed selection with the same names
  for (const auto &e : generate_zoo(10))
    EXPECT_TRUE(names.count(e.name));
}

TEST(ZooProperty, ExpectedClosuresAgreeWithTheOracle) {
  for (const auto &e : generate_zoo(10)) {
    SCOPED_TRACE(e.name);
    auto C = brute_force_closure(e.group);
    if (e.expected_order)
      EXPECT_EQ(C.order(), *e.expected_order);
    if (e.expect_self)
      EXPECT_TRUE(e.group.contains_group(C));
  }
}

// The pipeline agrees with the oracle, verifies itself and is idempotent.
TEST(ClosureProperty, OracleEquivalenceAndIdempotence) {
  for (const auto &e : generate_zoo(10)) {
    SCOPED_TRACE(e.name);
    auto r = two_closure(e.group, {.oracle = true});
    auto C = brute_force_closure(e.group);
    EXPECT_EQ(r.output.order(), C.order());
    EXPECT_TRUE(C.contains_group(r.output));
    EXPECT_TRUE(r.output.contains_group(C));
    EXPECT_TRUE(r.verification.two_equivalent);
    EXPECT_TRUE(r.verification.contains_input);
    EXPECT_TRUE(r.verification.factor_check);
    EXPECT_TRUE(verify_two_equivalent(e.group, r.output));
    if (is_supersolvable(r.output)) {
      auto again = two_closure(r.output).output;
      EXPECT_EQ(again.order(), r.output.order());
    } else {
      EXPECT_EQ(brute_force_closure(r.output).order(), r.output.order());
    }
  }
}

// Each section yields either no certificate or one element per 3-cycle, and
// the reason for an empty one is consistent with the section.
TEST(ClosureProperty, CertificateDichotomy) {
  for (const auto &e : generate_zoo(40)) {
    SCOPED_TRACE(e.name);
    auto r = two_closure(e.group);
    ASSERT_EQ(r.sections.size(), r.certificates.size());
    for (const auto &c : r.certificates) {
      if (c.empty_reason == EmptyReason::none)
        EXPECT_EQ(c.X.size(), c.xbar.size());
      else
        EXPECT_TRUE(c.X.empty());
      for (const auto &y : c.X)
        EXPECT_FALSE(r.relative_closure.contains(y));
    }
    for (const auto &s : r.sections)
      if (!s.feasible)
        EXPECT_EQ(s.empty_reason, EmptyReason::not_feasible);
  }
}

TEST(FactorCheck, AlternatingOrders) {
  // 2520 = 7!/2, 20160 = 8!/2 with 8 not prime
  EXPECT_TRUE(factor_check(sym(7)));
  EXPECT_FALSE(factor_check(sym(8)));
}
