#include "support/support.hpp"

#include "gt/errors.hpp"
#include "gt/formats.hpp"
#include "gt/reeng/case.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace gt;
using Role = RuleBuilder::Role;
using gt::testing::canon;
using gt::testing::describe;

namespace {

const Rule& case_rule(std::string_view name) {
  for (const auto& r : reeng::case_transformation().rules)
    if (r.name == name) return r;
  throw std::runtime_error("no rule " + std::string(name));
}

std::vector<std::string> describe_all(const std::vector<Match>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(describe(m));
  return out;
}

NodeId add_class(InstanceGraph& g, const std::string& name, bool abstract = false) {
  const NodeId c = g.create_node("Class");
  g.set_attribute(c, "name", Value(name));
  g.set_attribute(c, "abstract", Value(abstract));
  return c;
}

} // namespace

TEST(Matcher, InitMatchesTheStateClass) {
  InstanceGraph g(reeng::case_metamodel());
  add_class(g, "Idle");
  const NodeId state = add_class(g, "State", true);
  add_class(g, "Busy");
  add_class(g, "Helper");
  const auto ms = find_matches(g, case_rule("init"));
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].nodes, std::vector<NodeId>{state});
  EXPECT_EQ(ms[0].params.at("class"), Binding(state));
}

TEST(Matcher, EmptyLhsHasOneMatch) {
  const auto mm = gt::testing::test_metamodel();
  const Rule r = RuleBuilder(mm, "empty").node("x", "B", Role::Create).build();
  InstanceGraph g(mm);
  EXPECT_EQ(find_matches(g, r).size(), 1u);
  g.create_node("C");
  const auto ms = find_matches(g, r);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_TRUE(ms[0].nodes.empty());
}

TEST(Matcher, CreateStateBlockedByEquallyNamedState) {
  InstanceGraph g(reeng::case_metamodel());
  const NodeId c = add_class(g, "Idle");
  const NodeId m = g.create_node("StateMachine");
  const ParamMap pre{{"class", c}, {"sm", m}};
  EXPECT_EQ(find_matches(g, case_rule("createState"), pre).size(), 1u);
  const NodeId s = g.create_node("State");
  g.set_attribute(s, "name", Value("Idle"));
  g.add_edge(m, "states", s);
  EXPECT_TRUE(find_matches(g, case_rule("createState"), pre).empty());
}

TEST(Matcher, CreateStateSkipsAbstractClasses) {
  InstanceGraph g(reeng::case_metamodel());
  const NodeId c = add_class(g, "Base", true);
  const NodeId m = g.create_node("StateMachine");
  EXPECT_TRUE(find_matches(g, case_rule("createState"), {{"class", c}, {"sm", m}}).empty());
}

TEST(Matcher, NotTrueIsFalse) {
  const auto mm = gt::testing::test_metamodel();
  InstanceGraph g(mm);
  g.create_node("B");
  const Rule r = RuleBuilder(mm, "r").node("a", "B").condition(Condition::negate(Condition::always())).build();
  EXPECT_TRUE(find_matches(g, r).empty());
  Match empty;
  EXPECT_FALSE(check_condition(g, *Condition::negate(Condition::always()), empty));
  EXPECT_TRUE(check_condition(g, *Condition::always(), empty));
}

TEST(Matcher, OrOfTwoNacsMatchesBruteForce) {
  const auto mm = gt::testing::test_metamodel();
  InstanceGraph g(mm);
  const NodeId b1 = g.create_node("B");
  const NodeId b2 = g.create_node("B");
  const NodeId c1 = g.create_node("C");
  const NodeId c2 = g.create_node("C");
  const NodeId d = g.create_node("D");
  g.add_edge(b1, "next", c1);
  g.add_edge(c1, "peer", c2);
  g.add_edge(d, "items", b2);
  g.set_attribute(c2, "n", Value(2));

  RuleBuilder b(mm, "r");
  b.node("a", "A");
  RuleBuilder::GraphSpec nac1{{{"a", "", {}, {}}, {"x", "C", {}, {}}}, {{"a", "next", "x"}}};
  AttrPattern two;
  two.name = "n";
  two.kind = AttrPattern::Kind::Constant;
  two.constant = Value(2);
  RuleBuilder::GraphSpec nac2{{{"a", "", {}, {}}, {"y", "C", {two}, {}}}, {{"a", "peer", "y"}}};
  b.condition(Condition::either(Condition::negate(b.graph_condition(nac1)), Condition::negate(b.graph_condition(nac2))));
  const Rule r = b.build();

  const auto got = find_matches(g, r);
  EXPECT_EQ(describe_all(got), describe_all(gt::testing::brute_force_matches(g, r, {})));
  // b1 has a next edge, but no peer with n=2, so it matches; c1 has a peer
  // with n=2 and no next edge, so it matches too.
  EXPECT_EQ(got.size(), 4u);
  (void)b2, (void)d;
}

TEST(Matcher, UnknownParameterOrDanglingNodeRejected) {
  const auto mm = gt::testing::test_metamodel();
  InstanceGraph g(mm);
  const Rule r = RuleBuilder(mm, "r").param("x").node("a", "B").bind("a", "x").build();
  EXPECT_THROW(find_matches(g, r, {{"nope", Value(1)}}), MatchError);
  EXPECT_THROW(find_matches(g, r, {{"x", NodeId(77)}}), MatchError);
}

TEST(Matcher, ParamBindsThenCompares) {
  const auto mm = gt::testing::test_metamodel();
  InstanceGraph g(mm);
  for (int n : {1, 2, 1}) g.set_attribute(g.create_node("B"), "n", Value(n));
  const Rule r = RuleBuilder(mm, "r")
                     .param("v")
                     .node("a", "B")
                     .attr_param("a", "n", "v")
                     .node("b", "B")
                     .attr_param("b", "n", "v")
                     .build();
  const auto ms = find_matches(g, r);
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[0].nodes, (std::vector<NodeId>{NodeId(1), NodeId(3)}));
  EXPECT_EQ(ms[0].params.at("v"), Binding(Value(1)));
  EXPECT_EQ(find_matches(g, r, {{"v", Value(2)}}).size(), 0u);
}

TEST(Matcher, NonInjectiveAllowsSharing) {
  const auto mm = gt::testing::test_metamodel();
  InstanceGraph g(mm);
  g.create_node("B");
  g.create_node("B");
  RuleBuilder b(mm, "r");
  b.node("a", "B").node("b", "B");
  EXPECT_EQ(find_matches(g, b.build()).size(), 2u);
  EXPECT_EQ(find_matches(g, b.injective(false).build()).size(), 4u);
}

// ---------------------------------------------------------------------------

TEST(MatcherProperty, AgreesWithBruteForce) {
  gt::testing::Rng rng(424242);
  int cases = 0, nonempty = 0, with_conditions = 0;
  for (int trial = 0; cases < 1500; ++trial) {
    const InstanceGraph g = gt::testing::random_graph(rng, 8);
    const auto rr = gt::testing::random_rule(rng, g, 4);
    const Rule& r = rr.rule;
    ++cases;
    if (r.condition->kind() != Condition::Kind::True) ++with_conditions;
    const auto expected = gt::testing::brute_force_matches(g, r, rr.pre);
    const auto got = find_matches(g, r, rr.pre);
    if (!expected.empty()) ++nonempty;
    ASSERT_EQ(describe_all(got), describe_all(expected)) << "trial " << trial << "\n" << canon(g);
    if (r.injective)
      for (const auto& m : got) {
        auto nodes = m.nodes;
        std::sort(nodes.begin(), nodes.end());
        ASSERT_EQ(std::adjacent_find(nodes.begin(), nodes.end()), nodes.end());
      }
    for (const auto& m : got)
      for (std::size_t i = 0; i < m.nodes.size(); ++i)
        ASSERT_TRUE(g.metamodel().conforms(g.type_of(m.nodes[i]), r.lhs.nodes[i].type));
  }
  // The generator must exercise non-trivial cases.
  EXPECT_GT(nonempty, 200);
  EXPECT_GT(with_conditions, 300);
}

TEST(MatcherProperty, PreBindingIsMonotone) {
  gt::testing::Rng rng(5150);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const InstanceGraph g = gt::testing::random_graph(rng, 7);
    auto rr = gt::testing::random_rule(rng, g, 4);
    if (rr.pre.empty()) continue;
    ++checked;
    const auto with = find_matches(g, rr.rule, rr.pre);
    const auto without = describe_all(find_matches(g, rr.rule, {}));
    for (const auto& m : with)
      ASSERT_NE(std::find(without.begin(), without.end(), describe(m)), without.end()) << "trial " << trial;
  }
  EXPECT_GT(checked, 50);
}

TEST(MatcherProperty, Deterministic) {
  gt::testing::Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const InstanceGraph g = gt::testing::random_graph(rng, 8);
    const auto rr = gt::testing::random_rule(rng, g, 4);
    const InstanceGraph copy = parse_canonical(canon(g), g.metamodel_ptr());
    ASSERT_EQ(describe_all(find_matches(g, rr.rule, rr.pre)), describe_all(find_matches(copy, rr.rule, rr.pre)));
  }
}

TEST(MatcherProperty, FirstMatchIsFirstOfEnumeration) {
  gt::testing::Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const InstanceGraph g = gt::testing::random_graph(rng, 8);
    const auto rr = gt::testing::random_rule(rng, g, 3);
    const auto all = find_matches(g, rr.rule, rr.pre);
    const auto first = find_first_match(g, rr.rule, rr.pre);
    ASSERT_EQ(first.has_value(), !all.empty());
    if (first) ASSERT_EQ(describe(*first), describe(all.front()));
  }
}
