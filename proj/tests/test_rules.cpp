#include "support/support.hpp"

#include "gt/errors.hpp"
#include "gt/reeng/case.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace gt;
using Role = RuleBuilder::Role;

namespace {

const Rule& case_rule(std::string_view name) {
  const auto& t = reeng::case_transformation();
  for (const auto& r : t.rules)
    if (r.name == name) return r;
  throw std::runtime_error("no rule " + std::string(name));
}

std::vector<std::string> ids(const PatternGraph& g, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(g.nodes.at(i).id);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t errors(const std::vector<Diagnostic>& d) {
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](const Diagnostic& x) {
    return x.severity == Diagnostic::Severity::Error;
  }));
}

} // namespace

TEST(Classify, InitCreatesStateMachineAndPreservesClass) {
  const Rule& r = case_rule("init");
  const auto p = classify(r);
  EXPECT_EQ(ids(r.rhs, p.created_nodes), std::vector<std::string>{"m"});
  EXPECT_EQ(ids(r.lhs, p.preserved_nodes), std::vector<std::string>{"c"});
  EXPECT_TRUE(p.deleted_nodes.empty());
  EXPECT_EQ(r.rhs.nodes[p.created_nodes[0]].type, r.metamodel->type_id("StateMachine"));
}

TEST(Classify, IdentityRuleAllPreserved) {
  const auto mm = gt::testing::test_metamodel();
  const Rule r = RuleBuilder(mm, "identity").node("a", "B").node("b", "C").edge("a", "next", "b").build();
  const auto p = classify(r);
  EXPECT_EQ(p.preserved_nodes.size(), 2u);
  EXPECT_EQ(p.preserved_edges.size(), 1u);
  EXPECT_TRUE(p.created_nodes.empty() && p.deleted_nodes.empty());
  EXPECT_TRUE(p.created_edges.empty() && p.deleted_edges.empty());
}

TEST(Classify, UpdateActionDeletesTraceAndItsEdges) {
  const Rule& r = case_rule("updateAction");
  const auto p = classify(r);
  EXPECT_EQ(ids(r.lhs, p.deleted_nodes), std::vector<std::string>{"t"});
  ASSERT_EQ(p.deleted_edges.size(), 2u);
  for (auto e : p.deleted_edges) EXPECT_EQ(r.lhs.nodes[r.lhs.edges[e].src].id, "t");
  EXPECT_TRUE(p.created_nodes.empty());
}

TEST(Classify, MappingTypeMismatchFails) {
  const auto mm = gt::testing::test_metamodel();
  Rule r = RuleBuilder(mm, "r").node("a", "B").build();
  r.rhs.nodes[0].type = mm->type_id("C");
  EXPECT_THROW(classify(r), ModelError);
}

TEST(ValidateRule, CaseRulesAreClean) {
  const auto& t = reeng::case_transformation();
  for (const auto& r : t.rules) EXPECT_TRUE(validate_rule(r, *t.metamodel).empty()) << r.name;
}

TEST(ValidateRule, UndeclaredReferenceNamesNodeAndRef) {
  const auto mm = gt::testing::test_metamodel();
  const Rule r = RuleBuilder(mm, "r").node("a", "B").node("b", "C").edge("a", "bogus", "b").build();
  const auto d = validate_rule(r, *mm);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].severity, Diagnostic::Severity::Error);
  EXPECT_NE(d[0].message.find("'a'"), std::string::npos);
  EXPECT_NE(d[0].message.find("'bogus'"), std::string::npos);
}

TEST(ValidateRule, UnusedParameterIsWarning) {
  const auto mm = gt::testing::test_metamodel();
  const Rule r = RuleBuilder(mm, "r").param("unused").node("a", "B").build();
  const auto d = validate_rule(r, *mm);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].severity, Diagnostic::Severity::Warning);
  EXPECT_NE(d[0].message.find("unused"), std::string::npos);
}

TEST(ValidateRule, UndeclaredParameterIsError) {
  const auto mm = gt::testing::test_metamodel();
  const Rule r = RuleBuilder(mm, "r").node("a", "B").attr_param("a", "s", "p").build();
  EXPECT_EQ(errors(validate_rule(r, *mm)), 1u);
}

TEST(ValidateRule, AbstractCreationAndBadAttribute) {
  const auto mm = gt::testing::test_metamodel();
  const Rule r = RuleBuilder(mm, "r").node("a", "A", Role::Create).build();
  EXPECT_EQ(errors(validate_rule(r, *mm)), 1u);
  const Rule r2 = RuleBuilder(mm, "r2").node("d", "D").attr_const("d", "flag", Value(true)).build();
  EXPECT_EQ(errors(validate_rule(r2, *mm)), 1u);
  const Rule r3 = RuleBuilder(mm, "r3").node("b", "B").attr_const("b", "n", Value("text")).build();
  EXPECT_EQ(errors(validate_rule(r3, *mm)), 1u);
}

TEST(RuleBuilder, ForbidGroupsFormSeparateConditions) {
  const auto& r = case_rule("createState");
  // Two independent NACs combined with And.
  ASSERT_EQ(r.condition->kind(), Condition::Kind::And);
  EXPECT_EQ(r.condition->left().kind(), Condition::Kind::Not);
  EXPECT_EQ(r.condition->right().kind(), Condition::Kind::Not);
}

TEST(RuleBuilder, InvalidEdgeRolesRejected) {
  const auto mm = gt::testing::test_metamodel();
  EXPECT_THROW(RuleBuilder(mm, "r").node("a", "B", Role::Delete).node("b", "B", Role::Create).edge("a", "next", "b").build(),
               Error);
  EXPECT_THROW(RuleBuilder(mm, "r").node("a", "B").edge("a", "next", "zz").build(), Error);
  EXPECT_THROW(RuleBuilder(mm, "r").node("a", "B").node("a", "C"), Error);
}

TEST(RuleProperty, ClassifyIsPartition) {
  const auto mm = gt::testing::test_metamodel();
  gt::testing::Rng rng(99);
  const auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const char* const types[] = {"B", "C", "D"};
  const Role roles[] = {Role::Preserve, Role::Create, Role::Delete, Role::Forbid};
  int built = 0;
  for (int trial = 0; trial < 500; ++trial) {
    RuleBuilder b(mm, "r" + std::to_string(trial));
    const std::size_t n = 1 + pick(5);
    std::vector<Role> node_roles;
    for (std::size_t i = 0; i < n; ++i) {
      node_roles.push_back(roles[pick(4)]);
      b.node("n" + std::to_string(i), types[pick(3)], node_roles.back());
    }
    for (std::size_t e = 0, m = pick(6); e < m; ++e) {
      const auto s = pick(n), t = pick(n);
      const std::string st = "n" + std::to_string(s), tt = "n" + std::to_string(t);
      b.edge(st, "next", tt);
    }
    Rule r;
    try {
      r = b.build();
    } catch (const Error&) {
      continue; // invalid role combinations are rejected by the builder
    }
    ++built;
    const auto p = classify(r);
    std::multiset<std::size_t> lhs_n(p.preserved_nodes.begin(), p.preserved_nodes.end());
    lhs_n.insert(p.deleted_nodes.begin(), p.deleted_nodes.end());
    std::multiset<std::size_t> lhs_e(p.preserved_edges.begin(), p.preserved_edges.end());
    lhs_e.insert(p.deleted_edges.begin(), p.deleted_edges.end());
    std::multiset<std::size_t> rhs_n(p.created_nodes.begin(), p.created_nodes.end());
    std::multiset<std::size_t> rhs_e(p.created_edges.begin(), p.created_edges.end());
    // Every LHS element is exactly preserved or deleted; every RHS element is
    // either the image of a preserved one or created.
    for (std::size_t i = 0; i < r.lhs.nodes.size(); ++i) ASSERT_EQ(lhs_n.count(i), 1u);
    ASSERT_EQ(lhs_n.size(), r.lhs.nodes.size());
    for (std::size_t i = 0; i < r.lhs.edges.size(); ++i) ASSERT_EQ(lhs_e.count(i), 1u);
    ASSERT_EQ(lhs_e.size(), r.lhs.edges.size());
    ASSERT_EQ(rhs_n.size() + p.preserved_nodes.size(), r.rhs.nodes.size());
    ASSERT_EQ(rhs_e.size() + p.preserved_edges.size(), r.rhs.edges.size());
    for (auto i : p.preserved_nodes) {
      ASSERT_TRUE(r.mapping[i].has_value());
      ASSERT_EQ(rhs_n.count(*r.mapping[i]), 0u);
    }
    const auto node_count = static_cast<std::size_t>(std::count_if(node_roles.begin(), node_roles.end(), [](Role x) {
      return x != Role::Forbid;
    }));
    ASSERT_EQ(p.preserved_nodes.size() + p.deleted_nodes.size() + p.created_nodes.size(), node_count);
  }
  EXPECT_GT(built, 100);
}

TEST(RuleProperty, ApplicationLeavesRuleUnchanged) {
  const auto mm = gt::testing::test_metamodel();
  const Rule r = RuleBuilder(mm, "r")
                     .param("v")
                     .node("a", "B")
                     .attr_param("a", "n", "v")
                     .node("c", "C", Role::Create)
                     .edge("a", "next", "c")
                     .assign("c", "s", parse_expr("\"x\" + v"))
                     .build();
  const auto before = std::make_tuple(r.lhs.nodes.size(), r.rhs.nodes.size(), r.lhs.edges.size(), r.rhs.edges.size(),
                                      r.assignments.size());
  InstanceGraph g(mm);
  g.create_node("B");
  ASSERT_TRUE(apply_rule(g, r, {}).success);
  EXPECT_EQ(before, std::make_tuple(r.lhs.nodes.size(), r.rhs.nodes.size(), r.lhs.edges.size(), r.rhs.edges.size(),
                                    r.assignments.size()));
  EXPECT_EQ(g.attribute(NodeId(2), "s"), Value("x0"));
}
