#include "support/support.hpp"

#include "gt/errors.hpp"
#include "gt/formats.hpp"
#include "gt/reeng/case.hpp"

#include <gtest/gtest.h>

using namespace gt;
using gt::testing::canon;

namespace {

MetamodelPtr sm_mm() { return std::make_shared<const Metamodel>(parse_metamodel(gt::testing::read_text(gt::testing::asset_path("statemachine.mm")))); }
MetamodelPtr java_mm() { return std::make_shared<const Metamodel>(parse_metamodel(gt::testing::read_text(gt::testing::asset_path("java.mm")))); }

template <class F>
ModelError::Code model_error_code(F&& f) {
  try {
    f();
  } catch (const ModelError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected ModelError";
  return ModelError::Code::InvalidMetamodel;
}

} // namespace

TEST(Graph, CreateNodeAddsOne) {
  InstanceGraph g(sm_mm());
  const NodeId a = g.create_node("StateMachine");
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_TRUE(g.contains(a));
  const NodeId b = g.create_node("State");
  EXPECT_GT(raw(b), raw(a));
  EXPECT_EQ(g.attribute(b, "name"), Value(""));
}

TEST(Graph, DefaultAttributes) {
  InstanceGraph g(java_mm());
  const NodeId c = g.create_node("Class");
  EXPECT_EQ(g.attribute(c, "name"), Value(""));
  EXPECT_EQ(g.attribute(c, "abstract"), Value(false));
  InstanceGraph t(gt::testing::test_metamodel());
  EXPECT_EQ(t.attribute(t.create_node("B"), "n"), Value(0));
}

TEST(Graph, CreateAbstractOrUnknownFails) {
  InstanceGraph g(java_mm());
  EXPECT_EQ(model_error_code([&] { g.create_node("Statement"); }), ModelError::Code::AbstractType);
  EXPECT_EQ(model_error_code([&] { g.create_node("Nope"); }), ModelError::Code::UnknownType);
  EXPECT_EQ(g.node_count(), 0u);
}

TEST(Graph, DeleteThenRollbackRestores) {
  InstanceGraph g(sm_mm());
  const NodeId m = g.create_node("StateMachine");
  const NodeId s = g.create_node("State");
  g.add_edge(m, "states", s);
  g.set_attribute(s, "name", Value("A"));
  const std::string before = canon(g);
  auto cp = g.checkpoint();
  g.delete_node(s);
  EXPECT_NE(canon(g), before);
  g.rollback_to(cp);
  EXPECT_EQ(canon(g), before);
}

TEST(Graph, DeleteWithTwoIncomingEdgesRestoresPositions) {
  InstanceGraph g(sm_mm());
  const NodeId m = g.create_node("StateMachine");
  const NodeId a = g.create_node("State");
  const NodeId b = g.create_node("State");
  const NodeId c = g.create_node("State");
  g.add_edge(m, "states", a);
  g.add_edge(m, "states", b);
  g.add_edge(m, "states", c);
  const NodeId t = g.create_node("Transition");
  g.add_edge(t, "source", b);
  g.add_edge(m, "transitions", t);
  const std::string before = canon(g);

  auto cp = g.checkpoint();
  g.delete_node(b);
  ASSERT_EQ(g.targets(m, "states").size(), 2u);
  EXPECT_EQ(g.targets(m, "states")[0], a);
  EXPECT_EQ(g.targets(m, "states")[1], c);
  EXPECT_TRUE(g.targets(t, "source").empty());
  EXPECT_TRUE(g.validate().empty());
  g.rollback_to(cp);
  EXPECT_EQ(canon(g), before);
  EXPECT_EQ(g.targets(m, "states")[1], b);
  EXPECT_EQ(g.targets(t, "source")[0], b);
}

TEST(Graph, DeleteUnknownFails) {
  InstanceGraph g(sm_mm());
  EXPECT_EQ(model_error_code([&] { g.delete_node(NodeId(42)); }), ModelError::Code::UnknownNode);
}

TEST(Graph, AttributeKindMismatch) {
  InstanceGraph g(sm_mm());
  const NodeId s = g.create_node("State");
  EXPECT_EQ(model_error_code([&] { g.set_attribute(s, "name", Value(5)); }), ModelError::Code::KindMismatch);
  EXPECT_EQ(model_error_code([&] { g.set_attribute(s, "colour", Value("x")); }), ModelError::Code::UnknownFeature);
}

TEST(Graph, ManyReferenceKeepsOrder) {
  InstanceGraph g(gt::testing::test_metamodel());
  const NodeId d = g.create_node("D");
  const NodeId x = g.create_node("C");
  const NodeId y = g.create_node("B");
  g.add_edge(d, "items", y);
  g.add_edge(d, "items", x);
  ASSERT_EQ(g.targets(d, "items").size(), 2u);
  EXPECT_EQ(g.targets(d, "items")[0], y);
  EXPECT_EQ(g.targets(d, "items")[1], x);
}

TEST(Graph, SingleReferenceOverfillFails) {
  InstanceGraph g(sm_mm());
  const NodeId t = g.create_node("Transition");
  const NodeId a = g.create_node("State");
  const NodeId b = g.create_node("State");
  g.add_edge(t, "source", a);
  EXPECT_EQ(model_error_code([&] { g.add_edge(t, "source", b); }), ModelError::Code::Multiplicity);
}

TEST(Graph, EdgeTargetTypeChecked) {
  InstanceGraph g(sm_mm());
  const NodeId t = g.create_node("Transition");
  const NodeId m = g.create_node("StateMachine");
  EXPECT_EQ(model_error_code([&] { g.add_edge(t, "source", m); }), ModelError::Code::TypeMismatch);
}

TEST(Graph, ContainmentSingleParentAndAcyclic) {
  InstanceGraph g(gt::testing::test_metamodel());
  const NodeId a = g.create_node("D");
  const NodeId b = g.create_node("D");
  const NodeId c = g.create_node("D");
  g.add_edge(a, "kids", b);
  g.add_edge(b, "kids", c);
  EXPECT_EQ(model_error_code([&] { g.add_edge(a, "kids", c); }), ModelError::Code::Containment);
  EXPECT_EQ(model_error_code([&] { g.add_edge(c, "kids", a); }), ModelError::Code::Containment);
  EXPECT_EQ(g.container(c), b);
  EXPECT_TRUE(g.validate().empty());
}

TEST(Graph, EmptyCheckpointRollbackIsNoop) {
  InstanceGraph g(sm_mm());
  g.create_node("State");
  const std::string before = canon(g);
  auto cp = g.checkpoint();
  g.rollback_to(cp);
  EXPECT_EQ(canon(g), before);
  EXPECT_EQ(g.open_checkpoints(), 0u);
}

TEST(Graph, RollbackCreatedNodesAndEdges) {
  InstanceGraph g(sm_mm());
  const NodeId m = g.create_node("StateMachine");
  const std::string before = canon(g);
  auto cp = g.checkpoint();
  const NodeId a = g.create_node("State");
  const NodeId b = g.create_node("State");
  const NodeId t = g.create_node("Transition");
  g.add_edge(m, "states", a);
  g.add_edge(t, "target", b);
  g.rollback_to(cp);
  EXPECT_EQ(canon(g), before);
  EXPECT_EQ(g.node_count(), 1u);
  // Ids are not reused after a rollback, which keeps old ids unambiguous.
  EXPECT_FALSE(g.contains(a));
}

TEST(Graph, NestedCheckpointInvalidatedByOuterRollback) {
  InstanceGraph g(sm_mm());
  auto c1 = g.checkpoint();
  g.create_node("State");
  auto c2 = g.checkpoint();
  g.create_node("State");
  g.rollback_to(c1);
  EXPECT_FALSE(g.is_valid(c2));
  EXPECT_EQ(model_error_code([&] { g.rollback_to(c2); }), ModelError::Code::StaleCheckpoint);
  EXPECT_EQ(g.node_count(), 0u);
}

TEST(Graph, CommitKeepsChangesUnderOuterCheckpoint) {
  InstanceGraph g(sm_mm());
  const std::string empty = canon(g);
  auto outer = g.checkpoint();
  auto inner = g.checkpoint();
  g.create_node("State");
  g.commit(inner);
  EXPECT_EQ(g.node_count(), 1u);
  g.rollback_to(outer);
  EXPECT_EQ(canon(g), empty);
}

TEST(Graph, TransactionRollsBackUnlessCommitted) {
  InstanceGraph g(sm_mm());
  {
    Transaction tx(g);
    g.create_node("State");
  }
  EXPECT_EQ(g.node_count(), 0u);
  {
    Transaction tx(g);
    g.create_node("State");
    tx.commit();
  }
  EXPECT_EQ(g.node_count(), 1u);
}

TEST(Metamodel, Conformance) {
  const auto mm = java_mm();
  EXPECT_TRUE(mm->conforms("ClassMethod", "StatementListContainer"));
  EXPECT_TRUE(mm->conforms("Block", "Block"));
  EXPECT_TRUE(mm->conforms("Class", "ANY"));
  EXPECT_FALSE(mm->conforms("StatementListContainer", "ClassMethod"));
  EXPECT_EQ(model_error_code([&] { (void)mm->conforms("Nope", "Class"); }), ModelError::Code::UnknownType);
  EXPECT_TRUE(sm_mm()->conforms("State", "ANY"));
}

TEST(Metamodel, ConformanceIsPartialOrder) {
  const auto mm = java_mm();
  const std::size_t n = mm->type_count();
  for (std::uint32_t a = 0; a < n; ++a) {
    EXPECT_TRUE(mm->conforms(TypeId(a), TypeId(a)));
    for (std::uint32_t b = 0; b < n; ++b) {
      if (a != b && mm->conforms(TypeId(a), TypeId(b))) EXPECT_FALSE(mm->conforms(TypeId(b), TypeId(a)));
      for (std::uint32_t c = 0; c < n; ++c)
        if (mm->conforms(TypeId(a), TypeId(b)) && mm->conforms(TypeId(b), TypeId(c)))
          EXPECT_TRUE(mm->conforms(TypeId(a), TypeId(c)));
    }
  }
}

// ---------------------------------------------------------------------------
// Random mutation sequences

namespace {

// Applies one random mutation; returns false if the attempt was rejected.
bool random_mutation(gt::testing::Rng& rng, InstanceGraph& g) {
  const Metamodel& mm = g.metamodel();
  const auto ids = g.node_ids();
  const auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  try {
    switch (pick(ids.empty() ? 1 : 6)) {
    case 0: {
      const char* const types[] = {"B", "C", "D"};
      g.create_node(types[pick(3)]);
      return true;
    }
    case 1:
      g.delete_node(ids[pick(ids.size())]);
      return true;
    case 2: {
      const NodeId v = ids[pick(ids.size())];
      const auto& attrs = mm.attributes(g.type_of(v));
      const auto& a = attrs[pick(attrs.size())];
      Value val = a.kind == AttrKind::Integer ? Value(static_cast<std::int64_t>(pick(50)))
                  : a.kind == AttrKind::String ? Value(std::string(1 + pick(3), 'x'))
                                               : Value(pick(2) == 0);
      g.set_attribute(v, a.id, std::move(val));
      return true;
    }
    case 3:
    case 4: {
      const NodeId s = ids[pick(ids.size())];
      const NodeId t = ids[pick(ids.size())];
      const auto& refs = mm.references(g.type_of(s));
      if (refs.empty()) return false;
      g.add_edge(s, refs[pick(refs.size())].id, t);
      return true;
    }
    default: {
      const NodeId s = ids[pick(ids.size())];
      const auto& refs = mm.references(g.type_of(s));
      if (refs.empty()) return false;
      const auto& r = refs[pick(refs.size())];
      const auto targets = g.targets(s, r.id);
      if (targets.empty()) return false;
      g.remove_edge(s, r.id, targets[pick(targets.size())]);
      return true;
    }
    }
  } catch (const ModelError&) {
    return false;
  }
}

} // namespace

TEST(GraphProperty, JournalSoundness) {
  gt::testing::Rng rng(20261018);
  for (int trial = 0; trial < 600; ++trial) {
    InstanceGraph g = gt::testing::random_graph(rng, 8);
    const std::string before = canon(g);
    auto cp = g.checkpoint();
    const std::size_t ops = 1 + rng() % 100;
    for (std::size_t i = 0; i < ops; ++i) {
      random_mutation(rng, g);
      const auto problems = g.validate();
      ASSERT_TRUE(problems.empty()) << "trial " << trial << " op " << i << ": " << problems.front();
    }
    g.rollback_to(cp);
    ASSERT_EQ(canon(g), before) << "trial " << trial;
    ASSERT_TRUE(g.validate().empty());
  }
}

TEST(GraphProperty, NestedCheckpointsRestoreEachLevel) {
  gt::testing::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    InstanceGraph g = gt::testing::random_graph(rng, 6);
    std::vector<std::pair<CheckpointToken, std::string>> stack;
    for (int level = 0; level < 4; ++level) {
      stack.emplace_back(g.checkpoint(), canon(g));
      for (int i = 0; i < 10; ++i) random_mutation(rng, g);
    }
    while (!stack.empty()) {
      g.rollback_to(stack.back().first);
      ASSERT_EQ(canon(g), stack.back().second) << "trial " << trial << " level " << stack.size();
      stack.pop_back();
    }
  }
}

TEST(GraphProperty, CanonicalRoundTripIsIdentity) {
  gt::testing::Rng rng(11);
  const auto mm = gt::testing::test_metamodel();
  for (int trial = 0; trial < 200; ++trial) {
    InstanceGraph g = gt::testing::random_graph(rng, 8);
    const std::string once = canon(g);
    const std::string twice = canon(parse_canonical(once, mm));
    ASSERT_EQ(once, twice);
    ASSERT_EQ(serialize_model(parse_model(serialize_model(g), mm)), serialize_model(g));
  }
}
