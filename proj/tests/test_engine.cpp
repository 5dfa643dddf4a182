#include "support/support.hpp"

#include "gt/errors.hpp"
#include "gt/formats.hpp"
#include "gt/reeng/case.hpp"
#include "gt/tfm.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace gt;
using gt::testing::canon;

namespace {

// Rules and units over the test metamodel.
const char* const engine_tfm = R"(
transformation enginetest;
import tm;
main Chain;

rule createB() { node b : B <<create>>; }
rule deleteC() { node c : C <<delete>>; }
rule fail() { node d : D { attr n = 99; } }
rule bump(v) {
  node b : B { attr n = v; attr n = check(self < 3); }
  assign b.n = v + 1;
}
rule link() {
  node b : B;
  node c : C;
  edge b -next-> c <<forbid>>;
  edge b -next-> c <<create>>;
}
rule unlink() {
  node b : B;
  node c : C;
  edge b -next-> c <<delete>>;
}

// Recursion with shadowed parameter names: every level has its own d and k.
rule step(in d, out k, v) {
  node x : D bind d { attr n = v; attr n = check(self < 5); }
  node y : D <<create>> bind k { attr n = v + 1; }
  edge x -kids-> y;
}
rule mark(in d) {
  node x : D bind d;
  node b : B <<create>>;
  edge x -items-> b;
}
rule leaf(in d) { node x : D bind d; }

unit sequential Level(in d, k) {
  do step, Next, mark;
  map d -> step.d;
  map step.k -> k;
  map k -> Next.d;
  map d -> mark.d;
}
unit priority Next(in d) {
  do Level, leaf;
  map d -> Level.d;
  map d -> leaf.d;
}

rule kernel(in d) { node x : D bind d; }
rule touch() {
  node x : D;
  node a : B;
  edge x -items-> a;
  node c : C <<create>> { attr n = 7; }
  edge a -next-> c;
}
unit amalgamation Spread(in d) {
  kernel kernel;
  multi touch embed x -> x;
  map d -> kernel.d;
}

unit sequential Chain() { do createB, fail; }
unit counted DrainC() { body deleteC; count -1; }
unit counted TwoC() { body deleteC; count 2; }
unit conditional NoElse() { if fail; then createB; }
unit conditional WithElse() { if fail; then createB; else deleteC; }
unit conditional IfThen() { if createB; then fail; }
unit priority FirstWins() { do fail, createB, deleteC; }
unit independent AnyOne() { do fail, createB, deleteC; }
unit counted Forever() { body createB; count -1; }
)";

const Transformation& engine_t() {
  static const Transformation t = parse_transformation(engine_tfm, gt::testing::test_metamodel());
  return t;
}

InstanceGraph graph_with(std::initializer_list<const char*> types) {
  InstanceGraph g(gt::testing::test_metamodel());
  for (const char* t : types) g.create_node(t);
  return g;
}

std::size_t count_type(const InstanceGraph& g, std::string_view type) {
  return g.extent(g.metamodel().type_id(type)).size();
}

std::string run_traced(const Transformation& t, InstanceGraph& g, std::string_view unit, ExecConfig cfg = {}) {
  std::ostringstream trace;
  cfg.trace = &trace;
  Engine(t, cfg).execute(g, unit);
  return trace.str();
}

} // namespace

TEST(ApplyRule, InitBindsOutputs) {
  const auto& t = reeng::case_transformation();
  InstanceGraph g(reeng::case_metamodel());
  const NodeId state = g.create_node("Class");
  g.set_attribute(state, "name", Value("State"));
  const auto rule = t.find("init");
  ASSERT_TRUE(rule && rule->kind == CallTarget::Kind::Rule);
  const auto r = apply_rule(g, t.rules[rule->index], {});
  ASSERT_TRUE(r.success);
  EXPECT_EQ(r.outputs.at("class"), Binding(state));
  const NodeId sm = std::get<NodeId>(r.outputs.at("sm"));
  EXPECT_EQ(g.metamodel().type_name(g.type_of(sm)), "StateMachine");
  EXPECT_EQ(g.node_count(), 2u);
}

TEST(ApplyRule, InitWithoutStateClassFailsUntouched) {
  const auto& t = reeng::case_transformation();
  InstanceGraph g(reeng::case_metamodel());
  g.set_attribute(g.create_node("Class"), "name", Value("Other"));
  const std::string before = canon(g);
  EXPECT_FALSE(apply_rule(g, t.rules[t.find("init")->index], {}).success);
  EXPECT_EQ(canon(g), before);
}

TEST(ApplyRule, CreateStateOnAbstractClassFails) {
  const auto& t = reeng::case_transformation();
  InstanceGraph g(reeng::case_metamodel());
  const NodeId c = g.create_node("Class");
  g.set_attribute(c, "name", Value("Base"));
  g.set_attribute(c, "abstract", Value(true));
  const NodeId m = g.create_node("StateMachine");
  const std::string before = canon(g);
  EXPECT_FALSE(apply_rule(g, t.rules[t.find("createState")->index], {{"class", c}, {"sm", m}}).success);
  EXPECT_EQ(canon(g), before);
}

TEST(ApplyRule, ExpressionErrorIsDistinctFromNoMatch) {
  const auto mm = gt::testing::test_metamodel();
  const Rule r = RuleBuilder(mm, "r")
                     .node("b", "B")
                     .assign("b", "n", parse_expr("1 + true ? 1 : 2"))
                     .build();
  InstanceGraph g(mm);
  g.create_node("B");
  const std::string before = canon(g);
  EXPECT_THROW(apply_rule(g, r, {}), EvalError);
  EXPECT_EQ(canon(g), before);
}

TEST(Execute, SequentialFailureRollsBack) {
  auto g = graph_with({"C", "D"});
  const std::string before = canon(g);
  EXPECT_FALSE(Engine(engine_t()).execute(g, "Chain").success);
  EXPECT_EQ(canon(g), before);
}

TEST(Execute, CountedUnboundedDrains) {
  auto g = graph_with({"C", "B", "C", "C"});
  Engine e(engine_t());
  EXPECT_TRUE(e.execute(g, "DrainC").success);
  EXPECT_EQ(count_type(g, "C"), 0u);
  EXPECT_EQ(e.rule_counts().at("deleteC"), 3u);
  // Succeeds even when the body never applies.
  EXPECT_TRUE(Engine(engine_t()).execute(g, "DrainC").success);
}

TEST(Execute, CountedFixedRollsBackEarlierIterations) {
  auto g = graph_with({"C"});
  const std::string before = canon(g);
  EXPECT_FALSE(Engine(engine_t()).execute(g, "TwoC").success);
  EXPECT_EQ(canon(g), before);
  auto h = graph_with({"C", "C", "C"});
  EXPECT_TRUE(Engine(engine_t()).execute(h, "TwoC").success);
  EXPECT_EQ(count_type(h, "C"), 1u);
}

TEST(Execute, ConditionalSemantics) {
  auto g = graph_with({"C"});
  EXPECT_FALSE(Engine(engine_t()).execute(g, "NoElse").success);
  EXPECT_TRUE(Engine(engine_t()).execute(g, "WithElse").success);
  EXPECT_EQ(count_type(g, "C"), 0u);
  const std::string before = canon(g);
  // If part succeeds, then part fails: the whole unit fails and rolls back.
  EXPECT_FALSE(Engine(engine_t()).execute(g, "IfThen").success);
  EXPECT_EQ(canon(g), before);
}

TEST(Execute, PriorityTakesFirstSuccess) {
  auto g = graph_with({"C"});
  Engine e(engine_t());
  EXPECT_TRUE(e.execute(g, "FirstWins").success);
  EXPECT_EQ(count_type(g, "B"), 1u);
  EXPECT_EQ(count_type(g, "C"), 1u);
}

TEST(Execute, IndependentDependsOnlyOnSeed) {
  std::set<std::string> outcomes;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    auto g = graph_with({"C"});
    ExecConfig cfg;
    cfg.seed = seed;
    const std::string trace = run_traced(engine_t(), g, "AnyOne", cfg);
    auto h = graph_with({"C"});
    ASSERT_EQ(run_traced(engine_t(), h, "AnyOne", cfg), trace);
    ASSERT_EQ(canon(g), canon(h));
    ASSERT_EQ(count_type(g, "B") + (1 - count_type(g, "C")), 1u); // exactly one child applied
    outcomes.insert(canon(g));
  }
  EXPECT_EQ(outcomes.size(), 2u);
}

TEST(Execute, StepLimitAbortsWithRollback) {
  auto g = graph_with({"C"});
  const std::string before = canon(g);
  ExecConfig cfg;
  cfg.step_limit = 50;
  Engine e(engine_t(), cfg);
  EXPECT_THROW(e.execute(g, "Forever"), StepLimitExceeded);
  EXPECT_EQ(canon(g), before);
  EXPECT_EQ(g.open_checkpoints(), 0u);
}

TEST(Execute, TraceLineFormat) {
  auto g = graph_with({"B"});
  g.set_attribute(NodeId(1), "n", Value(1));
  const auto& t = engine_t();
  std::ostringstream trace;
  ExecConfig cfg;
  cfg.trace = &trace;
  Engine e(t, cfg);
  ASSERT_TRUE(e.execute(g, "bump").success);
  EXPECT_EQ(trace.str(), "apply bump {v=1}\n");
}

TEST(Execute, FrameIsolationAcrossRecursion) {
  auto g = graph_with({"D"});
  Engine e(engine_t());
  const auto r = e.execute(g, "Level", {{"d", NodeId(1)}});
  ASSERT_TRUE(r.success);
  // Levels 0..4 recurse; level 5 stops at leaf. Each level marks its own d
  // after the recursive call returned, so caller bindings survived.
  const Metamodel& mm = g.metamodel();
  std::size_t chain = 0;
  for (NodeId d : g.extent(mm.type_id("D"))) {
    ++chain;
    const auto n = g.attribute(d, "n").as_integer();
    EXPECT_EQ(g.targets(d, "items").size(), n < 5 ? 1u : 0u) << "depth " << n;
    EXPECT_EQ(g.targets(d, "kids").size(), n < 5 ? 1u : 0u);
  }
  EXPECT_EQ(chain, 6u);
  EXPECT_FALSE(r.outputs.contains("d"));
  EXPECT_EQ(r.outputs.at("k"), Binding(NodeId(2)));
  EXPECT_EQ(e.rule_counts().at("mark"), 5u);
  EXPECT_EQ(count_type(g, "B"), 5u);
}

TEST(Execute, AmalgamationAppliesAllMultiMatches) {
  auto g = graph_with({"D", "B", "B", "B", "D", "B"});
  g.add_edge(NodeId(1), "items", NodeId(2));
  g.add_edge(NodeId(1), "items", NodeId(3));
  g.add_edge(NodeId(1), "items", NodeId(4));
  g.add_edge(NodeId(5), "items", NodeId(6));
  Engine e(engine_t());
  ASSERT_TRUE(e.execute(g, "Spread", {{"d", NodeId(1)}}).success);
  EXPECT_EQ(count_type(g, "C"), 3u);
  for (NodeId b : {NodeId(2), NodeId(3), NodeId(4)}) EXPECT_EQ(g.targets(b, "next").size(), 1u);
  EXPECT_TRUE(g.targets(NodeId(6), "next").empty());
}

TEST(Execute, AmalgamationOrderIndependent) {
  const auto build = [] {
    auto g = graph_with({"D", "B", "B", "B", "B", "B"});
    for (std::uint32_t i = 2; i <= 6; ++i) g.add_edge(NodeId(1), "items", NodeId(i));
    return g;
  };
  auto ref = build();
  ASSERT_TRUE(Engine(engine_t()).execute(ref, "Spread", {{"d", NodeId(1)}}).success);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = build();
    ExecConfig cfg;
    cfg.seed = seed;
    cfg.shuffle_multi_matches = true;
    ASSERT_TRUE(Engine(engine_t(), cfg).execute(g, "Spread", {{"d", NodeId(1)}}).success);
    // Created ids may be assigned in a different order; compare structure.
    ASSERT_EQ(count_type(g, "C"), 5u);
    for (std::uint32_t i = 2; i <= 6; ++i) {
      ASSERT_EQ(g.targets(NodeId(i), "next").size(), 1u);
      ASSERT_EQ(g.attribute(g.targets(NodeId(i), "next")[0], "n"), Value(7));
    }
  }
}

TEST(Execute, StatesLoopCreatesNonAbstractDescendants) {
  const std::vector<reeng::JavaSource> src = {
      {"State.java", "abstract class State {}"},
      {"Mid.java", "abstract class Mid extends State {}"},
      {"A.java", "class A extends Mid {}"},
      {"B.java", "class B extends A {}"},
      {"C.java", "class C extends State {}"},
      {"Other.java", "class Other {}"},
  };
  InstanceGraph g = reeng::parse_java(src, reeng::case_metamodel());
  const InstanceGraph expected = reeng::oracle_extract(g);
  const auto& t = reeng::case_transformation();
  Engine e(t);
  const auto init = e.execute(g, "init");
  ASSERT_TRUE(init.success);
  ASSERT_TRUE(e.execute(g, "StatesLoop", init.outputs).success);
  std::set<std::string> made, want;
  for (NodeId s : g.extent(g.metamodel().type_id("State"))) made.insert(g.attribute(s, "name").as_string());
  const auto& smm = expected.metamodel();
  for (NodeId s : expected.extent(smm.type_id("State"))) want.insert(expected.attribute(s, "name").as_string());
  EXPECT_EQ(made, want);
  EXPECT_EQ(made, (std::set<std::string>{"A", "B", "C"}));
}

// ---------------------------------------------------------------------------
// Random unit trees

namespace {

struct TreeGen {
  gt::testing::Rng& rng;
  Transformation& t;
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng() % n); }

  CallTarget rule() {
    const char* const names[] = {"createB", "deleteC", "fail", "bump", "link", "unlink"};
    const std::string name = names[pick(6)];
    return *t.find(name);
  }

  CallTarget unit(int depth) {
    if (depth == 0 || pick(4) == 0) return rule();
    Unit u;
    u.name = "U" + std::to_string(t.units.size());
    const UnitKind kinds[] = {UnitKind::Sequential, UnitKind::Priority, UnitKind::Counted, UnitKind::Conditional,
                              UnitKind::Independent};
    u.kind = kinds[pick(5)];
    switch (u.kind) {
    case UnitKind::Counted:
      u.count = static_cast<std::int64_t>(pick(4)) - 1;
      u.children.push_back(unit(depth - 1));
      break;
    case UnitKind::Conditional:
      for (std::size_t i = 0, n = 2 + pick(2); i < n; ++i) u.children.push_back(unit(depth - 1));
      break;
    default:
      for (std::size_t i = 0, n = 1 + pick(3); i < n; ++i) u.children.push_back(unit(depth - 1));
    }
    t.units.push_back(std::move(u));
    return {CallTarget::Kind::Unit, t.units.size() - 1, t.units.back().name};
  }
};

} // namespace

TEST(EngineProperty, FailureLeavesGraphUnchanged) {
  gt::testing::Rng rng(31337);
  int failures = 0, aborted = 0, successes = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Transformation t = engine_t();
    TreeGen gen{rng, t};
    const CallTarget root = gen.unit(3);
    InstanceGraph g = gt::testing::random_graph(rng, 6);
    const std::string before = canon(g);
    ExecConfig cfg;
    cfg.seed = trial;
    cfg.step_limit = 500;
    Engine e(t, cfg);
    bool ok = false;
    try {
      ok = e.execute(g, root).success;
    } catch (const StepLimitExceeded&) {
      ++aborted;
    }
    ASSERT_EQ(g.open_checkpoints(), 0u);
    ASSERT_TRUE(g.validate().empty());
    if (!ok) {
      ++failures;
      ASSERT_EQ(canon(g), before) << "trial " << trial;
    } else {
      ++successes;
    }
  }
  EXPECT_GT(failures, 50);
  EXPECT_GT(successes, 50);
  EXPECT_GT(aborted, 0);
}

TEST(EngineProperty, DeterministicTraceAndResult) {
  const auto model = reeng::parse_java(
      {
          {"State.java", "abstract class State {}"},
          {"A.java", "class A extends State { void go() { new B(); send(\"x\"); } }"},
          {"B.java", "class B extends State { void back() { try { new A(); } catch (E e) { new B(); } } }"},
      },
      reeng::case_metamodel());
  std::string first_trace, first_graph;
  for (int run = 0; run < 3; ++run) {
    InstanceGraph g = model;
    std::ostringstream trace;
    ExecConfig cfg;
    cfg.seed = 5;
    cfg.trace = &trace;
    ASSERT_TRUE(Engine(reeng::case_transformation(), cfg).execute(g, "Start").success);
    if (run == 0) {
      first_trace = trace.str();
      first_graph = canon(g);
      EXPECT_FALSE(first_trace.empty());
    } else {
      EXPECT_EQ(trace.str(), first_trace);
      EXPECT_EQ(canon(g), first_graph);
    }
  }
}
