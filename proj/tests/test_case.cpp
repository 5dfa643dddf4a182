#include "support/support.hpp"

#include "gt/errors.hpp"
#include "gt/formats.hpp"
#include "gt/reeng/case.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

using namespace gt;
using namespace gt::reeng;

namespace {

InstanceGraph java(std::vector<JavaSource> sources) { return parse_java(sources, case_metamodel()); }

std::set<std::string> state_names(const InstanceGraph& m) {
  std::set<std::string> out;
  for (NodeId s : m.extent(m.metamodel().type_id("State"))) out.insert(m.attribute(s, "name").as_string());
  return out;
}

std::multiset<TransitionKey> transitions(const InstanceGraph& m) {
  std::multiset<TransitionKey> out;
  for (NodeId t : m.extent(m.metamodel().type_id("Transition"))) {
    const auto name = [&](std::string_view ref) { return m.attribute(m.targets(t, ref).front(), "name").as_string(); };
    out.insert({name("source"), name("target"), m.attribute(t, "trigger").as_string(),
                m.attribute(t, "action").as_string()});
  }
  return out;
}

// Nodes of the given type names only, in canonical form.
std::string canon_restricted(const InstanceGraph& g, const std::set<std::string>& types) {
  std::istringstream in(serialize_canonical(g));
  std::string line, out;
  bool keep = false;
  while (std::getline(in, line)) {
    if (line.rfind("node ", 0) == 0) keep = types.contains(line.substr(line.find(" : ") + 3));
    if (keep) out += line + "\n";
  }
  return out;
}

std::set<std::string> java_type_names() {
  std::set<std::string> out;
  const Metamodel mm = parse_metamodel(bundled_asset("java.mm"));
  for (const auto& d : mm.definitions()) out.insert(d.name);
  return out;
}

// Non-abstract transitive subclasses of the class named State, computed from
// the sources' class headers.
std::set<std::string> expected_states(const std::vector<JavaSource>& sources) {
  std::map<std::string, std::pair<std::string, bool>> classes; // name -> (super, abstract)
  for (const auto& s : sources) {
    std::istringstream in(s.text);
    std::string word, prev, name, super;
    bool abstract = false, saw_class = false, saw_extends = false;
    while (in >> word) {
      if (word == "{" || word.find('{') != std::string::npos) {
        if (saw_class && saw_extends && super.empty()) super = word.substr(0, word.find('{'));
        break;
      }
      if (word == "abstract") abstract = true;
      else if (word == "class") saw_class = true;
      else if (word == "extends") saw_extends = true;
      else if (saw_extends && super.empty()) super = word;
      else if (saw_class && name.empty()) name = word;
    }
    classes[name] = {super, abstract};
  }
  std::set<std::string> out;
  for (const auto& [name, info] : classes) {
    if (info.second) continue;
    std::set<std::string> seen;
    for (std::string c = name; !c.empty() && seen.insert(c).second; c = classes.contains(c) ? classes[c].first : "")
      if (c == "State" && name != "State") {
        out.insert(name);
        break;
      }
  }
  return out;
}

std::vector<JavaSource> load_dir(const std::string& dir) {
  std::vector<JavaSource> out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".java") out.push_back({e.path().filename().string(), gt::testing::read_text(e.path().string())});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Java frontend

TEST(ParseJava, ClassWithTwoStatements) {
  const InstanceGraph g = java({{"State.java", "abstract class State {}"},
                                {"StateB.java", "class StateB extends State {}"},
                                {"StateA.java", "class StateA extends State { void doIt() { new StateB(); send(\"go\"); } }"}});
  const Metamodel& mm = g.metamodel();
  NodeId a{}, b{};
  for (NodeId c : g.extent(mm.type_id("Class"))) {
    if (g.attribute(c, "name") == Value("StateA")) a = c;
    if (g.attribute(c, "name") == Value("StateB")) b = c;
  }
  ASSERT_NE(raw(a), 0u);
  const auto methods = g.targets(a, "methods");
  ASSERT_EQ(methods.size(), 1u);
  EXPECT_EQ(g.attribute(methods[0], "name"), Value("doIt"));
  const auto stmts = g.targets(methods[0], "statements");
  ASSERT_EQ(stmts.size(), 2u);
  const NodeId ncc = g.targets(stmts[0], "expression")[0];
  EXPECT_EQ(mm.type_name(g.type_of(ncc)), "NewConstructorCall");
  EXPECT_EQ(g.targets(ncc, "instantiates")[0], b);
  const NodeId call = g.targets(stmts[1], "expression")[0];
  EXPECT_EQ(mm.type_name(g.type_of(call)), "MethodCall");
  EXPECT_EQ(g.attribute(call, "methodName"), Value("send"));
  const NodeId lit = g.targets(call, "argument")[0];
  EXPECT_EQ(g.attribute(lit, "value"), Value("go"));
  EXPECT_EQ(g.targets(a, "extends").size(), 1u);
}

TEST(ParseJava, AbstractFlag) {
  const InstanceGraph g = java({{"State.java", "abstract class State {}"}});
  ASSERT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.attribute(NodeId(1), "abstract"), Value(true));
  EXPECT_EQ(g.attribute(NodeId(1), "name"), Value("State"));
}

TEST(ParseJava, UnknownSuperclassNamed) {
  try {
    java({{"A.java", "class A extends Ghost {}"}});
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(e.message().find("Ghost"), std::string::npos);
    EXPECT_EQ(e.file(), "A.java");
  }
}

TEST(ParseJava, SyntaxErrorHasFileAndLine) {
  try {
    java({{"State.java", "abstract class State {}"}, {"B.java", "class B extends State {\n  void m() {\n    new ;\n  }\n}"}});
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.file(), "B.java");
    EXPECT_EQ(e.position().line, 3u);
  }
}

TEST(ParseJava, StatementForms) {
  const InstanceGraph g = java({{"State.java", "abstract class State {}"},
                                {"X.java", R"(public class X extends State {
  public void m() {
    if (a > b && c) { new X(); } else if (d) { log(); } else { return; }
    switch (e) { case A: new X(); break; case "s": case 3: default: send("x"); }
    try { new X(); } catch (IOException e) { } catch (E2 e) { } finally { new X(); }
    try { } finally { }
  }
})"}});
  const Metamodel& mm = g.metamodel();
  const auto count = [&](const char* t) { return g.extent(mm.type_id(t)).size(); };
  EXPECT_EQ(count("Condition"), 2u);
  EXPECT_EQ(count("Switch"), 1u);
  EXPECT_EQ(count("SwitchCase"), 4u);
  EXPECT_EQ(count("TryBlock"), 2u);
  EXPECT_EQ(count("CatchBlock"), 2u);
  EXPECT_EQ(count("NewConstructorCall"), 4u);
  std::set<std::string> labels;
  for (NodeId c : g.extent(mm.type_id("SwitchCase"))) labels.insert(g.attribute(c, "label").as_string());
  EXPECT_EQ(labels, (std::set<std::string>{"A", "s", "3", "default"}));
  EXPECT_TRUE(g.validate().empty());
}

// ---------------------------------------------------------------------------
// End to end

TEST(RunCase, ThreeClassExample) {
  InstanceGraph g = java({{"State.java", "abstract class State {}"},
                          {"StateA.java", "class StateA extends State { void go() { new StateB(); send(\"ack\"); } }"},
                          {"StateB.java", "class StateB extends State {}"}});
  const InstanceGraph oracle = oracle_extract(g);
  const auto r = run_case(g);
  EXPECT_EQ(state_names(r.machine), (std::set<std::string>{"StateA", "StateB"}));
  EXPECT_EQ(transitions(r.machine), (std::multiset<TransitionKey>{{"StateA", "StateB", "go", "ack"}}));
  EXPECT_TRUE(diff_statemachines(r.machine, oracle).empty());
  EXPECT_GT(r.steps, 0u);
  EXPECT_EQ(r.rule_counts.at("createTransition"), 1u);
}

TEST(RunCase, OnlyAbstractClassesGiveEmptyMachine) {
  InstanceGraph g = java({{"State.java", "abstract class State {}"}, {"M.java", "abstract class M extends State {}"}});
  const InstanceGraph oracle = oracle_extract(g);
  const auto r = run_case(g);
  EXPECT_EQ(r.machine.node_count(), 1u);
  EXPECT_TRUE(state_names(r.machine).empty());
  EXPECT_EQ(serialize_canonical(r.machine), serialize_canonical(oracle));
}

TEST(RunCase, SwitchLabelOverridesMethodName) {
  InstanceGraph g = java({{"State.java", "abstract class State {}"},
                          {"StateA.java", "class StateA extends State { void handle() { switch (x) { case LABEL: new StateB(); break; } } }"},
                          {"StateB.java", "class StateB extends State {}"}});
  const InstanceGraph oracle = oracle_extract(g);
  const auto r = run_case(g);
  EXPECT_EQ(transitions(r.machine), (std::multiset<TransitionKey>{{"StateA", "StateB", "LABEL", ""}}));
  EXPECT_TRUE(diff_statemachines(r.machine, oracle).empty());
}

TEST(RunCase, NestedTrySwitch) {
  const std::vector<JavaSource> src = {
      {"State.java", "abstract class State {}"},
      {"StateX.java",
       "class StateX extends State { void m() { try { switch (v) { case A: new StateB(); } } catch (E e) { new StateC(); } } }"},
      {"StateB.java", "class StateB extends State {}"},
      {"StateC.java", "class StateC extends State {}"}};
  const std::multiset<TransitionKey> want{{"StateX", "StateB", "A", ""}, {"StateX", "StateC", "E", ""}};
  EXPECT_EQ(transitions(oracle_extract(java(src))), want);
  InstanceGraph g = java(src);
  EXPECT_EQ(transitions(run_case(g).machine), want);
}

TEST(RunCase, SendAfterOrBeforeTransitionStatement) {
  InstanceGraph g = java({{"State.java", "abstract class State {}"},
                          {"A.java", "class A extends State { void p() { send(\"first\"); new B(); } void q() { if (c) { new A(); } } }"},
                          {"B.java", "class B extends State { void r() { new A(); log(\"x\"); send(\"y\"); } }"}});
  const auto r = run_case(g);
  EXPECT_EQ(transitions(r.machine),
            (std::multiset<TransitionKey>{{"A", "B", "p", "first"}, {"A", "A", "q", ""}, {"B", "A", "r", "y"}}));
}

TEST(RunCase, InstantiatingNonStateClassIsNoTransition) {
  InstanceGraph g = java({{"State.java", "abstract class State {}"},
                          {"Util.java", "class Util {}"},
                          {"Mid.java", "abstract class Mid extends State {}"},
                          {"A.java", "class A extends Mid { void m() { new Util(); new Mid(); new State(); new A(); } }"}});
  const auto r = run_case(g);
  EXPECT_EQ(transitions(r.machine), (std::multiset<TransitionKey>{{"A", "A", "m", ""}}));
}

TEST(RunCase, MissingStateClassFails) {
  InstanceGraph g = java({{"A.java", "class A {}"}});
  EXPECT_THROW(run_case(g), TransformFailed);
  EXPECT_THROW(oracle_extract(g), TransformFailed);
}

TEST(RunCase, RejectsForeignMetamodel) {
  InstanceGraph g(gt::testing::test_metamodel());
  EXPECT_THROW(run_case(g), Error);
}

TEST(RunCase, JavaPartUnchangedAndNoTraceResidue) {
  const auto sources = load_dir(gt::testing::asset_path("small"));
  InstanceGraph g = java(sources);
  const auto java_types = java_type_names();
  const std::string before = canon_restricted(g, java_types);
  const auto r = run_case(g);
  EXPECT_EQ(canon_restricted(g, java_types), before);
  EXPECT_TRUE(g.extent(g.metamodel().type_id("Trace")).empty());
  // The returned machine holds state machine nodes only.
  for (NodeId n : r.machine.node_ids()) {
    const std::string& t = r.machine.metamodel().type_name(r.machine.type_of(n));
    EXPECT_TRUE(t == "StateMachine" || t == "State" || t == "Transition") << t;
  }
  EXPECT_TRUE(g.validate().empty());
}

TEST(RunCase, SmallCorpusMatchesGolden) {
  InstanceGraph g = java(load_dir(gt::testing::asset_path("small")));
  const auto r = run_case(g);
  const std::string golden = gt::testing::read_text(gt::testing::asset_path("small/expected.gm"));
  EXPECT_EQ(serialize_model(r.machine) , golden);
  EXPECT_TRUE(diff_statemachines(r.machine, parse_model(golden, statemachine_metamodel())).empty());
}

TEST(CaseProperty, EngineOracleAndStateSetOnGeneratedCorpora) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GeneratorConfig cfg{3 + seed % 10, 1 + seed % 4, seed % 4, seed};
    const auto sources = generate_model(cfg);
    InstanceGraph g = java(sources);
    const InstanceGraph oracle = oracle_extract(g);
    const auto r = run_case(g);
    const auto report = diff_statemachines(r.machine, oracle);
    ASSERT_TRUE(report.empty()) << "seed " << seed << "\n" << report.describe();
    ASSERT_EQ(state_names(r.machine), expected_states(sources)) << "seed " << seed;
    ASSERT_EQ(state_names(r.machine).size(), r.machine.extent(r.machine.metamodel().type_id("State")).size());
    ASSERT_TRUE(g.extent(g.metamodel().type_id("Trace")).empty());
  }
}

TEST(CaseProperty, TransitionCountEqualsTransitionStatements) {
  // Every statement instantiating a concrete State subclass yields exactly one
  // transition, independent of where it sits in the nesting.
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    const auto sources = generate_model({8, 3, 3, seed});
    InstanceGraph g = java(sources);
    const auto states = expected_states(sources);
    const Metamodel& mm = g.metamodel();
    std::size_t expected = 0;
    std::map<NodeId, bool> in_state_class;
    for (NodeId c : g.extent(mm.type_id("Class"))) {
      if (!states.contains(g.attribute(c, "name").as_string())) continue;
      std::vector<NodeId> stack(g.targets(c, "methods").begin(), g.targets(c, "methods").end());
      while (!stack.empty()) {
        const NodeId n = stack.back();
        stack.pop_back();
        const Node& node = g.node(n);
        for (const auto& r : mm.references(node.type)) {
          if (!r.containment) continue;
          for (NodeId k : g.targets(n, r.id)) stack.push_back(k);
        }
        if (mm.type_name(node.type) == "NewConstructorCall") {
          const auto t = g.targets(n, "instantiates");
          if (!t.empty() && states.contains(g.attribute(t[0], "name").as_string())) ++expected;
        }
      }
    }
    const auto r = run_case(g);
    ASSERT_EQ(r.machine.extent(r.machine.metamodel().type_id("Transition")).size(), expected) << "seed " << seed;
  }
}

// ---------------------------------------------------------------------------
// Diff

namespace {

InstanceGraph machine(std::initializer_list<const char*> states, std::initializer_list<TransitionKey> ts) {
  InstanceGraph m(statemachine_metamodel());
  const NodeId sm = m.create_node("StateMachine");
  std::map<std::string, NodeId> by_name;
  for (const char* s : states) {
    const NodeId n = m.create_node("State");
    m.set_attribute(n, "name", Value(s));
    m.add_edge(sm, "states", n);
    by_name.emplace(s, n);
  }
  for (const auto& t : ts) {
    const NodeId n = m.create_node("Transition");
    m.add_edge(sm, "transitions", n);
    m.add_edge(n, "source", by_name.at(t.source));
    m.add_edge(n, "target", by_name.at(t.target));
    m.set_attribute(n, "trigger", Value(t.trigger));
    m.set_attribute(n, "action", Value(t.action));
  }
  return m;
}

} // namespace

TEST(Diff, IdenticalIsEmpty) {
  const auto a = machine({"A", "B"}, {{"A", "B", "go", "x"}});
  EXPECT_TRUE(diff_statemachines(a, a).empty());
  EXPECT_EQ(diff_statemachines(a, a).describe(), "no differences\n");
}

TEST(Diff, OneTriggerDiffers) {
  const auto a = machine({"A", "B"}, {{"A", "B", "go", "x"}, {"B", "A", "back", ""}});
  const auto b = machine({"B", "A"}, {{"B", "A", "back", ""}, {"A", "B", "run", "x"}});
  const auto r = diff_statemachines(a, b);
  EXPECT_TRUE(r.states_only_left.empty() && r.states_only_right.empty());
  ASSERT_EQ(r.transitions_only_left.size(), 1u);
  ASSERT_EQ(r.transitions_only_right.size(), 1u);
  EXPECT_EQ(r.transitions_only_left[0].trigger, "go");
  EXPECT_EQ(r.transitions_only_right[0].trigger, "run");
  EXPECT_EQ(r.describe(), "- transition A -> B [trigger \"go\", action \"x\"]\n"
                          "+ transition A -> B [trigger \"run\", action \"x\"]\n");
}

TEST(Diff, MultisetAndStates) {
  const auto a = machine({"A", "C"}, {{"A", "A", "t", ""}, {"A", "A", "t", ""}});
  const auto b = machine({"A", "D"}, {{"A", "A", "t", ""}});
  const auto r = diff_statemachines(a, b);
  EXPECT_EQ(r.states_only_left, std::vector<std::string>{"C"});
  EXPECT_EQ(r.states_only_right, std::vector<std::string>{"D"});
  EXPECT_EQ(r.transitions_only_left.size(), 1u);
  EXPECT_TRUE(r.transitions_only_right.empty());
}

TEST(Diff, DuplicateStateNamesReported) {
  const auto a = machine({"A", "A"}, {});
  const auto r = diff_statemachines(a, machine({"A"}, {}));
  ASSERT_EQ(r.problems_left.size(), 1u);
  EXPECT_NE(r.problems_left[0].find("duplicate"), std::string::npos);
  EXPECT_FALSE(r.empty());
}

// ---------------------------------------------------------------------------
// Generator

TEST(Generator, MinimalCorpus) {
  const auto src = generate_model({1, 1, 0, 3});
  ASSERT_EQ(src.size(), 2u);
  EXPECT_EQ(src[0].name, "State.java");
  EXPECT_NE(src[0].text.find("abstract class State"), std::string::npos);
  InstanceGraph g = java(src);
  EXPECT_EQ(state_names(run_case(g).machine), std::set<std::string>{"S1"});
}

TEST(Generator, DeterministicPerSeed) {
  const GeneratorConfig cfg{20, 4, 3, 77};
  const auto a = generate_model(cfg);
  const auto b = generate_model(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].text, b[i].text);
  }
  auto c = cfg;
  c.seed = 78;
  const auto d = generate_model(c);
  bool differs = false;
  for (std::size_t i = 0; i < std::min(a.size(), d.size()); ++i) differs |= a[i].text != d[i].text;
  EXPECT_TRUE(differs);
}

TEST(Generator, EveryProgramParses) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto src = generate_model({1 + seed % 12, 1 + seed % 5, seed % 5, seed});
    EXPECT_NO_THROW(java(src)) << "seed " << seed;
  }
}

TEST(Extract, RenumbersAndRejectsEscapingRefs) {
  const auto mm = gt::testing::test_metamodel();
  InstanceGraph g(mm);
  g.create_node("B");
  const NodeId d = g.create_node("D");
  const NodeId k = g.create_node("D");
  g.add_edge(d, "kids", k);
  g.set_attribute(k, "n", Value(4));
  const InstanceGraph x = extract_subgraph(g, d);
  EXPECT_EQ(serialize_canonical(x), "node 1 : D\n  attr n = 0\n  ref kids -> 2\nnode 2 : D\n  attr n = 4\n");
  g.add_edge(k, "items", NodeId(1));
  EXPECT_THROW(extract_subgraph(g, d), ModelError);
}
