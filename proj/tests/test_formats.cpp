#include "support/support.hpp"

#include "gt/errors.hpp"
#include "gt/formats.hpp"
#include "gt/reeng/case.hpp"
#include "gt/tfm.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace gt;
using gt::testing::asset_path;
using gt::testing::read_text;

namespace {

template <class F>
ParseError parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected ParseError";
  return ParseError("none", {});
}

} // namespace

TEST(MetamodelFormat, StatemachineHasThreeTypes) {
  const Metamodel mm = parse_metamodel(read_text(asset_path("statemachine.mm")));
  ASSERT_EQ(mm.definitions().size(), 3u);
  EXPECT_EQ(mm.definitions()[0].name, "StateMachine");
  EXPECT_EQ(mm.definitions()[1].name, "State");
  EXPECT_EQ(mm.definitions()[2].name, "Transition");
  EXPECT_EQ(mm.name(), "statemachine");
}

TEST(MetamodelFormat, JavaSubsetStructure) {
  const Metamodel mm = parse_metamodel(read_text(asset_path("java.mm")));
  for (const char* t : {"NamedElement", "Class", "StatementListContainer", "ClassMethod", "Block", "Statement",
                        "ExpressionStatement", "Condition", "Switch", "SwitchCase", "TryBlock", "CatchBlock",
                        "Expression", "NewConstructorCall", "MethodCall", "StringLiteral"})
    EXPECT_TRUE(mm.find_type(t).has_value()) << t;
  EXPECT_TRUE(mm.conforms("ClassMethod", "StatementListContainer"));
  EXPECT_TRUE(mm.is_abstract(mm.type_id("Statement")));
  EXPECT_TRUE(mm.find_reference(mm.type_id("Class"), "methods")->containment);
}

TEST(MetamodelFormat, SerializeRoundTrip) {
  for (const char* name : {"java.mm", "statemachine.mm"}) {
    const Metamodel mm = parse_metamodel(read_text(asset_path(name)));
    const std::string once = serialize_metamodel(mm);
    EXPECT_EQ(serialize_metamodel(parse_metamodel(once)), once) << name;
  }
}

TEST(MetamodelFormat, Errors) {
  auto e = parse_error([] { parse_metamodel("metamodel x;\nclass A extends Missing {}\n", "x.mm"); });
  EXPECT_NE(e.message().find("Missing"), std::string::npos);
  EXPECT_EQ(e.position().line, 2u);
  EXPECT_EQ(e.file(), "x.mm");
  e = parse_error([] { parse_metamodel("metamodel x;\nclass A { attr n : float; }\n"); });
  EXPECT_EQ(e.position().line, 2u);
  EXPECT_EQ(e.position().column, 20u);
  EXPECT_THROW(parse_metamodel("metamodel x; class A {} class A {}"), Error);
}

TEST(ModelFormat, RoundTripIsIdentity) {
  const auto mm = gt::testing::test_metamodel();
  InstanceGraph g(mm);
  const NodeId d = g.create_node("D");
  const NodeId b = g.create_node("B");
  const NodeId c = g.create_node("C");
  g.set_attribute(b, "s", Value("quote \" and \\ backslash\nnewline"));
  g.set_attribute(b, "flag", Value(true));
  g.set_attribute(c, "n", Value(-12));
  g.add_edge(d, "items", c);
  g.add_edge(d, "items", b);
  g.add_edge(c, "peer", c);
  const std::string text = serialize_model(g);
  const InstanceGraph back = parse_model(text, mm);
  EXPECT_EQ(serialize_model(back), text);
  EXPECT_EQ(serialize_canonical(back), serialize_canonical(g));
  EXPECT_EQ(back.targets(d, "items")[0], c);
}

TEST(ModelFormat, CanonicalLayout) {
  const auto mm = gt::testing::test_metamodel();
  InstanceGraph g(mm);
  const NodeId d = g.create_node("D");
  const NodeId b = g.create_node("B");
  g.add_edge(d, "items", b);
  g.set_attribute(b, "s", Value("x"));
  EXPECT_EQ(serialize_canonical(g), "node 1 : D\n"
                                    "  attr n = 0\n"
                                    "  ref items -> 2\n"
                                    "node 2 : B\n"
                                    "  attr n = 0\n"
                                    "  attr s = \"x\"\n"
                                    "  attr flag = false\n");
}

TEST(ModelFormat, UnknownTypeNamed) {
  const std::string text = R"({"format":"gm/1","nodes":[{"id":1,"type":"Gizmo"}]})";
  try {
    parse_model(text, gt::testing::test_metamodel());
    FAIL() << "expected error";
  } catch (const ConformanceError& e) {
    ASSERT_EQ(e.problems().size(), 1u);
    EXPECT_NE(e.problems()[0].find("Gizmo"), std::string::npos);
  }
}

TEST(ModelFormat, ConformanceProblemsListedExhaustively) {
  const std::string text = R"({"format":"gm/1","nodes":[
    {"id":1,"type":"B","attrs":{"n":"text","bogus":1}},
    {"id":2,"type":"A"},
    {"id":3,"type":"C","refs":{"peer":[1]}}
  ]})";
  try {
    parse_model(text, gt::testing::test_metamodel());
    FAIL() << "expected error";
  } catch (const ConformanceError& e) {
    EXPECT_GE(e.problems().size(), 4u);
  }
}

TEST(ModelFormat, SyntaxErrorHasPosition) {
  const auto e = parse_error([] { parse_model("{\"format\": \"gm/1\",\n  \"nodes\": [ }", gt::testing::test_metamodel(), "m.gm"); });
  EXPECT_EQ(e.position().line, 2u);
  EXPECT_EQ(e.file(), "m.gm");
}

TEST(TransformationFormat, BundledCaseParsesCleanly) {
  std::vector<Diagnostic> warnings;
  const Transformation t =
      parse_transformation(read_text(asset_path("reeng.tfm")), reeng::case_metamodel(), "reeng.tfm", &warnings);
  EXPECT_TRUE(warnings.empty());
  // The case inventory plus the descent helpers and the cleanup pass.
  EXPECT_EQ(t.rules.size(), 15u);
  EXPECT_EQ(t.units.size(), 16u);
  ASSERT_TRUE(t.main.has_value());
  EXPECT_EQ(t.main->name, "Start");
  for (const char* r : {"init", "createState", "checkClassHasChild", "nextClass", "nextClassMethod", "createTransition",
                        "descendSLC", "descendSC", "descendCondition", "descendTryFinal", "descendTryCatch",
                        "descendSwitch", "updateAction"})
    EXPECT_TRUE(t.find(r).has_value()) << r;
}

TEST(TransformationFormat, CountedMinusOne) {
  const Transformation t = parse_transformation(R"(
    transformation x; import tm; main L;
    rule r() { node b : B; }
    unit counted L() { body r; count -1; }
  )",
                                                gt::testing::test_metamodel());
  ASSERT_EQ(t.units.size(), 1u);
  EXPECT_EQ(t.units[0].kind, UnitKind::Counted);
  EXPECT_EQ(t.units[0].count, -1);
  EXPECT_EQ(t.units[0].children.at(0).name, "r");
}

TEST(TransformationFormat, MappingToUndeclaredParamFails) {
  const auto e = parse_error([] {
    parse_transformation(R"(transformation x; import tm; main L;
rule r(in p) { node b : B bind p; }
unit sequential L(in q) {
  do r;
  map q -> r.nope;
})",
                         gt::testing::test_metamodel());
  });
  EXPECT_NE(e.message().find("nope"), std::string::npos);
  EXPECT_EQ(e.position().line, 5u);
}

TEST(TransformationFormat, UnresolvedReferencesFail) {
  EXPECT_THROW(parse_transformation("transformation x; import tm; main Nope;", gt::testing::test_metamodel()),
               ParseError);
  EXPECT_THROW(parse_transformation("transformation x; import elsewhere; rule r() { node b : B; } main r;",
                                    gt::testing::test_metamodel()),
               ParseError);
  const auto e = parse_error([] {
    parse_transformation("transformation x; import tm; main r;\nrule r() { node b : Bogus; }",
                         gt::testing::test_metamodel());
  });
  EXPECT_EQ(e.position().line, 2u);
  EXPECT_NE(e.message().find("Bogus"), std::string::npos);
}

TEST(TransformationFormat, FirstErrorIsEarliest) {
  const auto e = parse_error([] {
    parse_transformation("transformation x; import tm; main r;\nrule r() { node b : Bogus; }\nrule s() { node c : Nope; }",
                         gt::testing::test_metamodel());
  });
  EXPECT_EQ(e.position().line, 2u);
}

TEST(TransformationFormat, RuleValidationErrorsReported) {
  const auto e = parse_error([] {
    parse_transformation("transformation x; import tm; main r;\nrule r() { node b : B; node c : C; edge b -peer-> c; }",
                         gt::testing::test_metamodel());
  });
  EXPECT_NE(e.message().find("peer"), std::string::npos);
}

TEST(Assets, BundledCorporaParse) {
  const auto mm = reeng::case_metamodel();
  for (const char* corpus : {"small", "medium", "big"}) {
    std::vector<reeng::JavaSource> sources;
    for (const auto& entry : std::filesystem::directory_iterator(asset_path(corpus)))
      if (entry.path().extension() == ".java")
        sources.push_back({entry.path().filename().string(), read_text(entry.path().string())});
    ASSERT_FALSE(sources.empty()) << corpus;
    const InstanceGraph g = reeng::parse_java(sources, mm);
    EXPECT_TRUE(g.validate().empty()) << corpus;
  }
}
