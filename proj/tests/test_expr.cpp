#include "support/support.hpp"

#include "gt/errors.hpp"
#include "gt/expr.hpp"

#include <gtest/gtest.h>

using namespace gt;

TEST(Expr, ConcatenationWithParam) {
  const Expr e = parse_expr(R"("m_" + name)");
  EXPECT_EQ(e.eval(MapEnv{{"name", Value("doIt")}}), Value("m_doIt"));
}

TEST(Expr, TriggerSelectionBothBranches) {
  const Expr e = parse_expr(R"(trigger == "" ? mName : trigger)");
  EXPECT_EQ(e.op(), Expr::Op::Cond);
  EXPECT_EQ(e.eval(MapEnv{{"trigger", Value("")}, {"mName", Value("run")}}), Value("run"));
  EXPECT_EQ(e.eval(MapEnv{{"trigger", Value("EV")}, {"mName", Value("run")}}), Value("EV"));
}

TEST(Expr, IncompleteInputIsSyntaxErrorAtEnd) {
  try {
    parse_expr("1 + ");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position().line, 1u);
    EXPECT_EQ(e.position().column, 5u);
  }
}

TEST(Expr, BasicEvaluation) {
  EXPECT_EQ(parse_expr("!false").eval(MapEnv{}), Value(true));
  EXPECT_EQ(parse_expr(R"("a"+1)").eval(MapEnv{}), Value("a1"));
  EXPECT_EQ(parse_expr("x < y").eval(MapEnv{{"x", Value(2)}, {"y", Value(3)}}), Value(true));
  EXPECT_EQ(parse_expr("true + \"!\"").eval(MapEnv{}), Value("true!"));
  EXPECT_EQ(parse_expr("-3 + 5").eval(MapEnv{}), Value(2));
}

TEST(Expr, Precedence) {
  // `?:` < `||` < `&&` < equality < comparison < `+` < unary
  EXPECT_EQ(parse_expr("1 + 2 < 4 == true && false || true ? 1 : 2").print(),
            "(((((1 + 2) < 4) == true) && false) || true) ? 1 : 2");
  EXPECT_EQ(parse_expr("!a == b").print(), "!a == b");
}

TEST(Expr, UnboundParameterNamed) {
  try {
    parse_expr("foo + 1").eval(MapEnv{});
    FAIL() << "expected EvalError";
  } catch (const EvalError& e) {
    EXPECT_NE(std::string(e.what()).find("foo"), std::string::npos);
  }
}

TEST(Expr, TypeMismatch) {
  EXPECT_THROW(parse_expr("1 < \"a\"").eval(MapEnv{}), EvalError);
  EXPECT_THROW(parse_expr("!1").eval(MapEnv{}), EvalError);
  EXPECT_THROW(parse_expr("1 && true").eval(MapEnv{}), EvalError);
  EXPECT_THROW(parse_expr("1 ? 2 : 3").eval(MapEnv{}), EvalError);
}

TEST(Expr, FreeParams) {
  const Expr e = parse_expr("a + b == c ? d : \"e\"");
  const auto& fp = e.free_params();
  EXPECT_EQ(std::vector<std::string>(fp.begin(), fp.end()), (std::vector<std::string>{"a", "b", "c", "d"}));
}

namespace {

class RandomExpr {
public:
  explicit RandomExpr(std::uint64_t seed) : rng_(seed) {}

  Expr any(int depth) {
    if (depth == 0) return leaf();
    switch (pick(8)) {
    case 0: return Expr::unary(Expr::Op::Not, any(depth - 1));
    case 1: return Expr::binary(Expr::Op::Add, any(depth - 1), any(depth - 1));
    case 2: return Expr::binary(Expr::Op::Eq, any(depth - 1), any(depth - 1));
    case 3: return Expr::binary(Expr::Op::Lt, any(depth - 1), any(depth - 1));
    case 4: return Expr::binary(Expr::Op::And, any(depth - 1), any(depth - 1));
    case 5: return Expr::binary(Expr::Op::Or, any(depth - 1), any(depth - 1));
    case 6: return Expr::conditional(any(depth - 1), any(depth - 1), any(depth - 1));
    default: return leaf();
    }
  }

private:
  Expr leaf() {
    switch (pick(5)) {
    case 0: return Expr::literal(Value(static_cast<std::int64_t>(pick(7)) - 3));
    case 1: return Expr::literal(Value(pick(2) == 0));
    case 2: return Expr::literal(Value(pick(2) == 0 ? "a\"b" : ""));
    default: return Expr::param(std::string(1, static_cast<char>('x' + pick(3))));
    }
  }
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  std::mt19937_64 rng_;
};

std::string outcome(const Expr& e, const Env& env) {
  try {
    return e.eval(env).literal();
  } catch (const EvalError& err) {
    return std::string("error: ") + err.what();
  }
}

} // namespace

TEST(ExprProperty, PrintParseFixpoint) {
  RandomExpr gen(3);
  for (int i = 0; i < 1000; ++i) {
    const Expr e = gen.any(4);
    const std::string printed = e.print();
    const Expr back = parse_expr(printed);
    ASSERT_EQ(back.print(), printed);
    ASSERT_EQ(parse_expr(back.print()).print(), printed);
  }
}

TEST(ExprProperty, ReferentialTransparency) {
  RandomExpr gen(5);
  const MapEnv env{{"x", Value(1)}, {"y", Value("q")}, {"z", Value(true)}};
  for (int i = 0; i < 1000; ++i) {
    const Expr e = gen.any(4);
    const std::string first = outcome(e, env);
    ASSERT_EQ(outcome(e, env), first);
    ASSERT_EQ(outcome(parse_expr(e.print()), env), first);
    ASSERT_EQ(env.lookup("x")->as_integer(), 1);
  }
}
