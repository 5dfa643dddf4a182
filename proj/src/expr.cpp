#include "gt/expr.hpp"

#include "gt/errors.hpp"

namespace gt {

struct Expr::Node {
  Op op = Op::Literal;
  Value value;
  std::string name;
  std::vector<Expr> operands;
  std::set<std::string, std::less<>> free;
};

namespace {

std::string_view symbol(Expr::Op op) {
  switch (op) {
  case Expr::Op::Add: return "+";
  case Expr::Op::Eq: return "==";
  case Expr::Op::Ne: return "!=";
  case Expr::Op::Lt: return "<";
  case Expr::Op::Gt: return ">";
  case Expr::Op::Le: return "<=";
  case Expr::Op::Ge: return ">=";
  case Expr::Op::And: return "&&";
  case Expr::Op::Or: return "||";
  default: return "?";
  }
}

[[noreturn]] void mismatch(Expr::Op op, const Value& a, const Value& b) {
  throw EvalError("operator '" + std::string(symbol(op)) + "' cannot combine " + std::string(to_string(a.kind())) +
                  " and " + std::string(to_string(b.kind())));
}

bool require_bool(const Value& v, std::string_view where) {
  if (!v.is_boolean())
    throw EvalError(std::string(where) + " expects bool, got " + std::string(to_string(v.kind())));
  return v.as_boolean();
}

} // namespace

Expr Expr::literal(Value v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Literal;
  n->value = std::move(v);
  Expr e;
  e.node_ = std::move(n);
  return e;
}

Expr Expr::param(std::string name) {
  auto n = std::make_shared<Node>();
  n->op = Op::Param;
  n->free.insert(name);
  n->name = std::move(name);
  Expr e;
  e.node_ = std::move(n);
  return e;
}

Expr Expr::unary(Op op, Expr operand) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->free = operand.free_params();
  n->operands.push_back(std::move(operand));
  Expr e;
  e.node_ = std::move(n);
  return e;
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->free = lhs.free_params();
  n->free.insert(rhs.free_params().begin(), rhs.free_params().end());
  n->operands.push_back(std::move(lhs));
  n->operands.push_back(std::move(rhs));
  Expr e;
  e.node_ = std::move(n);
  return e;
}

Expr Expr::conditional(Expr cond, Expr then, Expr otherwise) {
  auto n = std::make_shared<Node>();
  n->op = Op::Cond;
  for (const Expr* x : {&cond, &then, &otherwise}) n->free.insert(x->free_params().begin(), x->free_params().end());
  n->operands = {std::move(cond), std::move(then), std::move(otherwise)};
  Expr e;
  e.node_ = std::move(n);
  return e;
}

Expr::Op Expr::op() const { return node_ ? node_->op : Op::Literal; }
const Value& Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
const Expr& Expr::operand(std::size_t i) const { return node_->operands.at(i); }
std::size_t Expr::arity() const { return node_ ? node_->operands.size() : 0; }

const std::set<std::string, std::less<>>& Expr::free_params() const {
  static const std::set<std::string, std::less<>> none;
  return node_ ? node_->free : none;
}

Value Expr::eval(const Env& env) const {
  if (!node_) throw EvalError("empty expression");
  const Node& n = *node_;
  switch (n.op) {
  case Op::Literal: return n.value;
  case Op::Param: {
    if (const Value* v = env.lookup(n.name)) return *v;
    throw EvalError("unbound parameter '" + n.name + "'");
  }
  case Op::Not: return Value(!require_bool(n.operands[0].eval(env), "'!'"));
  case Op::And: {
    if (!require_bool(n.operands[0].eval(env), "'&&'")) return Value(false);
    return Value(require_bool(n.operands[1].eval(env), "'&&'"));
  }
  case Op::Or: {
    if (require_bool(n.operands[0].eval(env), "'||'")) return Value(true);
    return Value(require_bool(n.operands[1].eval(env), "'||'"));
  }
  case Op::Cond:
    return require_bool(n.operands[0].eval(env), "'?:'") ? n.operands[1].eval(env) : n.operands[2].eval(env);
  default: break;
  }

  const Value a = n.operands[0].eval(env);
  const Value b = n.operands[1].eval(env);
  switch (n.op) {
  case Op::Add:
    if (a.is_integer() && b.is_integer()) {
      std::int64_t r = 0;
      if (__builtin_add_overflow(a.as_integer(), b.as_integer(), &r)) throw EvalError("integer overflow in '+'");
      return Value(r);
    }
    if (a.is_string() || b.is_string()) return Value(a.text() + b.text());
    mismatch(n.op, a, b);
  case Op::Eq:
  case Op::Ne:
    if (a.kind() != b.kind()) mismatch(n.op, a, b);
    return Value((a == b) == (n.op == Op::Eq));
  case Op::Lt:
  case Op::Gt:
  case Op::Le:
  case Op::Ge: {
    if (a.kind() != b.kind() || a.is_boolean()) mismatch(n.op, a, b);
    const auto c = a <=> b;
    switch (n.op) {
    case Op::Lt: return Value(c < 0);
    case Op::Gt: return Value(c > 0);
    case Op::Le: return Value(c <= 0);
    default: return Value(c >= 0);
    }
  }
  default: throw EvalError("malformed expression");
  }
}

std::string Expr::print() const {
  if (!node_) return "";
  const Node& n = *node_;
  auto sub = [](const Expr& e) {
    const bool atomic = e.op() == Op::Literal || e.op() == Op::Param || e.op() == Op::Not;
    return atomic ? e.print() : "(" + e.print() + ")";
  };
  switch (n.op) {
  case Op::Literal: return n.value.literal();
  case Op::Param: return n.name;
  case Op::Not: return "!" + sub(n.operands[0]);
  case Op::Cond: return sub(n.operands[0]) + " ? " + sub(n.operands[1]) + " : " + sub(n.operands[2]);
  default: return sub(n.operands[0]) + " " + std::string(symbol(n.op)) + " " + sub(n.operands[1]);
  }
}

namespace {

class ExprParser {
public:
  explicit ExprParser(text::TokenStream& in) : in_(in) {}

  Expr ternary() {
    Expr c = disjunction();
    if (!in_.accept_punct("?")) return c;
    Expr t = ternary();
    in_.expect_punct(":");
    Expr f = ternary();
    return Expr::conditional(std::move(c), std::move(t), std::move(f));
  }

private:
  Expr disjunction() {
    Expr e = conjunction();
    while (in_.accept_punct("||")) e = Expr::binary(Expr::Op::Or, std::move(e), conjunction());
    return e;
  }
  Expr conjunction() {
    Expr e = equality();
    while (in_.accept_punct("&&")) e = Expr::binary(Expr::Op::And, std::move(e), equality());
    return e;
  }
  Expr equality() {
    Expr e = comparison();
    for (;;) {
      if (in_.accept_punct("==")) e = Expr::binary(Expr::Op::Eq, std::move(e), comparison());
      else if (in_.accept_punct("!=")) e = Expr::binary(Expr::Op::Ne, std::move(e), comparison());
      else return e;
    }
  }
  Expr comparison() {
    Expr e = sum();
    for (;;) {
      if (in_.accept_punct("<")) e = Expr::binary(Expr::Op::Lt, std::move(e), sum());
      else if (in_.accept_punct(">")) e = Expr::binary(Expr::Op::Gt, std::move(e), sum());
      else if (in_.accept_punct("<=")) e = Expr::binary(Expr::Op::Le, std::move(e), sum());
      else if (in_.accept_punct(">=")) e = Expr::binary(Expr::Op::Ge, std::move(e), sum());
      else return e;
    }
  }
  Expr sum() {
    Expr e = unary();
    while (in_.accept_punct("+")) e = Expr::binary(Expr::Op::Add, std::move(e), unary());
    return e;
  }
  Expr unary() {
    if (in_.accept_punct("!")) return Expr::unary(Expr::Op::Not, unary());
    return primary();
  }
  Expr primary() {
    const auto& t = in_.peek();
    switch (t.kind) {
    case text::TokenKind::String: return Expr::literal(Value(in_.next().text));
    case text::TokenKind::Integer: return Expr::literal(Value(in_.expect_integer()));
    case text::TokenKind::Identifier: {
      std::string name = in_.next().text;
      if (name == "true") return Expr::literal(Value(true));
      if (name == "false") return Expr::literal(Value(false));
      return Expr::param(std::move(name));
    }
    case text::TokenKind::Punct:
      if (t.text == "-" && in_.peek(1).kind == text::TokenKind::Integer) return Expr::literal(Value(in_.expect_integer()));
      if (t.text == "(") {
        in_.next();
        Expr e = ternary();
        in_.expect_punct(")");
        return e;
      }
      break;
    case text::TokenKind::End: break;
    }
    in_.unexpected("expression (literal, parameter, '!' or '(')");
  }

  text::TokenStream& in_;
};

} // namespace

Expr parse_expr(text::TokenStream& in) { return ExprParser(in).ternary(); }

Expr parse_expr(std::string_view source) {
  text::TokenStream in(text::tokenize(source));
  Expr e = parse_expr(in);
  if (!in.at_end()) in.unexpected("end of expression");
  return e;
}

} // namespace gt
