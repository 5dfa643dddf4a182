#pragma once

#include "gt/lexer.hpp"
#include "gt/value.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gt {

/// Name lookup used during evaluation. Returns nullptr for unbound names.
class Env {
public:
  virtual ~Env() = default;
  virtual const Value* lookup(std::string_view name) const = 0;
};

class MapEnv final : public Env {
public:
  MapEnv() = default;
  MapEnv(std::initializer_list<std::pair<const std::string, Value>> init) : values_(init) {}

  void set(std::string name, Value v) { values_[std::move(name)] = std::move(v); }
  const Value* lookup(std::string_view name) const override {
    auto it = values_.find(name);
    return it == values_.end() ? nullptr : &it->second;
  }

private:
  std::map<std::string, Value, std::less<>> values_;
};

/// Immutable expression tree for attribute calculations and checks.
///
/// Grammar, lowest precedence first:
///   ternary  := or ( '?' ternary ':' ternary )?
///   or       := and ( '||' and )*
///   and      := equality ( '&&' equality )*
///   equality := compare ( ('==' | '!=') compare )*
///   compare  := sum ( ('<' | '>' | '<=' | '>=') sum )*
///   sum      := unary ( '+' unary )*
///   unary    := '!' unary | primary
///   primary  := STRING | '-'? INTEGER | 'true' | 'false' | IDENT | '(' ternary ')'
class Expr {
public:
  enum class Op { Literal, Param, Not, Add, Eq, Ne, Lt, Gt, Le, Ge, And, Or, Cond };

  Expr() = default; // empty; evaluates to an error

  static Expr literal(Value v);
  static Expr param(std::string name);
  static Expr unary(Op op, Expr operand);
  static Expr binary(Op op, Expr lhs, Expr rhs);
  static Expr conditional(Expr cond, Expr then, Expr otherwise);

  bool empty() const noexcept { return node_ == nullptr; }
  Op op() const;
  const Value& value() const;       // Literal
  const std::string& name() const;  // Param
  const Expr& operand(std::size_t i) const;
  std::size_t arity() const;

  /// Parameter names referenced anywhere in the tree.
  const std::set<std::string, std::less<>>& free_params() const;

  Value eval(const Env& env) const;

  /// Canonical text; binary and ternary subexpressions are parenthesized.
  std::string print() const;

  friend bool operator==(const Expr& a, const Expr& b) { return a.print() == b.print(); }

private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

Expr parse_expr(std::string_view text);
/// Parses an expression from an existing token stream (for embedding in other formats).
Expr parse_expr(text::TokenStream& in);

} // namespace gt
