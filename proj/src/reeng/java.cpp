#include "gt/reeng/java.hpp"

#include "gt/errors.hpp"
#include "gt/lexer.hpp"

#include <map>

namespace gt::reeng {

namespace {

using text::Token;
using text::TokenKind;
using text::TokenStream;

struct PendingLink {
  NodeId node;
  RefId ref;
  std::string target;
  Token at;
  std::string file;
};

class JavaParser {
public:
  JavaParser(InstanceGraph& g, std::vector<PendingLink>& links, std::map<std::string, NodeId>& classes)
      : g_(g), mm_(g.metamodel()), links_(links), classes_(classes) {
    auto ref = [&](std::string_view type, std::string_view name) {
      return mm_.find_reference(mm_.type_id(type), name)->id;
    };
    auto attr = [&](std::string_view type, std::string_view name) {
      return mm_.find_attribute(mm_.type_id(type), name)->id;
    };
    statements_ = ref("Block", "statements");
    methods_ = ref("Class", "methods");
    extends_ = ref("Class", "extends");
    expression_ = ref("ExpressionStatement", "expression");
    then_ = ref("Condition", "then");
    else_ = ref("Condition", "else");
    cases_ = ref("Switch", "cases");
    catches_ = ref("TryBlock", "catches");
    finally_ = ref("TryBlock", "finallyBlock");
    instantiates_ = ref("NewConstructorCall", "instantiates");
    argument_ = ref("MethodCall", "argument");
    name_ = attr("Class", "name");
    abstract_ = attr("Class", "abstract");
    label_ = attr("SwitchCase", "label");
    exception_ = attr("CatchBlock", "exceptionType");
    method_name_ = attr("MethodCall", "methodName");
    value_ = attr("StringLiteral", "value");
  }

  void parse(const JavaSource& src) {
    file_ = src.name;
    TokenStream in(text::tokenize(src.text, src.name), src.name);
    in_ = &in;
    while (!in.at_end()) parse_class();
    in_ = nullptr;
  }

private:
  void skip_modifiers() {
    while (in_->is_keyword("public") || in_->is_keyword("private") || in_->is_keyword("protected") ||
           in_->is_keyword("static") || in_->is_keyword("final"))
      in_->next();
  }

  NodeId make(std::string_view type) { return g_.create_node(mm_.type_id(type)); }

  void parse_class() {
    skip_modifiers();
    const bool is_abstract = in_->accept_keyword("abstract");
    skip_modifiers();
    in_->expect_keyword("class");
    const Token at = in_->peek();
    const std::string name = in_->expect_identifier("class name");
    if (classes_.contains(name)) in_->fail_at(at, "class '" + name + "' is declared twice");
    const NodeId c = make("Class");
    classes_[name] = c;
    g_.set_attribute(c, name_, Value(name));
    g_.set_attribute(c, abstract_, Value(is_abstract));
    if (in_->accept_keyword("extends")) {
      const Token st = in_->peek();
      links_.push_back({c, extends_, in_->expect_identifier("superclass name"), st, file_});
    }
    in_->expect_punct("{");
    while (!in_->accept_punct("}")) parse_method(c);
  }

  void parse_method(NodeId c) {
    skip_modifiers();
    in_->expect_keyword("void");
    const std::string name = in_->expect_identifier("method name");
    in_->expect_punct("(");
    in_->expect_punct(")");
    const NodeId m = make("ClassMethod");
    g_.set_attribute(m, name_, Value(name));
    g_.add_edge(c, methods_, m);
    parse_block_into(m);
  }

  void parse_block_into(NodeId container) {
    in_->expect_punct("{");
    while (!in_->accept_punct("}")) parse_statement(container);
  }

  NodeId block(NodeId owner, RefId ref) {
    const NodeId b = make("Block");
    g_.add_edge(owner, ref, b);
    parse_block_into(b);
    return b;
  }

  void skip_parenthesized() {
    in_->expect_punct("(");
    int depth = 1;
    while (depth > 0) {
      if (in_->at_end()) in_->unexpected("')'");
      const Token& t = in_->next();
      if (t.kind != TokenKind::Punct) continue;
      if (t.text == "(") ++depth;
      else if (t.text == ")") --depth;
    }
  }

  void parse_statement(NodeId container) {
    const Token at = in_->peek();
    if (in_->accept_keyword("break") || in_->accept_keyword("return")) {
      in_->expect_punct(";");
      return;
    }
    if (in_->is_keyword("if")) {
      parse_if(container);
      return;
    }
    if (in_->accept_keyword("switch")) {
      const NodeId sw = make("Switch");
      g_.add_edge(container, statements_, sw);
      skip_parenthesized();
      in_->expect_punct("{");
      std::optional<NodeId> current;
      while (!in_->accept_punct("}")) {
        if (in_->accept_keyword("case") || in_->is_keyword("default")) {
          std::string label;
          if (in_->accept_keyword("default")) {
            label = "default";
          } else {
            const Token& t = in_->peek();
            if (t.kind == TokenKind::Identifier || t.kind == TokenKind::String) label = in_->next().text;
            else label = std::to_string(in_->expect_integer());
          }
          in_->expect_punct(":");
          current = make("SwitchCase");
          g_.set_attribute(*current, label_, Value(label));
          g_.add_edge(sw, cases_, *current);
        } else {
          if (!current) in_->unexpected("'case' or 'default'");
          parse_statement(*current);
        }
      }
      return;
    }
    if (in_->accept_keyword("try")) {
      const NodeId t = make("TryBlock");
      g_.add_edge(container, statements_, t);
      parse_block_into(t);
      bool handled = false;
      while (in_->accept_keyword("catch")) {
        handled = true;
        in_->expect_punct("(");
        const std::string type = in_->expect_identifier("exception type");
        in_->expect_identifier("exception variable");
        in_->expect_punct(")");
        const NodeId cb = make("CatchBlock");
        g_.set_attribute(cb, exception_, Value(type));
        g_.add_edge(t, catches_, cb);
        parse_block_into(cb);
      }
      if (in_->accept_keyword("finally")) {
        handled = true;
        block(t, finally_);
      }
      if (!handled) in_->fail_at(at, "'try' needs a 'catch' or 'finally'");
      return;
    }
    if (in_->accept_keyword("new")) {
      const Token nt = in_->peek();
      const std::string type = in_->expect_identifier("class name");
      in_->expect_punct("(");
      in_->expect_punct(")");
      in_->expect_punct(";");
      const NodeId es = make("ExpressionStatement");
      g_.add_edge(container, statements_, es);
      const NodeId call = make("NewConstructorCall");
      g_.add_edge(es, expression_, call);
      links_.push_back({call, instantiates_, type, nt, file_});
      return;
    }
    if (in_->peek().kind == TokenKind::Identifier && in_->is_punct("(", 1)) {
      const std::string name = in_->next().text;
      in_->expect_punct("(");
      std::optional<std::string> arg;
      if (!in_->is_punct(")")) arg = in_->expect_string();
      in_->expect_punct(")");
      in_->expect_punct(";");
      const NodeId es = make("ExpressionStatement");
      g_.add_edge(container, statements_, es);
      const NodeId call = make("MethodCall");
      g_.set_attribute(call, method_name_, Value(name));
      g_.add_edge(es, expression_, call);
      if (arg) {
        const NodeId lit = make("StringLiteral");
        g_.set_attribute(lit, value_, Value(*arg));
        g_.add_edge(call, argument_, lit);
      }
      return;
    }
    in_->unexpected("statement");
  }

  void parse_if(NodeId container) {
    in_->expect_keyword("if");
    const NodeId cond = make("Condition");
    g_.add_edge(container, statements_, cond);
    skip_parenthesized();
    block(cond, then_);
    if (!in_->accept_keyword("else")) return;
    if (in_->is_keyword("if")) {
      const NodeId b = make("Block");
      g_.add_edge(cond, else_, b);
      parse_if(b);
    } else {
      block(cond, else_);
    }
  }

  InstanceGraph& g_;
  const Metamodel& mm_;
  std::vector<PendingLink>& links_;
  std::map<std::string, NodeId>& classes_;
  TokenStream* in_ = nullptr;
  std::string file_;
  RefId statements_{}, methods_{}, extends_{}, expression_{}, then_{}, else_{}, cases_{}, catches_{}, finally_{},
      instantiates_{}, argument_{};
  AttrId name_{}, abstract_{}, label_{}, exception_{}, method_name_{}, value_{};
};

} // namespace

InstanceGraph parse_java(const std::vector<JavaSource>& sources, MetamodelPtr mm) {
  InstanceGraph g(std::move(mm));
  std::vector<PendingLink> links;
  std::map<std::string, NodeId> classes;
  JavaParser parser(g, links, classes);
  for (const auto& src : sources) parser.parse(src);
  for (const auto& l : links) {
    auto it = classes.find(l.target);
    if (it == classes.end()) throw ParseError("unresolved class '" + l.target + "'", l.at.pos, l.file);
    g.add_edge(l.node, l.ref, it->second);
  }
  return g;
}

} // namespace gt::reeng
