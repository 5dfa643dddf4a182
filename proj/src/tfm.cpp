#include "gt/tfm.hpp"

#include "gt/errors.hpp"
#include "gt/lexer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace gt {

namespace {

using text::Token;
using text::TokenKind;
using text::TokenStream;
using Role = RuleBuilder::Role;

struct Stereotype {
  Role role = Role::Preserve;
  std::string group;
  bool given = false;
};

struct PendingTarget {
  Token at;
  std::string name;
};

struct PendingMapping {
  Token at;
  std::string src_owner, src_param, trg_owner, trg_param;
};

struct PendingUnit {
  Token at;
  Unit unit;
  std::vector<PendingTarget> children;
  PendingTarget kernel;
  struct Multi {
    PendingTarget rule;
    std::vector<std::pair<std::string, std::string>> embed;
    std::vector<Token> embed_at;
  };
  std::vector<Multi> multis;
  std::vector<PendingMapping> mappings;
};

class TfmParser {
public:
  TfmParser(std::string_view src, MetamodelPtr mm, const std::string& file, std::vector<Diagnostic>* warnings)
      : in_(text::tokenize(src, file), file), mm_(std::move(mm)), warnings_(warnings) {}

  Transformation parse() {
    Transformation t;
    t.metamodel = mm_;
    in_.expect_keyword("transformation");
    t.name = in_.expect_identifier("transformation name");
    in_.expect_punct(";");
    while (in_.is_keyword("import")) {
      in_.next();
      const Token at = in_.peek();
      const std::string name = in_.expect_identifier("metamodel name");
      const auto& parts = mm_->parts();
      if (std::find(parts.begin(), parts.end(), name) == parts.end())
        in_.fail_at(at, "metamodel '" + name + "' is not available");
      in_.expect_punct(";");
    }
    std::optional<PendingTarget> main;
    std::set<std::string> names;
    while (!in_.at_end()) {
      const Token at = in_.peek();
      if (in_.accept_keyword("main")) {
        if (main) in_.fail_at(at, "main unit declared twice");
        main = PendingTarget{in_.peek(), in_.expect_identifier("unit name")};
        in_.expect_punct(";");
        continue;
      }
      std::string name;
      if (in_.is_keyword("rule")) {
        t.rules.push_back(parse_rule());
        name = t.rules.back().name;
      } else if (in_.is_keyword("unit")) {
        units_.push_back(parse_unit());
        name = units_.back().unit.name;
      } else {
        in_.unexpected("'rule', 'unit' or 'main'");
      }
      if (!names.insert(name).second) in_.fail_at(at, "'" + name + "' is declared twice");
    }
    if (!main) in_.fail("missing 'main <unit>;' declaration");

    for (auto& pu : units_) t.units.push_back(pu.unit);
    for (std::size_t i = 0; i < units_.size(); ++i) resolve(t, units_[i], t.units[i]);
    check_cycles(t);

    auto m = t.find(main->name);
    if (!m) in_.fail_at(main->at, "main unit '" + main->name + "' is not declared");
    t.main = *m;
    return t;
  }

private:
  // --- rules ---------------------------------------------------------------

  std::vector<Parameter> parse_params() {
    std::vector<Parameter> out;
    in_.expect_punct("(");
    if (in_.accept_punct(")")) return out;
    do {
      Parameter p;
      if (in_.accept_keyword("in")) p.mode = ParamMode::In;
      else if (in_.accept_keyword("out")) p.mode = ParamMode::Out;
      else if (in_.accept_keyword("inout")) p.mode = ParamMode::InOut;
      const Token at = in_.peek();
      p.name = in_.expect_identifier("parameter name");
      for (const auto& q : out)
        if (q.name == p.name) in_.fail_at(at, "parameter '" + p.name + "' declared twice");
      out.push_back(std::move(p));
    } while (in_.accept_punct(","));
    in_.expect_punct(")");
    return out;
  }

  Stereotype parse_stereotype() {
    Stereotype s;
    if (!in_.accept_punct("<<")) return s;
    s.given = true;
    const Token at = in_.peek();
    const std::string kw = in_.expect_identifier("stereotype");
    if (kw == "preserve") s.role = Role::Preserve;
    else if (kw == "create") s.role = Role::Create;
    else if (kw == "delete") s.role = Role::Delete;
    else if (kw == "forbid") s.role = Role::Forbid;
    else if (kw == "require") s.role = Role::Require;
    else in_.fail_at(at, "unknown stereotype '" + kw + "'");
    if (in_.accept_punct("[")) {
      if (s.role != Role::Forbid && s.role != Role::Require) in_.fail_at(at, "only forbid and require take a group");
      s.group = in_.expect_identifier("group name");
      in_.expect_punct("]");
    }
    in_.expect_punct(">>");
    return s;
  }

  /// Runs a builder call, converting its errors to parse errors at `at`.
  template <class F>
  void guarded(const Token& at, F&& f) {
    try {
      f();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      in_.fail_at(at, e.what());
    }
  }

  Value parse_literal() {
    const Token& t = in_.peek();
    if (t.kind == TokenKind::String) return Value(in_.next().text);
    if (in_.accept_keyword("true")) return Value(true);
    if (in_.accept_keyword("false")) return Value(false);
    return Value(in_.expect_integer());
  }

  bool at_literal() const {
    const Token& t = in_.peek();
    return t.kind == TokenKind::String || t.kind == TokenKind::Integer || in_.is_keyword("true") ||
           in_.is_keyword("false") || (in_.is_punct("-") && in_.peek(1).kind == TokenKind::Integer);
  }

  /// `{ attr a = ...; ... }` on a rule node.
  void parse_node_attrs(RuleBuilder& b, const std::string& id, bool created) {
    if (!in_.accept_punct("{")) {
      in_.expect_punct(";");
      return;
    }
    while (!in_.accept_punct("}")) {
      in_.expect_keyword("attr");
      const Token at = in_.peek();
      const std::string name = in_.expect_identifier("attribute name");
      in_.expect_punct("=");
      if (created) {
        Expr e = parse_expr(in_);
        guarded(at, [&] { b.assign(id, name, std::move(e)); });
      } else if (in_.accept_keyword("check")) {
        in_.expect_punct("(");
        Expr e = parse_expr(in_);
        in_.expect_punct(")");
        guarded(at, [&] { b.attr_check(id, name, std::move(e)); });
      } else if (at_literal()) {
        Value v = parse_literal();
        guarded(at, [&] { b.attr_const(id, name, std::move(v)); });
      } else {
        std::string p = in_.expect_identifier("literal, parameter or check(...)");
        guarded(at, [&] { b.attr_param(id, name, std::move(p)); });
      }
      in_.expect_punct(";");
    }
  }

  /// `graph G { node x : T { ... }; node lhsNode; edge a -r-> b; }`
  RuleBuilder::GraphSpec parse_graph_spec() {
    RuleBuilder::GraphSpec spec;
    in_.expect_punct("{");
    while (!in_.accept_punct("}")) {
      if (in_.accept_keyword("node")) {
        RuleBuilder::GraphSpec::SpecNode n;
        n.id = in_.expect_identifier("node id");
        if (in_.accept_punct(":")) n.type = in_.expect_identifier("type name");
        if (in_.accept_keyword("bind")) n.param = in_.expect_identifier("parameter name");
        if (in_.accept_punct("{")) {
          while (!in_.accept_punct("}")) {
            in_.expect_keyword("attr");
            AttrPattern a;
            a.name = in_.expect_identifier("attribute name");
            in_.expect_punct("=");
            if (in_.accept_keyword("check")) {
              in_.expect_punct("(");
              a.kind = AttrPattern::Kind::Check;
              a.check = parse_expr(in_);
              in_.expect_punct(")");
            } else if (at_literal()) {
              a.kind = AttrPattern::Kind::Constant;
              a.constant = parse_literal();
            } else {
              a.kind = AttrPattern::Kind::Param;
              a.param = in_.expect_identifier("literal, parameter or check(...)");
            }
            in_.expect_punct(";");
            n.attrs.push_back(std::move(a));
          }
        } else {
          in_.expect_punct(";");
        }
        spec.nodes.push_back(std::move(n));
      } else if (in_.accept_keyword("edge")) {
        auto [s, r, t] = parse_edge_head();
        spec.edges.emplace_back(std::move(s), std::move(r), std::move(t));
        in_.expect_punct(";");
      } else {
        in_.unexpected("'node', 'edge' or '}'");
      }
    }
    return spec;
  }

  std::tuple<std::string, std::string, std::string> parse_edge_head() {
    std::string s = in_.expect_identifier("source node");
    in_.expect_punct("-");
    std::string r = in_.expect_identifier("reference name");
    in_.expect_punct("->");
    std::string t = in_.expect_identifier("target node");
    return {std::move(s), std::move(r), std::move(t)};
  }

  ConditionPtr parse_formula(const std::map<std::string, ConditionPtr>& graphs) {
    std::function<ConditionPtr()> disj, conj, unary;
    unary = [&]() -> ConditionPtr {
      if (in_.accept_punct("!")) return Condition::negate(unary());
      if (in_.accept_punct("(")) {
        auto f = disj();
        in_.expect_punct(")");
        return f;
      }
      if (in_.accept_keyword("true")) return Condition::always();
      const Token at = in_.peek();
      const std::string name = in_.expect_identifier("graph name, 'true', '!' or '('");
      auto it = graphs.find(name);
      if (it == graphs.end()) in_.fail_at(at, "unknown graph '" + name + "'");
      return it->second;
    };
    conj = [&]() {
      auto f = unary();
      while (in_.accept_punct("&&")) f = Condition::both(f, unary());
      return f;
    };
    disj = [&]() {
      auto f = conj();
      while (in_.accept_punct("||")) f = Condition::either(f, conj());
      return f;
    };
    return disj();
  }

  Rule parse_rule() {
    in_.expect_keyword("rule");
    const Token at = in_.peek();
    const std::string name = in_.expect_identifier("rule name");
    RuleBuilder b(mm_, name);
    for (auto& p : parse_params()) b.param(p.name, p.mode);
    if (in_.accept_keyword("noninjective")) b.injective(false);
    std::map<std::string, ConditionPtr> graphs;
    in_.expect_punct("{");
    while (!in_.accept_punct("}")) {
      const Token st = in_.peek();
      if (in_.accept_keyword("node")) {
        const Token idt = in_.peek();
        const std::string id = in_.expect_identifier("node id");
        std::string type;
        if (in_.accept_punct(":")) type = in_.expect_identifier("type name");
        const Stereotype s = parse_stereotype();
        if (type.empty()) {
          if (s.role != Role::Forbid && s.role != Role::Require)
            in_.fail_at(idt, "node '" + id + "' needs a type unless it restates a node in a forbid/require group");
          guarded(idt, [&] { b.condition_node(id, s.role, s.group); });
        } else {
          guarded(idt, [&] { b.node(id, type, s.role, s.group); });
        }
        if (in_.accept_keyword("bind")) {
          std::string p = in_.expect_identifier("parameter name");
          guarded(idt, [&] { b.bind(id, std::move(p)); });
        }
        parse_node_attrs(b, id, s.role == Role::Create);
      } else if (in_.accept_keyword("edge")) {
        auto [s, r, t] = parse_edge_head();
        const Stereotype stereo = parse_stereotype();
        std::optional<Role> role;
        if (stereo.given) role = stereo.role;
        guarded(st, [&] { b.edge(s, r, t, role, stereo.group); });
        in_.expect_punct(";");
      } else if (in_.accept_keyword("assign")) {
        const std::string node = in_.expect_identifier("node id");
        in_.expect_punct(".");
        const std::string attr = in_.expect_identifier("attribute name");
        in_.expect_punct("=");
        Expr e = parse_expr(in_);
        guarded(st, [&] { b.assign(node, attr, std::move(e)); });
        in_.expect_punct(";");
      } else if (in_.accept_keyword("graph")) {
        const Token gt = in_.peek();
        const std::string gname = in_.expect_identifier("graph name");
        if (graphs.contains(gname)) in_.fail_at(gt, "graph '" + gname + "' declared twice");
        auto spec = parse_graph_spec();
        guarded(gt, [&] { graphs[gname] = b.graph_condition(spec); });
      } else if (in_.accept_keyword("condition")) {
        auto f = parse_formula(graphs);
        b.condition(std::move(f));
        in_.expect_punct(";");
      } else {
        in_.unexpected("'node', 'edge', 'assign', 'graph', 'condition' or '}'");
      }
    }
    Rule rule;
    guarded(at, [&] { rule = b.build(); });
    std::string errors;
    for (auto& d : validate_rule(rule, *mm_)) {
      if (d.severity == Diagnostic::Severity::Error) {
        errors += (errors.empty() ? "" : "; ") + d.message;
      } else if (warnings_) {
        d.message = location(at) + d.message;
        warnings_->push_back(std::move(d));
      }
    }
    if (!errors.empty()) in_.fail_at(at, errors);
    return rule;
  }

  std::string location(const Token& t) const {
    return (in_.file().empty() ? "" : in_.file() + ":") + std::to_string(t.pos.line) + ":" +
           std::to_string(t.pos.column) + ": ";
  }

  // --- units ---------------------------------------------------------------

  PendingTarget target() {
    const Token at = in_.peek();
    return {at, in_.expect_identifier("rule or unit name")};
  }

  PendingUnit parse_unit() {
    in_.expect_keyword("unit");
    PendingUnit pu;
    const Token kt = in_.peek();
    const std::string kind = in_.expect_identifier("unit kind");
    if (kind == "sequential") pu.unit.kind = UnitKind::Sequential;
    else if (kind == "priority") pu.unit.kind = UnitKind::Priority;
    else if (kind == "counted") pu.unit.kind = UnitKind::Counted;
    else if (kind == "conditional") pu.unit.kind = UnitKind::Conditional;
    else if (kind == "independent") pu.unit.kind = UnitKind::Independent;
    else if (kind == "amalgamation") pu.unit.kind = UnitKind::Amalgamation;
    else in_.fail_at(kt, "unknown unit kind '" + kind + "'");
    pu.at = in_.peek();
    pu.unit.name = in_.expect_identifier("unit name");
    pu.unit.params = parse_params();
    in_.expect_punct("{");

    bool has_count = false;
    std::optional<PendingTarget> body, if_, then_, else_;
    while (!in_.accept_punct("}")) {
      const Token st = in_.peek();
      const std::string kw = in_.expect_identifier("unit statement");
      auto only = [&](UnitKind k) {
        if (pu.unit.kind != k) in_.fail_at(st, "'" + kw + "' is not allowed in a " + kind + " unit");
      };
      auto once = [&](std::optional<PendingTarget>& slot) {
        if (slot) in_.fail_at(st, "'" + kw + "' given twice");
        slot = target();
      };
      if (kw == "do") {
        if (pu.unit.kind != UnitKind::Sequential && pu.unit.kind != UnitKind::Priority &&
            pu.unit.kind != UnitKind::Independent)
          in_.fail_at(st, "'do' is not allowed in a " + kind + " unit");
        do pu.children.push_back(target());
        while (in_.accept_punct(","));
      } else if (kw == "body") {
        only(UnitKind::Counted);
        once(body);
      } else if (kw == "count") {
        only(UnitKind::Counted);
        const Token ct = in_.peek();
        pu.unit.count = in_.expect_integer();
        if (pu.unit.count < -1) in_.fail_at(ct, "count must be -1 or non-negative");
        has_count = true;
      } else if (kw == "if") {
        only(UnitKind::Conditional);
        once(if_);
      } else if (kw == "then") {
        only(UnitKind::Conditional);
        once(then_);
      } else if (kw == "else") {
        only(UnitKind::Conditional);
        once(else_);
      } else if (kw == "kernel") {
        only(UnitKind::Amalgamation);
        if (!pu.kernel.name.empty()) in_.fail_at(st, "'kernel' given twice");
        pu.kernel = target();
      } else if (kw == "multi") {
        only(UnitKind::Amalgamation);
        PendingUnit::Multi m;
        m.rule = target();
        if (in_.accept_keyword("embed")) {
          do {
            m.embed_at.push_back(in_.peek());
            std::string k = in_.expect_identifier("kernel node");
            in_.expect_punct("->");
            std::string x = in_.expect_identifier("multi node");
            m.embed.emplace_back(std::move(k), std::move(x));
          } while (in_.accept_punct(","));
        }
        pu.multis.push_back(std::move(m));
      } else if (kw == "map") {
        PendingMapping m{st, {}, {}, {}, {}};
        parse_path(m.src_owner, m.src_param);
        in_.expect_punct("->");
        parse_path(m.trg_owner, m.trg_param);
        pu.mappings.push_back(std::move(m));
      } else {
        in_.fail_at(st, "unknown unit statement '" + kw + "'");
      }
      in_.expect_punct(";");
    }

    switch (pu.unit.kind) {
    case UnitKind::Sequential:
    case UnitKind::Priority:
    case UnitKind::Independent:
      if (pu.children.empty()) in_.fail_at(pu.at, "unit '" + pu.unit.name + "' needs a 'do' list");
      break;
    case UnitKind::Counted:
      if (!body || !has_count) in_.fail_at(pu.at, "counted unit '" + pu.unit.name + "' needs 'body' and 'count'");
      pu.children.push_back(*body);
      break;
    case UnitKind::Conditional:
      if (!if_ || !then_) in_.fail_at(pu.at, "conditional unit '" + pu.unit.name + "' needs 'if' and 'then'");
      pu.children.push_back(*if_);
      pu.children.push_back(*then_);
      if (else_) pu.children.push_back(*else_);
      break;
    case UnitKind::Amalgamation:
      if (pu.kernel.name.empty()) in_.fail_at(pu.at, "amalgamation unit '" + pu.unit.name + "' needs a 'kernel'");
      break;
    }
    return pu;
  }

  void parse_path(std::string& owner, std::string& param) {
    std::string first = in_.expect_identifier("parameter");
    if (in_.accept_punct(".")) {
      owner = std::move(first);
      param = in_.expect_identifier("parameter");
    } else {
      param = std::move(first);
    }
  }

  // --- resolution ----------------------------------------------------------

  void resolve(const Transformation& t, const PendingUnit& pu, Unit& u) {
    auto lookup = [&](const PendingTarget& p) {
      auto c = t.find(p.name);
      if (!c) in_.fail_at(p.at, "unknown rule or unit '" + p.name + "'");
      return *c;
    };
    auto rule_only = [&](const PendingTarget& p) {
      auto c = lookup(p);
      if (c.kind != CallTarget::Kind::Rule) in_.fail_at(p.at, "'" + p.name + "' must be a rule");
      return c.index;
    };

    // Named participants whose parameters mappings may refer to.
    std::map<std::string, const std::vector<Parameter>*> owners;
    for (const auto& c : pu.children) {
      u.children.push_back(lookup(c));
      owners[c.name] = &t.params_of(u.children.back());
    }
    if (u.kind == UnitKind::Amalgamation) {
      u.kernel = rule_only(pu.kernel);
      const Rule& kernel = t.rules[u.kernel];
      owners[kernel.name] = &kernel.params;
      for (const auto& m : pu.multis) {
        MultiRule mr;
        mr.rule = rule_only(m.rule);
        const Rule& multi = t.rules[mr.rule];
        owners[multi.name] = &multi.params;
        for (std::size_t i = 0; i < m.embed.size(); ++i) {
          auto k = kernel.lhs.find(m.embed[i].first);
          auto x = multi.lhs.find(m.embed[i].second);
          if (!k) in_.fail_at(m.embed_at[i], "kernel rule has no LHS node '" + m.embed[i].first + "'");
          if (!x) in_.fail_at(m.embed_at[i], "multi rule has no LHS node '" + m.embed[i].second + "'");
          if (kernel.lhs.nodes[*k].type != multi.lhs.nodes[*x].type &&
              !mm_->conforms(kernel.lhs.nodes[*k].type, multi.lhs.nodes[*x].type))
            in_.fail_at(m.embed_at[i], "embedding maps '" + m.embed[i].first + "' to a node of incompatible type");
          mr.embedding.emplace_back(*k, *x);
        }
        u.multis.push_back(std::move(mr));
      }
    }

    for (const auto& m : pu.mappings) {
      auto check = [&](const std::string& owner, const std::string& param) {
        const std::vector<Parameter>* params = &u.params;
        if (!owner.empty()) {
          auto it = owners.find(owner);
          if (it == owners.end())
            in_.fail_at(m.at, "'" + owner + "' is not a child of unit '" + u.name + "'");
          params = it->second;
        }
        if (std::none_of(params->begin(), params->end(), [&](const Parameter& p) { return p.name == param; }))
          in_.fail_at(m.at, (owner.empty() ? "unit '" + u.name + "'" : "'" + owner + "'") + " has no parameter '" +
                                param + "'");
      };
      check(m.src_owner, m.src_param);
      check(m.trg_owner, m.trg_param);
      if (m.src_owner.empty() && m.trg_owner.empty())
        in_.fail_at(m.at, "a mapping must involve a child parameter");
      u.mappings.push_back({m.src_owner, m.src_param, m.trg_owner, m.trg_param});
    }
  }

  /// Recursion must pass through a conditional or sequential unit: removing
  /// their outgoing edges has to leave the unit reference graph acyclic.
  void check_cycles(const Transformation& t) {
    const std::size_t n = t.units.size();
    std::vector<int> state(n, 0); // 0 new, 1 on stack, 2 done
    std::function<void(std::size_t)> visit = [&](std::size_t i) {
      state[i] = 1;
      const Unit& u = t.units[i];
      if (u.kind != UnitKind::Conditional && u.kind != UnitKind::Sequential) {
        for (std::size_t c = 0; c < u.children.size(); ++c) {
          const auto& child = u.children[c];
          if (child.kind != CallTarget::Kind::Unit) continue;
          if (state[child.index] == 1)
            in_.fail_at(units_[i].children[c].at, "cyclic reference to '" + child.name +
                                                      "' must pass through a conditional or sequential unit");
          if (state[child.index] == 0) visit(child.index);
        }
      }
      state[i] = 2;
    };
    for (std::size_t i = 0; i < n; ++i)
      if (state[i] == 0) visit(i);
  }

  TokenStream in_;
  MetamodelPtr mm_;
  std::vector<Diagnostic>* warnings_;
  std::vector<PendingUnit> units_;
};

} // namespace

Transformation parse_transformation(std::string_view text, MetamodelPtr mm, const std::string& file,
                                    std::vector<Diagnostic>* warnings) {
  return TfmParser(text, std::move(mm), file, warnings).parse();
}

} // namespace gt
