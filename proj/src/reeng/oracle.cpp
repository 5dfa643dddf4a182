#include "gt/reeng/case.hpp"

#include "gt/errors.hpp"

#include <map>
#include <set>

namespace gt::reeng {

namespace {

class Oracle {
public:
  explicit Oracle(const InstanceGraph& model) : g_(model), mm_(model.metamodel()), out_(statemachine_metamodel()) {}

  InstanceGraph run() {
    if (auto problems = g_.validate(); !problems.empty()) throw ConformanceError(std::move(problems));
    machine_ = out_.create_node("StateMachine");

    const TypeId cls = mm_.type_id("Class");
    std::optional<NodeId> root;
    for (NodeId c : g_.extent(cls))
      if (g_.attribute(c, "name").as_string() == "State") {
        root = c;
        break;
      }
    if (!root) throw TransformFailed("no class named State");

    // Subclass tree, children by id.
    std::map<NodeId, std::vector<NodeId>> children;
    for (NodeId c : g_.extent(cls))
      for (NodeId super : g_.targets(c, "extends")) children[super].push_back(c);

    std::vector<NodeId> stack{*root};
    std::set<NodeId> seen{*root};
    std::vector<NodeId> hierarchy;
    while (!stack.empty()) {
      const NodeId c = stack.back();
      stack.pop_back();
      hierarchy.push_back(c);
      for (NodeId ch : children[c])
        if (seen.insert(ch).second) stack.push_back(ch);
    }
    std::sort(hierarchy.begin(), hierarchy.end());

    for (NodeId c : hierarchy) {
      if (g_.attribute(c, "abstract").as_boolean()) continue;
      const std::string& name = g_.attribute(c, "name").as_string();
      if (states_.contains(name)) continue;
      const NodeId s = out_.create_node("State");
      out_.set_attribute(s, "name", Value(name));
      out_.add_edge(machine_, "states", s);
      states_.emplace(name, s);
    }

    for (NodeId c : hierarchy) {
      if (g_.attribute(c, "abstract").as_boolean()) continue;
      const NodeId src = states_.at(g_.attribute(c, "name").as_string());
      for (NodeId m : g_.targets(c, "methods")) walk(m, src, g_.attribute(m, "name").as_string());
    }
    return std::move(out_);
  }

private:
  bool is(NodeId n, std::string_view type) const { return mm_.conforms(g_.type_of(n), mm_.type_id(type)); }

  void walk(NodeId n, NodeId src, const std::string& trigger) {
    if (is(n, "ExpressionStatement")) {
      transition(n, src, trigger);
      return;
    }
    if (is(n, "StatementListContainer"))
      for (NodeId s : g_.targets(n, "statements")) walk(s, src, trigger);
    if (is(n, "TryBlock")) {
      for (NodeId cb : g_.targets(n, "catches")) walk(cb, src, g_.attribute(cb, "exceptionType").as_string());
      for (NodeId b : g_.targets(n, "finallyBlock")) walk(b, src, trigger);
    }
    if (is(n, "Switch"))
      for (NodeId sc : g_.targets(n, "cases")) walk(sc, src, g_.attribute(sc, "label").as_string());
    if (is(n, "Condition")) {
      for (NodeId b : g_.targets(n, "then")) walk(b, src, trigger);
      for (NodeId b : g_.targets(n, "else")) walk(b, src, trigger);
    }
  }

  void transition(NodeId es, NodeId src, const std::string& trigger) {
    const auto expr = g_.targets(es, "expression");
    if (expr.empty() || !is(expr[0], "NewConstructorCall")) return;
    const auto cls = g_.targets(expr[0], "instantiates");
    if (cls.empty()) return;
    auto trg = states_.find(g_.attribute(cls[0], "name").as_string());
    if (trg == states_.end()) return;

    const NodeId t = out_.create_node("Transition");
    out_.add_edge(machine_, "transitions", t);
    out_.add_edge(t, "source", src);
    out_.add_edge(t, "target", trg->second);
    out_.set_attribute(t, "trigger", Value(trigger));
    out_.set_attribute(t, "action", Value(action_for(es)));
  }

  // First send("...") statement, in id order, within the statement's container.
  std::string action_for(NodeId es) const {
    const auto parent = g_.container(es);
    if (!parent) return {};
    std::optional<NodeId> best;
    std::string action;
    for (NodeId s : g_.targets(*parent, "statements")) {
      if (!is(s, "ExpressionStatement")) continue;
      const auto expr = g_.targets(s, "expression");
      if (expr.empty() || !is(expr[0], "MethodCall")) continue;
      if (g_.attribute(expr[0], "methodName").as_string() != "send") continue;
      const auto arg = g_.targets(expr[0], "argument");
      if (arg.empty() || !is(arg[0], "StringLiteral")) continue;
      if (!best || s < *best) {
        best = s;
        action = g_.attribute(arg[0], "value").as_string();
      }
    }
    return action;
  }

  const InstanceGraph& g_;
  const Metamodel& mm_;
  InstanceGraph out_;
  NodeId machine_{};
  std::map<std::string, NodeId, std::less<>> states_;
};

} // namespace

InstanceGraph oracle_extract(const InstanceGraph& model) { return Oracle(model).run(); }

} // namespace gt::reeng
