#include "gt/reeng/case.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gt::reeng {

std::string to_string(const TransitionKey& t) {
  return t.source + " -> " + t.target + " [trigger " + quote(t.trigger) + ", action " + quote(t.action) + "]";
}

bool DiffReport::empty() const noexcept {
  return states_only_left.empty() && states_only_right.empty() && transitions_only_left.empty() &&
         transitions_only_right.empty() && problems_left.empty() && problems_right.empty();
}

std::string DiffReport::describe() const {
  if (empty()) return "no differences\n";
  std::ostringstream os;
  for (const auto& p : problems_left) os << "problem (left): " << p << '\n';
  for (const auto& p : problems_right) os << "problem (right): " << p << '\n';
  for (const auto& s : states_only_left) os << "- state " << s << '\n';
  for (const auto& s : states_only_right) os << "+ state " << s << '\n';
  for (const auto& t : transitions_only_left) os << "- transition " << to_string(t) << '\n';
  for (const auto& t : transitions_only_right) os << "+ transition " << to_string(t) << '\n';
  return os.str();
}

namespace {

struct Summary {
  std::map<std::string, int> states; // name -> multiplicity
  std::multiset<TransitionKey> transitions;
  std::vector<std::string> problems;
};

std::string text_attr(const InstanceGraph& g, NodeId n, std::string_view name) {
  const Metamodel& mm = g.metamodel();
  const AttrFeature* f = mm.find_attribute(g.type_of(n), name);
  if (!f || !g.attribute(n, f->id).is_string()) return {};
  return g.attribute(n, f->id).as_string();
}

std::optional<std::string> endpoint(const InstanceGraph& g, NodeId t, std::string_view ref, Summary& s) {
  const Metamodel& mm = g.metamodel();
  const RefFeature* f = mm.find_reference(g.type_of(t), ref);
  const auto targets = f ? g.targets(t, f->id) : std::span<const NodeId>{};
  if (targets.size() != 1) {
    s.problems.push_back("transition " + std::to_string(raw(t)) + " has no " + std::string(ref) + " state");
    return std::nullopt;
  }
  return text_attr(g, targets[0], "name");
}

Summary summarize(const InstanceGraph& g) {
  Summary s;
  const Metamodel& mm = g.metamodel();
  const auto state = mm.find_type("State");
  const auto transition = mm.find_type("Transition");
  if (!state || !transition) {
    s.problems.push_back("metamodel " + mm.name() + " has no State/Transition types");
    return s;
  }
  for (NodeId n : g.node_ids()) {
    const TypeId t = g.type_of(n);
    if (mm.conforms(t, *state)) {
      if (++s.states[text_attr(g, n, "name")] == 2)
        s.problems.push_back("duplicate state name " + quote(text_attr(g, n, "name")));
    } else if (mm.conforms(t, *transition)) {
      auto src = endpoint(g, n, "source", s);
      auto trg = endpoint(g, n, "target", s);
      if (src && trg)
        s.transitions.insert({*src, *trg, text_attr(g, n, "trigger"), text_attr(g, n, "action")});
    }
  }
  return s;
}

} // namespace

DiffReport diff_statemachines(const InstanceGraph& left, const InstanceGraph& right) {
  Summary a = summarize(left);
  Summary b = summarize(right);
  DiffReport r;
  r.problems_left = std::move(a.problems);
  r.problems_right = std::move(b.problems);
  for (const auto& [name, n] : a.states)
    if (!b.states.contains(name)) r.states_only_left.push_back(name);
  for (const auto& [name, n] : b.states)
    if (!a.states.contains(name)) r.states_only_right.push_back(name);
  std::set_difference(a.transitions.begin(), a.transitions.end(), b.transitions.begin(), b.transitions.end(),
                      std::back_inserter(r.transitions_only_left));
  std::set_difference(b.transitions.begin(), b.transitions.end(), a.transitions.begin(), a.transitions.end(),
                      std::back_inserter(r.transitions_only_right));
  return r;
}

} // namespace gt::reeng
