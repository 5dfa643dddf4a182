#include "gt/reeng/case.hpp"

#include "gt/errors.hpp"
#include "gt/formats.hpp"
#include "gt/tfm.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <unordered_map>

namespace gt::reeng {

namespace detail {
extern const std::string_view asset_java_mm;
extern const std::string_view asset_statemachine_mm;
extern const std::string_view asset_reeng_tfm;
} // namespace detail

std::string_view bundled_asset(std::string_view name) {
  if (name == "java.mm") return detail::asset_java_mm;
  if (name == "statemachine.mm") return detail::asset_statemachine_mm;
  if (name == "reeng.tfm") return detail::asset_reeng_tfm;
  throw Error("no bundled asset named '" + std::string(name) + "'");
}

MetamodelPtr statemachine_metamodel() {
  static const MetamodelPtr mm =
      std::make_shared<const Metamodel>(parse_metamodel(bundled_asset("statemachine.mm"), "statemachine.mm"));
  return mm;
}

MetamodelPtr case_metamodel() {
  static const MetamodelPtr mm = [] {
    const Metamodel java = parse_metamodel(bundled_asset("java.mm"), "java.mm");
    const std::array<const Metamodel*, 3> parts{&java, statemachine_metamodel().get(), &trace_metamodel()};
    return std::make_shared<const Metamodel>(Metamodel::merge("reeng", parts));
  }();
  return mm;
}

const Transformation& case_transformation() {
  static const Transformation t = parse_transformation(bundled_asset("reeng.tfm"), case_metamodel(), "reeng.tfm");
  return t;
}

InstanceGraph extract_subgraph(const InstanceGraph& g, NodeId root, MetamodelPtr target) {
  const Metamodel& src_mm = g.metamodel();
  if (!target) target = g.metamodel_ptr();
  const Metamodel& mm = *target;

  // Containment closure, then ascending id order.
  std::vector<NodeId> members;
  std::deque<NodeId> queue{root};
  std::unordered_map<std::uint32_t, NodeId> renumber;
  renumber.emplace(raw(root), NodeId{});
  while (!queue.empty()) {
    const NodeId n = queue.front();
    queue.pop_front();
    members.push_back(n);
    const Node& node = g.node(n);
    for (const auto& ref : src_mm.references(node.type)) {
      if (!ref.containment) continue;
      for (NodeId child : g.targets(n, ref.id))
        if (renumber.emplace(raw(child), NodeId{}).second) queue.push_back(child);
    }
  }
  std::sort(members.begin(), members.end());

  InstanceGraph out(target);
  for (NodeId n : members) {
    const std::string& type = src_mm.type_name(g.type_of(n));
    const auto t = mm.find_type(type);
    if (!t) throw ModelError(ModelError::Code::UnknownType, "type '" + type + "' is not in metamodel " + mm.name());
    renumber[raw(n)] = out.create_node(*t);
  }
  for (NodeId n : members) {
    const NodeId copy = renumber.at(raw(n));
    const TypeId t = out.type_of(copy);
    const Node& node = g.node(n);
    for (const auto& a : src_mm.attributes(node.type)) {
      const AttrFeature* f = mm.find_attribute(t, a.name);
      if (!f) throw ModelError(ModelError::Code::UnknownFeature, "attribute '" + a.name + "' is not in metamodel " + mm.name());
      out.set_attribute(copy, f->id, g.attribute(n, a.id));
    }
    for (const auto& r : src_mm.references(node.type)) {
      const auto targets = g.targets(n, r.id);
      if (targets.empty()) continue;
      const RefFeature* f = mm.find_reference(t, r.name);
      if (!f) throw ModelError(ModelError::Code::UnknownFeature, "reference '" + r.name + "' is not in metamodel " + mm.name());
      for (NodeId trg : targets) {
        auto it = renumber.find(raw(trg));
        if (it == renumber.end())
          throw ModelError(ModelError::Code::UnknownNode, "reference '" + r.name + "' of node " +
                                                                    std::to_string(raw(n)) + " leaves the extracted subgraph");
        out.add_edge(copy, f->id, it->second);
      }
    }
  }
  return out;
}

CaseResult run_case(InstanceGraph& model, const ExecConfig& cfg) {
  if (model.metamodel_ptr() != case_metamodel())
    throw Error("run_case needs a model over the bundled case metamodel");
  if (auto problems = model.validate(); !problems.empty()) throw ConformanceError(std::move(problems));

  Engine engine(case_transformation(), cfg);
  const ExecResult r = engine.execute(model, "Start");
  if (!r.success) throw TransformFailed("unit Start failed (is there a class named State?)");
  auto it = r.outputs.find("sm");
  if (it == r.outputs.end() || !std::holds_alternative<NodeId>(it->second))
    throw TransformFailed("unit Start produced no state machine");

  CaseResult out{extract_subgraph(model, std::get<NodeId>(it->second), statemachine_metamodel()), engine.steps(),
                 engine.rule_counts()};
  return out;
}

} // namespace gt::reeng
