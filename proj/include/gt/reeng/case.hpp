#pragma once

#include "gt/engine.hpp"
#include "gt/graph.hpp"
#include "gt/reeng/java.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gt::reeng {

/// Bundled asset text: "java.mm", "statemachine.mm" or "reeng.tfm".
std::string_view bundled_asset(std::string_view name);

/// java + statemachine + trace, in that order.
MetamodelPtr case_metamodel();
MetamodelPtr statemachine_metamodel();
/// The bundled transformation, parsed against case_metamodel().
const Transformation& case_transformation();

/// Raised when the main unit of a transformation fails.
class TransformFailed : public Error {
public:
  using Error::Error;
};

struct CaseResult {
  InstanceGraph machine;
  std::uint64_t steps = 0;
  std::map<std::string, std::uint64_t, std::less<>> rule_counts;
};

/// Runs the bundled transformation in place on `model` (which must use
/// case_metamodel()) and returns the produced state machine as a graph over
/// statemachine_metamodel().
CaseResult run_case(InstanceGraph& model, const ExecConfig& cfg = {});

/// Independent extraction by direct traversal of the syntax tree. Same
/// output contract as run_case.
InstanceGraph oracle_extract(const InstanceGraph& model);

/// Copies `root` and everything it transitively contains into a fresh graph,
/// renumbering nodes 1..n in original id order. The copy uses `target` when
/// given (types and features matched by name), else g's own metamodel.
/// Non-containment references leaving the copied set are an error.
InstanceGraph extract_subgraph(const InstanceGraph& g, NodeId root, MetamodelPtr target = nullptr);

struct TransitionKey {
  std::string source, target, trigger, action;
  friend auto operator<=>(const TransitionKey&, const TransitionKey&) = default;
};

std::string to_string(const TransitionKey& t);

struct DiffReport {
  std::vector<std::string> states_only_left, states_only_right;
  std::vector<TransitionKey> transitions_only_left, transitions_only_right;
  /// Unnamed endpoints, duplicate state names and similar oddities.
  std::vector<std::string> problems_left, problems_right;

  bool empty() const noexcept;
  std::string describe() const;
};

/// States match by name, transitions by (source name, target name, trigger,
/// action) as a multiset.
DiffReport diff_statemachines(const InstanceGraph& left, const InstanceGraph& right);

struct GeneratorConfig {
  std::size_t states = 1;
  std::size_t methods = 1;
  std::size_t nesting = 0;
  std::uint64_t seed = 0;
};

/// Synthetic state-pattern corpus: an abstract root `State`, abstract
/// intermediates and `states` concrete subclasses. Deterministic per seed.
std::vector<JavaSource> generate_model(const GeneratorConfig& cfg);

} // namespace gt::reeng
