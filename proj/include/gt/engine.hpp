#pragma once

#include "gt/graph.hpp"
#include "gt/matcher.hpp"
#include "gt/rule.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace gt {

/// Reference from a unit to a rule or another unit of the same transformation.
struct CallTarget {
  enum class Kind { Rule, Unit };
  Kind kind = Kind::Rule;
  std::size_t index = 0;
  std::string name;
};

/// Copies a parameter value. An empty owner denotes the unit itself, any
/// other owner names one of its children.
struct ParamMapping {
  std::string src_owner, src_param;
  std::string trg_owner, trg_param;
};

enum class UnitKind { Sequential, Priority, Counted, Conditional, Independent, Amalgamation };

std::string_view to_string(UnitKind kind) noexcept;

struct MultiRule {
  std::size_t rule = 0;
  /// Kernel LHS index -> multi LHS index.
  std::vector<std::pair<std::size_t, std::size_t>> embedding;
};

struct Unit {
  std::string name;
  UnitKind kind = UnitKind::Sequential;
  std::vector<Parameter> params;
  /// Sequential/Priority/Independent: the children in order.
  /// Counted: the body. Conditional: if, then and optionally else.
  std::vector<CallTarget> children;
  std::int64_t count = -1; // Counted; -1 repeats until the body fails
  std::size_t kernel = 0;  // Amalgamation: rule index
  std::vector<MultiRule> multis;
  std::vector<ParamMapping> mappings;

  const Parameter* find_param(std::string_view n) const;
};

struct Transformation {
  std::string name;
  MetamodelPtr metamodel;
  std::vector<Rule> rules;
  std::vector<Unit> units;
  std::optional<CallTarget> main;

  std::optional<CallTarget> find(std::string_view name) const;
  const std::vector<Parameter>& params_of(const CallTarget& t) const;
};

struct ExecConfig {
  std::uint64_t seed = 0;
  std::uint64_t step_limit = 10'000'000;
  /// One line per rule application: `apply <rule> {p=v,...}`.
  std::ostream* trace = nullptr;
  /// Shuffles the multi matches of amalgamation units before applying them.
  bool shuffle_multi_matches = false;
  std::function<void(const Rule&, const ParamMap&)> on_rule_applied;
  /// Called when a unit invocation returns; depth 0 is the outermost call.
  std::function<void(const Unit&, std::size_t depth, bool success, std::chrono::nanoseconds)> on_unit_exit;
};

struct ExecResult {
  bool success = false;
  ParamMap outputs;
};

/// Applies the rule at its first match. The graph is untouched on failure.
/// Out and inout parameters are returned on success.
ExecResult apply_rule(InstanceGraph& g, const Rule& rule, const ParamMap& in);

/// Rewrites `g` at a given match. Must run inside an open checkpoint when
/// atomicity matters. Returns all rule parameters bound after the step.
ParamMap apply_match(InstanceGraph& g, const Rule& rule, const Match& match);

/// Trace-log line for one rule application (without the newline).
std::string trace_line(const Rule& rule, const ParamMap& bindings);

/// Interprets transformation units. Every invocation gets a fresh parameter
/// frame and runs inside its own checkpoint, which is rolled back on failure.
class Engine {
public:
  explicit Engine(const Transformation& t, ExecConfig cfg = {});

  ExecResult execute(InstanceGraph& g, const CallTarget& target, const ParamMap& in = {});
  ExecResult execute(InstanceGraph& g, std::string_view target, const ParamMap& in = {});

  /// Rule and unit invocations performed so far.
  std::uint64_t steps() const noexcept { return steps_; }
  /// Successful applications per rule name.
  const std::map<std::string, std::uint64_t, std::less<>>& rule_counts() const noexcept { return counts_; }

private:
  bool invoke(const CallTarget& t, const ParamMap& in, ParamMap& out);
  bool run_rule(const Rule& rule, const ParamMap& in, ParamMap& out);
  bool run_unit(const Unit& u, ParamMap& frame);
  bool call_child(const Unit& u, const CallTarget& child, ParamMap& frame,
                  std::map<std::string, ParamMap, std::less<>>& child_out);
  bool run_amalgamation(const Unit& u, ParamMap& frame);
  void count_step();
  void applied(const Rule& rule, const ParamMap& bindings);

  const Transformation& t_;
  ExecConfig cfg_;
  std::mt19937_64 rng_;
  InstanceGraph* g_ = nullptr;
  std::uint64_t steps_ = 0;
  std::size_t depth_ = 0;
  std::map<std::string, std::uint64_t, std::less<>> counts_;
};

} // namespace gt
