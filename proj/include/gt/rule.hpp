#pragma once

#include "gt/expr.hpp"
#include "gt/metamodel.hpp"
#include "gt/value.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gt {

inline constexpr AttrId invalid_attr = AttrId(0xffffffffu);
inline constexpr RefId invalid_ref = RefId(0xffffffffu);

/// Constraint on one attribute of a pattern node.
struct AttrPattern {
  enum class Kind { Constant, Param, Check };

  std::string name;
  AttrId attr = invalid_attr; // invalid if the node type lacks `name`
  Kind kind = Kind::Constant;
  Value constant;    // Constant
  std::string param; // Param: binds if unbound, compares otherwise
  Expr check;        // Check: boolean; `self` is the attribute value
};

struct PatternNode {
  std::string id;
  TypeId type{};
  std::optional<std::string> param; // `param:Type` binding
  std::vector<AttrPattern> attrs;
};

struct PatternEdge {
  std::size_t src = 0;
  std::string ref_name;
  RefId ref = invalid_ref; // invalid if the source type lacks `ref_name`
  std::size_t trg = 0;
  friend bool operator==(const PatternEdge&, const PatternEdge&) = default;
};

struct PatternGraph {
  std::vector<PatternNode> nodes;
  std::vector<PatternEdge> edges;

  std::optional<std::size_t> find(std::string_view id) const;
};

class Condition;
using ConditionPtr = std::shared_ptr<const Condition>;

/// Application condition formula over a host pattern.
///
/// A Graph leaf holds if the host match extends to its pattern (anchored host
/// nodes map to the listed condition nodes) such that the nested formula holds
/// for the extension.
class Condition {
public:
  enum class Kind { True, Graph, Not, And, Or };

  struct Anchor {
    std::size_t host;
    std::size_t node;
  };

  static ConditionPtr always();
  static ConditionPtr graph(PatternGraph pattern, std::vector<Anchor> anchors, ConditionPtr nested = nullptr);
  static ConditionPtr negate(ConditionPtr f);
  static ConditionPtr both(ConditionPtr a, ConditionPtr b);
  static ConditionPtr either(ConditionPtr a, ConditionPtr b);

  Kind kind() const noexcept { return kind_; }
  const PatternGraph& pattern() const noexcept { return pattern_; }
  const std::vector<Anchor>& anchors() const noexcept { return anchors_; }
  const Condition& nested() const noexcept { return *nested_; }
  const Condition& left() const noexcept { return *left_; }
  const Condition& right() const noexcept { return *right_; }

  /// Condition node anchored to a host node, if any.
  std::optional<std::size_t> anchor_of(std::size_t host) const;

private:
  Kind kind_ = Kind::True;
  PatternGraph pattern_;
  std::vector<Anchor> anchors_;
  ConditionPtr nested_;
  ConditionPtr left_;
  ConditionPtr right_;
};

enum class ParamMode { In, Out, InOut };

std::string_view to_string(ParamMode mode) noexcept;

struct Parameter {
  std::string name;
  ParamMode mode = ParamMode::InOut;

  bool is_input() const noexcept { return mode != ParamMode::Out; }
  bool is_output() const noexcept { return mode != ParamMode::In; }
};

struct Assignment {
  std::size_t node = 0; // RHS node
  AttrId attr{};
  Expr value;
};

/// Disjoint classification of a rule's pattern elements.
struct RulePartition {
  std::vector<std::size_t> preserved_nodes; // LHS indices
  std::vector<std::size_t> deleted_nodes;   // LHS indices
  std::vector<std::size_t> created_nodes;   // RHS indices
  std::vector<std::size_t> preserved_edges; // LHS indices
  std::vector<std::size_t> deleted_edges;   // LHS indices
  std::vector<std::size_t> created_edges;   // RHS indices
};

/// A graph transformation rule. Immutable once built.
struct Rule {
  std::string name;
  std::vector<Parameter> params;
  PatternGraph lhs;
  PatternGraph rhs;
  std::vector<std::optional<std::size_t>> mapping; // LHS index -> RHS index
  ConditionPtr condition = Condition::always();
  std::vector<Assignment> assignments;
  bool injective = true;
  MetamodelPtr metamodel;
  RulePartition partition; // filled by RuleBuilder::build()

  const Parameter* find_param(std::string_view name) const;
};

RulePartition classify(const Rule& rule);

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string message;
};

std::vector<Diagnostic> validate_rule(const Rule& rule, const Metamodel& mm);

/// Builds rules in integrated notation: every element carries a role that
/// decides whether it lands in the LHS, the RHS, both, or an application
/// condition. Forbid/require elements sharing a group form one condition
/// graph; ungrouped ones form one condition per connected component.
class RuleBuilder {
public:
  enum class Role { Preserve, Create, Delete, Forbid, Require };

  RuleBuilder(MetamodelPtr mm, std::string name);

  RuleBuilder& param(std::string name, ParamMode mode = ParamMode::InOut);
  RuleBuilder& node(std::string id, std::string_view type, Role role = Role::Preserve, std::string group = {});
  /// Adds attribute constraints to an existing LHS node inside a forbid/require group.
  RuleBuilder& condition_node(std::string id, Role role, std::string group = {});
  RuleBuilder& bind(std::string_view node, std::string param);
  RuleBuilder& edge(std::string_view src, std::string_view ref, std::string_view trg,
                    std::optional<Role> role = std::nullopt, std::string group = {});
  RuleBuilder& attr_const(std::string_view node, std::string_view attr, Value v);
  RuleBuilder& attr_param(std::string_view node, std::string_view attr, std::string param);
  RuleBuilder& attr_check(std::string_view node, std::string_view attr, Expr check);
  /// Attribute calculation on a created or preserved node.
  RuleBuilder& assign(std::string_view node, std::string_view attr, Expr value);
  /// Additional formula, AND-ed with the desugared forbid/require conditions.
  RuleBuilder& condition(ConditionPtr f);
  RuleBuilder& injective(bool on);

  /// Shorthands for building explicit condition graphs against this rule's LHS.
  struct GraphSpec {
    struct SpecNode {
      std::string id;
      std::string type; // empty: anchored LHS node of the same id
      std::vector<AttrPattern> attrs; // by name; ids are resolved by graph_condition()
      std::optional<std::string> param;
    };
    std::vector<SpecNode> nodes;
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
  };
  /// Resolves a GraphSpec into a Graph condition leaf anchored on this rule's LHS.
  ConditionPtr graph_condition(const GraphSpec& spec, ConditionPtr nested = nullptr) const;

  Rule build() const;

private:
  struct BNode {
    std::string id;
    TypeId type{};
    Role role = Role::Preserve;
    std::string group;
    bool reference_only = false; // condition_node(): restates an LHS node
    std::optional<std::string> param;
    std::vector<AttrPattern> attrs;
    std::vector<std::pair<AttrId, Expr>> inits; // create-node attribute values
  };
  struct BEdge {
    std::string src, trg;
    std::string ref;
    std::optional<Role> role;
    std::string group;
  };

  const BNode& lookup(std::string_view id) const;
  BNode& lookup(std::string_view id);
  AttrPattern make_pattern(const BNode& n, std::string_view attr) const;
  std::optional<std::size_t> lhs_index_of(std::string_view id) const;

  MetamodelPtr mm_;
  std::string name_;
  std::vector<Parameter> params_;
  std::vector<BNode> nodes_;
  std::vector<BEdge> edges_;
  std::vector<std::pair<std::string, Assignment>> assigns_; // node id, assignment (node index unresolved)
  std::vector<ConditionPtr> extra_;
  bool injective_ = true;
};

std::string_view to_string(RuleBuilder::Role role) noexcept;

} // namespace gt
