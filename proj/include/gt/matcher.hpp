#pragma once

#include "gt/graph.hpp"
#include "gt/rule.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace gt {

/// Binding of every LHS node plus the parameter values induced by the match.
struct Match {
  std::vector<NodeId> nodes; // by LHS index
  ParamMap params;           // pre-bound values plus those bound during matching
};

struct MatchOptions {
  /// Per LHS index: node the pattern node must bind to. Shorter vectors leave
  /// the remaining nodes free.
  std::vector<std::optional<NodeId>> fixed;
};

/// Return false to stop the enumeration.
using MatchVisitor = std::function<bool(const Match&)>;

/// Enumerates the valid matches of `rule` in `g`, lexicographically ordered
/// by the bound node ids taken in LHS declaration order.
///
/// Throws MatchError if `pre` names an undeclared parameter or a node that is
/// not in the graph, and EvalError if a check cannot be evaluated.
void for_each_match(const InstanceGraph& g, const Rule& rule, const ParamMap& pre, const MatchVisitor& visit,
                    const MatchOptions& options = {});

std::vector<Match> find_matches(const InstanceGraph& g, const Rule& rule, const ParamMap& pre = {},
                                const MatchOptions& options = {});

std::optional<Match> find_first_match(const InstanceGraph& g, const Rule& rule, const ParamMap& pre = {},
                                      const MatchOptions& options = {});

/// Evaluates `formula` for a complete LHS binding. Graph leaves extend the
/// binding injectively relative to `match.nodes` when `injective` is set.
bool check_condition(const InstanceGraph& g, const Condition& formula, const Match& match, bool injective = true);

} // namespace gt
