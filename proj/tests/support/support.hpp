#pragma once

#include "gt/engine.hpp"
#include "gt/graph.hpp"
#include "gt/matcher.hpp"
#include "gt/rule.hpp"

#include <random>
#include <string>
#include <vector>

namespace gt::testing {

/// Small metamodel with inheritance, many/single and containment refs:
///   abstract A { n:int, s:string, next:A[*] }, B:A { flag:bool }, C:A { peer:C },
///   D { n:int, items:A[*], kids:D[*] containment }
MetamodelPtr test_metamodel();

/// The bundled case metamodels, parsed from the asset files on disk.
std::string asset_path(const std::string& relative);
std::string read_text(const std::string& path);

std::string canon(const InstanceGraph& g);

using Rng = std::mt19937_64;

/// Random graph over test_metamodel() with up to `max_nodes` nodes.
InstanceGraph random_graph(Rng& rng, std::size_t max_nodes);

/// Random preserve-only rule with up to `max_nodes` pattern nodes, attribute
/// patterns, parameters and a random condition formula of depth <= 2.
struct RandomRule {
  Rule rule;
  ParamMap pre;
};
RandomRule random_rule(Rng& rng, const InstanceGraph& g, std::size_t max_nodes);

/// Exhaustive enumeration of all assignments, filtered by the rule semantics,
/// in lexicographic order. Independent of the matcher's search.
std::vector<Match> brute_force_matches(const InstanceGraph& g, const Rule& rule, const ParamMap& pre);
bool brute_force_condition(const InstanceGraph& g, const Condition& c, const std::vector<NodeId>& host,
                           const std::vector<NodeId>& used, const ParamMap& env, bool injective);

std::string describe(const Match& m);

} // namespace gt::testing
