#pragma once

#include "gt/graph.hpp"
#include "gt/metamodel.hpp"

#include <string>
#include <string_view>

namespace gt {

/// Parses a `.mm` metamodel:
///
///   metamodel java;
///   abstract class Statement {}
///   class Condition extends Statement { contains then : Block; contains else : Block; }
///   class Class extends NamedElement { attr abstract : bool; ref extends : Class; contains methods : ClassMethod[*]; }
Metamodel parse_metamodel(std::string_view text, const std::string& file = {});

std::string serialize_metamodel(const Metamodel& mm);

/// Parses a `.gm` model (JSON). Syntax errors raise ParseError; every
/// conformance problem is collected into one ConformanceError.
InstanceGraph parse_model(std::string_view text, MetamodelPtr mm, const std::string& file = {});

/// Serializes to `.gm`. Nodes ascend by id, attributes follow the flattened
/// feature order of each type, and empty references are omitted.
std::string serialize_model(const InstanceGraph& g);

/// Line-oriented canonical form used for equality checks and golden files:
///
///   node 1 : Class
///     attr name = "State"
///     ref methods -> 3, 4
std::string serialize_canonical(const InstanceGraph& g);
InstanceGraph parse_canonical(std::string_view text, MetamodelPtr mm, const std::string& file = {});

} // namespace gt
