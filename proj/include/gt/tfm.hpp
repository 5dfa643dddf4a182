#pragma once

#include "gt/engine.hpp"
#include "gt/rule.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gt {

/// Parses a `.tfm` transformation against `mm`, which must contain every
/// imported metamodel (see Metamodel::parts()). The built-in `trace`
/// metamodel is importable when it was merged into `mm`.
///
/// Syntax and resolution problems raise ParseError at the offending
/// position; rule validation errors are reported together at the rule.
/// Warnings are appended to `warnings` when given.
Transformation parse_transformation(std::string_view text, MetamodelPtr mm, const std::string& file = {},
                                    std::vector<Diagnostic>* warnings = nullptr);

} // namespace gt
