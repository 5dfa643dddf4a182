#pragma once

#include "gt/graph.hpp"

#include <string>
#include <vector>

namespace gt::reeng {

struct JavaSource {
  std::string name; // file name used in error messages
  std::string text;
};

/// Parses restricted Java into an instance of the `java` metamodel. `mm`
/// must contain that metamodel (typically case_metamodel()).
///
///   file   := class*
///   class  := ['abstract'] 'class' NAME ['extends' NAME] '{' method* '}'
///   method := [modifier*] 'void' NAME '(' ')' block
///   block  := '{' stmt* '}'
///   stmt   := 'new' NAME '(' ')' ';'
///           | NAME '(' [STRING] ')' ';'
///           | 'if' '(' tokens ')' block ['else' (block | if-stmt)]
///           | 'switch' '(' tokens ')' '{' (('case' LABEL | 'default') ':' stmt*)* '}'
///           | 'try' block ('catch' '(' NAME NAME ')' block)* ['finally' block]
///           | 'break' ';' | 'return' ';'
///
/// Nodes are created in document order, so ids follow the source. Class
/// references are resolved after all sources are read.
InstanceGraph parse_java(const std::vector<JavaSource>& sources, MetamodelPtr mm);

} // namespace gt::reeng
