#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gt {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Violations of metamodel or instance-graph invariants.
class ModelError : public Error {
public:
  enum class Code {
    UnknownType,
    AbstractType,
    UnknownNode,
    UnknownFeature,
    KindMismatch,
    TypeMismatch,
    Multiplicity,
    Containment,
    DuplicateEdge,
    MissingEdge,
    StaleCheckpoint,
    InvalidMetamodel,
  };

  ModelError(Code code, const std::string& what) : Error(what), code_(code) {}

  Code code() const noexcept { return code_; }

private:
  Code code_;
};

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Syntax or resolution error in one of the text formats.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, SourcePos pos, std::string file = {})
      : Error(format(msg, pos, file)), message_(msg), pos_(pos), file_(std::move(file)) {}

  const std::string& message() const noexcept { return message_; }
  SourcePos position() const noexcept { return pos_; }
  const std::string& file() const noexcept { return file_; }

private:
  static std::string format(const std::string& msg, SourcePos pos, const std::string& file) {
    std::string out = file.empty() ? std::string{} : file + ":";
    out += std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + msg;
    return out;
  }

  std::string message_;
  SourcePos pos_;
  std::string file_;
};

/// A model that parsed but violates conformance. Carries every violation found.
class ConformanceError : public Error {
public:
  explicit ConformanceError(std::vector<std::string> problems)
      : Error(join(problems)), problems_(std::move(problems)) {}

  const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
  static std::string join(const std::vector<std::string>& problems) {
    std::string out = "model does not conform:";
    for (const auto& p : problems) out += "\n  " + p;
    return out;
  }

  std::vector<std::string> problems_;
};

/// Expression evaluation failure (unbound parameter, operand kind mismatch).
class EvalError : public Error {
public:
  using Error::Error;
};

/// Invalid matcher input: undeclared parameter or pre-bound node that does not exist.
class MatchError : public Error {
public:
  using Error::Error;
};

class StepLimitExceeded : public Error {
public:
  using Error::Error;
};

} // namespace gt
