#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>

namespace gt {

enum class NodeId : std::uint32_t {};
enum class TypeId : std::uint32_t {};
enum class AttrId : std::uint32_t {};
enum class RefId : std::uint32_t {};

constexpr std::uint32_t raw(NodeId id) noexcept { return static_cast<std::uint32_t>(id); }
constexpr std::uint32_t raw(TypeId id) noexcept { return static_cast<std::uint32_t>(id); }
constexpr std::uint32_t raw(AttrId id) noexcept { return static_cast<std::uint32_t>(id); }
constexpr std::uint32_t raw(RefId id) noexcept { return static_cast<std::uint32_t>(id); }

enum class AttrKind { String, Integer, Boolean };

std::string_view to_string(AttrKind kind) noexcept;

/// Attribute and expression value: string, integer or boolean.
class Value {
public:
  Value() : data_(std::string{}) {}
  Value(std::string s) : data_(std::move(s)) {}
  Value(const char* s) : data_(std::string(s)) {}
  Value(std::int64_t i) : data_(i) {}
  Value(int i) : data_(static_cast<std::int64_t>(i)) {}
  Value(bool b) : data_(b) {}

  static Value default_for(AttrKind kind);

  AttrKind kind() const noexcept;
  bool is_string() const noexcept { return std::holds_alternative<std::string>(data_); }
  bool is_integer() const noexcept { return std::holds_alternative<std::int64_t>(data_); }
  bool is_boolean() const noexcept { return std::holds_alternative<bool>(data_); }

  const std::string& as_string() const { return std::get<std::string>(data_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(data_); }
  bool as_boolean() const { return std::get<bool>(data_); }

  /// Plain text form: strings unquoted, integers in decimal, booleans as true/false.
  std::string text() const;
  /// Literal form as it appears in source and serialized files (strings quoted and escaped).
  std::string literal() const;

  friend bool operator==(const Value&, const Value&) = default;
  friend auto operator<=>(const Value&, const Value&) = default;

private:
  std::variant<bool, std::int64_t, std::string> data_;
};

std::string quote(std::string_view s);

/// Typeless parameter value: either a graph node or a plain value.
using Binding = std::variant<NodeId, Value>;

/// Parameter name to value; absent key means unset.
using ParamMap = std::map<std::string, Binding, std::less<>>;

std::string to_string(const Binding& b);

} // namespace gt
