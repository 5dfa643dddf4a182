#include "gt/value.hpp"

#include <cstdio>

namespace gt {

std::string_view to_string(AttrKind kind) noexcept {
  switch (kind) {
  case AttrKind::String: return "string";
  case AttrKind::Integer: return "int";
  case AttrKind::Boolean: return "bool";
  }
  return "?";
}

Value Value::default_for(AttrKind kind) {
  switch (kind) {
  case AttrKind::String: return Value(std::string{});
  case AttrKind::Integer: return Value(std::int64_t{0});
  case AttrKind::Boolean: return Value(false);
  }
  return {};
}

AttrKind Value::kind() const noexcept {
  if (is_string()) return AttrKind::String;
  if (is_integer()) return AttrKind::Integer;
  return AttrKind::Boolean;
}

std::string Value::text() const {
  if (is_string()) return as_string();
  if (is_integer()) return std::to_string(as_integer());
  return as_boolean() ? "true" : "false";
}

std::string Value::literal() const {
  return is_string() ? quote(as_string()) : text();
}

std::string quote(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (char c : s) {
    switch (c) {
    case '"': out += "\\\""; break;
    case '\\': out += "\\\\"; break;
    case '\n': out += "\\n"; break;
    case '\t': out += "\\t"; break;
    case '\r': out += "\\r"; break;
    default:
      if (static_cast<unsigned char>(c) < 0x20) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "\\x%02x", static_cast<unsigned>(static_cast<unsigned char>(c)));
        out += buf;
      } else {
        out += c;
      }
    }
  }
  out += '"';
  return out;
}

std::string to_string(const Binding& b) {
  if (const auto* n = std::get_if<NodeId>(&b)) return "#" + std::to_string(raw(*n));
  return std::get<Value>(b).literal();
}

} // namespace gt
