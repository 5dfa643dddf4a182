#include "gt/formats.hpp"

#include "gt/errors.hpp"
#include "gt/lexer.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace gt {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// .mm

Metamodel parse_metamodel(std::string_view src, const std::string& file) {
  text::TokenStream in(text::tokenize(src, file), file);
  in.expect_keyword("metamodel");
  std::string name = in.expect_identifier("metamodel name");
  in.expect_punct(";");

  std::vector<NodeTypeDef> defs;
  std::set<std::string> seen{std::string(Metamodel::any_type)};
  std::vector<text::Token> type_uses; // supertypes and reference targets, resolved below
  while (!in.at_end()) {
    NodeTypeDef d;
    d.abstract = in.accept_keyword("abstract");
    in.expect_keyword("class");
    const text::Token at = in.peek();
    d.name = in.expect_identifier("class name");
    if (!seen.insert(d.name).second) in.fail_at(at, "class '" + d.name + "' declared twice");
    if (in.accept_keyword("extends")) {
      do {
        type_uses.push_back(in.peek());
        d.supertypes.push_back(in.expect_identifier("supertype name"));
      } while (in.accept_punct(","));
    }
    in.expect_punct("{");
    while (!in.accept_punct("}")) {
      if (in.accept_keyword("attr")) {
        AttributeDef a;
        a.name = in.expect_identifier("attribute name");
        in.expect_punct(":");
        const text::Token kt = in.peek();
        const std::string kind = in.expect_identifier("attribute kind");
        if (kind == "string") a.kind = AttrKind::String;
        else if (kind == "int") a.kind = AttrKind::Integer;
        else if (kind == "bool") a.kind = AttrKind::Boolean;
        else in.fail_at(kt, "unknown attribute kind '" + kind + "' (expected string, int or bool)");
        d.attributes.push_back(std::move(a));
      } else if (in.is_keyword("ref") || in.is_keyword("contains")) {
        ReferenceDef r;
        r.containment = in.next().text == "contains";
        r.name = in.expect_identifier("reference name");
        in.expect_punct(":");
        type_uses.push_back(in.peek());
        r.target = in.expect_identifier("target type");
        if (in.accept_punct("[")) {
          in.expect_punct("*");
          in.expect_punct("]");
          r.many = true;
        }
        d.references.push_back(std::move(r));
      } else {
        in.unexpected("'attr', 'ref', 'contains' or '}'");
      }
      in.expect_punct(";");
    }
    defs.push_back(std::move(d));
  }
  for (const auto& t : type_uses)
    if (!seen.contains(t.text)) in.fail_at(t, "unknown type '" + t.text + "'");
  try {
    return Metamodel(std::move(name), std::move(defs));
  } catch (const ModelError& e) {
    throw ParseError(e.what(), {1, 1}, file);
  }
}

std::string serialize_metamodel(const Metamodel& mm) {
  std::string out = "metamodel " + mm.name() + ";\n";
  for (const auto& d : mm.definitions()) {
    out += "\n";
    if (d.abstract) out += "abstract ";
    out += "class " + d.name;
    for (std::size_t i = 0; i < d.supertypes.size(); ++i) out += (i ? ", " : " extends ") + d.supertypes[i];
    if (d.attributes.empty() && d.references.empty()) {
      out += " {}\n";
      continue;
    }
    out += " {\n";
    for (const auto& a : d.attributes) out += "  attr " + a.name + " : " + std::string(to_string(a.kind)) + ";\n";
    for (const auto& r : d.references)
      out += std::string("  ") + (r.containment ? "contains " : "ref ") + r.name + " : " + r.target +
             (r.many ? "[*]" : "") + ";\n";
    out += "}\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shared model construction with exhaustive problem collection.

namespace {

struct RawNode {
  std::uint32_t id = 0;
  std::string type;
  std::vector<std::pair<std::string, Value>> attrs;
  std::vector<std::pair<std::string, std::vector<std::uint32_t>>> refs;
};

InstanceGraph build_graph(std::vector<RawNode> nodes, MetamodelPtr mm) {
  InstanceGraph g(std::move(mm));
  const Metamodel& meta = g.metamodel();
  std::vector<std::string> problems;
  std::sort(nodes.begin(), nodes.end(), [](const RawNode& a, const RawNode& b) { return a.id < b.id; });

  std::set<std::uint32_t> created;
  for (const auto& n : nodes) {
    const std::string who = "node " + std::to_string(n.id);
    if (n.id == 0) {
      problems.push_back(who + ": ids start at 1");
      continue;
    }
    if (created.contains(n.id)) {
      problems.push_back(who + ": duplicate id");
      continue;
    }
    auto type = meta.find_type(n.type);
    if (!type) {
      problems.push_back(who + ": unknown type '" + n.type + "'");
      continue;
    }
    if (meta.is_abstract(*type)) {
      problems.push_back(who + ": type '" + n.type + "' is abstract");
      continue;
    }
    g.create_node_with_id(*type, NodeId(n.id));
    created.insert(n.id);
    for (const auto& [name, value] : n.attrs) {
      const auto* def = meta.find_attribute(*type, name);
      if (!def) {
        problems.push_back(who + ": type '" + n.type + "' has no attribute '" + name + "'");
        continue;
      }
      if (def->kind != value.kind()) {
        problems.push_back(who + ": attribute '" + name + "' expects " + std::string(to_string(def->kind)) + ", got " +
                           std::string(to_string(value.kind())));
        continue;
      }
      g.set_attribute(NodeId(n.id), def->id, value);
    }
  }
  for (const auto& n : nodes) {
    if (!created.contains(n.id) || !g.contains(NodeId(n.id))) continue;
    const std::string who = "node " + std::to_string(n.id);
    const TypeId type = g.type_of(NodeId(n.id));
    for (const auto& [name, targets] : n.refs) {
      const auto* def = meta.find_reference(type, name);
      if (!def) {
        problems.push_back(who + ": type '" + n.type + "' has no reference '" + name + "'");
        continue;
      }
      for (auto t : targets) {
        if (!g.contains(NodeId(t))) {
          problems.push_back(who + ": reference '" + name + "' targets missing node " + std::to_string(t));
          continue;
        }
        try {
          g.add_edge(NodeId(n.id), def->id, NodeId(t));
        } catch (const ModelError& e) {
          problems.push_back(who + ": " + e.what());
        }
      }
    }
  }
  if (problems.empty()) {
    auto more = g.validate();
    problems.insert(problems.end(), more.begin(), more.end());
  }
  if (!problems.empty()) throw ConformanceError(std::move(problems));
  return g;
}

SourcePos position_of(std::string_view text, std::size_t offset) {
  SourcePos p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

} // namespace

// ---------------------------------------------------------------------------
// .gm

InstanceGraph parse_model(std::string_view text, MetamodelPtr mm, const std::string& file) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg, position_of(text, e.byte == 0 ? 0 : e.byte - 1), file);
  }
  auto bad = [&](const std::string& msg) { throw ParseError(msg, {1, 1}, file); };
  if (!doc.is_object() || doc.value("format", "") != "gm/1") bad("expected an object with \"format\": \"gm/1\"");
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) bad("expected a \"nodes\" array");

  std::vector<RawNode> nodes;
  for (const auto& jn : doc["nodes"]) {
    RawNode n;
    if (!jn.is_object() || !jn.contains("id") || !jn["id"].is_number_unsigned() || !jn.contains("type") ||
        !jn["type"].is_string())
      bad("every node needs an unsigned \"id\" and a string \"type\"");
    n.id = jn["id"].get<std::uint32_t>();
    n.type = jn["type"].get<std::string>();
    if (jn.contains("attrs")) {
      if (!jn["attrs"].is_object()) bad("node " + std::to_string(n.id) + ": \"attrs\" must be an object");
      for (const auto& [k, v] : jn["attrs"].items()) {
        if (v.is_string()) n.attrs.emplace_back(k, Value(v.get<std::string>()));
        else if (v.is_boolean()) n.attrs.emplace_back(k, Value(v.get<bool>()));
        else if (v.is_number_integer()) n.attrs.emplace_back(k, Value(v.get<std::int64_t>()));
        else bad("node " + std::to_string(n.id) + ": attribute '" + k + "' must be a string, integer or boolean");
      }
    }
    if (jn.contains("refs")) {
      if (!jn["refs"].is_object()) bad("node " + std::to_string(n.id) + ": \"refs\" must be an object");
      for (const auto& [k, v] : jn["refs"].items()) {
        if (!v.is_array()) bad("node " + std::to_string(n.id) + ": reference '" + k + "' must be an array of ids");
        std::vector<std::uint32_t> ids;
        for (const auto& t : v) {
          if (!t.is_number_unsigned()) bad("node " + std::to_string(n.id) + ": reference '" + k + "' holds a non-id");
          ids.push_back(t.get<std::uint32_t>());
        }
        n.refs.emplace_back(k, std::move(ids));
      }
    }
    nodes.push_back(std::move(n));
  }
  return build_graph(std::move(nodes), std::move(mm));
}

std::string serialize_model(const InstanceGraph& g) {
  const Metamodel& mm = g.metamodel();
  json nodes = json::array();
  for (NodeId id : g.node_ids()) {
    const Node& n = g.node(id);
    json jn;
    jn["id"] = raw(id);
    jn["type"] = mm.type_name(n.type);
    json attrs = json::object();
    const auto& adefs = mm.attributes(n.type);
    for (std::size_t k = 0; k < adefs.size(); ++k) {
      const Value& v = n.attrs[k];
      if (v.is_string()) attrs[adefs[k].name] = v.as_string();
      else if (v.is_integer()) attrs[adefs[k].name] = v.as_integer();
      else attrs[adefs[k].name] = v.as_boolean();
    }
    jn["attrs"] = std::move(attrs);
    json refs = json::object();
    const auto& rdefs = mm.references(n.type);
    for (std::size_t k = 0; k < rdefs.size(); ++k) {
      if (n.refs[k].empty()) continue;
      json ids = json::array();
      for (NodeId t : n.refs[k]) ids.push_back(raw(t));
      refs[rdefs[k].name] = std::move(ids);
    }
    jn["refs"] = std::move(refs);
    nodes.push_back(std::move(jn));
  }
  json doc;
  doc["format"] = "gm/1";
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Canonical text

std::string serialize_canonical(const InstanceGraph& g) {
  const Metamodel& mm = g.metamodel();
  std::string out;
  for (NodeId id : g.node_ids()) {
    const Node& n = g.node(id);
    out += "node " + std::to_string(raw(id)) + " : " + mm.type_name(n.type) + "\n";
    const auto& adefs = mm.attributes(n.type);
    for (std::size_t k = 0; k < adefs.size(); ++k) out += "  attr " + adefs[k].name + " = " + n.attrs[k].literal() + "\n";
    const auto& rdefs = mm.references(n.type);
    for (std::size_t k = 0; k < rdefs.size(); ++k) {
      if (n.refs[k].empty()) continue;
      out += "  ref " + rdefs[k].name + " ->";
      for (std::size_t i = 0; i < n.refs[k].size(); ++i) out += (i ? ", " : " ") + std::to_string(raw(n.refs[k][i]));
      out += "\n";
    }
  }
  return out;
}

InstanceGraph parse_canonical(std::string_view src, MetamodelPtr mm, const std::string& file) {
  text::TokenStream in(text::tokenize(src, file), file);
  auto node_id = [&]() -> std::uint32_t {
    const text::Token t = in.peek();
    const std::int64_t v = in.expect_integer();
    if (v <= 0 || v > 0xffffffffLL) in.fail_at(t, "node id out of range");
    return static_cast<std::uint32_t>(v);
  };
  std::vector<RawNode> nodes;
  while (!in.at_end()) {
    in.expect_keyword("node");
    RawNode n;
    n.id = node_id();
    in.expect_punct(":");
    n.type = in.expect_identifier("type name");
    for (;;) {
      if (in.accept_keyword("attr")) {
        std::string name = in.expect_identifier("attribute name");
        in.expect_punct("=");
        const auto& t = in.peek();
        if (t.kind == text::TokenKind::String) n.attrs.emplace_back(std::move(name), Value(in.next().text));
        else if (in.accept_keyword("true")) n.attrs.emplace_back(std::move(name), Value(true));
        else if (in.accept_keyword("false")) n.attrs.emplace_back(std::move(name), Value(false));
        else n.attrs.emplace_back(std::move(name), Value(in.expect_integer()));
      } else if (in.accept_keyword("ref")) {
        std::string name = in.expect_identifier("reference name");
        in.expect_punct("->");
        std::vector<std::uint32_t> ids;
        do ids.push_back(node_id());
        while (in.accept_punct(","));
        n.refs.emplace_back(std::move(name), std::move(ids));
      } else {
        break;
      }
    }
    nodes.push_back(std::move(n));
  }
  return build_graph(std::move(nodes), std::move(mm));
}

} // namespace gt
