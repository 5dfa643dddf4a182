#include "gt/rule.hpp"

#include "gt/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace gt {

std::optional<std::size_t> PatternGraph::find(std::string_view id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return i;
  return std::nullopt;
}

ConditionPtr Condition::always() {
  static const ConditionPtr t = std::make_shared<const Condition>();
  return t;
}

ConditionPtr Condition::graph(PatternGraph pattern, std::vector<Anchor> anchors, ConditionPtr nested) {
  auto c = std::make_shared<Condition>();
  c->kind_ = Kind::Graph;
  c->pattern_ = std::move(pattern);
  c->anchors_ = std::move(anchors);
  c->nested_ = nested ? std::move(nested) : always();
  return c;
}

ConditionPtr Condition::negate(ConditionPtr f) {
  auto c = std::make_shared<Condition>();
  c->kind_ = Kind::Not;
  c->left_ = std::move(f);
  return c;
}

ConditionPtr Condition::both(ConditionPtr a, ConditionPtr b) {
  auto c = std::make_shared<Condition>();
  c->kind_ = Kind::And;
  c->left_ = std::move(a);
  c->right_ = std::move(b);
  return c;
}

ConditionPtr Condition::either(ConditionPtr a, ConditionPtr b) {
  auto c = std::make_shared<Condition>();
  c->kind_ = Kind::Or;
  c->left_ = std::move(a);
  c->right_ = std::move(b);
  return c;
}

std::optional<std::size_t> Condition::anchor_of(std::size_t host) const {
  for (const auto& a : anchors_)
    if (a.host == host) return a.node;
  return std::nullopt;
}

std::string_view to_string(ParamMode mode) noexcept {
  switch (mode) {
  case ParamMode::In: return "in";
  case ParamMode::Out: return "out";
  case ParamMode::InOut: return "inout";
  }
  return "?";
}

std::string_view to_string(RuleBuilder::Role role) noexcept {
  switch (role) {
  case RuleBuilder::Role::Preserve: return "preserve";
  case RuleBuilder::Role::Create: return "create";
  case RuleBuilder::Role::Delete: return "delete";
  case RuleBuilder::Role::Forbid: return "forbid";
  case RuleBuilder::Role::Require: return "require";
  }
  return "?";
}

const Parameter* Rule::find_param(std::string_view n) const {
  for (const auto& p : params)
    if (p.name == n) return &p;
  return nullptr;
}

RulePartition classify(const Rule& rule) {
  RulePartition out;
  std::vector<bool> image(rule.rhs.nodes.size(), false);
  for (std::size_t i = 0; i < rule.lhs.nodes.size(); ++i) {
    const auto& m = i < rule.mapping.size() ? rule.mapping[i] : std::nullopt;
    if (!m) {
      out.deleted_nodes.push_back(i);
      continue;
    }
    if (*m >= rule.rhs.nodes.size() || image[*m])
      throw ModelError(ModelError::Code::TypeMismatch, "rule '" + rule.name + "': mapping of '" + rule.lhs.nodes[i].id +
                                                           "' is not an injection into the RHS");
    if (rule.lhs.nodes[i].type != rule.rhs.nodes[*m].type)
      throw ModelError(ModelError::Code::TypeMismatch, "rule '" + rule.name + "': mapped node '" +
                                                           rule.lhs.nodes[i].id + "' changes its type");
    image[*m] = true;
    out.preserved_nodes.push_back(i);
  }
  for (std::size_t j = 0; j < rule.rhs.nodes.size(); ++j)
    if (!image[j]) out.created_nodes.push_back(j);

  std::vector<bool> rhs_edge_kept(rule.rhs.edges.size(), false);
  for (std::size_t i = 0; i < rule.lhs.edges.size(); ++i) {
    const auto& e = rule.lhs.edges[i];
    const auto ms = e.src < rule.mapping.size() ? rule.mapping[e.src] : std::nullopt;
    const auto mt = e.trg < rule.mapping.size() ? rule.mapping[e.trg] : std::nullopt;
    bool kept = false;
    if (ms && mt) {
      for (std::size_t j = 0; j < rule.rhs.edges.size(); ++j) {
        const auto& f = rule.rhs.edges[j];
        if (!rhs_edge_kept[j] && f.src == *ms && f.trg == *mt && f.ref_name == e.ref_name) {
          rhs_edge_kept[j] = true;
          kept = true;
          break;
        }
      }
    }
    (kept ? out.preserved_edges : out.deleted_edges).push_back(i);
  }
  for (std::size_t j = 0; j < rule.rhs.edges.size(); ++j)
    if (!rhs_edge_kept[j]) out.created_edges.push_back(j);
  return out;
}

namespace {

void collect_pattern_params(const PatternGraph& g, std::set<std::string, std::less<>>& used) {
  for (const auto& n : g.nodes) {
    if (n.param) used.insert(*n.param);
    for (const auto& a : n.attrs) {
      if (a.kind == AttrPattern::Kind::Param) used.insert(a.param);
      if (a.kind == AttrPattern::Kind::Check)
        for (const auto& p : a.check.free_params())
          if (p != "self") used.insert(p);
    }
  }
}

void check_pattern(const PatternGraph& g, const Metamodel& mm, const std::string& where, std::vector<Diagnostic>& out) {
  auto error = [&](std::string msg) { out.push_back({Diagnostic::Severity::Error, where + ": " + std::move(msg)}); };
  for (const auto& n : g.nodes) {
    if (raw(n.type) >= mm.type_count()) {
      error("node '" + n.id + "' has an undeclared type");
      continue;
    }
    for (const auto& a : n.attrs) {
      const AttrFeature* def = mm.find_attribute(n.type, a.name);
      if (!def || def->id != a.attr) {
        error("node '" + n.id + "': type '" + mm.type_name(n.type) + "' has no attribute '" + a.name + "'");
        continue;
      }
      if (a.kind == AttrPattern::Kind::Constant && a.constant.kind() != def->kind)
        error("node '" + n.id + "': attribute '" + a.name + "' expects " + std::string(to_string(def->kind)));
    }
  }
  for (const auto& e : g.edges) {
    if (e.src >= g.nodes.size() || e.trg >= g.nodes.size()) {
      error("edge endpoint out of range");
      continue;
    }
    const auto& s = g.nodes[e.src];
    const auto& t = g.nodes[e.trg];
    if (raw(s.type) >= mm.type_count() || raw(t.type) >= mm.type_count()) continue;
    const RefFeature* def = mm.find_reference(s.type, e.ref_name);
    if (!def || def->id != e.ref) {
      error("edge " + s.id + " -" + e.ref_name + "-> " + t.id + ": type '" + mm.type_name(s.type) +
            "' of node '" + s.id + "' has no reference '" + e.ref_name + "'");
      continue;
    }
    if (!mm.conforms(t.type, def->target) && !mm.conforms(def->target, t.type))
      error("edge " + s.id + " -" + e.ref_name + "-> " + t.id + ": target type '" + mm.type_name(t.type) +
            "' is incompatible with '" + mm.type_name(def->target) + "'");
  }
}

void check_condition(const Condition& c, const PatternGraph& host, const Metamodel& mm, const std::string& where,
                     std::vector<Diagnostic>& out, std::set<std::string, std::less<>>& used) {
  switch (c.kind()) {
  case Condition::Kind::True: return;
  case Condition::Kind::Not: check_condition(c.left(), host, mm, where, out, used); return;
  case Condition::Kind::And:
  case Condition::Kind::Or:
    check_condition(c.left(), host, mm, where, out, used);
    check_condition(c.right(), host, mm, where, out, used);
    return;
  case Condition::Kind::Graph: break;
  }
  const auto& g = c.pattern();
  check_pattern(g, mm, where + " (condition)", out);
  collect_pattern_params(g, used);
  for (const auto& a : c.anchors()) {
    if (a.host >= host.nodes.size() || a.node >= g.nodes.size()) {
      out.push_back({Diagnostic::Severity::Error, where + ": condition anchor out of range"});
      continue;
    }
    const auto ht = host.nodes[a.host].type;
    const auto ct = g.nodes[a.node].type;
    if (!mm.conforms(ht, ct) && !mm.conforms(ct, ht))
      out.push_back({Diagnostic::Severity::Error, where + ": condition anchor '" + host.nodes[a.host].id +
                                                      "' maps to node of incompatible type"});
  }
  check_condition(c.nested(), g, mm, where, out, used);
}

} // namespace

std::vector<Diagnostic> validate_rule(const Rule& rule, const Metamodel& mm) {
  std::vector<Diagnostic> out;
  const std::string where = "rule '" + rule.name + "'";
  auto error = [&](std::string msg) { out.push_back({Diagnostic::Severity::Error, where + ": " + std::move(msg)}); };

  check_pattern(rule.lhs, mm, where, out);
  check_pattern(rule.rhs, mm, where, out);
  try {
    const auto part = classify(rule);
    for (auto j : part.created_nodes) {
      const auto& n = rule.rhs.nodes[j];
      if (raw(n.type) < mm.type_count() && mm.is_abstract(n.type))
        error("created node '" + n.id + "' has abstract type '" + mm.type_name(n.type) + "'");
    }
  } catch (const ModelError& e) {
    error(e.what());
  }

  std::set<std::string, std::less<>> used;
  collect_pattern_params(rule.lhs, used);
  for (const auto& n : rule.rhs.nodes)
    if (n.param) used.insert(*n.param);
  for (const auto& a : rule.assignments) {
    if (a.node >= rule.rhs.nodes.size()) error("assignment to unknown node");
    used.insert(a.value.free_params().begin(), a.value.free_params().end());
  }
  if (rule.condition) check_condition(*rule.condition, rule.lhs, mm, where, out, used);

  std::set<std::string, std::less<>> declared;
  for (const auto& p : rule.params) {
    if (!declared.insert(p.name).second) error("parameter '" + p.name + "' declared twice");
  }
  for (const auto& name : used)
    if (!declared.contains(name)) error("parameter '" + name + "' is used but not declared");
  for (const auto& p : rule.params)
    if (!used.contains(p.name))
      out.push_back({Diagnostic::Severity::Warning, where + ": parameter '" + p.name + "' is declared but never used"});

  // Preserved elements appear in both sides; report each problem once.
  std::set<std::string, std::less<>> seen;
  std::erase_if(out, [&](const Diagnostic& d) { return !seen.insert(d.message).second; });
  return out;
}

// ---------------------------------------------------------------------------

RuleBuilder::RuleBuilder(MetamodelPtr mm, std::string name) : mm_(std::move(mm)), name_(std::move(name)) {}

RuleBuilder& RuleBuilder::param(std::string name, ParamMode mode) {
  params_.push_back({std::move(name), mode});
  return *this;
}

RuleBuilder& RuleBuilder::node(std::string id, std::string_view type, Role role, std::string group) {
  for (const auto& n : nodes_)
    if (n.id == id && !n.reference_only) throw Error("rule '" + name_ + "': duplicate node id '" + id + "'");
  if (!group.empty() && role != Role::Forbid && role != Role::Require)
    throw Error("rule '" + name_ + "': only forbid/require elements can carry a group");
  BNode n;
  n.id = std::move(id);
  n.type = mm_->type_id(type);
  n.role = role;
  n.group = std::move(group);
  nodes_.push_back(std::move(n));
  return *this;
}

RuleBuilder& RuleBuilder::condition_node(std::string id, Role role, std::string group) {
  if (role != Role::Forbid && role != Role::Require)
    throw Error("rule '" + name_ + "': '" + id + "' can only be restated in a forbid/require group");
  const BNode& base = lookup(id);
  if (base.role != Role::Preserve && base.role != Role::Delete)
    throw Error("rule '" + name_ + "': '" + id + "' is not a left-hand side node");
  BNode n;
  n.id = std::move(id);
  n.type = base.type;
  n.role = role;
  n.group = std::move(group);
  n.reference_only = true;
  nodes_.push_back(std::move(n));
  return *this;
}

const RuleBuilder::BNode& RuleBuilder::lookup(std::string_view id) const {
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it)
    if (it->id == id) return *it;
  throw Error("rule '" + name_ + "': unknown node '" + std::string(id) + "'");
}

RuleBuilder::BNode& RuleBuilder::lookup(std::string_view id) {
  return const_cast<BNode&>(std::as_const(*this).lookup(id));
}

RuleBuilder& RuleBuilder::bind(std::string_view node, std::string param) {
  lookup(node).param = std::move(param);
  return *this;
}

RuleBuilder& RuleBuilder::edge(std::string_view src, std::string_view ref, std::string_view trg,
                               std::optional<Role> role, std::string group) {
  edges_.push_back({std::string(src), std::string(trg), std::string(ref), role, std::move(group)});
  return *this;
}

AttrPattern RuleBuilder::make_pattern(const BNode& n, std::string_view attr) const {
  AttrPattern p;
  p.name = std::string(attr);
  if (const auto* def = mm_->find_attribute(n.type, attr)) p.attr = def->id;
  return p;
}

RuleBuilder& RuleBuilder::attr_const(std::string_view node, std::string_view attr, Value v) {
  BNode& n = lookup(node);
  if (n.role == Role::Create) return assign(node, attr, Expr::literal(std::move(v)));
  AttrPattern p = make_pattern(n, attr);
  p.kind = AttrPattern::Kind::Constant;
  p.constant = std::move(v);
  n.attrs.push_back(std::move(p));
  return *this;
}

RuleBuilder& RuleBuilder::attr_param(std::string_view node, std::string_view attr, std::string param) {
  BNode& n = lookup(node);
  if (n.role == Role::Create) return assign(node, attr, Expr::param(std::move(param)));
  AttrPattern p = make_pattern(n, attr);
  p.kind = AttrPattern::Kind::Param;
  p.param = std::move(param);
  n.attrs.push_back(std::move(p));
  return *this;
}

RuleBuilder& RuleBuilder::attr_check(std::string_view node, std::string_view attr, Expr check) {
  BNode& n = lookup(node);
  if (n.role == Role::Create)
    throw Error("rule '" + name_ + "': created node '" + n.id + "' cannot carry a check");
  AttrPattern p = make_pattern(n, attr);
  p.kind = AttrPattern::Kind::Check;
  p.check = std::move(check);
  n.attrs.push_back(std::move(p));
  return *this;
}

RuleBuilder& RuleBuilder::assign(std::string_view node, std::string_view attr, Expr value) {
  const BNode& n = lookup(node);
  if (n.role != Role::Create && n.role != Role::Preserve)
    throw Error("rule '" + name_ + "': attribute calculation on '" + n.id + "', which is not in the right-hand side");
  const auto* def = mm_->find_attribute(n.type, attr);
  if (!def)
    throw ModelError(ModelError::Code::UnknownFeature, "rule '" + name_ + "': type '" + mm_->type_name(n.type) +
                                                           "' has no attribute '" + std::string(attr) + "'");
  Assignment a;
  a.attr = def->id;
  a.value = std::move(value);
  assigns_.emplace_back(n.id, std::move(a));
  return *this;
}

RuleBuilder& RuleBuilder::condition(ConditionPtr f) {
  extra_.push_back(std::move(f));
  return *this;
}

RuleBuilder& RuleBuilder::injective(bool on) {
  injective_ = on;
  return *this;
}

std::optional<std::size_t> RuleBuilder::lhs_index_of(std::string_view id) const {
  std::size_t k = 0;
  for (const auto& n : nodes_) {
    if (n.reference_only || (n.role != Role::Preserve && n.role != Role::Delete)) continue;
    if (n.id == id) return k;
    ++k;
  }
  return std::nullopt;
}

ConditionPtr RuleBuilder::graph_condition(const GraphSpec& spec, ConditionPtr nested) const {
  PatternGraph g;
  std::vector<Condition::Anchor> anchors;
  for (const auto& sn : spec.nodes) {
    PatternNode pn;
    pn.id = sn.id;
    pn.param = sn.param;
    if (sn.type.empty()) {
      auto host = lhs_index_of(sn.id);
      if (!host) throw Error("rule '" + name_ + "': condition refers to unknown left-hand side node '" + sn.id + "'");
      pn.type = lookup(sn.id).type;
      anchors.push_back({*host, g.nodes.size()});
    } else {
      pn.type = mm_->type_id(sn.type);
    }
    for (auto a : sn.attrs) {
      const auto* def = mm_->find_attribute(pn.type, a.name);
      a.attr = def ? def->id : invalid_attr;
      pn.attrs.push_back(std::move(a));
    }
    g.nodes.push_back(std::move(pn));
  }
  for (const auto& [s, r, t] : spec.edges) {
    auto si = g.find(s), ti = g.find(t);
    if (!si || !ti) throw Error("rule '" + name_ + "': condition edge endpoint not declared in the condition");
    PatternEdge e{*si, r, invalid_ref, *ti};
    if (const auto* def = mm_->find_reference(g.nodes[*si].type, r)) e.ref = def->id;
    g.edges.push_back(std::move(e));
  }
  return Condition::graph(std::move(g), std::move(anchors), std::move(nested));
}

Rule RuleBuilder::build() const {
  Rule r;
  r.name = name_;
  r.params = params_;
  r.injective = injective_;
  r.metamodel = mm_;

  auto fail = [&](const std::string& msg) -> void { throw Error("rule '" + name_ + "': " + msg); };

  // Primary nodes (not restatements) by id.
  std::map<std::string, const BNode*, std::less<>> primary;
  std::map<std::string, std::size_t, std::less<>> lhs_idx, rhs_idx;
  for (const auto& n : nodes_) {
    if (n.reference_only) continue;
    primary[n.id] = &n;
    PatternNode pn{n.id, n.type, n.param, {}};
    switch (n.role) {
    case Role::Preserve:
      pn.attrs = n.attrs;
      lhs_idx[n.id] = r.lhs.nodes.size();
      r.lhs.nodes.push_back(pn);
      pn.attrs.clear();
      rhs_idx[n.id] = r.rhs.nodes.size();
      r.mapping.push_back(r.rhs.nodes.size());
      r.rhs.nodes.push_back(std::move(pn));
      break;
    case Role::Delete:
      pn.attrs = n.attrs;
      lhs_idx[n.id] = r.lhs.nodes.size();
      r.lhs.nodes.push_back(std::move(pn));
      r.mapping.push_back(std::nullopt);
      break;
    case Role::Create:
      rhs_idx[n.id] = r.rhs.nodes.size();
      r.rhs.nodes.push_back(std::move(pn));
      break;
    case Role::Forbid:
    case Role::Require: break;
    }
  }

  auto role_of = [&](const std::string& id) -> Role {
    auto it = primary.find(id);
    if (it == primary.end()) fail("edge refers to unknown node '" + id + "'");
    return it->second->role;
  };
  auto is_cond = [](Role x) { return x == Role::Forbid || x == Role::Require; };
  auto in_lhs = [](Role x) { return x == Role::Preserve || x == Role::Delete; };
  auto in_rhs = [](Role x) { return x == Role::Preserve || x == Role::Create; };

  // Effective edge roles.
  std::vector<Role> edge_role(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    const Role rs = role_of(e.src), rt = role_of(e.trg);
    Role role;
    if (e.role) {
      role = *e.role;
    } else if (is_cond(rs) || is_cond(rt)) {
      if (is_cond(rs) && is_cond(rt) && rs != rt) fail("edge joins a forbid and a require node");
      role = is_cond(rs) ? rs : rt;
    } else if (rs == Role::Create || rt == Role::Create) {
      role = Role::Create;
    } else if (rs == Role::Delete || rt == Role::Delete) {
      role = Role::Delete;
    } else {
      role = Role::Preserve;
    }
    const std::string what = "edge " + e.src + " -" + e.ref + "-> " + e.trg;
    switch (role) {
    case Role::Preserve:
      if (rs != Role::Preserve || rt != Role::Preserve) fail(what + " must connect preserved nodes");
      break;
    case Role::Delete:
      if (!in_lhs(rs) || !in_lhs(rt)) fail(what + " is deleted but an endpoint is not matched");
      break;
    case Role::Create:
      if (!in_rhs(rs) || !in_rhs(rt)) fail(what + " is created but an endpoint is deleted or conditional");
      break;
    case Role::Forbid:
    case Role::Require:
      for (Role x : {rs, rt})
        if (!in_lhs(x) && x != role) fail(what + " connects to a node outside its condition");
      break;
    }
    if (!e.group.empty() && !is_cond(role)) fail(what + " carries a group but is not forbid/require");
    edge_role[i] = role;
  }

  auto make_edge = [&](const BEdge& e, const std::map<std::string, std::size_t, std::less<>>& idx,
                       const PatternGraph& g) {
    PatternEdge pe{idx.at(e.src), e.ref, invalid_ref, idx.at(e.trg)};
    if (const auto* def = mm_->find_reference(g.nodes[pe.src].type, e.ref)) pe.ref = def->id;
    return pe;
  };
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Role role = edge_role[i];
    if (role == Role::Preserve || role == Role::Delete) r.lhs.edges.push_back(make_edge(edges_[i], lhs_idx, r.lhs));
    if (role == Role::Preserve || role == Role::Create) r.rhs.edges.push_back(make_edge(edges_[i], rhs_idx, r.rhs));
  }

  // Condition groups. New untagged condition nodes linked by untagged edges
  // share a component; every other untagged element is a group of its own.
  std::vector<std::size_t> parent(nodes_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto new_cond_node = [&](const std::string& id, Role role) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < nodes_.size(); ++k)
      if (!nodes_[k].reference_only && nodes_[k].id == id && nodes_[k].role == role) return k;
    return std::nullopt;
  };
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (!is_cond(edge_role[i]) || !e.group.empty()) continue;
    auto a = new_cond_node(e.src, edge_role[i]);
    auto b = new_cond_node(e.trg, edge_role[i]);
    if (a && b && nodes_[*a].group.empty() && nodes_[*b].group.empty()) parent[find(*a)] = find(*b);
  }

  struct Group {
    Role role;
    std::vector<std::size_t> nodes; // indices into nodes_
    std::vector<std::size_t> edges; // indices into edges_
  };
  std::vector<Group> groups;
  std::map<std::string, std::size_t> group_of_key;
  auto group_for = [&](Role role, const std::string& key) -> Group& {
    const std::string full = std::string(to_string(role)) + "/" + key;
    auto [it, fresh] = group_of_key.emplace(full, groups.size());
    if (fresh) groups.push_back({role, {}, {}});
    return groups[it->second];
  };
  auto node_key = [&](std::size_t k) {
    const auto& n = nodes_[k];
    if (!n.group.empty()) return "tag:" + n.group;
    if (n.reference_only) return "restate:" + std::to_string(k);
    return "comp:" + std::to_string(find(k));
  };
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    if (is_cond(nodes_[k].role)) group_for(nodes_[k].role, node_key(k)).nodes.push_back(k);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!is_cond(edge_role[i])) continue;
    const auto& e = edges_[i];
    const Role role = edge_role[i];
    std::optional<std::string> key;
    if (!e.group.empty()) key = "tag:" + e.group;
    for (const auto& end : {e.src, e.trg}) {
      auto k = new_cond_node(end, role);
      if (!k) continue;
      const std::string nk = node_key(*k);
      if (key && *key != nk) fail("edge " + e.src + " -" + e.ref + "-> " + e.trg + " mixes condition groups");
      key = nk;
    }
    if (!key) key = "edge:" + std::to_string(i);
    group_for(role, *key).edges.push_back(i);
  }

  ConditionPtr formula;
  auto conjoin = [&](ConditionPtr c) { formula = formula ? Condition::both(formula, std::move(c)) : std::move(c); };
  for (const auto& c : extra_) conjoin(c);
  for (const auto& grp : groups) {
    PatternGraph g;
    std::vector<Condition::Anchor> anchors;
    std::map<std::string, std::size_t, std::less<>> idx;
    auto anchor = [&](const std::string& id) -> PatternNode& {
      auto it = idx.find(id);
      if (it != idx.end()) return g.nodes[it->second];
      auto host = lhs_idx.find(id);
      if (host == lhs_idx.end()) fail("condition refers to '" + id + "', which is not matched");
      idx[id] = g.nodes.size();
      anchors.push_back({host->second, g.nodes.size()});
      g.nodes.push_back({id, r.lhs.nodes[host->second].type, std::nullopt, {}});
      return g.nodes.back();
    };
    // Anchored nodes first, in LHS order, so the search starts from fixed nodes.
    std::set<std::string> needed;
    for (auto k : grp.nodes)
      if (nodes_[k].reference_only) needed.insert(nodes_[k].id);
    for (auto i : grp.edges)
      for (const auto& end : {edges_[i].src, edges_[i].trg})
        if (lhs_idx.contains(end)) needed.insert(end);
    for (const auto& ln : r.lhs.nodes)
      if (needed.contains(ln.id)) anchor(ln.id);
    for (auto k : grp.nodes) {
      const auto& n = nodes_[k];
      if (n.reference_only) {
        PatternNode& pn = anchor(n.id);
        pn.attrs.insert(pn.attrs.end(), n.attrs.begin(), n.attrs.end());
        if (n.param) pn.param = n.param;
      } else {
        idx[n.id] = g.nodes.size();
        g.nodes.push_back({n.id, n.type, n.param, n.attrs});
      }
    }
    for (auto i : grp.edges) g.edges.push_back(make_edge(edges_[i], idx, g));
    auto leaf = Condition::graph(std::move(g), std::move(anchors));
    conjoin(grp.role == Role::Forbid ? Condition::negate(std::move(leaf)) : std::move(leaf));
  }
  r.condition = formula ? formula : Condition::always();

  for (const auto& [id, a] : assigns_) {
    Assignment copy = a;
    copy.node = rhs_idx.at(id);
    r.assignments.push_back(std::move(copy));
  }

  r.partition = classify(r);
  return r;
}

} // namespace gt
