#include "support.hpp"

#include "gt/formats.hpp"

#include <fstream>
#include <sstream>

#ifndef GT_SOURCE_DIR
#error "GT_SOURCE_DIR must point at the repository root"
#endif

namespace gt::testing {

MetamodelPtr test_metamodel() {
  static const MetamodelPtr mm = std::make_shared<const Metamodel>(parse_metamodel(R"(
    metamodel tm;
    abstract class A { attr n : int; attr s : string; ref next : A[*]; }
    class B extends A { attr flag : bool; }
    class C extends A { ref peer : C; }
    class D { attr n : int; ref items : A[*]; contains kids : D[*]; }
  )"));
  return mm;
}

std::string asset_path(const std::string& relative) { return std::string(GT_SOURCE_DIR) + "/assets/" + relative; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string canon(const InstanceGraph& g) { return serialize_canonical(g); }

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }
bool chance(Rng& rng, unsigned percent) { return pick(rng, 100) < percent; }

const char* const strings[] = {"a", "b"};

} // namespace

InstanceGraph random_graph(Rng& rng, std::size_t max_nodes) {
  const auto mm = test_metamodel();
  InstanceGraph g(mm);
  const std::size_t n = pick(rng, max_nodes + 1);
  const char* const types[] = {"B", "C", "D"};
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId v = g.create_node(types[pick(rng, 3)]);
    g.set_attribute(v, "n", Value(static_cast<std::int64_t>(pick(rng, 3))));
    if (g.type_of(v) != mm->type_id("D")) g.set_attribute(v, "s", Value(strings[pick(rng, 2)]));
    if (g.type_of(v) == mm->type_id("B")) g.set_attribute(v, "flag", Value(chance(rng, 50)));
  }
  const auto ids = g.node_ids();
  const TypeId A = mm->type_id("A"), C = mm->type_id("C"), D = mm->type_id("D");
  for (NodeId s : ids)
    for (NodeId t : ids) {
      const TypeId ts = g.type_of(s), tt = g.type_of(t);
      if (mm->conforms(ts, A) && mm->conforms(tt, A) && chance(rng, 25)) g.add_edge(s, "next", t);
      if (ts == C && tt == C && g.targets(s, "peer").empty() && chance(rng, 20)) g.add_edge(s, "peer", t);
      if (ts == D && mm->conforms(tt, A) && chance(rng, 25)) g.add_edge(s, "items", t);
      if (ts == D && tt == D && s < t && !g.container(t) && chance(rng, 25)) g.add_edge(s, "kids", t);
    }
  return g;
}

namespace {

struct RuleGen {
  Rng& rng;
  const Metamodel& mm;
  std::set<std::string> used_params;

  TypeId random_type() {
    const char* const names[] = {"A", "B", "C", "D", "ANY"};
    return mm.type_id(names[pick(rng, 5)]);
  }

  // Valid (ref, target-compatible) choices between two types.
  std::vector<const RefFeature*> refs_between(TypeId s, TypeId t) const {
    std::vector<const RefFeature*> out;
    for (const auto& r : mm.references(s))
      if (mm.conforms(t, r.target) || mm.conforms(r.target, t)) out.push_back(&r);
    return out;
  }

  AttrPattern random_attr(TypeId t, bool allow_binding) {
    AttrPattern p;
    const auto& attrs = mm.attributes(t);
    const auto& a = attrs[pick(rng, attrs.size())];
    p.name = a.name;
    p.attr = a.id;
    const auto roll = pick(rng, 3);
    if (roll == 0 || (roll == 1 && !allow_binding)) {
      p.kind = AttrPattern::Kind::Constant;
      if (a.kind == AttrKind::Integer) p.constant = Value(static_cast<std::int64_t>(pick(rng, 3)));
      else if (a.kind == AttrKind::String) p.constant = Value(strings[pick(rng, 2)]);
      else p.constant = Value(chance(rng, 50));
    } else if (roll == 1) {
      p.kind = AttrPattern::Kind::Param;
      p.param = a.kind == AttrKind::Integer ? "pn" : a.kind == AttrKind::String ? "ps" : "pf";
      used_params.insert(p.param);
    } else {
      p.kind = AttrPattern::Kind::Check;
      if (a.kind == AttrKind::Integer) p.check = parse_expr(chance(rng, 50) ? "self > 0" : "self != 1");
      else if (a.kind == AttrKind::String) p.check = parse_expr("self == \"a\" || self == \"c\"");
      else p.check = parse_expr("!self");
    }
    return p;
  }

  PatternGraph random_pattern(std::vector<TypeId> anchored_types, std::size_t fresh, bool allow_binding) {
    PatternGraph g;
    for (std::size_t i = 0; i < anchored_types.size() + fresh; ++i) {
      PatternNode pn;
      pn.id = "n" + std::to_string(i);
      pn.type = i < anchored_types.size() ? anchored_types[i] : random_type();
      if (i >= anchored_types.size() && !mm.attributes(pn.type).empty() && chance(rng, 40))
        pn.attrs.push_back(random_attr(pn.type, allow_binding));
      g.nodes.push_back(std::move(pn));
    }
    const std::size_t edges = pick(rng, g.nodes.size() + 2);
    for (std::size_t e = 0; e < edges && !g.nodes.empty(); ++e) {
      const std::size_t s = pick(rng, g.nodes.size()), t = pick(rng, g.nodes.size());
      if (s < anchored_types.size() && t < anchored_types.size() && chance(rng, 70)) continue;
      const auto refs = refs_between(g.nodes[s].type, g.nodes[t].type);
      if (refs.empty()) continue;
      const RefFeature* r = refs[pick(rng, refs.size())];
      PatternEdge pe{s, r->name, r->id, t};
      if (std::find(g.edges.begin(), g.edges.end(), pe) == g.edges.end()) g.edges.push_back(pe);
    }
    return g;
  }

  ConditionPtr random_condition(const PatternGraph& host, int depth) {
    const auto roll = pick(rng, depth > 0 ? 6 : 3);
    if (roll == 0 && depth > 0) return Condition::negate(random_condition(host, depth - 1));
    if (roll == 1 && depth > 0) return Condition::both(random_condition(host, depth - 1), random_condition(host, depth - 1));
    if (roll == 2 && depth > 0) return Condition::either(random_condition(host, depth - 1), random_condition(host, depth - 1));
    if (roll == 3) return Condition::always();
    if (host.nodes.empty()) return Condition::always();

    // Graph leaf: a few anchored host nodes plus 1-2 fresh ones.
    std::vector<std::size_t> hosts;
    for (std::size_t i = 0; i < host.nodes.size(); ++i)
      if (chance(rng, 50)) hosts.push_back(i);
    if (hosts.empty()) hosts.push_back(pick(rng, host.nodes.size()));
    std::vector<TypeId> types;
    for (auto h : hosts) types.push_back(host.nodes[h].type);
    PatternGraph g = random_pattern(types, 1 + pick(rng, 2), false);
    std::vector<Condition::Anchor> anchors;
    for (std::size_t i = 0; i < hosts.size(); ++i) anchors.push_back({hosts[i], i});
    ConditionPtr nested = depth > 0 && chance(rng, 30) ? random_condition(g, depth - 1) : nullptr;
    return Condition::graph(std::move(g), std::move(anchors), std::move(nested));
  }
};

} // namespace

RandomRule random_rule(Rng& rng, const InstanceGraph& host, std::size_t max_nodes) {
  const auto mm = test_metamodel();
  RuleGen gen{rng, *mm, {}};
  RandomRule out;
  Rule& r = out.rule;
  r.name = "random";
  r.metamodel = mm;
  r.injective = chance(rng, 85);
  r.lhs = gen.random_pattern({}, pick(rng, max_nodes + 1), true);
  if (!r.lhs.nodes.empty() && chance(rng, 30)) {
    r.lhs.nodes[pick(rng, r.lhs.nodes.size())].param = "x";
    gen.used_params.insert("x");
  }
  r.rhs = r.lhs;
  for (auto& n : r.rhs.nodes) n.attrs.clear();
  for (std::size_t i = 0; i < r.lhs.nodes.size(); ++i) r.mapping.push_back(i);
  r.condition = gen.random_condition(r.lhs, 2);
  for (const auto& p : gen.used_params) r.params.push_back({p, ParamMode::InOut});
  r.partition = classify(r);

  // Occasional pre-bindings.
  if (gen.used_params.contains("pn") && chance(rng, 30)) out.pre["pn"] = Value(static_cast<std::int64_t>(pick(rng, 3)));
  if (gen.used_params.contains("x") && chance(rng, 40)) {
    const auto ids = host.node_ids();
    if (!ids.empty()) out.pre["x"] = ids[pick(rng, ids.size())];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute force

namespace {

class MapParamsEnv final : public Env {
public:
  MapParamsEnv(const ParamMap& m, const Value* self) : m_(m), self_(self) {}
  const Value* lookup(std::string_view name) const override {
    if (name == "self") return self_;
    auto it = m_.find(name);
    return it == m_.end() ? nullptr : std::get_if<Value>(&it->second);
  }

private:
  const ParamMap& m_;
  const Value* self_;
};

// Checks one complete assignment of `p`. Extends `env` with parameter
// bindings on success.
bool assignment_ok(const InstanceGraph& g, const PatternGraph& p, const std::vector<NodeId>& a,
                   const std::vector<bool>& anchored, const std::vector<NodeId>& used, bool injective, ParamMap& env) {
  const Metamodel& mm = g.metamodel();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!mm.conforms(g.type_of(a[i]), p.nodes[i].type)) return false;
    if (injective && !anchored[i]) {
      for (std::size_t j = 0; j < a.size(); ++j)
        if (j != i && a[j] == a[i]) return false;
      if (std::find(used.begin(), used.end(), a[i]) != used.end()) return false;
    }
  }
  for (const auto& e : p.edges)
    if (e.ref == invalid_ref || !g.has_edge(a[e.src], e.ref, a[e.trg])) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& pn = p.nodes[i];
    if (pn.param) {
      auto it = env.find(*pn.param);
      if (it == env.end()) env.emplace(*pn.param, a[i]);
      else if (it->second != Binding(a[i])) return false;
    }
    for (const auto& ap : pn.attrs) {
      if (mm.attr_slot(g.type_of(a[i]), ap.attr) < 0) return false;
      const Value& v = g.attribute(a[i], ap.attr);
      if (ap.kind == AttrPattern::Kind::Constant && v != ap.constant) return false;
      if (ap.kind == AttrPattern::Kind::Param) {
        auto it = env.find(ap.param);
        if (it == env.end()) env.emplace(ap.param, v);
        else if (it->second != Binding(v)) return false;
      }
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& ap : p.nodes[i].attrs) {
      if (ap.kind != AttrPattern::Kind::Check) continue;
      const Value& v = g.attribute(a[i], ap.attr);
      const Value r = ap.check.eval(MapParamsEnv(env, &v));
      if (!r.is_boolean() || !r.as_boolean()) return false;
    }
  return true;
}

// Calls f for every assignment of p (anchored entries fixed) in lexicographic
// order; f returns true to stop.
template <class F>
bool enumerate(const InstanceGraph& g, const PatternGraph& p, const std::vector<std::optional<NodeId>>& fixed, F&& f) {
  const auto ids = g.node_ids();
  const std::size_t n = p.nodes.size();
  std::vector<NodeId> a(n);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == n) return f(a);
    if (fixed[k]) {
      a[k] = *fixed[k];
      return rec(k + 1);
    }
    for (NodeId v : ids) {
      a[k] = v;
      if (rec(k + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

} // namespace

bool brute_force_condition(const InstanceGraph& g, const Condition& c, const std::vector<NodeId>& host,
                           const std::vector<NodeId>& used, const ParamMap& env, bool injective) {
  switch (c.kind()) {
  case Condition::Kind::True: return true;
  case Condition::Kind::Not: return !brute_force_condition(g, c.left(), host, used, env, injective);
  case Condition::Kind::And:
    return brute_force_condition(g, c.left(), host, used, env, injective) &&
           brute_force_condition(g, c.right(), host, used, env, injective);
  case Condition::Kind::Or:
    return brute_force_condition(g, c.left(), host, used, env, injective) ||
           brute_force_condition(g, c.right(), host, used, env, injective);
  case Condition::Kind::Graph: break;
  }
  const auto& p = c.pattern();
  std::vector<std::optional<NodeId>> fixed(p.nodes.size());
  std::vector<bool> anchored(p.nodes.size(), false);
  for (const auto& an : c.anchors()) {
    fixed[an.node] = host.at(an.host);
    anchored[an.node] = true;
  }
  return enumerate(g, p, fixed, [&](const std::vector<NodeId>& a) {
    ParamMap local = env;
    if (!assignment_ok(g, p, a, anchored, used, injective, local)) return false;
    std::vector<NodeId> inner = used;
    inner.insert(inner.end(), a.begin(), a.end());
    return brute_force_condition(g, c.nested(), a, inner, local, injective);
  });
}

std::vector<Match> brute_force_matches(const InstanceGraph& g, const Rule& rule, const ParamMap& pre) {
  std::vector<Match> out;
  const auto& p = rule.lhs;
  std::vector<std::optional<NodeId>> fixed(p.nodes.size());
  std::vector<bool> anchored(p.nodes.size(), false);
  enumerate(g, p, fixed, [&](const std::vector<NodeId>& a) {
    ParamMap env = pre;
    if (!assignment_ok(g, p, a, anchored, {}, rule.injective, env)) return false;
    if (!rule.injective)
      for (auto d : rule.partition.deleted_nodes)
        for (std::size_t j = 0; j < a.size(); ++j)
          if (j != d && a[j] == a[d]) return false;
    if (!brute_force_condition(g, *rule.condition, a, a, env, rule.injective)) return false;
    out.push_back({a, env});
    return false;
  });
  return out;
}

std::string describe(const Match& m) {
  std::string s = "[";
  for (auto v : m.nodes) s += " #" + std::to_string(raw(v));
  s += " ] {";
  for (const auto& [k, v] : m.params) s += " " + k + "=" + to_string(v);
  return s + " }";
}

} // namespace gt::testing
