#include "gt/engine.hpp"

#include "gt/errors.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace gt {

namespace {

class BindingEnv final : public Env {
public:
  explicit BindingEnv(const ParamMap& m) : m_(m) {}
  const Value* lookup(std::string_view name) const override {
    auto it = m_.find(name);
    return it == m_.end() ? nullptr : std::get_if<Value>(&it->second);
  }

private:
  const ParamMap& m_;
};

ParamMap inputs_for(const std::vector<Parameter>& params, const ParamMap& in, std::string_view owner) {
  ParamMap out;
  for (const auto& [name, value] : in) {
    auto it = std::find_if(params.begin(), params.end(), [&](const Parameter& p) { return p.name == name; });
    if (it == params.end()) throw MatchError("'" + std::string(owner) + "' has no parameter '" + name + "'");
    if (it->is_input()) out.emplace(name, value);
  }
  return out;
}

ParamMap outputs_for(const std::vector<Parameter>& params, const ParamMap& bound) {
  ParamMap out;
  for (const auto& p : params) {
    if (!p.is_output()) continue;
    if (auto it = bound.find(p.name); it != bound.end()) out.emplace(p.name, it->second);
  }
  return out;
}

} // namespace

std::string_view to_string(UnitKind kind) noexcept {
  switch (kind) {
  case UnitKind::Sequential: return "sequential";
  case UnitKind::Priority: return "priority";
  case UnitKind::Counted: return "counted";
  case UnitKind::Conditional: return "conditional";
  case UnitKind::Independent: return "independent";
  case UnitKind::Amalgamation: return "amalgamation";
  }
  return "?";
}

const Parameter* Unit::find_param(std::string_view n) const {
  for (const auto& p : params)
    if (p.name == n) return &p;
  return nullptr;
}

std::optional<CallTarget> Transformation::find(std::string_view n) const {
  for (std::size_t i = 0; i < units.size(); ++i)
    if (units[i].name == n) return CallTarget{CallTarget::Kind::Unit, i, units[i].name};
  for (std::size_t i = 0; i < rules.size(); ++i)
    if (rules[i].name == n) return CallTarget{CallTarget::Kind::Rule, i, rules[i].name};
  return std::nullopt;
}

const std::vector<Parameter>& Transformation::params_of(const CallTarget& t) const {
  return t.kind == CallTarget::Kind::Rule ? rules.at(t.index).params : units.at(t.index).params;
}

ParamMap apply_match(InstanceGraph& g, const Rule& rule, const Match& match) {
  const auto& part = rule.partition;
  ParamMap bound = match.params;

  // Right-hand side values are computed on the matched state.
  BindingEnv env(bound);
  std::vector<Value> values;
  values.reserve(rule.assignments.size());
  for (const auto& a : rule.assignments) values.push_back(a.value.eval(env));

  std::vector<NodeId> image(rule.rhs.nodes.size(), NodeId(0));
  for (std::size_t l = 0; l < rule.mapping.size(); ++l)
    if (rule.mapping[l]) image[*rule.mapping[l]] = match.nodes[l];

  for (auto e : part.deleted_edges) {
    const auto& pe = rule.lhs.edges[e];
    const NodeId s = match.nodes[pe.src], t = match.nodes[pe.trg];
    if (g.contains(s) && g.contains(t) && g.has_edge(s, pe.ref, t)) g.remove_edge(s, pe.ref, t);
  }
  for (auto n : part.deleted_nodes)
    if (g.contains(match.nodes[n])) g.delete_node(match.nodes[n]);
  for (auto r : part.created_nodes) {
    const auto& pn = rule.rhs.nodes[r];
    image[r] = g.create_node(pn.type);
    if (pn.param) bound.insert_or_assign(*pn.param, image[r]);
  }
  for (auto e : part.created_edges) {
    const auto& pe = rule.rhs.edges[e];
    if (!g.has_edge(image[pe.src], pe.ref, image[pe.trg])) g.add_edge(image[pe.src], pe.ref, image[pe.trg]);
  }
  for (std::size_t i = 0; i < rule.assignments.size(); ++i) {
    const auto& a = rule.assignments[i];
    g.set_attribute(image[a.node], a.attr, values[i]);
  }
  return bound;
}

ExecResult apply_rule(InstanceGraph& g, const Rule& rule, const ParamMap& in) {
  auto match = find_first_match(g, rule, inputs_for(rule.params, in, rule.name));
  if (!match) return {};
  Transaction tx(g);
  ParamMap bound = apply_match(g, rule, *match);
  tx.commit();
  return {true, outputs_for(rule.params, bound)};
}

std::string trace_line(const Rule& rule, const ParamMap& bindings) {
  std::string out = "apply " + rule.name + " {";
  bool first = true;
  for (const auto& p : rule.params) {
    auto it = bindings.find(p.name);
    if (it == bindings.end()) continue;
    if (!first) out += ", ";
    first = false;
    out += p.name + "=" + to_string(it->second);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

Engine::Engine(const Transformation& t, ExecConfig cfg) : t_(t), cfg_(std::move(cfg)), rng_(cfg_.seed) {}

ExecResult Engine::execute(InstanceGraph& g, std::string_view target, const ParamMap& in) {
  auto t = t_.find(target);
  if (!t) throw Error("transformation has no rule or unit named '" + std::string(target) + "'");
  return execute(g, *t, in);
}

ExecResult Engine::execute(InstanceGraph& g, const CallTarget& target, const ParamMap& in) {
  if (cfg_.step_limit == 0) throw Error("step limit must be positive");
  g_ = &g;
  depth_ = 0;
  ExecResult r;
  r.success = invoke(target, in, r.outputs);
  g_ = nullptr;
  return r;
}

void Engine::count_step() {
  if (++steps_ > cfg_.step_limit)
    throw StepLimitExceeded("step limit of " + std::to_string(cfg_.step_limit) + " invocations exceeded");
}

void Engine::applied(const Rule& rule, const ParamMap& bindings) {
  ++counts_[rule.name];
  if (cfg_.trace) *cfg_.trace << trace_line(rule, bindings) << '\n';
  if (cfg_.on_rule_applied) cfg_.on_rule_applied(rule, bindings);
}

bool Engine::invoke(const CallTarget& t, const ParamMap& in, ParamMap& out) {
  count_step();
  if (t.kind == CallTarget::Kind::Rule) return run_rule(t_.rules.at(t.index), in, out);

  const Unit& u = t_.units.at(t.index);
  const auto start = std::chrono::steady_clock::now();
  ParamMap frame = inputs_for(u.params, in, u.name);
  Transaction tx(*g_);
  ++depth_;
  bool ok = false;
  try {
    ok = run_unit(u, frame);
  } catch (...) {
    --depth_;
    throw;
  }
  --depth_;
  if (ok) {
    tx.commit();
    out = outputs_for(u.params, frame);
  } else {
    tx.rollback();
  }
  if (cfg_.on_unit_exit)
    cfg_.on_unit_exit(u, depth_, ok,
                      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start));
  return ok;
}

bool Engine::run_rule(const Rule& rule, const ParamMap& in, ParamMap& out) {
  auto match = find_first_match(*g_, rule, inputs_for(rule.params, in, rule.name));
  if (!match) return false;
  Transaction tx(*g_);
  ParamMap bound = apply_match(*g_, rule, *match);
  tx.commit();
  applied(rule, bound);
  out = outputs_for(rule.params, bound);
  return true;
}

bool Engine::call_child(const Unit& u, const CallTarget& child, ParamMap& frame,
                        std::map<std::string, ParamMap, std::less<>>& child_out) {
  ParamMap in;
  for (const auto& m : u.mappings) {
    if (m.trg_owner != child.name) continue;
    const ParamMap* src = &frame;
    if (!m.src_owner.empty()) {
      auto it = child_out.find(m.src_owner);
      if (it == child_out.end()) continue;
      src = &it->second;
    }
    if (auto v = src->find(m.src_param); v != src->end()) in.insert_or_assign(m.trg_param, v->second);
  }
  ParamMap out;
  if (!invoke(child, in, out)) return false;
  for (const auto& m : u.mappings) {
    if (m.src_owner != child.name || !m.trg_owner.empty()) continue;
    if (auto v = out.find(m.src_param); v != out.end()) frame.insert_or_assign(m.trg_param, v->second);
  }
  child_out.insert_or_assign(child.name, std::move(out));
  return true;
}

bool Engine::run_unit(const Unit& u, ParamMap& frame) {
  std::map<std::string, ParamMap, std::less<>> child_out;
  auto call = [&](const CallTarget& c) { return call_child(u, c, frame, child_out); };

  switch (u.kind) {
  case UnitKind::Sequential:
    for (const auto& c : u.children)
      if (!call(c)) return false;
    return true;
  case UnitKind::Priority:
    for (const auto& c : u.children)
      if (call(c)) return true;
    return false;
  case UnitKind::Counted:
    if (u.count < 0) {
      while (call(u.children.at(0))) {
      }
      return true;
    }
    for (std::int64_t i = 0; i < u.count; ++i)
      if (!call(u.children.at(0))) return false;
    return true;
  case UnitKind::Conditional:
    if (call(u.children.at(0))) return call(u.children.at(1));
    return u.children.size() > 2 && call(u.children[2]);
  case UnitKind::Independent: {
    std::vector<std::size_t> order(u.children.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng_() % i]);
    for (auto i : order)
      if (call(u.children[i])) return true;
    return false;
  }
  case UnitKind::Amalgamation: return run_amalgamation(u, frame);
  }
  return false;
}

bool Engine::run_amalgamation(const Unit& u, ParamMap& frame) {
  auto mapped_inputs = [&](const Rule& r) {
    ParamMap in;
    for (const auto& m : u.mappings)
      if (m.trg_owner == r.name && m.src_owner.empty())
        if (auto v = frame.find(m.src_param); v != frame.end()) in.insert_or_assign(m.trg_param, v->second);
    return inputs_for(r.params, in, r.name);
  };

  const Rule& kernel = t_.rules.at(u.kernel);
  count_step();
  auto km = find_first_match(*g_, kernel, mapped_inputs(kernel));
  if (!km) return false;

  // Every multi match is taken on the state before any rewriting.
  std::vector<std::vector<Match>> multi_matches;
  for (const auto& multi : u.multis) {
    const Rule& r = t_.rules.at(multi.rule);
    MatchOptions opt;
    opt.fixed.resize(r.lhs.nodes.size());
    for (auto [k, m] : multi.embedding) opt.fixed.at(m) = km->nodes.at(k);
    auto found = find_matches(*g_, r, mapped_inputs(r), opt);
    if (cfg_.shuffle_multi_matches)
      for (std::size_t i = found.size(); i > 1; --i) std::swap(found[i - 1], found[rng_() % i]);
    multi_matches.push_back(std::move(found));
  }

  Transaction tx(*g_);
  ParamMap kernel_bound = apply_match(*g_, kernel, *km);
  applied(kernel, kernel_bound);
  for (std::size_t i = 0; i < u.multis.size(); ++i) {
    const Rule& r = t_.rules.at(u.multis[i].rule);
    for (const auto& m : multi_matches[i]) {
      for (auto l : r.partition.preserved_nodes)
        if (!g_->contains(m.nodes[l])) throw Error("amalgamation '" + u.name + "': multi match uses a deleted node");
      count_step();
      applied(r, apply_match(*g_, r, m));
    }
  }
  tx.commit();

  ParamMap out = outputs_for(kernel.params, kernel_bound);
  for (const auto& m : u.mappings)
    if (m.src_owner == kernel.name && m.trg_owner.empty())
      if (auto v = out.find(m.src_param); v != out.end()) frame.insert_or_assign(m.trg_param, v->second);
  return true;
}

} // namespace gt
