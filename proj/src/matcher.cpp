#include "gt/matcher.hpp"

#include "gt/errors.hpp"

#include <algorithm>

namespace gt {

namespace {

constexpr NodeId unplaced = NodeId(0);

/// Parameter bindings with an undo trail, shared by a search and the
/// condition searches nested inside it.
class Scope final : public Env {
public:
  explicit Scope(ParamMap init) : map_(std::move(init)) {}

  const Binding* get(std::string_view name) const {
    auto it = map_.find(name);
    return it == map_.end() ? nullptr : &it->second;
  }
  void bind(const std::string& name, Binding b) { trail_.push_back(map_.emplace(name, std::move(b)).first); }
  std::size_t mark() const noexcept { return trail_.size(); }
  void undo(std::size_t m) {
    while (trail_.size() > m) {
      map_.erase(trail_.back());
      trail_.pop_back();
    }
  }
  bool all_bound(const std::set<std::string, std::less<>>& names) const {
    for (const auto& n : names)
      if (n != "self" && !get(n)) return false;
    return true;
  }

  const Value* lookup(std::string_view name) const override {
    if (name == "self" && self_) return self_;
    const Binding* b = get(name);
    return b ? std::get_if<Value>(b) : nullptr;
  }

  const ParamMap& map() const noexcept { return map_; }
  const Value* self_ = nullptr;

private:
  ParamMap map_;
  std::vector<ParamMap::iterator> trail_;
};

bool check_holds(const Expr& check, const Value& self, Scope& scope) {
  const Value* saved = scope.self_;
  scope.self_ = &self;
  Value r;
  try {
    r = check.eval(scope);
  } catch (...) {
    scope.self_ = saved;
    throw;
  }
  scope.self_ = saved;
  if (!r.is_boolean()) throw EvalError("attribute check '" + check.print() + "' is not boolean");
  return r.as_boolean();
}

bool edge_present(const InstanceGraph& g, NodeId src, RefId ref, NodeId trg) {
  const auto out = g.targets(src, ref);
  const auto& in = g.node(trg).incoming;
  if (out.size() <= in.size()) return std::find(out.begin(), out.end(), trg) != out.end();
  return std::find(in.begin(), in.end(), InEdge{src, ref}) != in.end();
}

// Edges are unique per (source, ref, target), so neither list has repeats.
void sources_of(const InstanceGraph& g, NodeId trg, RefId ref, std::vector<NodeId>& out) {
  out.clear();
  for (const auto& e : g.node(trg).incoming)
    if (e.ref == ref) out.push_back(e.source);
  std::sort(out.begin(), out.end());
}

void targets_of(const InstanceGraph& g, NodeId src, RefId ref, std::vector<NodeId>& out) {
  const auto t = g.targets(src, ref);
  out.assign(t.begin(), t.end());
  std::sort(out.begin(), out.end());
}

std::vector<NodeId> sources_of(const InstanceGraph& g, NodeId trg, RefId ref) {
  std::vector<NodeId> out;
  sources_of(g, trg, ref, out);
  return out;
}

std::vector<NodeId> targets_of(const InstanceGraph& g, NodeId src, RefId ref) {
  std::vector<NodeId> out;
  targets_of(g, src, ref, out);
  return out;
}

class Matcher;

/// Backtracking search over one pattern graph.
class Search {
public:
  using Leaf = std::function<bool(const std::vector<NodeId>&)>; // true stops the search

  Search(Matcher& m, const PatternGraph& p, std::vector<std::optional<NodeId>> fixed, std::vector<bool> anchored,
         const Condition* hints)
      : m_(m), p_(p), fixed_(std::move(fixed)), anchored_(std::move(anchored)), hints_(hints) {
    fixed_.resize(p_.nodes.size());
    anchored_.resize(p_.nodes.size(), false);
    nodes_.assign(p_.nodes.size(), unplaced);
    buffers_.resize(p_.nodes.size());
    // Fixed nodes are singletons, so placing them first keeps the order of
    // the remaining nodes and therefore the lexicographic enumeration order.
    for (std::size_t i = 0; i < p_.nodes.size(); ++i)
      if (fixed_[i]) order_.push_back(i);
    for (std::size_t i = 0; i < p_.nodes.size(); ++i)
      if (!fixed_[i]) order_.push_back(i);
  }

  bool run(const Leaf& leaf) {
    leaf_ = &leaf;
    return place(0);
  }

private:
  bool place(std::size_t k);
  bool try_node(std::size_t k, NodeId v, std::optional<std::size_t> skip_edge);
  bool accept_attrs(std::size_t i, NodeId v);
  bool checks_hold_at_leaf();
  std::optional<std::vector<NodeId>> hint(const Condition& c, std::size_t i) const;

  Matcher& m_;
  const PatternGraph& p_;
  std::vector<std::optional<NodeId>> fixed_;
  std::vector<bool> anchored_;
  const Condition* hints_;
  std::vector<std::size_t> order_;
  std::vector<NodeId> nodes_;
  std::vector<std::vector<NodeId>> buffers_; // candidate lists, one per search depth
  const Leaf* leaf_ = nullptr;
};

class Matcher {
public:
  Matcher(const InstanceGraph& g, bool injective, ParamMap params)
      : g(g), mm(g.metamodel()), injective(injective), scope(std::move(params)) {}

  bool holds(const Condition& c, const std::vector<NodeId>& host) {
    switch (c.kind()) {
    case Condition::Kind::True: return true;
    case Condition::Kind::Not: return !holds(c.left(), host);
    case Condition::Kind::And: return holds(c.left(), host) && holds(c.right(), host);
    case Condition::Kind::Or: return holds(c.left(), host) || holds(c.right(), host);
    case Condition::Kind::Graph: break;
    }
    const auto& pattern = c.pattern();
    std::vector<std::optional<NodeId>> fixed(pattern.nodes.size());
    std::vector<bool> anchored(pattern.nodes.size(), false);
    for (const auto& a : c.anchors()) {
      fixed[a.node] = host.at(a.host);
      anchored[a.node] = true;
    }
    Search s(*this, pattern, std::move(fixed), std::move(anchored), &c.nested());
    return s.run([&](const std::vector<NodeId>& ext) { return holds(c.nested(), ext); });
  }

  bool is_used(NodeId v) const { return std::find(used.begin(), used.end(), v) != used.end(); }

  const InstanceGraph& g;
  const Metamodel& mm;
  bool injective;
  Scope scope;
  std::vector<NodeId> used; // nodes bound by this search and all enclosing ones
};

bool Search::place(std::size_t k) {
  if (k == order_.size()) return checks_hold_at_leaf() && (*leaf_)(nodes_);
  const std::size_t i = order_[k];
  const PatternNode& pn = p_.nodes[i];

  if (fixed_[i]) return try_node(k, *fixed_[i], std::nullopt);
  if (pn.param) {
    if (const Binding* b = m_.scope.get(*pn.param)) {
      const NodeId* v = std::get_if<NodeId>(b);
      return v && m_.g.contains(*v) && try_node(k, *v, std::nullopt);
    }
  }

  // Smallest adjacency list of an already placed neighbour.
  std::optional<std::size_t> best;
  std::size_t best_size = 0;
  for (std::size_t e = 0; e < p_.edges.size(); ++e) {
    const auto& pe = p_.edges[e];
    if (pe.ref == invalid_ref) return false;
    std::size_t size;
    if (pe.trg == i && pe.src != i && nodes_[pe.src] != unplaced) {
      size = m_.g.targets(nodes_[pe.src], pe.ref).size();
    } else if (pe.src == i && pe.trg != i && nodes_[pe.trg] != unplaced) {
      size = m_.g.node(nodes_[pe.trg]).incoming.size();
    } else {
      continue;
    }
    if (!best || size < best_size) {
      best = e;
      best_size = size;
    }
  }
  if (best) {
    const auto& pe = p_.edges[*best];
    auto& cands = buffers_[k];
    if (pe.trg == i) targets_of(m_.g, nodes_[pe.src], pe.ref, cands);
    else sources_of(m_.g, nodes_[pe.trg], pe.ref, cands);
    for (NodeId v : cands)
      if (try_node(k, v, best)) return true;
    return false;
  }

  if (hints_) {
    if (auto cands = hint(*hints_, i)) {
      for (NodeId v : *cands)
        if (try_node(k, v, std::nullopt)) return true;
      return false;
    }
  }

  // Type extent, merged over the concrete subtypes in ascending id order.
  const auto& subtypes = m_.mm.concrete_subtypes(pn.type);
  if (subtypes.size() == 1) {
    for (NodeId v : m_.g.extent(subtypes[0]))
      if (try_node(k, v, std::nullopt)) return true;
    return false;
  }
  using It = std::set<NodeId>::const_iterator;
  std::vector<std::pair<It, It>> heads;
  for (TypeId t : subtypes) {
    const auto& ext = m_.g.extent(t);
    if (!ext.empty()) heads.emplace_back(ext.begin(), ext.end());
  }
  while (!heads.empty()) {
    std::size_t min = 0;
    for (std::size_t h = 1; h < heads.size(); ++h)
      if (*heads[h].first < *heads[min].first) min = h;
    const NodeId v = *heads[min].first;
    if (++heads[min].first == heads[min].second) heads.erase(heads.begin() + static_cast<std::ptrdiff_t>(min));
    if (try_node(k, v, std::nullopt)) return true;
  }
  return false;
}

bool Search::try_node(std::size_t k, NodeId v, std::optional<std::size_t> skip_edge) {
  const std::size_t i = order_[k];
  const PatternNode& pn = p_.nodes[i];
  if (!m_.mm.conforms(m_.g.type_of(v), pn.type)) return false;
  const bool fresh = !anchored_[i];
  if (fresh && m_.injective && m_.is_used(v)) return false;

  // Edges whose other endpoint is placed (or that loop on this node).
  nodes_[i] = v;
  for (std::size_t e = 0; e < p_.edges.size(); ++e) {
    if (skip_edge && e == *skip_edge) continue;
    const auto& pe = p_.edges[e];
    if (pe.src != i && pe.trg != i) continue;
    if (nodes_[pe.src] == unplaced || nodes_[pe.trg] == unplaced) continue;
    if (pe.ref == invalid_ref || !edge_present(m_.g, nodes_[pe.src], pe.ref, nodes_[pe.trg])) {
      nodes_[i] = unplaced;
      return false;
    }
  }

  const std::size_t mark = m_.scope.mark();
  bool ok = true;
  if (pn.param) {
    if (const Binding* b = m_.scope.get(*pn.param)) {
      const NodeId* bound = std::get_if<NodeId>(b);
      ok = bound && *bound == v;
    } else {
      m_.scope.bind(*pn.param, v);
    }
  }
  ok = ok && accept_attrs(i, v);

  bool stop = false;
  if (ok) {
    if (fresh) m_.used.push_back(v);
    try {
      stop = place(k + 1);
    } catch (...) {
      if (fresh) m_.used.pop_back();
      m_.scope.undo(mark);
      nodes_[i] = unplaced;
      throw;
    }
    if (fresh) m_.used.pop_back();
  }
  m_.scope.undo(mark);
  nodes_[i] = unplaced;
  return stop;
}

bool Search::accept_attrs(std::size_t i, NodeId v) {
  const Node& node = m_.g.node(v);
  for (const auto& a : p_.nodes[i].attrs) {
    const int slot = a.attr != invalid_attr ? m_.mm.attr_slot(node.type, a.attr) : -1;
    if (slot < 0) return false;
    const Value& value = node.attrs[static_cast<std::size_t>(slot)];
    switch (a.kind) {
    case AttrPattern::Kind::Constant:
      if (value != a.constant) return false;
      break;
    case AttrPattern::Kind::Param:
      if (const Binding* b = m_.scope.get(a.param)) {
        const Value* bound = std::get_if<Value>(b);
        if (!bound || *bound != value) return false;
      } else {
        m_.scope.bind(a.param, value);
      }
      break;
    case AttrPattern::Kind::Check:
      // Checks over parameters bound later are evaluated at the leaf.
      if (m_.scope.all_bound(a.check.free_params()) && !check_holds(a.check, value, m_.scope)) return false;
      break;
    }
  }
  return true;
}

bool Search::checks_hold_at_leaf() {
  for (std::size_t i = 0; i < p_.nodes.size(); ++i) {
    const Node* node = nullptr;
    for (const auto& a : p_.nodes[i].attrs) {
      if (a.kind != AttrPattern::Kind::Check) continue;
      if (!node) node = &m_.g.node(nodes_[i]);
      const int slot = m_.mm.attr_slot(node->type, a.attr);
      if (!check_holds(a.check, node->attrs[static_cast<std::size_t>(slot)], m_.scope)) return false;
    }
  }
  return true;
}

/// Nodes that pattern node `i` can take for `c` to hold, derived from
/// condition edges between `i` and a placed node. nullopt means no restriction.
std::optional<std::vector<NodeId>> Search::hint(const Condition& c, std::size_t i) const {
  switch (c.kind()) {
  case Condition::Kind::True:
  case Condition::Kind::Not: return std::nullopt;
  case Condition::Kind::And: {
    auto a = hint(c.left(), i);
    auto b = hint(c.right(), i);
    if (!a) return b;
    if (!b) return a;
    std::vector<NodeId> out;
    std::set_intersection(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(out));
    return out;
  }
  case Condition::Kind::Or: {
    auto a = hint(c.left(), i);
    auto b = hint(c.right(), i);
    if (!a || !b) return std::nullopt;
    std::vector<NodeId> out;
    std::set_union(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(out));
    return out;
  }
  case Condition::Kind::Graph: break;
  }
  const auto ci = c.anchor_of(i);
  if (!ci) return std::nullopt;
  auto placed_host = [&](std::size_t cond_node) -> std::optional<NodeId> {
    for (const auto& a : c.anchors())
      if (a.node == cond_node && nodes_[a.host] != unplaced) return nodes_[a.host];
    return std::nullopt;
  };
  std::optional<std::vector<NodeId>> out;
  for (const auto& e : c.pattern().edges) {
    if (e.ref == invalid_ref) continue;
    std::vector<NodeId> cands;
    if (e.trg == *ci && e.src != *ci) {
      auto h = placed_host(e.src);
      if (!h) continue;
      cands = targets_of(m_.g, *h, e.ref);
    } else if (e.src == *ci && e.trg != *ci) {
      auto h = placed_host(e.trg);
      if (!h) continue;
      cands = sources_of(m_.g, *h, e.ref);
    } else {
      continue;
    }
    if (!out) {
      out = std::move(cands);
    } else {
      std::vector<NodeId> both;
      std::set_intersection(out->begin(), out->end(), cands.begin(), cands.end(), std::back_inserter(both));
      out = std::move(both);
    }
  }
  return out;
}

void check_pre(const InstanceGraph& g, const Rule& rule, const ParamMap& pre) {
  for (const auto& [name, b] : pre) {
    if (!rule.find_param(name))
      throw MatchError("rule '" + rule.name + "' has no parameter '" + name + "'");
    if (const NodeId* v = std::get_if<NodeId>(&b); v && !g.contains(*v))
      throw MatchError("parameter '" + name + "' of rule '" + rule.name + "' refers to missing node #" +
                       std::to_string(raw(*v)));
  }
}

} // namespace

void for_each_match(const InstanceGraph& g, const Rule& rule, const ParamMap& pre, const MatchVisitor& visit,
                    const MatchOptions& options) {
  check_pre(g, rule, pre);
  for (const auto& f : options.fixed)
    if (f && !g.contains(*f)) throw MatchError("fixed node #" + std::to_string(raw(*f)) + " is not in the graph");

  Matcher m(g, rule.injective, pre);
  Search s(m, rule.lhs, options.fixed, {}, rule.condition.get());
  Match current;
  s.run([&](const std::vector<NodeId>& nodes) {
    if (!rule.injective) {
      // A deleted node cannot also be preserved through another pattern node.
      for (auto d : rule.partition.deleted_nodes)
        for (std::size_t j = 0; j < nodes.size(); ++j)
          if (j != d && nodes[j] == nodes[d]) return false;
    }
    if (!m.holds(*rule.condition, nodes)) return false;
    current.nodes = nodes;
    current.params = m.scope.map();
    return !visit(current);
  });
}

std::vector<Match> find_matches(const InstanceGraph& g, const Rule& rule, const ParamMap& pre,
                                const MatchOptions& options) {
  std::vector<Match> out;
  for_each_match(
      g, rule, pre,
      [&](const Match& m) {
        out.push_back(m);
        return true;
      },
      options);
  return out;
}

std::optional<Match> find_first_match(const InstanceGraph& g, const Rule& rule, const ParamMap& pre,
                                      const MatchOptions& options) {
  std::optional<Match> out;
  for_each_match(
      g, rule, pre,
      [&](const Match& m) {
        out = m;
        return false;
      },
      options);
  return out;
}

bool check_condition(const InstanceGraph& g, const Condition& formula, const Match& match, bool injective) {
  Matcher m(g, injective, match.params);
  m.used = match.nodes;
  return m.holds(formula, match.nodes);
}

} // namespace gt
