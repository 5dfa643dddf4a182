#include "gt/graph.hpp"

#include "gt/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace gt {

namespace {

std::string id_text(NodeId id) { return "#" + std::to_string(raw(id)); }

} // namespace

InstanceGraph::InstanceGraph(MetamodelPtr mm) : mm_(std::move(mm)) {
  nodes_.emplace_back(); // id 0 is never used
  extents_.resize(mm_->type_count());
}

void InstanceGraph::throw_unknown(NodeId id) {
  throw ModelError(ModelError::Code::UnknownNode, "unknown node " + id_text(id));
}

Node& InstanceGraph::mutable_node(NodeId id) {
  if (!contains(id)) throw ModelError(ModelError::Code::UnknownNode, "unknown node " + id_text(id));
  return *nodes_[raw(id)];
}

NodeId InstanceGraph::create_node(TypeId type) {
  return create_node_with_id(type, next_id());
}

NodeId InstanceGraph::create_node_with_id(TypeId type, NodeId id) {
  if (raw(type) >= mm_->type_count())
    throw ModelError(ModelError::Code::UnknownType, "unknown type id " + std::to_string(raw(type)));
  if (mm_->is_abstract(type))
    throw ModelError(ModelError::Code::AbstractType, "cannot instantiate abstract type '" + mm_->type_name(type) + "'");
  if (raw(id) < nodes_.size() || raw(id) == 0)
    throw ModelError(ModelError::Code::UnknownNode, "node id " + id_text(id) + " is not fresh");

  const std::size_t previous = nodes_.size();
  nodes_.resize(raw(id) + 1);
  Node n;
  n.id = id;
  n.type = type;
  for (const auto& a : mm_->attributes(type)) n.attrs.push_back(Value::default_for(a.kind));
  n.refs.resize(mm_->references(type).size());
  nodes_[raw(id)] = std::move(n);
  extents_[raw(type)].insert(id);
  ++live_;
  record(NodeCreated{id, previous});
  return id;
}

void InstanceGraph::delete_node(NodeId id) {
  const Node& n = node(id);
  const auto& refs = mm_->references(n.type);
  for (std::size_t slot = 0; slot < refs.size(); ++slot) {
    const auto targets = n.refs[slot]; // copy: remove_edge mutates the list
    for (auto it = targets.rbegin(); it != targets.rend(); ++it) remove_edge(id, refs[slot].id, *it);
  }
  const auto incoming = n.incoming;
  for (auto it = incoming.rbegin(); it != incoming.rend(); ++it) remove_edge(it->source, it->ref, id);

  Node& dead = mutable_node(id);
  assert(dead.incoming.empty());
  extents_[raw(dead.type)].erase(id);
  record(NodeDeleted{dead});
  nodes_[raw(id)].reset();
  --live_;
}

int InstanceGraph::require_ref_slot(const Node& n, RefId ref) const {
  int slot = raw(ref) < mm_->reference_count() ? mm_->ref_slot(n.type, ref) : -1;
  if (slot < 0)
    throw ModelError(ModelError::Code::UnknownFeature,
                     "type '" + mm_->type_name(n.type) + "' has no reference with id " + std::to_string(raw(ref)));
  return slot;
}

RefId InstanceGraph::ref_id(NodeId src, std::string_view name) const {
  const Node& n = node(src);
  if (const auto* r = mm_->find_reference(n.type, name)) return r->id;
  throw ModelError(ModelError::Code::UnknownFeature,
                   "type '" + mm_->type_name(n.type) + "' has no reference '" + std::string(name) + "'");
}

AttrId InstanceGraph::attr_id(NodeId id, std::string_view name) const {
  const Node& n = node(id);
  if (const auto* a = mm_->find_attribute(n.type, name)) return a->id;
  throw ModelError(ModelError::Code::UnknownFeature,
                   "type '" + mm_->type_name(n.type) + "' has no attribute '" + std::string(name) + "'");
}

void InstanceGraph::set_attribute(NodeId id, AttrId attr, Value value) {
  Node& n = mutable_node(id);
  int slot = raw(attr) < mm_->attribute_count() ? mm_->attr_slot(n.type, attr) : -1;
  if (slot < 0)
    throw ModelError(ModelError::Code::UnknownFeature,
                     "type '" + mm_->type_name(n.type) + "' has no attribute with id " + std::to_string(raw(attr)));
  const auto& def = mm_->attributes(n.type)[static_cast<std::size_t>(slot)];
  if (value.kind() != def.kind)
    throw ModelError(ModelError::Code::KindMismatch, "attribute '" + def.name + "' of " + id_text(id) + " expects " +
                                                         std::string(to_string(def.kind)) + ", got " +
                                                         std::string(to_string(value.kind())));
  auto& current = n.attrs[static_cast<std::size_t>(slot)];
  if (current == value) return;
  Value old = std::exchange(current, std::move(value));
  record(AttrSet{id, slot, std::move(old)});
}

void InstanceGraph::set_attribute(NodeId id, std::string_view name, Value value) {
  set_attribute(id, attr_id(id, name), std::move(value));
}

void InstanceGraph::add_edge(NodeId src, RefId ref, NodeId trg) {
  Node& s = mutable_node(src);
  const int slot = require_ref_slot(s, ref);
  const Node& t = node(trg);
  const auto& def = mm_->reference(ref);
  if (!mm_->conforms(t.type, def.target))
    throw ModelError(ModelError::Code::TypeMismatch, "reference '" + def.name + "' expects " +
                                                         mm_->type_name(def.target) + ", got " +
                                                         mm_->type_name(t.type) + " " + id_text(trg));
  auto& list = s.refs[static_cast<std::size_t>(slot)];
  if (std::find(list.begin(), list.end(), trg) != list.end())
    throw ModelError(ModelError::Code::DuplicateEdge,
                     "edge " + id_text(src) + " -" + def.name + "-> " + id_text(trg) + " already exists");
  if (!def.many && !list.empty())
    throw ModelError(ModelError::Code::Multiplicity,
                     "single-valued reference '" + def.name + "' of " + id_text(src) + " is already set");
  if (def.containment) {
    if (container(trg))
      throw ModelError(ModelError::Code::Containment, id_text(trg) + " already has a container");
    for (std::optional<NodeId> up = src; up; up = container(*up)) {
      if (*up == trg)
        throw ModelError(ModelError::Code::Containment,
                         "containing " + id_text(trg) + " in " + id_text(src) + " would create a cycle");
    }
  }
  list.push_back(trg);
  mutable_node(trg).incoming.push_back({src, ref});
  record(EdgeAdded{src, ref, trg});
}

void InstanceGraph::add_edge(NodeId src, std::string_view ref, NodeId trg) {
  add_edge(src, ref_id(src, ref), trg);
}

void InstanceGraph::unlink_incoming(NodeId trg, NodeId src, RefId ref) {
  auto& in = mutable_node(trg).incoming;
  for (auto it = in.rbegin(); it != in.rend(); ++it) {
    if (it->source == src && it->ref == ref) {
      in.erase(std::next(it).base());
      return;
    }
  }
  assert(false && "incoming index out of sync");
}

void InstanceGraph::remove_edge(NodeId src, RefId ref, NodeId trg) {
  Node& s = mutable_node(src);
  const int slot = require_ref_slot(s, ref);
  auto& list = s.refs[static_cast<std::size_t>(slot)];
  auto it = std::find(list.begin(), list.end(), trg);
  if (it == list.end())
    throw ModelError(ModelError::Code::MissingEdge, "no edge " + id_text(src) + " -" + mm_->reference(ref).name +
                                                        "-> " + id_text(trg));
  const auto position = static_cast<std::size_t>(it - list.begin());
  list.erase(it);
  unlink_incoming(trg, src, ref);
  record(EdgeRemoved{src, ref, trg, position});
}

void InstanceGraph::remove_edge(NodeId src, std::string_view ref, NodeId trg) {
  remove_edge(src, ref_id(src, ref), trg);
}

std::vector<NodeId> InstanceGraph::node_ids() const {
  std::vector<NodeId> out;
  out.reserve(live_);
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (nodes_[i]) out.push_back(NodeId(static_cast<std::uint32_t>(i)));
  return out;
}

const Value& InstanceGraph::attribute(NodeId id, AttrId attr) const {
  const Node& n = node(id);
  int slot = raw(attr) < mm_->attribute_count() ? mm_->attr_slot(n.type, attr) : -1;
  if (slot < 0)
    throw ModelError(ModelError::Code::UnknownFeature,
                     "type '" + mm_->type_name(n.type) + "' has no attribute with id " + std::to_string(raw(attr)));
  return n.attrs[static_cast<std::size_t>(slot)];
}

const Value& InstanceGraph::attribute(NodeId id, std::string_view name) const {
  return attribute(id, attr_id(id, name));
}

std::span<const NodeId> InstanceGraph::targets(NodeId id, std::string_view ref) const {
  return targets(id, ref_id(id, ref));
}

bool InstanceGraph::has_edge(NodeId src, RefId ref, NodeId trg) const {
  auto list = targets(src, ref);
  return std::find(list.begin(), list.end(), trg) != list.end();
}

std::optional<NodeId> InstanceGraph::container(NodeId id) const {
  for (const auto& e : node(id).incoming)
    if (mm_->reference(e.ref).containment) return e.source;
  return std::nullopt;
}

CheckpointToken InstanceGraph::checkpoint() {
  checkpoints_.push_back({journal_.size(), next_serial_});
  return {checkpoints_.size() - 1, next_serial_++};
}

bool InstanceGraph::is_valid(CheckpointToken token) const noexcept {
  return token.depth < checkpoints_.size() && checkpoints_[token.depth].serial == token.serial;
}

void InstanceGraph::rollback_to(CheckpointToken token) {
  if (!is_valid(token)) throw ModelError(ModelError::Code::StaleCheckpoint, "stale checkpoint token");
  const std::size_t pos = checkpoints_[token.depth].journal_pos;
  while (journal_.size() > pos) {
    undo(journal_.back());
    journal_.pop_back();
  }
  checkpoints_.resize(token.depth);
}

void InstanceGraph::commit(CheckpointToken token) {
  if (!is_valid(token)) throw ModelError(ModelError::Code::StaleCheckpoint, "stale checkpoint token");
  checkpoints_.resize(token.depth);
  if (checkpoints_.empty()) journal_.clear();
}

void InstanceGraph::undo(Change& change) {
  std::visit(
      [this](auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, NodeCreated>) {
          extents_[raw(nodes_[raw(c.id)]->type)].erase(c.id);
          nodes_.resize(c.previous_size);
          --live_;
        } else if constexpr (std::is_same_v<T, NodeDeleted>) {
          const NodeId id = c.snapshot.id;
          extents_[raw(c.snapshot.type)].insert(id);
          nodes_[raw(id)] = std::move(c.snapshot);
          ++live_;
        } else if constexpr (std::is_same_v<T, AttrSet>) {
          nodes_[raw(c.id)]->attrs[static_cast<std::size_t>(c.slot)] = std::move(c.old);
        } else if constexpr (std::is_same_v<T, EdgeAdded>) {
          Node& s = *nodes_[raw(c.src)];
          auto& list = s.refs[static_cast<std::size_t>(mm_->ref_slot(s.type, c.ref))];
          assert(!list.empty() && list.back() == c.trg);
          list.pop_back();
          unlink_incoming(c.trg, c.src, c.ref);
        } else {
          Node& s = *nodes_[raw(c.src)];
          auto& list = s.refs[static_cast<std::size_t>(mm_->ref_slot(s.type, c.ref))];
          list.insert(list.begin() + static_cast<std::ptrdiff_t>(c.position), c.trg);
          nodes_[raw(c.trg)]->incoming.push_back({c.src, c.ref});
        }
      },
      change);
}

std::vector<std::string> InstanceGraph::validate() const {
  std::vector<std::string> problems;
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> mirrored; // (trg, src) -> count of incoming
  std::size_t live = 0;
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!nodes_[i]) continue;
    ++live;
    const Node& n = *nodes_[i];
    const std::string who = id_text(n.id);
    if (raw(n.id) != i) problems.push_back(who + ": id does not match its slot");
    if (raw(n.type) >= mm_->type_count() || mm_->is_abstract(n.type)) {
      problems.push_back(who + ": type is abstract or undeclared");
      continue;
    }
    if (!extents_[raw(n.type)].contains(n.id)) problems.push_back(who + ": missing from type index");
    const auto& attrs = mm_->attributes(n.type);
    if (n.attrs.size() != attrs.size()) problems.push_back(who + ": wrong attribute count");
    for (std::size_t k = 0; k < std::min(attrs.size(), n.attrs.size()); ++k)
      if (n.attrs[k].kind() != attrs[k].kind) problems.push_back(who + ": attribute '" + attrs[k].name + "' has wrong kind");
    const auto& refs = mm_->references(n.type);
    if (n.refs.size() != refs.size()) {
      problems.push_back(who + ": wrong reference count");
      continue;
    }
    int containers = 0;
    for (const auto& in : n.incoming) {
      if (!contains(in.source)) problems.push_back(who + ": incoming edge from missing node " + id_text(in.source));
      else if (mm_->reference(in.ref).containment) ++containers;
    }
    if (containers > 1) problems.push_back(who + ": more than one container");
    for (std::size_t k = 0; k < refs.size(); ++k) {
      const auto& list = n.refs[k];
      if (!refs[k].many && list.size() > 1) problems.push_back(who + ": single-valued '" + refs[k].name + "' holds several targets");
      for (std::size_t a = 0; a < list.size(); ++a) {
        const NodeId t = list[a];
        if (!contains(t)) {
          problems.push_back(who + ": dangling edge '" + refs[k].name + "' -> " + id_text(t));
          continue;
        }
        if (!mm_->conforms(nodes_[raw(t)]->type, refs[k].target))
          problems.push_back(who + ": edge '" + refs[k].name + "' -> " + id_text(t) + " has non-conforming target");
        if (std::find(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(a), t) != list.begin() + static_cast<std::ptrdiff_t>(a))
          problems.push_back(who + ": duplicate edge '" + refs[k].name + "' -> " + id_text(t));
        const auto& in = nodes_[raw(t)]->incoming;
        if (std::find(in.begin(), in.end(), InEdge{n.id, refs[k].id}) == in.end())
          problems.push_back(who + ": edge '" + refs[k].name + "' -> " + id_text(t) + " missing from incoming index");
        ++mirrored[{raw(t), static_cast<std::uint32_t>(i)}];
      }
    }
  }
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!nodes_[i]) continue;
    std::map<std::uint32_t, int> counts;
    for (const auto& in : nodes_[i]->incoming) ++counts[raw(in.source)];
    for (auto [src, c] : counts) {
      auto it = mirrored.find({static_cast<std::uint32_t>(i), src});
      if (it == mirrored.end() || it->second != c)
        problems.push_back(id_text(NodeId(static_cast<std::uint32_t>(i))) + ": stale incoming entry from #" + std::to_string(src));
    }
    // Containment acyclicity: walking up must terminate.
    std::size_t steps = 0;
    for (auto up = container(NodeId(static_cast<std::uint32_t>(i))); up && steps <= nodes_.size(); up = container(*up)) ++steps;
    if (steps > nodes_.size()) problems.push_back(id_text(NodeId(static_cast<std::uint32_t>(i))) + ": containment cycle");
  }
  if (live != live_) problems.push_back("live node counter out of sync");
  return problems;
}

} // namespace gt
