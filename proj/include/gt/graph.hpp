#pragma once

#include "gt/metamodel.hpp"
#include "gt/value.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gt {

struct InEdge {
  NodeId source;
  RefId ref;
  friend bool operator==(const InEdge&, const InEdge&) = default;
};

struct Node {
  NodeId id{};
  TypeId type{};
  std::vector<Value> attrs;              // by attribute slot of `type`
  std::vector<std::vector<NodeId>> refs; // by reference slot of `type`
  std::vector<InEdge> incoming;          // unordered
};

/// Handle returned by InstanceGraph::checkpoint().
struct CheckpointToken {
  std::size_t depth = 0;
  std::uint64_t serial = 0;
};

/// Mutable typed graph conforming to a metamodel.
///
/// Every mutation goes through the methods below and is recorded in a change
/// journal while at least one checkpoint is open, so that rollback_to()
/// restores the graph exactly. Node ids increase monotonically and define the
/// canonical iteration order.
class InstanceGraph {
public:
  explicit InstanceGraph(MetamodelPtr mm);

  const Metamodel& metamodel() const noexcept { return *mm_; }
  const MetamodelPtr& metamodel_ptr() const noexcept { return mm_; }

  NodeId create_node(TypeId type);
  NodeId create_node(std::string_view type) { return create_node(mm_->type_id(type)); }
  /// Creates a node with a given id, which must exceed every id used so far.
  /// Used by loaders to keep ids stable across files.
  NodeId create_node_with_id(TypeId type, NodeId id);
  void delete_node(NodeId id);

  void set_attribute(NodeId id, AttrId attr, Value value);
  void set_attribute(NodeId id, std::string_view name, Value value);
  void add_edge(NodeId src, RefId ref, NodeId trg);
  void add_edge(NodeId src, std::string_view ref, NodeId trg);
  void remove_edge(NodeId src, RefId ref, NodeId trg);
  void remove_edge(NodeId src, std::string_view ref, NodeId trg);

  bool contains(NodeId id) const noexcept {
    return raw(id) < nodes_.size() && nodes_[raw(id)].has_value();
  }
  const Node& node(NodeId id) const {
    if (!contains(id)) throw_unknown(id);
    return *nodes_[raw(id)];
  }
  TypeId type_of(NodeId id) const { return node(id).type; }
  std::size_t node_count() const noexcept { return live_; }
  /// Live node ids in ascending order.
  std::vector<NodeId> node_ids() const;
  /// Live nodes whose exact type is t, ascending.
  const std::set<NodeId>& extent(TypeId t) const { return extents_.at(raw(t)); }
  NodeId next_id() const noexcept { return NodeId(static_cast<std::uint32_t>(nodes_.size())); }

  const Value& attribute(NodeId id, AttrId attr) const;
  const Value& attribute(NodeId id, std::string_view name) const;
  /// Targets of a reference in insertion order; empty if the type lacks it.
  std::span<const NodeId> targets(NodeId id, RefId ref) const {
    const Node& n = node(id);
    const int slot = raw(ref) < mm_->reference_count() ? mm_->ref_slot(n.type, ref) : -1;
    if (slot < 0) return {};
    return n.refs[static_cast<std::size_t>(slot)];
  }
  std::span<const NodeId> targets(NodeId id, std::string_view ref) const;
  bool has_edge(NodeId src, RefId ref, NodeId trg) const;
  std::optional<NodeId> container(NodeId id) const;

  CheckpointToken checkpoint();
  void rollback_to(CheckpointToken token);
  /// Keeps the changes made since the checkpoint and discards it.
  void commit(CheckpointToken token);
  bool is_valid(CheckpointToken token) const noexcept;
  std::size_t open_checkpoints() const noexcept { return checkpoints_.size(); }
  std::size_t journal_size() const noexcept { return journal_.size(); }

  /// Full invariant check. Returns one message per violation.
  std::vector<std::string> validate() const;

private:
  struct NodeCreated {
    NodeId id;
    std::size_t previous_size;
  };
  struct NodeDeleted {
    Node snapshot; // attributes only; edges are journaled separately
  };
  struct AttrSet {
    NodeId id;
    int slot;
    Value old;
  };
  struct EdgeAdded {
    NodeId src;
    RefId ref;
    NodeId trg;
  };
  struct EdgeRemoved {
    NodeId src;
    RefId ref;
    NodeId trg;
    std::size_t position;
  };
  using Change = std::variant<NodeCreated, NodeDeleted, AttrSet, EdgeAdded, EdgeRemoved>;

  Node& mutable_node(NodeId id);
  [[noreturn]] static void throw_unknown(NodeId id);
  int require_ref_slot(const Node& n, RefId ref) const;
  void record(Change c) {
    if (!checkpoints_.empty()) journal_.push_back(std::move(c));
  }
  void undo(Change& c);
  void unlink_incoming(NodeId trg, NodeId src, RefId ref);
  RefId ref_id(NodeId src, std::string_view name) const;
  AttrId attr_id(NodeId id, std::string_view name) const;

  MetamodelPtr mm_;
  std::vector<std::optional<Node>> nodes_; // index == id; slot 0 unused
  std::vector<std::set<NodeId>> extents_;
  std::size_t live_ = 0;
  std::vector<Change> journal_;
  struct Mark {
    std::size_t journal_pos;
    std::uint64_t serial;
  };
  std::vector<Mark> checkpoints_;
  std::uint64_t next_serial_ = 1;
};

/// RAII scope around a checkpoint: rolls back unless commit() was called.
class Transaction {
public:
  explicit Transaction(InstanceGraph& g) : g_(g), token_(g.checkpoint()) {}
  Transaction(const Transaction&) = delete;
  Transaction& operator=(const Transaction&) = delete;
  ~Transaction() {
    if (open_ && g_.is_valid(token_)) g_.rollback_to(token_);
  }

  void commit() {
    g_.commit(token_);
    open_ = false;
  }
  void rollback() {
    g_.rollback_to(token_);
    open_ = false;
  }

private:
  InstanceGraph& g_;
  CheckpointToken token_;
  bool open_ = true;
};

} // namespace gt
