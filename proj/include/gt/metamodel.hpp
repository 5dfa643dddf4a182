#pragma once

#include "gt/value.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gt {

struct AttributeDef {
  std::string name;
  AttrKind kind = AttrKind::String;
};

struct ReferenceDef {
  std::string name;
  std::string target;
  bool containment = false;
  bool many = false;
};

struct NodeTypeDef {
  std::string name;
  bool abstract = false;
  std::vector<std::string> supertypes;
  std::vector<AttributeDef> attributes;
  std::vector<ReferenceDef> references;
};

/// Feature of a type after inheritance is flattened. Ids are global to the
/// metamodel: an inherited feature has the same id in every subtype.
struct AttrFeature {
  AttrId id;
  std::string name;
  AttrKind kind;
  TypeId owner;
};

struct RefFeature {
  RefId id;
  std::string name;
  TypeId target;
  bool containment;
  bool many;
  TypeId owner;
};

/// A closed set of node types with single or multiple inheritance.
///
/// Built from a list of NodeTypeDef and validated on construction. Type 0 is
/// the built-in abstract top type ANY, which every other type conforms to.
class Metamodel {
public:
  static constexpr std::string_view any_type = "ANY";
  static constexpr TypeId any_id = TypeId{0};

  Metamodel(std::string name, std::vector<NodeTypeDef> types);

  /// Union of several metamodels. Type names must not clash.
  static Metamodel merge(std::string name, std::span<const Metamodel* const> parts);

  const std::string& name() const noexcept { return name_; }
  /// Names of the metamodels this one was merged from; just name() otherwise.
  const std::vector<std::string>& parts() const noexcept { return parts_; }
  /// Declared types in declaration order (ANY excluded).
  const std::vector<NodeTypeDef>& definitions() const noexcept { return defs_; }
  std::size_t type_count() const noexcept { return types_.size(); }

  std::optional<TypeId> find_type(std::string_view name) const;
  TypeId type_id(std::string_view name) const; // throws UnknownType
  const std::string& type_name(TypeId t) const { return types_.at(raw(t)).name; }
  bool is_abstract(TypeId t) const { return types_.at(raw(t)).abstract; }

  bool conforms(TypeId sub, TypeId super) const {
    return conforms_[raw(sub) * types_.size() + raw(super)];
  }
  bool conforms(std::string_view sub, std::string_view super) const;

  /// Non-abstract types conforming to t, ascending by id.
  const std::vector<TypeId>& concrete_subtypes(TypeId t) const { return types_.at(raw(t)).concrete_subtypes; }

  const std::vector<AttrFeature>& attributes(TypeId t) const { return types_.at(raw(t)).attrs; }
  const std::vector<RefFeature>& references(TypeId t) const { return types_.at(raw(t)).refs; }

  /// Slot of a feature within instances of t, or -1 if t lacks it.
  int attr_slot(TypeId t, AttrId a) const { return types_[raw(t)].attr_slot[raw(a)]; }
  int ref_slot(TypeId t, RefId r) const { return types_[raw(t)].ref_slot[raw(r)]; }

  const AttrFeature* find_attribute(TypeId t, std::string_view name) const;
  const RefFeature* find_reference(TypeId t, std::string_view name) const;
  const AttrFeature& attribute(AttrId a) const { return all_attrs_.at(raw(a)); }
  const RefFeature& reference(RefId r) const { return all_refs_.at(raw(r)); }
  std::size_t attribute_count() const noexcept { return all_attrs_.size(); }
  std::size_t reference_count() const noexcept { return all_refs_.size(); }

private:
  struct TypeInfo {
    std::string name;
    bool abstract = false;
    std::vector<TypeId> supertypes;
    std::vector<AttrFeature> attrs;
    std::vector<RefFeature> refs;
    std::vector<int> attr_slot;
    std::vector<int> ref_slot;
    std::vector<TypeId> concrete_subtypes;
  };

  void build();

  std::string name_;
  std::vector<std::string> parts_;
  std::vector<NodeTypeDef> defs_;
  std::vector<TypeInfo> types_;
  std::unordered_map<std::string, TypeId> by_name_;
  std::vector<bool> conforms_;
  std::vector<AttrFeature> all_attrs_;
  std::vector<RefFeature> all_refs_;
};

using MetamodelPtr = std::shared_ptr<const Metamodel>;

/// Helper node type with generic many-valued `source` and `target` references,
/// used by transformations to mark already processed elements.
const Metamodel& trace_metamodel();

} // namespace gt
