#include "gt/metamodel.hpp"

#include "gt/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gt {

namespace {

ModelError invalid(const std::string& msg) {
  return ModelError(ModelError::Code::InvalidMetamodel, msg);
}

} // namespace

Metamodel::Metamodel(std::string name, std::vector<NodeTypeDef> types)
    : name_(std::move(name)), parts_{name_}, defs_(std::move(types)) {
  build();
}

void Metamodel::build() {
  types_.clear();
  by_name_.clear();

  TypeInfo any;
  any.name = std::string(any_type);
  any.abstract = true;
  types_.push_back(std::move(any));
  by_name_.emplace(std::string(any_type), any_id);

  for (const auto& def : defs_) {
    if (def.name.empty()) throw invalid("type with empty name in metamodel '" + name_ + "'");
    if (!by_name_.emplace(def.name, TypeId(static_cast<std::uint32_t>(types_.size()))).second)
      throw invalid("duplicate type name '" + def.name + "'");
    TypeInfo info;
    info.name = def.name;
    info.abstract = def.abstract;
    types_.push_back(std::move(info));
  }

  const std::size_t n = types_.size();
  for (std::size_t i = 1; i < n; ++i) {
    const auto& def = defs_[i - 1];
    for (const auto& super : def.supertypes) {
      auto it = by_name_.find(super);
      if (it == by_name_.end())
        throw invalid("type '" + def.name + "' extends unknown type '" + super + "'");
      types_[i].supertypes.push_back(it->second);
    }
  }

  // Reflexive-transitive closure; a cycle shows up as a type reaching itself
  // through a proper supertype.
  conforms_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(i)};
    while (!stack.empty()) {
      auto t = stack.back();
      stack.pop_back();
      if (conforms_[i * n + t]) continue;
      conforms_[i * n + t] = true;
      for (auto s : types_[t].supertypes) stack.push_back(raw(s));
    }
    conforms_[i * n + 0] = true;
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (auto s : types_[i].supertypes) {
      if (conforms_[raw(s) * n + i])
        throw invalid("cyclic inheritance involving '" + types_[i].name + "'");
    }
  }

  // Global feature ids in declaration order.
  all_attrs_.clear();
  all_refs_.clear();
  std::vector<std::vector<AttrId>> own_attrs(n);
  std::vector<std::vector<RefId>> own_refs(n);
  for (std::size_t i = 1; i < n; ++i) {
    const auto& def = defs_[i - 1];
    for (const auto& a : def.attributes) {
      AttrId id{static_cast<std::uint32_t>(all_attrs_.size())};
      all_attrs_.push_back({id, a.name, a.kind, TypeId(static_cast<std::uint32_t>(i))});
      own_attrs[i].push_back(id);
    }
    for (const auto& r : def.references) {
      auto it = by_name_.find(r.target);
      if (it == by_name_.end())
        throw invalid("reference '" + def.name + "." + r.name + "' targets unknown type '" + r.target + "'");
      RefId id{static_cast<std::uint32_t>(all_refs_.size())};
      all_refs_.push_back({id, r.name, it->second, r.containment, r.many, TypeId(static_cast<std::uint32_t>(i))});
      own_refs[i].push_back(id);
    }
  }

  // Flatten: supertype features first (depth-first, supertype order), then own.
  std::vector<bool> done(n, false);
  std::function<void(std::size_t)> flatten = [&](std::size_t t) {
    if (done[t]) return;
    auto& info = types_[t];
    std::vector<AttrId> attrs;
    std::vector<RefId> refs;
    auto add_attr = [&](AttrId a) {
      if (std::find(attrs.begin(), attrs.end(), a) == attrs.end()) attrs.push_back(a);
    };
    auto add_ref = [&](RefId r) {
      if (std::find(refs.begin(), refs.end(), r) == refs.end()) refs.push_back(r);
    };
    for (auto s : info.supertypes) {
      flatten(raw(s));
      for (const auto& a : types_[raw(s)].attrs) add_attr(a.id);
      for (const auto& r : types_[raw(s)].refs) add_ref(r.id);
    }
    for (auto a : own_attrs[t]) add_attr(a);
    for (auto r : own_refs[t]) add_ref(r);

    std::set<std::string, std::less<>> names;
    for (auto a : attrs) {
      if (!names.insert(all_attrs_[raw(a)].name).second)
        throw invalid("feature name '" + all_attrs_[raw(a)].name + "' is not unique in type '" + info.name + "'");
      info.attrs.push_back(all_attrs_[raw(a)]);
    }
    for (auto r : refs) {
      if (!names.insert(all_refs_[raw(r)].name).second)
        throw invalid("feature name '" + all_refs_[raw(r)].name + "' is not unique in type '" + info.name + "'");
      info.refs.push_back(all_refs_[raw(r)]);
    }
    done[t] = true;
  };
  for (std::size_t t = 0; t < n; ++t) flatten(t);

  for (std::size_t t = 0; t < n; ++t) {
    auto& info = types_[t];
    info.attr_slot.assign(all_attrs_.size(), -1);
    info.ref_slot.assign(all_refs_.size(), -1);
    for (std::size_t k = 0; k < info.attrs.size(); ++k) info.attr_slot[raw(info.attrs[k].id)] = static_cast<int>(k);
    for (std::size_t k = 0; k < info.refs.size(); ++k) info.ref_slot[raw(info.refs[k].id)] = static_cast<int>(k);
    info.concrete_subtypes.clear();
    for (std::size_t s = 0; s < n; ++s) {
      if (!types_[s].abstract && conforms_[s * n + t]) info.concrete_subtypes.push_back(TypeId(static_cast<std::uint32_t>(s)));
    }
  }
}

Metamodel Metamodel::merge(std::string name, std::span<const Metamodel* const> parts) {
  std::vector<NodeTypeDef> defs;
  for (const auto* mm : parts) {
    for (const auto& d : mm->definitions()) defs.push_back(d);
  }
  Metamodel out(std::move(name), std::move(defs));
  out.parts_.clear();
  for (const auto* mm : parts) out.parts_.insert(out.parts_.end(), mm->parts().begin(), mm->parts().end());
  return out;
}

std::optional<TypeId> Metamodel::find_type(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

TypeId Metamodel::type_id(std::string_view name) const {
  if (auto t = find_type(name)) return *t;
  throw ModelError(ModelError::Code::UnknownType, "unknown type '" + std::string(name) + "'");
}

bool Metamodel::conforms(std::string_view sub, std::string_view super) const {
  return conforms(type_id(sub), type_id(super));
}

const AttrFeature* Metamodel::find_attribute(TypeId t, std::string_view name) const {
  for (const auto& a : types_.at(raw(t)).attrs)
    if (a.name == name) return &a;
  return nullptr;
}

const RefFeature* Metamodel::find_reference(TypeId t, std::string_view name) const {
  for (const auto& r : types_.at(raw(t)).refs)
    if (r.name == name) return &r;
  return nullptr;
}

const Metamodel& trace_metamodel() {
  static const Metamodel mm("trace", {NodeTypeDef{
                                         "Trace",
                                         false,
                                         {},
                                         {},
                                         {{"source", std::string(Metamodel::any_type), false, true},
                                          {"target", std::string(Metamodel::any_type), false, true}},
                                     }});
  return mm;
}

} // namespace gt
