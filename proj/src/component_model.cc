// Copyright 2026 The RAIS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rais/component_model.h"

#include <algorithm>
#include <array>
#include <set>

#include "text_util.h"

namespace rais {
namespace {

std::string Normalized(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != '_' && c != '-' && c != ' ') out += AsciiLower(c);
  }
  return out;
}

const TypeDecl* FindTypeIn(const std::vector<Declaration>& decls,
                           std::string_view name, bool want_full_view) {
  for (const Declaration& d : decls) {
    const TypeDecl* t = d.AsType();
    if (t == nullptr || !EqualsIgnoreCase(t->name, name)) continue;
    if (want_full_view && std::holds_alternative<PrivateDef>(t->definition)) {
      continue;
    }
    return t;
  }
  return nullptr;
}

// Full view if one exists anywhere in the unit, else the partial view.
const TypeDecl* FindAnyType(const ParsedUnit& unit, std::string_view name) {
  if (const TypeDecl* t = FindTypeIn(unit.private_declarations, name, true)) {
    return t;
  }
  if (const TypeDecl* t = FindTypeIn(unit.visible_declarations, name, true)) {
    return t;
  }
  if (const TypeDecl* t = FindTypeIn(unit.visible_declarations, name, false)) {
    return t;
  }
  return FindTypeIn(unit.private_declarations, name, false);
}

bool IsDeclaredAccessType(const ParsedUnit& unit, std::string_view name) {
  const TypeDecl* t = FindAnyType(unit, name);
  return t != nullptr && std::holds_alternative<AccessDef>(t->definition);
}

bool IsComposite(const TypeDecl& t) {
  return std::holds_alternative<ArrayDef>(t.definition) ||
         std::holds_alternative<RecordDef>(t.definition) ||
         std::holds_alternative<AccessDef>(t.definition);
}

std::optional<std::string> ElementOf(const ParsedUnit& unit,
                                     const TypeDecl& rep,
                                     std::set<std::string>& visited);

std::optional<std::string> ResolveElement(const ParsedUnit& unit,
                                          const std::string& name,
                                          std::set<std::string>& visited) {
  if (!visited.insert(ToLower(name)).second) return std::nullopt;
  const TypeDecl* t = FindAnyType(unit, name);
  if (t == nullptr || !IsComposite(*t)) return name;
  return ElementOf(unit, *t, visited);
}

std::optional<std::string> ElementOf(const ParsedUnit& unit,
                                     const TypeDecl& rep,
                                     std::set<std::string>& visited) {
  if (const auto* a = std::get_if<ArrayDef>(&rep.definition)) {
    return ResolveElement(unit, a->element_type, visited);
  }
  if (const auto* a = std::get_if<AccessDef>(&rep.definition)) {
    return ResolveElement(unit, a->designated_type, visited);
  }
  if (const auto* r = std::get_if<RecordDef>(&rep.definition)) {
    // Components holding a declared composite (the storage) win over scalar
    // bookkeeping fields such as counters; link fields are never elements.
    for (int pass = 0; pass < 2; ++pass) {
      for (const RecordComponent& c : r->components) {
        if (IsDeclaredAccessType(unit, c.type_name)) continue;
        const TypeDecl* t = FindAnyType(unit, c.type_name);
        const bool composite = t != nullptr && IsComposite(*t);
        if ((pass == 0) != composite) continue;
        if (auto e = ResolveElement(unit, c.type_name, visited)) return e;
      }
    }
  }
  return std::nullopt;
}

bool Mentions(const TypeDefinition& def, std::string_view name) {
  if (const auto* a = std::get_if<ArrayDef>(&def)) {
    if (const auto* u = std::get_if<UnconstrainedRange>(&a->index)) {
      if (EqualsIgnoreCase(u->index_type, name)) return true;
    }
    return EqualsIgnoreCase(a->element_type, name);
  }
  if (const auto* r = std::get_if<RecordDef>(&def)) {
    return std::any_of(r->components.begin(), r->components.end(),
                       [&](const RecordComponent& c) {
                         return EqualsIgnoreCase(c.type_name, name);
                       });
  }
  if (const auto* a = std::get_if<AccessDef>(&def)) {
    return EqualsIgnoreCase(a->designated_type, name);
  }
  return false;
}

bool HasAdtParameter(const SubprogramDecl& sub, std::string_view adt) {
  return std::any_of(
      sub.parameters.begin(), sub.parameters.end(),
      [&](const Parameter& p) { return EqualsIgnoreCase(p.type_name, adt); });
}

bool StartsWithAny(std::string_view name,
                   std::initializer_list<std::string_view> prefixes) {
  return std::any_of(prefixes.begin(), prefixes.end(), [&](std::string_view p) {
    return StartsWithIgnoreCase(name, p);
  });
}

}  // namespace

std::string_view ToString(OperationClass c) {
  switch (c) {
    case OperationClass::kCreation:
      return "Creation";
    case OperationClass::kTermination:
      return "Termination";
    case OperationClass::kConversion:
      return "Conversion";
    case OperationClass::kStateInquiry:
      return "StateInquiry";
    case OperationClass::kStateChange:
      return "StateChange";
    case OperationClass::kInputOutput:
      return "InputOutput";
    case OperationClass::kUnclassified:
      return "Unclassified";
  }
  return "Unclassified";
}

std::string_view ToString(StructureKind k) {
  switch (k) {
    case StructureKind::kStatic:
      return "static";
    case StructureKind::kDynamic:
      return "dynamic";
    case StructureKind::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::string_view ToString(Privacy p) {
  switch (p) {
    case Privacy::kPrivate:
      return "private";
    case Privacy::kLimitedPrivate:
      return "limited private";
    case Privacy::kNotPrivate:
      return "not private";
  }
  return "not private";
}

std::optional<OperationClass> ParseOperationClass(std::string_view text) {
  const std::string key = Normalized(text);
  static constexpr std::array<OperationClass, 7> kAll = {
      OperationClass::kCreation,     OperationClass::kTermination,
      OperationClass::kConversion,   OperationClass::kStateInquiry,
      OperationClass::kStateChange,  OperationClass::kInputOutput,
      OperationClass::kUnclassified,
  };
  for (OperationClass c : kAll) {
    if (Normalized(ToString(c)) == key) return c;
  }
  return std::nullopt;
}

std::optional<StructureKind> ParseStructureKind(std::string_view text) {
  const std::string key = Normalized(text);
  for (StructureKind k : {StructureKind::kStatic, StructureKind::kDynamic,
                          StructureKind::kUnknown}) {
    if (ToString(k) == key) return k;
  }
  return std::nullopt;
}

bool ComponentModel::HasOperationOfClass(OperationClass c) const {
  return std::any_of(
      classified_ops.begin(), classified_ops.end(),
      [c](const ClassifiedOperation& op) { return op.op_class == c; });
}

std::vector<const SubprogramDecl*> ComponentModel::OperationsOfClass(
    OperationClass c) const {
  std::vector<const SubprogramDecl*> out;
  for (const ClassifiedOperation& op : classified_ops) {
    if (op.op_class == c) out.push_back(op.subprogram);
  }
  return out;
}

const TypeDecl* ComponentModel::FindType(std::string_view name) const {
  return FindAnyType(*unit, name);
}

bool ComponentModel::IsGenericFormalType(std::string_view name) const {
  for (const GenericFormal& f : unit->generic_formals) {
    if (const FormalType* t = f.AsType()) {
      if (EqualsIgnoreCase(t->name, name)) return true;
    }
  }
  return false;
}

StructureKind DetectStructureKind(const ParsedUnit& unit,
                                  std::string_view adt_name,
                                  const OverrideSet& overrides) {
  if (overrides.structure_kind) return *overrides.structure_kind;
  const TypeDecl* full = FindAnyType(unit, adt_name);
  if (full == nullptr) return StructureKind::kUnknown;
  const TypeDefinition& def = full->definition;
  if (std::holds_alternative<AccessDef>(def)) return StructureKind::kDynamic;
  if (const auto* r = std::get_if<RecordDef>(&def)) {
    for (const RecordComponent& c : r->components) {
      if (IsDeclaredAccessType(unit, c.type_name)) {
        return StructureKind::kDynamic;
      }
    }
    return StructureKind::kStatic;
  }
  if (std::holds_alternative<ArrayDef>(def)) return StructureKind::kStatic;
  if (const auto* p = std::get_if<PrivateDef>(&def)) {
    return p->is_limited ? StructureKind::kDynamic : StructureKind::kUnknown;
  }
  // Scalar full views hold their value in place.
  return StructureKind::kStatic;
}

ClassifiedOperation ClassifyOperation(const SubprogramDecl& sub,
                                      std::string_view adt_name,
                                      const OverrideSet& overrides) {
  ClassifiedOperation result;
  result.subprogram = &sub;
  for (const auto& [name, op_class] : overrides.op_class_overrides) {
    if (EqualsIgnoreCase(name, sub.name)) {
      result.op_class = op_class;
      result.source = ClassificationSource::kOverride;
      return result;
    }
  }

  const bool has_adt_param = HasAdtParameter(sub, adt_name);
  const bool returns_adt =
      sub.return_type && EqualsIgnoreCase(*sub.return_type, adt_name);
  const std::string_view name = sub.name;

  auto by_name = [&](OperationClass c) {
    result.op_class = c;
    result.source = ClassificationSource::kNameRule;
    result.low_confidence = !has_adt_param && !returns_adt;
    return result;
  };
  auto by_signature = [&](OperationClass c) {
    result.op_class = c;
    result.source = ClassificationSource::kSignatureRule;
    return result;
  };

  if (StartsWithAny(name, {"Create", "New_", "Init", "Initialize", "Make"})) {
    return by_name(OperationClass::kCreation);
  }
  if (sub.is_function() && returns_adt && !has_adt_param) {
    return by_signature(OperationClass::kCreation);
  }
  if (StartsWithAny(name, {"Destroy", "Free", "Delete", "Dispose", "Finalize",
                           "Clear"})) {
    return by_name(OperationClass::kTermination);
  }
  if (StartsWithAny(name, {"To_", "From_", "Convert"})) {
    return by_name(OperationClass::kConversion);
  }
  if (StartsWithAny(name, {"Put", "Get", "Read", "Write", "Print", "Display",
                           "Image"})) {
    return by_name(OperationClass::kInputOutput);
  }
  if (sub.is_function() && has_adt_param && !returns_adt &&
      std::all_of(sub.parameters.begin(), sub.parameters.end(),
                  [&](const Parameter& p) {
                    return !EqualsIgnoreCase(p.type_name, adt_name) ||
                           p.mode == ParamMode::kIn;
                  })) {
    return by_signature(OperationClass::kStateInquiry);
  }
  if (StartsWithAny(name, {"Is_", "Has_", "Length", "Size", "Count", "Empty",
                           "Full", "Top", "Peek"})) {
    return by_name(OperationClass::kStateInquiry);
  }
  if (!sub.is_function() &&
      std::any_of(sub.parameters.begin(), sub.parameters.end(),
                  [&](const Parameter& p) {
                    return EqualsIgnoreCase(p.type_name, adt_name) &&
                           p.mode != ParamMode::kIn;
                  })) {
    return by_signature(OperationClass::kStateChange);
  }
  result.low_confidence = true;
  return result;
}

bool ElementIndependentOps(const ParsedUnit& unit, std::string_view adt_name,
                           const std::optional<std::string>& element_type,
                           const OverrideSet& overrides) {
  if (overrides.element_independence) return *overrides.element_independence;
  if (!element_type) return true;
  const TypeDecl* full = FindAnyType(unit, adt_name);
  if (full != nullptr) {
    if (const auto* a = std::get_if<ArrayDef>(&full->definition)) {
      if (const auto* u = std::get_if<UnconstrainedRange>(&a->index)) {
        if (EqualsIgnoreCase(u->index_type, *element_type)) return false;
      }
    }
  }
  for (const Declaration& d : unit.visible_declarations) {
    const TypeDecl* t = d.AsType();
    if (t == nullptr || EqualsIgnoreCase(t->name, adt_name)) continue;
    if (Mentions(t->definition, *element_type)) return false;
  }
  return true;
}

ComponentModel BuildModel(const ParsedUnit& unit, const OverrideSet& overrides,
                          std::optional<SiblingContext> siblings) {
  ComponentModel model;
  model.unit = &unit;
  model.siblings = std::move(siblings);
  model.overrides = overrides;

  const Declaration* first_type = nullptr;
  for (const auto* part :
       {&unit.visible_declarations, &unit.private_declarations}) {
    for (const Declaration& d : *part) {
      const TypeDecl* t = d.AsType();
      if (t == nullptr) continue;
      if (first_type == nullptr) first_type = &d;
      if (part == &unit.visible_declarations && model.adt_declaration == nullptr &&
          std::holds_alternative<PrivateDef>(t->definition)) {
        model.adt_declaration = &d;
      }
    }
  }
  if (model.adt_declaration == nullptr) model.adt_declaration = first_type;
  if (model.adt_declaration == nullptr) {
    throw ModelError("no abstraction: package '" + unit.package_name +
                     "' declares no types");
  }

  std::vector<std::string> subprogram_names;
  for (const SubprogramDecl* s : Subprograms(unit)) {
    subprogram_names.push_back(s->name);
  }
  for (const auto& entry : overrides.op_class_overrides) {
    if (!ContainsIgnoreCase(subprogram_names, entry.first)) {
      throw ModelError("override names unknown subprogram '" + entry.first +
                       "'");
    }
  }

  const TypeDecl& adt = *model.adt_declaration->AsType();
  model.adt_name = adt.name;
  if (const auto* p = std::get_if<PrivateDef>(&adt.definition)) {
    model.adt_privacy =
        p->is_limited ? Privacy::kLimitedPrivate : Privacy::kPrivate;
    model.full_view = FindTypeIn(unit.private_declarations, adt.name, true);
  } else {
    model.adt_privacy = Privacy::kNotPrivate;
    model.full_view = &adt;
  }

  model.structure_kind = DetectStructureKind(unit, adt.name, overrides);
  if (overrides.complex) {
    model.is_complex = *overrides.complex;
  } else {
    model.is_complex = (model.full_view != nullptr &&
                        IsComposite(*model.full_view)) ||
                       model.adt_privacy == Privacy::kLimitedPrivate;
  }

  model.is_generic = unit.is_generic;
  if (overrides.element_type) {
    model.element_type = overrides.element_type;
  } else {
    if (unit.is_generic) {
      for (const GenericFormal& f : unit.generic_formals) {
        const FormalType* t = f.AsType();
        if (t != nullptr && t->constraint != FormalTypeConstraint::kDiscrete) {
          model.element_type = t->name;
          break;
        }
      }
    }
    if (!model.element_type && model.full_view != nullptr &&
        IsComposite(*model.full_view)) {
      std::set<std::string> visited = {ToLower(adt.name)};
      model.element_type = ElementOf(unit, *model.full_view, visited);
    }
  }
  model.element_is_generic_formal =
      model.element_type && model.IsGenericFormalType(*model.element_type);
  model.element_independent_ops =
      ElementIndependentOps(unit, adt.name, model.element_type, overrides);
  model.independence_assumed = !overrides.element_independence.has_value();

  for (const SubprogramDecl* s : Subprograms(unit)) {
    model.classified_ops.push_back(ClassifyOperation(*s, adt.name, overrides));
  }
  for (const auto* part :
       {&unit.visible_declarations, &unit.private_declarations}) {
    for (const Declaration& d : *part) {
      if (const ExceptionDecl* e = d.AsException()) {
        model.exceptions.insert(model.exceptions.end(), e->names.begin(),
                                e->names.end());
      }
    }
  }
  for (const Declaration& d : unit.visible_declarations) {
    const TypeDecl* t = d.AsType();
    if (t == nullptr || &d == model.adt_declaration) continue;
    if (std::holds_alternative<PrivateDef>(t->definition)) {
      model.unanalyzed_types.push_back(t->name);
    }
  }
  return model;
}

}  // namespace rais
