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

// Component templates: the canonical operation and exception inventory for a
// static (array-backed) or dynamic (access-backed) abstraction. Used both to
// generate missing operations and to build the dual-representation sibling.

#ifndef RAIS_TEMPLATES_H_
#define RAIS_TEMPLATES_H_

#include <string>
#include <string_view>
#include <vector>

#include "rais/component_model.h"
#include "rais/syntax.h"

namespace rais {

// Placeholders used inside template profiles.
inline constexpr std::string_view kAdtPlaceholder = "$ADT";
inline constexpr std::string_view kElementPlaceholder = "$ELEMENT";
inline constexpr std::string_view kObjectPlaceholder = "$OBJ";

struct TemplateOperation {
  OperationClass op_class;
  // Types and the abstraction's parameter name are placeholders; `raises`
  // names template exceptions.
  SubprogramDecl profile;
};

struct ComponentTemplate {
  StructureKind kind = StructureKind::kStatic;
  std::vector<TemplateOperation> operations;
  std::vector<std::string> exceptions;
  // Free-list pair for the dynamic template; empty for static.
  std::vector<SubprogramDecl> extra_procedures;

  std::vector<const SubprogramDecl*> ProfilesFor(OperationClass c) const;
  // Template operations that raise `exception_name`.
  std::vector<std::string> OperationsRaising(std::string_view exception_name) const;
};

// kUnknown falls back to the static template.
const ComponentTemplate& TemplateFor(StructureKind kind);

// Substitutes the placeholders. The object parameter is named after the
// first letter of `adt_name` (`S` for Stack).
SubprogramDecl InstantiateProfile(const SubprogramDecl& profile,
                                  std::string_view adt_name,
                                  std::string_view element_type);

}  // namespace rais

#endif  // RAIS_TEMPLATES_H_
