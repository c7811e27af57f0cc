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

#include "rais/templates.h"

#include <cctype>

#include "rais/guidelines.h"
#include "text_util.h"

namespace rais {
namespace {

const std::string kAdt(kAdtPlaceholder);
const std::string kElem(kElementPlaceholder);
const std::string kObj(kObjectPlaceholder);

Parameter Param(std::string name, ParamMode mode, std::string type) {
  Parameter p;
  p.names = {std::move(name)};
  p.mode = mode;
  p.type_name = std::move(type);
  return p;
}

SubprogramDecl Procedure(std::string name, std::vector<Parameter> params,
                         std::vector<std::string> raises = {}) {
  SubprogramDecl s;
  s.kind = SubprogramKind::kProcedure;
  s.name = std::move(name);
  s.parameters = std::move(params);
  s.raises = std::move(raises);
  return s;
}

SubprogramDecl Function(std::string name, std::vector<Parameter> params,
                        std::string result) {
  SubprogramDecl s;
  s.kind = SubprogramKind::kFunction;
  s.name = std::move(name);
  s.parameters = std::move(params);
  s.return_type = std::move(result);
  return s;
}

// Operations common to both templates.
void AddCommon(ComponentTemplate& t) {
  using C = OperationClass;
  using M = ParamMode;
  t.operations.push_back({C::kCreation, Function("Create", {}, kAdt)});
  t.operations.push_back(
      {C::kTermination, Procedure("Destroy", {Param(kObj, M::kInOut, kAdt)})});
  t.operations.push_back(
      {C::kConversion,
       Procedure("Convert", {Param("Source", M::kIn, kAdt),
                             Param("Target", M::kOut, kAdt)})});
  t.operations.push_back(
      {C::kStateInquiry,
       Function("Is_Empty", {Param(kObj, M::kIn, kAdt)}, "Boolean")});
}

ComponentTemplate MakeStatic() {
  using C = OperationClass;
  using M = ParamMode;
  ComponentTemplate t;
  t.kind = StructureKind::kStatic;
  AddCommon(t);
  t.operations.push_back(
      {C::kStateInquiry,
       Function("Is_Full", {Param(kObj, M::kIn, kAdt)}, "Boolean")});
  t.operations.push_back(
      {C::kStateInquiry,
       Function("Size", {Param(kObj, M::kIn, kAdt)}, "Natural")});
  t.operations.push_back(
      {C::kStateChange,
       Procedure("Push",
                 {Param(kObj, M::kInOut, kAdt), Param("Item", M::kIn, kElem)},
                 {"Overflow"})});
  t.operations.push_back(
      {C::kStateChange,
       Procedure("Pop",
                 {Param(kObj, M::kInOut, kAdt), Param("Item", M::kOut, kElem)},
                 {"Underflow"})});
  t.operations.push_back(
      {C::kInputOutput, Procedure("Put", {Param(kObj, M::kIn, kAdt)})});
  t.exceptions = {"Overflow", "Underflow"};
  return t;
}

ComponentTemplate MakeDynamic() {
  using C = OperationClass;
  using M = ParamMode;
  ComponentTemplate t;
  t.kind = StructureKind::kDynamic;
  AddCommon(t);
  t.operations.push_back(
      {C::kStateInquiry,
       Function("Length", {Param(kObj, M::kIn, kAdt)}, "Natural")});
  t.operations.push_back(
      {C::kStateChange,
       Procedure("Insert",
                 {Param(kObj, M::kInOut, kAdt), Param("Item", M::kIn, kElem)},
                 {"Storage_Exhausted"})});
  t.operations.push_back(
      {C::kStateChange,
       Procedure("Remove", {Param(kObj, M::kInOut, kAdt),
                            Param("Item", M::kOut, kElem)})});
  t.operations.push_back(
      {C::kInputOutput, Procedure("Put", {Param(kObj, M::kIn, kAdt)})});
  t.exceptions = {"Storage_Exhausted"};
  t.extra_procedures = {
      Procedure(std::string(kSetMaxFreeListSizeName),
                {Param("N", M::kIn, "Natural")}),
      Procedure(std::string(kReleaseFreeListName), {}),
  };
  return t;
}

std::string Substitute(const std::string& text, std::string_view adt,
                       std::string_view element, std::string_view object) {
  if (text == kAdt) return std::string(adt);
  if (text == kElem) return std::string(element);
  if (text == kObj) return std::string(object);
  return text;
}

}  // namespace

std::vector<const SubprogramDecl*> ComponentTemplate::ProfilesFor(
    OperationClass c) const {
  std::vector<const SubprogramDecl*> out;
  for (const TemplateOperation& op : operations) {
    if (op.op_class == c) out.push_back(&op.profile);
  }
  return out;
}

std::vector<std::string> ComponentTemplate::OperationsRaising(
    std::string_view exception_name) const {
  std::vector<std::string> out;
  for (const TemplateOperation& op : operations) {
    if (ContainsIgnoreCase(op.profile.raises, exception_name)) {
      out.push_back(op.profile.name);
    }
  }
  return out;
}

const ComponentTemplate& TemplateFor(StructureKind kind) {
  static const ComponentTemplate kStatic = MakeStatic();
  static const ComponentTemplate kDynamic = MakeDynamic();
  return kind == StructureKind::kDynamic ? kDynamic : kStatic;
}

SubprogramDecl InstantiateProfile(const SubprogramDecl& profile,
                                  std::string_view adt_name,
                                  std::string_view element_type) {
  const std::string object(
      1, static_cast<char>(std::toupper(static_cast<unsigned char>(
             adt_name.empty() ? 'X' : adt_name.front()))));
  SubprogramDecl out = profile;
  for (Parameter& p : out.parameters) {
    for (std::string& n : p.names) n = Substitute(n, adt_name, element_type, object);
    p.type_name = Substitute(p.type_name, adt_name, element_type, object);
  }
  if (out.return_type) {
    out.return_type = Substitute(*out.return_type, adt_name, element_type, object);
  }
  return out;
}

}  // namespace rais
