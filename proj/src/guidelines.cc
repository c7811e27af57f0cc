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

#include "rais/guidelines.h"

#include <algorithm>

#include "text_util.h"

namespace rais {

int DefaultWeight(Significance s) {
  switch (s) {
    case Significance::kCritical:
      return 3;
    case Significance::kImportant:
      return 2;
    case Significance::kNormal:
      return 1;
  }
  return 1;
}

std::string_view ToString(Significance s) {
  switch (s) {
    case Significance::kCritical:
      return "critical";
    case Significance::kImportant:
      return "important";
    case Significance::kNormal:
      return "normal";
  }
  return "normal";
}

std::string_view ToString(TransformKind k) {
  switch (k) {
    case TransformKind::kGenericize:
      return "genericize";
    case TransformKind::kAdjustPrivateKind:
      return "adjust-private-kind";
    case TransformKind::kConstrainArray:
      return "constrain-array";
    case TransformKind::kAddExceptions:
      return "add-exceptions";
    case TransformKind::kAddOperationSkeleton:
      return "add-operation-skeleton";
    case TransformKind::kAddFreeListOps:
      return "add-freelist-ops";
    case TransformKind::kAnnotateRaises:
      return "annotate-raises";
    case TransformKind::kGenerateDualSibling:
      return "generate-dual-sibling";
  }
  return "";
}

std::string_view ToString(Outcome o) {
  switch (o) {
    case Outcome::kSatisfied:
      return "satisfied";
    case Outcome::kViolated:
      return "violated";
    case Outcome::kNotApplicable:
      return "not-applicable";
  }
  return "";
}

bool GuidelineResult::operator==(const GuidelineResult& other) const {
  if (locations.size() != other.locations.size()) return false;
  for (size_t i = 0; i < locations.size(); ++i) {
    if (locations[i].ToString() != other.locations[i].ToString()) return false;
  }
  return guideline_id == other.guideline_id && outcome == other.outcome &&
         evidence == other.evidence && weight_used == other.weight_used;
}

const std::vector<Guideline>& Catalog() {
  using G = GuidelineId;
  using S = Significance;
  using T = TransformKind;
  using C = OperationClass;
  static const std::vector<Guideline> kCatalog = {
      {G::kCreationPresent, "G1.1", "Creation operation present",
       "Provide an operation that creates and initialises an object.",
       S::kNormal, "always", T::kAddOperationSkeleton, C::kCreation},
      {G::kTerminationPresent, "G1.2", "Termination operation present",
       "Provide an operation that makes an object inaccessible.", S::kNormal,
       "always", T::kAddOperationSkeleton, C::kTermination},
      {G::kConversionPresent, "G1.3", "Conversion operation present",
       "Provide an operation that changes the representation of an object.",
       S::kNormal, "always", T::kAddOperationSkeleton, C::kConversion},
      {G::kStateInquiryPresent, "G1.4", "State inquiry operation present",
       "Provide functions that report the state and boundary conditions of "
       "an object.",
       S::kNormal, "always", T::kAddOperationSkeleton, C::kStateInquiry},
      {G::kStateChangePresent, "G1.5", "State change operation present",
       "Provide operations that modify the contents of an object.",
       S::kNormal, "always", T::kAddOperationSkeleton, C::kStateChange},
      {G::kInputOutputPresent, "G1.6", "Input/output operation present",
       "Provide input/output representations, mainly for debugging.",
       S::kNormal, "always", T::kAddOperationSkeleton, C::kInputOutput},
      {G::kExceptionsDeclared, "G1.7", "Exceptions declared",
       "Declare exceptions for the error conditions of the abstraction.",
       S::kImportant, "always", T::kAddExceptions, std::nullopt},
      {G::kGenericElement, "G2", "Generic element parameter",
       "A complex structure whose operations are independent of the element "
       "type is a generic package with the element type as a generic "
       "parameter.",
       S::kCritical, "structure is complex", T::kGenericize, std::nullopt},
      {G::kDualRepresentation, "G3", "Dual representation",
       "Provide both a static (array) and a dynamic (access) representation "
       "of the abstraction.",
       S::kNormal, "always", T::kGenerateDualSibling, std::nullopt},
      {G::kPrivateKind, "G4", "Private-kind rationale",
       "Use limited private for dynamic structures and private for static "
       "structures.",
       S::kImportant, "structure kind known", T::kAdjustPrivateKind,
       std::nullopt},
      {G::kConstrainedArray, "G5", "Constrained array for static structure",
       "Represent a static structure with a constrained array.", S::kNormal,
       "static structure with array full view", T::kConstrainArray,
       std::nullopt},
      {G::kFreeListCounter, "G6", "Free-list size counter",
       "Provide Set_Max_Free_List_Size so the user can grow or shrink the "
       "free list; excess space is returned to the system.",
       S::kNormal, "dynamic structure", T::kAddFreeListOps, std::nullopt},
      {G::kFreeListRelease, "G7", "Free-list release",
       "Provide Release_Free_List returning all free-list space to the "
       "system.",
       S::kNormal, "dynamic structure", T::kAddFreeListOps, std::nullopt},
      {G::kHandlerCoverage, "G8", "Exception handler coverage",
       "Every exception is raised by some operation (and so gets a handler "
       "in the body skeleton), and every raised exception is declared.",
       S::kImportant, "exceptions declared or raises annotations present",
       T::kAnnotateRaises, std::nullopt},
  };
  return kCatalog;
}

const Guideline* FindGuideline(std::string_view code) {
  for (const Guideline& g : Catalog()) {
    if (EqualsIgnoreCase(g.code, code)) return &g;
  }
  return nullptr;
}

const Guideline& GetGuideline(GuidelineId id) {
  for (const Guideline& g : Catalog()) {
    if (g.id == id) return g;
  }
  return Catalog().front();
}

namespace {

std::string Quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

std::string KindWord(StructureKind k) {
  switch (k) {
    case StructureKind::kStatic:
      return "Static";
    case StructureKind::kDynamic:
      return "Dynamic";
    case StructureKind::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

bool HasProcedureNamed(const ComponentModel& model, std::string_view name) {
  for (const SubprogramDecl* s : Subprograms(*model.unit)) {
    if (!s->is_function() && EqualsIgnoreCase(s->name, name)) return true;
  }
  return false;
}

std::optional<SourceLocation> LocationOf(const ParsedUnit& unit,
                                         const void* node) {
  for (const auto* part :
       {&unit.visible_declarations, &unit.private_declarations}) {
    for (const Declaration& d : *part) {
      if (d.AsSubprogram() == node || d.AsType() == node) return d.location;
    }
  }
  return std::nullopt;
}

class Evaluator {
 public:
  Evaluator(const Guideline& g, const ComponentModel& m, int weight)
      : guideline_(g), model_(m), weight_(weight) {
    result_.guideline_id = std::string(g.code);
  }

  GuidelineResult Run() {
    switch (guideline_.id) {
      case GuidelineId::kCreationPresent:
      case GuidelineId::kTerminationPresent:
      case GuidelineId::kConversionPresent:
      case GuidelineId::kStateInquiryPresent:
      case GuidelineId::kStateChangePresent:
      case GuidelineId::kInputOutputPresent:
        return OperationClassPresent(*guideline_.op_class);
      case GuidelineId::kExceptionsDeclared:
        return ExceptionsDeclared();
      case GuidelineId::kGenericElement:
        return GenericElement();
      case GuidelineId::kDualRepresentation:
        return DualRepresentation();
      case GuidelineId::kPrivateKind:
        return PrivateKind();
      case GuidelineId::kConstrainedArray:
        return ConstrainedArray();
      case GuidelineId::kFreeListCounter:
        return FreeListProcedure(kSetMaxFreeListSizeName);
      case GuidelineId::kFreeListRelease:
        return FreeListProcedure(kReleaseFreeListName);
      case GuidelineId::kHandlerCoverage:
        return HandlerCoverage();
    }
    return NotApplicable("unknown guideline");
  }

 private:
  GuidelineResult Satisfied(std::string evidence) {
    result_.outcome = Outcome::kSatisfied;
    result_.evidence = std::move(evidence);
    result_.weight_used = weight_;
    return result_;
  }
  GuidelineResult Violated(std::string evidence) {
    result_.outcome = Outcome::kViolated;
    result_.evidence = std::move(evidence);
    result_.weight_used = weight_;
    return result_;
  }
  GuidelineResult NotApplicable(std::string reason) {
    result_.outcome = Outcome::kNotApplicable;
    result_.evidence = std::move(reason);
    result_.weight_used = 0;
    result_.locations.clear();
    return result_;
  }
  void AddAdtLocation() {
    if (model_.adt_declaration != nullptr) {
      result_.locations.push_back(model_.adt_declaration->location);
    }
  }
  void AddFullViewLocation() {
    if (model_.full_view == nullptr) return AddAdtLocation();
    if (auto loc = LocationOf(*model_.unit, model_.full_view)) {
      result_.locations.push_back(*loc);
    }
  }

  GuidelineResult OperationClassPresent(OperationClass c) {
    std::vector<std::string> names;
    for (const SubprogramDecl* s : model_.OperationsOfClass(c)) {
      names.push_back(s->name);
    }
    if (!names.empty()) return Satisfied(Join(names, ", "));
    AddAdtLocation();
    return Violated("no " + std::string(ToString(c)) + " operation for " +
                    Quoted(model_.adt_name));
  }

  GuidelineResult ExceptionsDeclared() {
    if (!model_.exceptions.empty()) return Satisfied(Join(model_.exceptions, ", "));
    AddAdtLocation();
    return Violated("no exceptions declared for " + Quoted(model_.adt_name));
  }

  GuidelineResult GenericElement() {
    if (!model_.is_complex) {
      return NotApplicable("structure " + Quoted(model_.adt_name) +
                           " is not complex");
    }
    const std::string element =
        model_.element_type.value_or("(unknown element type)");
    if (!model_.is_generic) {
      result_.locations.push_back(model_.unit->package_location);
      return Violated("complex structure " + Quoted(model_.adt_name) +
                      " is not a generic over its element type " + element);
    }
    if (!model_.element_is_generic_formal) {
      AddFullViewLocation();
      return Violated("element type " + element + " of " +
                      Quoted(model_.adt_name) +
                      " is not a generic formal parameter");
    }
    if (!model_.element_independent_ops) {
      AddAdtLocation();
      return Violated("operations of " + Quoted(model_.adt_name) +
                      " depend on element type " + element);
    }
    std::string evidence = "generic over formal element type " + element;
    if (model_.independence_assumed) {
      evidence += " (independence assumed, confirm interactively)";
    }
    return Satisfied(std::move(evidence));
  }

  GuidelineResult DualRepresentation() {
    const bool has_static =
        model_.structure_kind == StructureKind::kStatic ||
        (model_.siblings && model_.siblings->static_sibling_exists);
    const bool has_dynamic =
        model_.structure_kind == StructureKind::kDynamic ||
        (model_.siblings && model_.siblings->dynamic_sibling_exists);
    const std::string base = SiblingBaseName(model_.unit->package_name);
    if (has_static && has_dynamic) {
      std::string evidence = "static and dynamic variants present";
      if (model_.siblings && !model_.siblings->sibling_files.empty()) {
        evidence += " (" + Join(model_.siblings->sibling_files, ", ") + ")";
      }
      return Satisfied(std::move(evidence));
    }
    result_.locations.push_back(model_.unit->package_location);
    std::vector<std::string> missing;
    if (!has_static) missing.push_back(base + "_static.ads");
    if (!has_dynamic) missing.push_back(base + "_dynamic.ads");
    std::string which = !has_static && !has_dynamic ? "static or dynamic"
                        : !has_static              ? "static"
                                                   : "dynamic";
    return Violated("no " + which + " variant of " +
                    Quoted(model_.unit->package_name) + " found (expected " +
                    Join(missing, " and ") + ")");
  }

  GuidelineResult PrivateKind() {
    if (model_.structure_kind == StructureKind::kUnknown) {
      return NotApplicable("structure kind is Unknown");
    }
    const bool dynamic = model_.structure_kind == StructureKind::kDynamic;
    const Privacy wanted = dynamic ? Privacy::kLimitedPrivate : Privacy::kPrivate;
    if (model_.adt_privacy == wanted) {
      return Satisfied(KindWord(model_.structure_kind) + " structure " +
                       Quoted(model_.adt_name) + " is " +
                       std::string(ToString(wanted)));
    }
    AddAdtLocation();
    return Violated(ToLower(KindWord(model_.structure_kind)) + " structure " +
                    Quoted(model_.adt_name) + " is " +
                    std::string(ToString(model_.adt_privacy)) + "; expected " +
                    std::string(ToString(wanted)));
  }

  GuidelineResult ConstrainedArray() {
    if (model_.structure_kind != StructureKind::kStatic) {
      return NotApplicable("structure kind is " +
                           KindWord(model_.structure_kind));
    }
    const ArrayDef* array =
        model_.full_view ? std::get_if<ArrayDef>(&model_.full_view->definition)
                         : nullptr;
    if (array == nullptr) {
      return NotApplicable("full view of " + Quoted(model_.adt_name) +
                           " is not an array");
    }
    if (const auto* r = std::get_if<ConstrainedRange>(&array->index)) {
      return Satisfied("array (" + r->low + " .. " + r->high + ")");
    }
    AddFullViewLocation();
    return Violated("array representation of " + Quoted(model_.adt_name) +
                    " is unconstrained (" +
                    std::get<UnconstrainedRange>(array->index).index_type +
                    " range <>)");
  }

  GuidelineResult FreeListProcedure(std::string_view name) {
    if (model_.structure_kind != StructureKind::kDynamic) {
      return NotApplicable("structure kind is " +
                           KindWord(model_.structure_kind));
    }
    if (HasProcedureNamed(model_, name)) {
      return Satisfied("procedure " + std::string(name));
    }
    result_.locations.push_back(model_.unit->package_location);
    return Violated("no procedure " + std::string(name) +
                    " for dynamic structure " + Quoted(model_.adt_name));
  }

  GuidelineResult HandlerCoverage() {
    std::vector<std::string> annotated;
    std::vector<std::string> problems;
    bool any_annotation = false;
    for (const SubprogramDecl* s : Subprograms(*model_.unit)) {
      for (const std::string& e : s->raises) {
        any_annotation = true;
        if (!ContainsIgnoreCase(annotated, e)) annotated.push_back(e);
        if (!ContainsIgnoreCase(model_.exceptions, e)) {
          problems.push_back("annotation on " + s->name +
                             " names undeclared exception " + e);
          if (auto loc = LocationOf(*model_.unit, s)) {
            result_.locations.push_back(*loc);
          }
        }
      }
    }
    if (model_.exceptions.empty() && !any_annotation) {
      return NotApplicable("no exceptions declared and no raises annotations");
    }
    std::vector<std::string> unraised;
    for (const std::string& e : model_.exceptions) {
      if (!ContainsIgnoreCase(annotated, e)) unraised.push_back(e);
    }
    if (!unraised.empty()) {
      problems.insert(problems.begin(),
                      "exception" + std::string(unraised.size() > 1 ? "s " : " ") +
                          Join(unraised, ", ") +
                          " not raised by any operation");
    }
    if (problems.empty()) {
      return Satisfied("all " + std::to_string(model_.exceptions.size()) +
                       " exceptions covered by raises annotations");
    }
    if (result_.locations.empty()) AddAdtLocation();
    return Violated(Join(problems, "; "));
  }

  const Guideline& guideline_;
  const ComponentModel& model_;
  int weight_;
  GuidelineResult result_;
};

}  // namespace

GuidelineResult Evaluate(const Guideline& guideline,
                         const ComponentModel& model,
                         std::optional<int> weight) {
  return Evaluator(guideline, model,
                   weight.value_or(DefaultWeight(guideline.significance)))
      .Run();
}

}  // namespace rais
