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

#include "rais/improver.h"

#include <algorithm>
#include <utility>

#include "rais/printer.h"
#include "rais/templates.h"
#include "text_util.h"

namespace rais {

std::string Transformation::Id() const {
  std::string id(ToString(kind));
  if (op_class) id += "{" + std::string(ToString(*op_class)) + "}";
  return id;
}

namespace {

const Guideline* GuidelineFor(const GuidelineResult& r) {
  return FindGuideline(r.guideline_id);
}

std::string ElementOrPlaceholder(const ComponentModel& model) {
  return model.element_type.value_or("Element");
}

std::string BaseName(std::string_view package_name) {
  std::string name(package_name);
  for (std::string_view suffix : {"_Static", "_Dynamic"}) {
    if (name.size() > suffix.size() && EndsWithIgnoreCase(name, suffix)) {
      name.resize(name.size() - suffix.size());
      break;
    }
  }
  return name;
}

StructureKind MissingKind(const ComponentModel& model) {
  return model.structure_kind == StructureKind::kStatic
             ? StructureKind::kDynamic
             : StructureKind::kStatic;
}

std::string SiblingPackageName(const ComponentModel& model) {
  return BaseName(model.unit->package_name) +
         (MissingKind(model) == StructureKind::kStatic ? "_Static"
                                                       : "_Dynamic");
}

// Every name declared anywhere in the unit, for collision checks.
std::vector<std::string> AllNames(const ParsedUnit& unit) {
  std::vector<std::string> names = {unit.package_name};
  for (const GenericFormal& f : unit.generic_formals) {
    names.push_back(f.AsType() ? f.AsType()->name
                               : f.AsSubprogram()->profile.name);
  }
  for (const auto* part :
       {&unit.visible_declarations, &unit.private_declarations}) {
    for (const Declaration& d : *part) {
      for (std::string& n : DeclaredNames(d)) names.push_back(std::move(n));
    }
  }
  return names;
}

std::string UniqueName(const std::string& base,
                       const std::vector<std::string>& taken) {
  if (!ContainsIgnoreCase(taken, base)) return base;
  for (int i = 2;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!ContainsIgnoreCase(taken, candidate)) return candidate;
  }
}

Declaration MakeDecl(const ParsedUnit& unit,
                     decltype(Declaration::node) node) {
  Declaration d;
  d.location = unit.package_location;
  d.node = std::move(node);
  return d;
}

std::vector<SubprogramDecl*> MutableSubprograms(ParsedUnit& unit) {
  std::vector<SubprogramDecl*> out;
  for (auto* part : {&unit.visible_declarations, &unit.private_declarations}) {
    for (Declaration& d : *part) {
      if (SubprogramDecl* s = d.AsSubprogram()) out.push_back(s);
    }
  }
  return out;
}

void AddRaise(SubprogramDecl& sub, const std::string& exception) {
  if (!ContainsIgnoreCase(sub.raises, exception)) sub.raises.push_back(exception);
}

// Index just past the ADT's visible declaration, or 0 when the abstraction
// is declared in the private part.
size_t InsertionPointAfterAdt(const ParsedUnit& unit,
                              const ComponentModel& model) {
  for (size_t i = 0; i < unit.visible_declarations.size(); ++i) {
    const TypeDecl* t = unit.visible_declarations[i].AsType();
    if (t != nullptr && EqualsIgnoreCase(t->name, model.adt_name)) return i + 1;
  }
  return 0;
}

// Keeps only the raises entries naming exceptions the unit declares.
void FilterRaises(SubprogramDecl& sub, const std::vector<std::string>& declared) {
  std::vector<std::string> kept;
  for (const std::string& e : sub.raises) {
    for (const std::string& d : declared) {
      if (EqualsIgnoreCase(d, e)) kept.push_back(d);
    }
  }
  sub.raises = std::move(kept);
}

std::vector<std::string> DeclaredExceptions(const ParsedUnit& unit) {
  std::vector<std::string> out;
  for (const auto* part :
       {&unit.visible_declarations, &unit.private_declarations}) {
    for (const Declaration& d : *part) {
      if (const ExceptionDecl* e = d.AsException()) {
        out.insert(out.end(), e->names.begin(), e->names.end());
      }
    }
  }
  return out;
}

void ReplaceType(std::string& type_name, const std::string& from,
                 const std::string& to) {
  if (EqualsIgnoreCase(type_name, from)) type_name = to;
}

void ReplaceInDefinition(TypeDefinition& def, const std::string& from,
                         const std::string& to) {
  if (auto* a = std::get_if<ArrayDef>(&def)) {
    ReplaceType(a->element_type, from, to);
  } else if (auto* r = std::get_if<RecordDef>(&def)) {
    for (RecordComponent& c : r->components) ReplaceType(c.type_name, from, to);
  } else if (auto* a = std::get_if<AccessDef>(&def)) {
    ReplaceType(a->designated_type, from, to);
  }
}

// --- individual transformations --------------------------------------------

ParsedUnit Genericize(ParsedUnit unit, const ComponentModel& model) {
  if (unit.is_generic) {
    throw TransformError("genericize: '" + unit.package_name +
                         "' is already generic");
  }
  if (!model.element_type) {
    throw TransformError("genericize: element type of '" + model.adt_name +
                         "' is unknown");
  }
  const std::string concrete = *model.element_type;
  const std::string formal = UniqueName("Element", AllNames(unit));

  unit.is_generic = true;
  GenericFormal f;
  f.location = unit.package_location;
  f.node = FormalType{formal, FormalTypeConstraint::kPrivate};
  unit.generic_formals.push_back(std::move(f));

  for (SubprogramDecl* s : MutableSubprograms(unit)) {
    for (Parameter& p : s->parameters) ReplaceType(p.type_name, concrete, formal);
    if (s->return_type) ReplaceType(*s->return_type, concrete, formal);
  }
  for (Declaration& d : unit.private_declarations) {
    if (TypeDecl* t = d.AsType()) ReplaceInDefinition(t->definition, concrete, formal);
  }
  for (Declaration& d : unit.visible_declarations) {
    TypeDecl* t = d.AsType();
    if (t != nullptr && EqualsIgnoreCase(t->name, model.adt_name)) {
      ReplaceInDefinition(t->definition, concrete, formal);
    }
  }
  return unit;
}

ParsedUnit AdjustPrivateKind(ParsedUnit unit, const ComponentModel& model) {
  if (model.structure_kind == StructureKind::kUnknown) {
    throw TransformError("adjust-private-kind: structure kind of '" +
                         model.adt_name + "' is unknown");
  }
  const bool want_limited = model.structure_kind == StructureKind::kDynamic;
  const Privacy wanted = want_limited ? Privacy::kLimitedPrivate : Privacy::kPrivate;
  if (model.adt_privacy == wanted) {
    throw TransformError("adjust-private-kind: '" + model.adt_name +
                         "' is already " + std::string(ToString(wanted)));
  }
  for (size_t i = 0; i < unit.visible_declarations.size(); ++i) {
    TypeDecl* t = unit.visible_declarations[i].AsType();
    if (t == nullptr || !EqualsIgnoreCase(t->name, model.adt_name)) continue;
    if (auto* p = std::get_if<PrivateDef>(&t->definition)) {
      p->is_limited = want_limited;
      return unit;
    }
    // Visible full view: hide it behind a partial view.
    Declaration full = unit.visible_declarations[i];
    t->definition = PrivateDef{want_limited};
    unit.private_declarations.insert(unit.private_declarations.begin(),
                                     std::move(full));
    return unit;
  }
  // Abstraction declared only in the private part: publish a partial view.
  Declaration partial =
      MakeDecl(unit, TypeDecl{model.adt_name, PrivateDef{want_limited}});
  unit.visible_declarations.insert(unit.visible_declarations.begin(),
                                   std::move(partial));
  return unit;
}

ParsedUnit ConstrainArray(ParsedUnit unit, const ComponentModel& model) {
  TypeDecl* target = nullptr;
  for (auto* part : {&unit.private_declarations, &unit.visible_declarations}) {
    for (Declaration& d : *part) {
      TypeDecl* t = d.AsType();
      if (target == nullptr && t != nullptr &&
          EqualsIgnoreCase(t->name, model.adt_name) &&
          std::holds_alternative<ArrayDef>(t->definition)) {
        target = t;
      }
    }
  }
  if (target == nullptr ||
      std::get<ArrayDef>(target->definition).is_constrained()) {
    throw TransformError("constrain-array: '" + model.adt_name +
                         "' has no unconstrained array representation");
  }
  std::get<ArrayDef>(target->definition).index = ConstrainedRange{"1", "Max_Size"};
  if (!ContainsIgnoreCase(AllNames(unit), "Max_Size")) {
    unit.visible_declarations.insert(
        unit.visible_declarations.begin(),
        MakeDecl(unit, ObjectDecl{"Max_Size", "Positive", true, "100"}));
  }
  return unit;
}

ParsedUnit AddExceptions(ParsedUnit unit, const ComponentModel& model) {
  if (!model.exceptions.empty()) {
    throw TransformError("add-exceptions: '" + unit.package_name +
                         "' already declares exceptions");
  }
  const ComponentTemplate& tmpl = TemplateFor(model.structure_kind);
  std::vector<std::string> taken = AllNames(unit);
  std::vector<std::string> names;
  for (const std::string& e : tmpl.exceptions) {
    names.push_back(UniqueName(e, taken));
    taken.push_back(names.back());
  }
  const size_t at = InsertionPointAfterAdt(unit, model);
  unit.visible_declarations.insert(
      unit.visible_declarations.begin() + static_cast<std::ptrdiff_t>(at),
      MakeDecl(unit, ExceptionDecl{names}));

  for (size_t i = 0; i < tmpl.exceptions.size(); ++i) {
    for (const std::string& op : tmpl.OperationsRaising(tmpl.exceptions[i])) {
      for (SubprogramDecl* s : MutableSubprograms(unit)) {
        if (EqualsIgnoreCase(s->name, op)) AddRaise(*s, names[i]);
      }
    }
  }
  return unit;
}

ParsedUnit AddOperationSkeleton(ParsedUnit unit, const ComponentModel& model,
                                OperationClass op_class) {
  if (model.HasOperationOfClass(op_class)) {
    throw TransformError("add-operation-skeleton: '" + model.adt_name +
                         "' already has a " + std::string(ToString(op_class)) +
                         " operation");
  }
  const ComponentTemplate& tmpl = TemplateFor(model.structure_kind);
  const std::vector<std::string> declared = DeclaredExceptions(unit);
  std::vector<std::string> taken = AllNames(unit);
  for (const SubprogramDecl* profile : tmpl.ProfilesFor(op_class)) {
    SubprogramDecl sub = InstantiateProfile(*profile, model.adt_name,
                                            ElementOrPlaceholder(model));
    sub.name = UniqueName(sub.name, taken);
    taken.push_back(sub.name);
    FilterRaises(sub, declared);
    unit.visible_declarations.push_back(MakeDecl(unit, std::move(sub)));
  }
  return unit;
}

ParsedUnit AddFreeListOp(ParsedUnit unit, const ComponentModel& model,
                         const std::string& guideline_id) {
  const std::string_view wanted = guideline_id == "G6" ? kSetMaxFreeListSizeName
                                                       : kReleaseFreeListName;
  for (const SubprogramDecl* s : Subprograms(unit)) {
    if (!s->is_function() && EqualsIgnoreCase(s->name, wanted)) {
      throw TransformError("add-freelist-ops: " + std::string(wanted) +
                           " already exists");
    }
  }
  const ComponentTemplate& tmpl = TemplateFor(StructureKind::kDynamic);
  for (const SubprogramDecl& p : tmpl.extra_procedures) {
    if (EqualsIgnoreCase(p.name, wanted)) {
      unit.visible_declarations.push_back(MakeDecl(unit, p));
    }
  }
  (void)model;
  return unit;
}

ParsedUnit AnnotateRaises(ParsedUnit unit, const ComponentModel& model) {
  const ComponentTemplate& tmpl = TemplateFor(model.structure_kind);
  std::vector<std::string> declared = DeclaredExceptions(unit);

  // Annotated names that were never declared get a declaration.
  std::vector<std::string> undeclared;
  for (const SubprogramDecl* s : Subprograms(unit)) {
    for (const std::string& e : s->raises) {
      if (!ContainsIgnoreCase(declared, e) && !ContainsIgnoreCase(undeclared, e)) {
        undeclared.push_back(e);
      }
    }
  }
  if (!undeclared.empty()) {
    const size_t at = InsertionPointAfterAdt(unit, model);
    unit.visible_declarations.insert(
        unit.visible_declarations.begin() + static_cast<std::ptrdiff_t>(at),
        MakeDecl(unit, ExceptionDecl{undeclared}));
    declared.insert(declared.end(), undeclared.begin(), undeclared.end());
  }

  std::vector<std::string> state_changers;
  std::vector<std::string> adt_takers;
  for (const ClassifiedOperation& op : model.classified_ops) {
    if (op.op_class == OperationClass::kStateChange) {
      state_changers.push_back(op.subprogram->name);
    }
    for (const Parameter& p : op.subprogram->parameters) {
      if (EqualsIgnoreCase(p.type_name, model.adt_name)) {
        adt_takers.push_back(op.subprogram->name);
        break;
      }
    }
  }

  std::vector<SubprogramDecl*> subs = MutableSubprograms(unit);
  auto attach_to = [&](const std::string& exception,
                       const std::vector<std::string>& op_names) {
    bool attached = false;
    for (SubprogramDecl* s : subs) {
      if (ContainsIgnoreCase(op_names, s->name)) {
        AddRaise(*s, exception);
        attached = true;
      }
    }
    return attached;
  };
  for (const std::string& e : declared) {
    const bool covered = std::any_of(subs.begin(), subs.end(), [&](auto* s) {
      return ContainsIgnoreCase(s->raises, e);
    });
    if (covered) continue;
    if (attach_to(e, tmpl.OperationsRaising(e))) continue;
    if (attach_to(e, state_changers)) continue;
    attach_to(e, adt_takers);
  }
  return unit;
}

ParsedUnit GenerateSibling(const ComponentModel& model) {
  if (model.structure_kind == StructureKind::kUnknown) {
    throw TransformError("generate-dual-sibling: structure kind of '" +
                         model.adt_name + "' is unknown");
  }
  const StructureKind kind = MissingKind(model);
  const ComponentTemplate& tmpl = TemplateFor(kind);
  const ParsedUnit& source = *model.unit;
  const std::string element = ElementOrPlaceholder(model);
  const std::string& adt = model.adt_name;

  ParsedUnit sib;
  sib.package_name = SiblingPackageName(model);
  sib.file_name = ToLower(sib.package_name) + ".ads";
  sib.package_location = {sib.file_name, 1, 1};
  sib.is_generic = source.is_generic;
  sib.generic_formals = source.generic_formals;

  auto add_visible = [&](decltype(Declaration::node) node) {
    sib.visible_declarations.push_back(MakeDecl(sib, std::move(node)));
  };
  auto add_private = [&](decltype(Declaration::node) node) {
    sib.private_declarations.push_back(MakeDecl(sib, std::move(node)));
  };

  if (kind == StructureKind::kStatic) {
    add_visible(ObjectDecl{"Max_Size", "Positive", true, "100"});
    add_visible(TypeDecl{adt, PrivateDef{false}});
  } else {
    add_visible(TypeDecl{adt, PrivateDef{true}});
  }
  add_visible(ExceptionDecl{tmpl.exceptions});
  for (const TemplateOperation& op : tmpl.operations) {
    add_visible(InstantiateProfile(op.profile, adt, element));
  }
  for (const SubprogramDecl& p : tmpl.extra_procedures) add_visible(p);

  if (kind == StructureKind::kStatic) {
    add_private(TypeDecl{adt, ArrayDef{ConstrainedRange{"1", "Max_Size"}, element}});
  } else {
    const std::string node = UniqueName("Node", {adt, element});
    add_private(TypeDecl{node, RecordDef{{{"Item", element}, {"Next", adt}}}});
    add_private(TypeDecl{adt, AccessDef{node}});
  }
  return sib;
}

bool Automatable(const GuidelineResult& r, const ComponentModel& model,
                 std::string& reason) {
  const Guideline* g = GuidelineFor(r);
  if (g == nullptr || !g->transformation) {
    reason = "no transformation available";
    return false;
  }
  switch (*g->transformation) {
    case TransformKind::kGenericize:
      if (model.is_generic) {
        reason = model.element_is_generic_formal
                     ? "element-dependent operations must be redesigned by hand"
                     : "generic unit whose element is not a formal; adjust the "
                       "generic part by hand";
        return false;
      }
      if (!model.element_type) {
        reason = "element type unknown; supply an element-type override";
        return false;
      }
      if (!model.element_independent_ops) {
        reason = "operations depend on the element type";
        return false;
      }
      return true;
    case TransformKind::kGenerateDualSibling:
      if (model.structure_kind == StructureKind::kUnknown) {
        reason = "structure kind unknown; supply a structure-kind override";
        return false;
      }
      return true;
    default:
      return true;
  }
}

Transformation Describe(TransformKind kind, const GuidelineResult& r,
                        const ComponentModel& model,
                        std::optional<OperationClass> op_class = std::nullopt) {
  Transformation t{kind, r.guideline_id, op_class, "", {}};
  const ComponentTemplate& tmpl = TemplateFor(model.structure_kind);
  switch (kind) {
    case TransformKind::kGenericize:
      t.description = "make " + model.unit->package_name +
                      " a generic with formal type Element replacing " +
                      model.element_type.value_or("the element type");
      t.parameters = {"Element"};
      break;
    case TransformKind::kAdjustPrivateKind: {
      const bool limited = model.structure_kind == StructureKind::kDynamic;
      t.description = "declare " + model.adt_name + " as " +
                      (limited ? "limited private" : "private") + " (" +
                      std::string(ToString(model.structure_kind)) +
                      " structure)";
      break;
    }
    case TransformKind::kConstrainArray:
      t.description = "constrain the array representation of " +
                      model.adt_name + " to 1 .. Max_Size";
      t.parameters = {"Max_Size"};
      break;
    case TransformKind::kAddExceptions:
      t.description = "declare exceptions " + Join(tmpl.exceptions, ", ") +
                      " from the " + std::string(ToString(tmpl.kind)) +
                      " template";
      t.parameters = tmpl.exceptions;
      break;
    case TransformKind::kAddOperationSkeleton: {
      for (const SubprogramDecl* p : tmpl.ProfilesFor(*op_class)) {
        t.parameters.push_back(p->name);
      }
      t.description = "add " + std::string(ToString(*op_class)) +
                      " operation skeleton(s) " + Join(t.parameters, ", ") +
                      " from the " + std::string(ToString(tmpl.kind)) +
                      " template";
      break;
    }
    case TransformKind::kAddFreeListOps: {
      const std::string name(r.guideline_id == "G6" ? kSetMaxFreeListSizeName
                                                    : kReleaseFreeListName);
      t.description = "add procedure " + name;
      t.parameters = {name};
      break;
    }
    case TransformKind::kAnnotateRaises:
      t.description =
          "attach raises annotations so every declared exception is raised "
          "by some operation";
      break;
    case TransformKind::kGenerateDualSibling: {
      const std::string name = SiblingPackageName(model);
      t.description = "generate " + std::string(ToString(MissingKind(model))) +
                      " sibling " + name + " (" + ToLower(name) + ".ads)";
      t.parameters = {name};
      break;
    }
  }
  return t;
}

}  // namespace

ImprovementPlan PlanImprovements(const Assessment& assessment,
                                 const ComponentModel& model) {
  ImprovementPlan plan;
  auto violated = [&](std::string_view code) -> const GuidelineResult* {
    const GuidelineResult* r = assessment.Find(code);
    return r != nullptr && r->outcome == Outcome::kViolated ? r : nullptr;
  };
  auto plan_for = [&](std::string_view code, TransformKind kind,
                      std::optional<OperationClass> c = std::nullopt) {
    const GuidelineResult* r = violated(code);
    if (r == nullptr) return false;
    std::string reason;
    if (!Automatable(*r, model, reason)) {
      plan.manual.push_back({r->guideline_id, reason});
      return false;
    }
    plan.steps.push_back(Describe(kind, *r, model, c));
    return true;
  };

  plan_for("G2", TransformKind::kGenericize);
  plan_for("G4", TransformKind::kAdjustPrivateKind);
  plan_for("G5", TransformKind::kConstrainArray);
  const bool adds_exceptions = plan_for("G1.7", TransformKind::kAddExceptions);
  for (const Guideline& g : Catalog()) {
    if (g.op_class) {
      plan_for(g.code, TransformKind::kAddOperationSkeleton, g.op_class);
    }
  }
  plan_for("G6", TransformKind::kAddFreeListOps);
  plan_for("G7", TransformKind::kAddFreeListOps);
  if (!plan_for("G8", TransformKind::kAnnotateRaises) && adds_exceptions) {
    // Declaring exceptions makes G8 applicable; plan its repair up front.
    const GuidelineResult* g8 = assessment.Find("G8");
    if (g8 != nullptr && g8->outcome == Outcome::kNotApplicable) {
      plan.steps.push_back(Describe(TransformKind::kAnnotateRaises, *g8, model));
    }
  }
  plan_for("G3", TransformKind::kGenerateDualSibling);
  return plan;
}

TransformOutcome ApplyTransformation(const ParsedUnit& unit,
                                     const Transformation& t,
                                     const ComponentModel& model) {
  switch (t.kind) {
    case TransformKind::kGenericize:
      return {Genericize(unit, model), std::nullopt};
    case TransformKind::kAdjustPrivateKind:
      return {AdjustPrivateKind(unit, model), std::nullopt};
    case TransformKind::kConstrainArray:
      return {ConstrainArray(unit, model), std::nullopt};
    case TransformKind::kAddExceptions:
      return {AddExceptions(unit, model), std::nullopt};
    case TransformKind::kAddOperationSkeleton:
      if (!t.op_class) {
        throw TransformError("add-operation-skeleton without operation class");
      }
      return {AddOperationSkeleton(unit, model, *t.op_class), std::nullopt};
    case TransformKind::kAddFreeListOps:
      return {AddFreeListOp(unit, model, t.target_guideline), std::nullopt};
    case TransformKind::kAnnotateRaises:
      return {AnnotateRaises(unit, model), std::nullopt};
    case TransformKind::kGenerateDualSibling:
      return {unit, GenerateSibling(model)};
  }
  throw TransformError("unknown transformation");
}

DecisionSource AcceptAll() {
  return [](const Transformation&, size_t, size_t) { return Decision::kAccept; };
}

DecisionSource RejectAll() {
  return [](const Transformation&, size_t, size_t) { return Decision::kSkip; };
}

ImprovedArtifacts Improve(const ParsedUnit& unit, const ComponentModel& model,
                          const ImprovementPlan& plan,
                          const DecisionSource& decide, bool emit_body) {
  ImprovedArtifacts out;
  out.improved_spec = unit;
  out.overrides = model.overrides;
  out.siblings = model.siblings;

  bool skip_remaining = false;
  for (size_t i = 0; i < plan.steps.size(); ++i) {
    const Transformation& t = plan.steps[i];
    Decision d = skip_remaining ? Decision::kSkip
                                : decide(t, i, plan.steps.size());
    if (d == Decision::kSkipRemaining) {
      skip_remaining = true;
      d = Decision::kSkip;
    }
    if (d == Decision::kSkip) {
      out.skipped.push_back(t);
      continue;
    }
    const ComponentModel current =
        BuildModel(out.improved_spec, out.overrides, out.siblings);
    TransformOutcome result = ApplyTransformation(out.improved_spec, t, current);
    if (t.kind == TransformKind::kGenericize && out.overrides.element_type) {
      out.overrides.element_type =
          result.unit.generic_formals.back().AsType()->name;
    }
    if (result.sibling) {
      SiblingContext ctx = out.siblings.value_or(SiblingContext{});
      if (MissingKind(current) == StructureKind::kStatic) {
        ctx.static_sibling_exists = true;
      } else {
        ctx.dynamic_sibling_exists = true;
      }
      ctx.sibling_files.push_back(result.sibling->file_name);
      out.siblings = std::move(ctx);
      out.sibling_spec = std::move(result.sibling);
    }
    out.improved_spec = std::move(result.unit);
    out.applied.push_back(t);
  }
  if (emit_body) out.body_skeleton = GenerateBodySkeleton(out.improved_spec);
  return out;
}

}  // namespace rais
