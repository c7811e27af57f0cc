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

// Planning and applying the source transformations that repair violated
// guidelines.

#ifndef RAIS_IMPROVER_H_
#define RAIS_IMPROVER_H_

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rais/assessor.h"
#include "rais/component_model.h"
#include "rais/guidelines.h"
#include "rais/syntax.h"

namespace rais {

// A transformation whose precondition does not hold on the unit it is
// applied to. Indicates a planning bug.
class TransformError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Transformation {
  TransformKind kind;
  std::string target_guideline;
  // add-operation-skeleton only.
  std::optional<OperationClass> op_class;
  std::string description;
  // Names the transformation introduces.
  std::vector<std::string> parameters;

  // "genericize", "add-operation-skeleton{Creation}", ...
  std::string Id() const;
  bool operator==(const Transformation&) const = default;
};

struct ManualRepair {
  std::string guideline_id;
  std::string reason;
};

struct ImprovementPlan {
  // Fixed order: genericize, adjust-private-kind, constrain-array,
  // add-exceptions, add-operation-skeleton (G1.1..G1.6), add-freelist-ops,
  // annotate-raises, generate-dual-sibling.
  std::vector<Transformation> steps;
  // Violations with no automatic repair.
  std::vector<ManualRepair> manual;

  bool empty() const { return steps.empty(); }
};

ImprovementPlan PlanImprovements(const Assessment& assessment,
                                 const ComponentModel& model);

struct TransformOutcome {
  ParsedUnit unit;
  // Set by generate-dual-sibling, which leaves `unit` unchanged.
  std::optional<ParsedUnit> sibling;
};

// `model` must be built from `unit`. Throws TransformError when the
// transformation's precondition does not hold.
TransformOutcome ApplyTransformation(const ParsedUnit& unit,
                                     const Transformation& t,
                                     const ComponentModel& model);

enum class Decision { kAccept, kSkip, kSkipRemaining };

// Called once per plan step with its 0-based index and the plan size.
using DecisionSource =
    std::function<Decision(const Transformation&, size_t index, size_t total)>;

DecisionSource AcceptAll();
DecisionSource RejectAll();

struct ImprovedArtifacts {
  ParsedUnit improved_spec;
  std::optional<std::string> body_skeleton;
  std::optional<ParsedUnit> sibling_spec;
  std::vector<Transformation> applied;
  std::vector<Transformation> skipped;
  // Overrides adjusted for the improved spec (genericize renames the element
  // type).
  OverrideSet overrides;
  // Sibling context of the improved spec, counting an emitted sibling.
  std::optional<SiblingContext> siblings;
};

// Applies accepted steps in plan order, rebuilding the model (with the
// overrides and siblings `model` was built with) between steps.
ImprovedArtifacts Improve(const ParsedUnit& unit, const ComponentModel& model,
                          const ImprovementPlan& plan,
                          const DecisionSource& decide, bool emit_body = false);

// One body per declared subprogram: a placeholder `null;` under a TODO
// marker, and a re-raising handler arm per exception in its raises list.
std::string GenerateBodySkeleton(const ParsedUnit& unit);

}  // namespace rais

#endif  // RAIS_IMPROVER_H_
