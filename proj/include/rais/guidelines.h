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

// The reuse-guideline catalog. Each guideline is a rule over a
// ComponentModel: an applicability condition, a check, and the
// transformation that repairs a violation.

#ifndef RAIS_GUIDELINES_H_
#define RAIS_GUIDELINES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rais/component_model.h"
#include "rais/syntax.h"

namespace rais {

enum class Significance { kCritical, kImportant, kNormal };

// Critical 3, Important 2, Normal 1.
int DefaultWeight(Significance s);
std::string_view ToString(Significance s);

enum class GuidelineId {
  kCreationPresent,       // G1.1
  kTerminationPresent,    // G1.2
  kConversionPresent,     // G1.3
  kStateInquiryPresent,   // G1.4
  kStateChangePresent,    // G1.5
  kInputOutputPresent,    // G1.6
  kExceptionsDeclared,    // G1.7
  kGenericElement,        // G2
  kDualRepresentation,    // G3
  kPrivateKind,           // G4
  kConstrainedArray,      // G5
  kFreeListCounter,       // G6
  kFreeListRelease,       // G7
  kHandlerCoverage,       // G8
};

enum class TransformKind {
  kGenericize,
  kAdjustPrivateKind,
  kConstrainArray,
  kAddExceptions,
  kAddOperationSkeleton,
  kAddFreeListOps,
  kAnnotateRaises,
  kGenerateDualSibling,
};

inline constexpr TransformKind kAllTransformKinds[] = {
    TransformKind::kGenericize,          TransformKind::kAdjustPrivateKind,
    TransformKind::kConstrainArray,      TransformKind::kAddExceptions,
    TransformKind::kAddOperationSkeleton, TransformKind::kAddFreeListOps,
    TransformKind::kAnnotateRaises,      TransformKind::kGenerateDualSibling,
};

// "genericize", "add-operation-skeleton", ...
std::string_view ToString(TransformKind k);

inline constexpr std::string_view kSetMaxFreeListSizeName = "Set_Max_Free_List_Size";
inline constexpr std::string_view kReleaseFreeListName = "Release_Free_List";

struct Guideline {
  GuidelineId id;
  std::string_view code;
  std::string_view title;
  std::string_view description;
  Significance significance;
  std::string_view applicability;
  std::optional<TransformKind> transformation;
  // Set for the operation-class guidelines G1.1 to G1.6.
  std::optional<OperationClass> op_class;
};

// The fixed catalog, in evaluation order: G1.1..G1.7, G2, G3, G4, G5, G6,
// G7, G8.
const std::vector<Guideline>& Catalog();
const Guideline* FindGuideline(std::string_view code);
const Guideline& GetGuideline(GuidelineId id);

enum class Outcome { kSatisfied, kViolated, kNotApplicable };
std::string_view ToString(Outcome o);

struct GuidelineResult {
  std::string guideline_id;
  Outcome outcome = Outcome::kNotApplicable;
  // Violated: the missing or offending construct. NotApplicable: the reason.
  // Satisfied: what satisfied it.
  std::string evidence;
  std::vector<SourceLocation> locations;
  // 0 for NotApplicable.
  int weight_used = 0;

  bool operator==(const GuidelineResult& other) const;
};

// Pure. `weight` replaces the significance weight when given.
GuidelineResult Evaluate(const Guideline& guideline,
                         const ComponentModel& model,
                         std::optional<int> weight = std::nullopt);

}  // namespace rais

#endif  // RAIS_GUIDELINES_H_
