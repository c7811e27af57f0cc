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

// Semantic view of a parsed component: the primary abstract data type, its
// representation, and the operation class of every subprogram.

#ifndef RAIS_COMPONENT_MODEL_H_
#define RAIS_COMPONENT_MODEL_H_

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rais/syntax.h"

namespace rais {

enum class StructureKind { kStatic, kDynamic, kUnknown };

enum class OperationClass {
  kCreation,
  kTermination,
  kConversion,
  kStateInquiry,
  kStateChange,
  kInputOutput,
  kUnclassified,
};

inline constexpr OperationClass kRequiredOperationClasses[] = {
    OperationClass::kCreation,     OperationClass::kTermination,
    OperationClass::kConversion,   OperationClass::kStateInquiry,
    OperationClass::kStateChange,  OperationClass::kInputOutput,
};

enum class Privacy { kPrivate, kLimitedPrivate, kNotPrivate };

// "Creation", "StateInquiry", ...
std::string_view ToString(OperationClass c);
// "static" / "dynamic" / "unknown"
std::string_view ToString(StructureKind k);
// "private" / "limited private" / "not private"
std::string_view ToString(Privacy p);

// Accepts any case and ignores '_', '-' and spaces ("state_inquiry" works).
std::optional<OperationClass> ParseOperationClass(std::string_view text);
std::optional<StructureKind> ParseStructureKind(std::string_view text);

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Answers normally supplied by the reuse engineer.
struct OverrideSet {
  // Keyed by subprogram name, matched case-insensitively; applies to every
  // overload of that name.
  std::map<std::string, OperationClass> op_class_overrides;
  std::optional<StructureKind> structure_kind;
  std::optional<bool> complex;
  std::optional<std::string> element_type;
  std::optional<bool> element_independence;

  bool operator==(const OverrideSet&) const = default;
};

// Variants of the same abstraction found next to the component on disk. The
// component itself is not counted here.
struct SiblingContext {
  bool static_sibling_exists = false;
  bool dynamic_sibling_exists = false;
  std::vector<std::string> sibling_files;
};

enum class ClassificationSource { kOverride, kNameRule, kSignatureRule, kNone };

struct ClassifiedOperation {
  const SubprogramDecl* subprogram = nullptr;
  OperationClass op_class = OperationClass::kUnclassified;
  ClassificationSource source = ClassificationSource::kNone;
  // Worth asking the engineer about: unclassified, or matched only by name
  // while the signature never mentions the abstraction.
  bool low_confidence = false;
};

struct ComponentModel {
  const ParsedUnit* unit = nullptr;
  std::string adt_name;
  const Declaration* adt_declaration = nullptr;
  // Private-part completion of a private ADT, or the ADT itself otherwise.
  const TypeDecl* full_view = nullptr;
  Privacy adt_privacy = Privacy::kNotPrivate;
  StructureKind structure_kind = StructureKind::kUnknown;
  bool is_complex = false;
  std::optional<std::string> element_type;
  bool is_generic = false;
  bool element_is_generic_formal = false;
  bool element_independent_ops = true;
  // True when independence was computed rather than confirmed by override.
  bool independence_assumed = true;
  std::vector<ClassifiedOperation> classified_ops;
  std::vector<std::string> exceptions;
  std::optional<SiblingContext> siblings;
  OverrideSet overrides;
  // Other type declarations that could be abstractions but are not assessed.
  std::vector<std::string> unanalyzed_types;

  bool HasOperationOfClass(OperationClass c) const;
  std::vector<const SubprogramDecl*> OperationsOfClass(OperationClass c) const;
  const TypeDecl* FindType(std::string_view name) const;
  bool IsGenericFormalType(std::string_view name) const;
};

// `unit` must outlive the returned model. Throws ModelError when the unit
// declares no type or an override names an unknown subprogram.
ComponentModel BuildModel(const ParsedUnit& unit,
                          const OverrideSet& overrides = {},
                          std::optional<SiblingContext> siblings = std::nullopt);

StructureKind DetectStructureKind(const ParsedUnit& unit,
                                  std::string_view adt_name,
                                  const OverrideSet& overrides = {});

// Decision table: override, then Creation, Termination, Conversion,
// InputOutput, StateInquiry, StateChange, else Unclassified.
ClassifiedOperation ClassifyOperation(const SubprogramDecl& sub,
                                      std::string_view adt_name,
                                      const OverrideSet& overrides = {});

bool ElementIndependentOps(const ParsedUnit& unit, std::string_view adt_name,
                           const std::optional<std::string>& element_type,
                           const OverrideSet& overrides = {});

// Looks for `<base>.ads`, `<base>_static.ads` and `<base>_dynamic.ads`
// (file names compared case-insensitively) in `directory`, where base is the
// lower-cased package name without a `_static`/`_dynamic` suffix. Candidates
// are parsed to learn their structure kind; unparsable ones fall back to the
// kind their suffix names. `self` is excluded.
SiblingContext FindSiblings(const ParsedUnit& unit,
                            const std::filesystem::path& directory,
                            const std::filesystem::path& self);

std::string SiblingBaseName(std::string_view package_name);

}  // namespace rais

#endif  // RAIS_COMPONENT_MODEL_H_
