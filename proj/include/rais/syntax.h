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

// Syntax tree for the package-specification subset accepted by the parser.
//
// Nodes are plain values. Equality operators compare structure only: source
// locations are carried along for diagnostics but never take part in ==, so a
// tree and its pretty-printed-then-reparsed copy compare equal.

#ifndef RAIS_SYNTAX_H_
#define RAIS_SYNTAX_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rais {

struct SourceLocation {
  std::string file_name;
  int line = 1;
  int column = 1;

  std::string ToString() const;
};

// Closed interval bounds are kept as opaque, canonically spaced token text.
struct ConstrainedRange {
  std::string low;
  std::string high;
  bool operator==(const ConstrainedRange&) const = default;
};

// `Index_Type range <>`
struct UnconstrainedRange {
  std::string index_type;
  bool operator==(const UnconstrainedRange&) const = default;
};

struct PrivateDef {
  bool is_limited = false;
  bool operator==(const PrivateDef&) const = default;
};

struct ArrayDef {
  std::variant<ConstrainedRange, UnconstrainedRange> index;
  std::string element_type;

  bool is_constrained() const {
    return std::holds_alternative<ConstrainedRange>(index);
  }
  bool operator==(const ArrayDef&) const = default;
};

struct RecordComponent {
  std::string name;
  std::string type_name;
  bool operator==(const RecordComponent&) const = default;
};

struct RecordDef {
  std::vector<RecordComponent> components;
  bool operator==(const RecordDef&) const = default;
};

struct AccessDef {
  std::string designated_type;
  bool operator==(const AccessDef&) const = default;
};

struct EnumerationDef {
  std::vector<std::string> literals;
  bool operator==(const EnumerationDef&) const = default;
};

struct IntegerRangeDef {
  std::string low;
  std::string high;
  bool operator==(const IntegerRangeDef&) const = default;
};

using TypeDefinition = std::variant<PrivateDef, ArrayDef, RecordDef, AccessDef,
                                    EnumerationDef, IntegerRangeDef>;

struct TypeDecl {
  std::string name;
  TypeDefinition definition;
  bool operator==(const TypeDecl&) const = default;
};

enum class ParamMode { kIn, kOut, kInOut };

struct Parameter {
  std::vector<std::string> names;
  ParamMode mode = ParamMode::kIn;
  std::string type_name;
  std::optional<std::string> default_expression;
  bool operator==(const Parameter&) const = default;
};

enum class SubprogramKind { kProcedure, kFunction };

struct SubprogramDecl {
  SubprogramKind kind = SubprogramKind::kProcedure;
  std::string name;
  std::vector<Parameter> parameters;
  // Set iff kind == kFunction.
  std::optional<std::string> return_type;
  // Exception names from adjacent `--| raises:` annotations.
  std::vector<std::string> raises;

  bool is_function() const { return kind == SubprogramKind::kFunction; }
  bool operator==(const SubprogramDecl&) const = default;
};

struct ExceptionDecl {
  std::vector<std::string> names;
  bool operator==(const ExceptionDecl&) const = default;
};

struct ObjectDecl {
  std::string name;
  std::string type_name;
  bool is_constant = false;
  std::optional<std::string> initial_value;
  bool operator==(const ObjectDecl&) const = default;
};

struct Declaration {
  SourceLocation location;
  std::variant<TypeDecl, SubprogramDecl, ExceptionDecl, ObjectDecl> node;

  const TypeDecl* AsType() const { return std::get_if<TypeDecl>(&node); }
  const SubprogramDecl* AsSubprogram() const {
    return std::get_if<SubprogramDecl>(&node);
  }
  const ExceptionDecl* AsException() const {
    return std::get_if<ExceptionDecl>(&node);
  }
  const ObjectDecl* AsObject() const { return std::get_if<ObjectDecl>(&node); }
  TypeDecl* AsType() { return std::get_if<TypeDecl>(&node); }
  SubprogramDecl* AsSubprogram() { return std::get_if<SubprogramDecl>(&node); }
  ExceptionDecl* AsException() { return std::get_if<ExceptionDecl>(&node); }

  bool operator==(const Declaration& other) const { return node == other.node; }
};

enum class FormalTypeConstraint { kPrivate, kLimitedPrivate, kDiscrete };

struct FormalType {
  std::string name;
  FormalTypeConstraint constraint = FormalTypeConstraint::kPrivate;
  bool operator==(const FormalType&) const = default;
};

struct FormalSubprogram {
  SubprogramDecl profile;
  bool operator==(const FormalSubprogram&) const = default;
};

struct GenericFormal {
  SourceLocation location;
  std::variant<FormalType, FormalSubprogram> node;

  const FormalType* AsType() const { return std::get_if<FormalType>(&node); }
  const FormalSubprogram* AsSubprogram() const {
    return std::get_if<FormalSubprogram>(&node);
  }
  bool operator==(const GenericFormal& other) const {
    return node == other.node;
  }
};

struct ParsedUnit {
  std::string file_name;
  // A `generic` keyword was present, possibly with no formals.
  bool is_generic = false;
  std::vector<GenericFormal> generic_formals;
  std::string package_name;
  SourceLocation package_location;
  std::vector<Declaration> visible_declarations;
  std::vector<Declaration> private_declarations;

  bool operator==(const ParsedUnit& other) const {
    return is_generic == other.is_generic &&
           generic_formals == other.generic_formals &&
           package_name == other.package_name &&
           visible_declarations == other.visible_declarations &&
           private_declarations == other.private_declarations;
  }
};

// Names declared by a declaration (several for `A, B : exception;`).
std::vector<std::string> DeclaredNames(const Declaration& decl);

// All subprograms in visible-then-private order.
std::vector<const SubprogramDecl*> Subprograms(const ParsedUnit& unit);

}  // namespace rais

#endif  // RAIS_SYNTAX_H_
