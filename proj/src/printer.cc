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

#include "rais/printer.h"

#include <sstream>

#include "text_util.h"

namespace rais {
namespace {

constexpr const char* kIndent = "   ";

std::string FormatTypeDefinition(const TypeDefinition& def,
                                 const std::string& indent) {
  struct Visitor {
    const std::string& indent;
    std::string operator()(const PrivateDef& d) const {
      return d.is_limited ? "limited private" : "private";
    }
    std::string operator()(const ArrayDef& d) const {
      std::string index;
      if (const auto* r = std::get_if<ConstrainedRange>(&d.index)) {
        index = r->low + " .. " + r->high;
      } else {
        index = std::get<UnconstrainedRange>(d.index).index_type + " range <>";
      }
      return "array (" + index + ") of " + d.element_type;
    }
    std::string operator()(const RecordDef& d) const {
      std::string out = "record\n";
      for (const RecordComponent& c : d.components) {
        out += indent + kIndent + c.name + " : " + c.type_name + ";\n";
      }
      return out + indent + "end record";
    }
    std::string operator()(const AccessDef& d) const {
      return "access " + d.designated_type;
    }
    std::string operator()(const EnumerationDef& d) const {
      return "(" + Join(d.literals, ", ") + ")";
    }
    std::string operator()(const IntegerRangeDef& d) const {
      return "range " + d.low + " .. " + d.high;
    }
  };
  return std::visit(Visitor{indent}, def);
}

void PrintDeclaration(std::ostream& out, const Declaration& decl) {
  const std::string indent = kIndent;
  if (const auto* t = decl.AsType()) {
    out << indent << "type " << t->name << " is "
        << FormatTypeDefinition(t->definition, indent) << ";\n";
  } else if (const auto* s = decl.AsSubprogram()) {
    out << indent << FormatProfile(*s) << ";\n";
    if (!s->raises.empty()) {
      out << indent << "--| raises: " << Join(s->raises, ", ") << "\n";
    }
  } else if (const auto* e = decl.AsException()) {
    out << indent << Join(e->names, ", ") << " : exception;\n";
  } else if (const auto* o = decl.AsObject()) {
    out << indent << o->name << " : " << (o->is_constant ? "constant " : "")
        << o->type_name;
    if (o->initial_value) out << " := " << *o->initial_value;
    out << ";\n";
  }
}

}  // namespace

const char* ModeKeyword(ParamMode mode) {
  switch (mode) {
    case ParamMode::kIn:
      return "in";
    case ParamMode::kOut:
      return "out";
    case ParamMode::kInOut:
      return "in out";
  }
  return "in";
}

std::string FormatParameters(const std::vector<Parameter>& params) {
  std::string out;
  for (size_t i = 0; i < params.size(); ++i) {
    const Parameter& p = params[i];
    if (i > 0) out += "; ";
    out += Join(p.names, ", ") + " : " + ModeKeyword(p.mode) + " " +
           p.type_name;
    if (p.default_expression) out += " := " + *p.default_expression;
  }
  return out;
}

std::string FormatProfile(const SubprogramDecl& sub) {
  std::string out = sub.is_function() ? "function " : "procedure ";
  out += sub.name;
  if (!sub.parameters.empty()) {
    out += " (" + FormatParameters(sub.parameters) + ")";
  }
  if (sub.return_type) out += " return " + *sub.return_type;
  return out;
}

std::string PrettyPrint(const ParsedUnit& unit) {
  std::ostringstream out;
  if (unit.is_generic) {
    out << "generic\n";
    for (const GenericFormal& f : unit.generic_formals) {
      if (const auto* t = f.AsType()) {
        out << kIndent << "type " << t->name << " is ";
        switch (t->constraint) {
          case FormalTypeConstraint::kPrivate:
            out << "private";
            break;
          case FormalTypeConstraint::kLimitedPrivate:
            out << "limited private";
            break;
          case FormalTypeConstraint::kDiscrete:
            out << "(<>)";
            break;
        }
        out << ";\n";
      } else {
        out << kIndent << "with " << FormatProfile(f.AsSubprogram()->profile)
            << ";\n";
      }
    }
  }
  out << "package " << unit.package_name << " is\n";
  for (const Declaration& d : unit.visible_declarations) {
    PrintDeclaration(out, d);
  }
  if (!unit.private_declarations.empty()) {
    out << "private\n";
    for (const Declaration& d : unit.private_declarations) {
      PrintDeclaration(out, d);
    }
  }
  out << "end " << unit.package_name << ";\n";
  return out.str();
}

}  // namespace rais
