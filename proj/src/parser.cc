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

#include "rais/parser.h"

#include <utility>
#include <vector>

#include "lexer.h"
#include "text_util.h"

namespace rais {

std::string SourceLocation::ToString() const {
  return file_name + ":" + std::to_string(line) + ":" + std::to_string(column);
}

ParseError::ParseError(SourceLocation location, std::string expected,
                       std::string found)
    : std::runtime_error(location.ToString() + ": expected " + expected +
                         ", found " + found),
      location_(std::move(location)),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

struct PendingAnnotation {
  size_t position;  // index of the first regular token after the comment
  Token token;
  bool used = false;
};

bool NoSpaceBetween(const Token& left, const Token& right) {
  auto is_sym = [](const Token& t, std::string_view s) {
    return t.kind == TokenKind::kSymbol && t.text == s;
  };
  return is_sym(left, "(") || is_sym(right, ")") || is_sym(right, ",") ||
         is_sym(left, "'") || is_sym(right, "'") || is_sym(left, ".") ||
         is_sym(right, ".");
}

class Parser {
 public:
  Parser(std::vector<Token> all_tokens, std::string file_name)
      : file_name_(std::move(file_name)) {
    for (Token& t : all_tokens) {
      if (t.kind == TokenKind::kAnnotation) {
        annotations_.push_back({tokens_.size(), std::move(t)});
      } else {
        tokens_.push_back(std::move(t));
      }
    }
  }

  ParsedUnit Run() {
    ParsedUnit unit;
    unit.file_name = file_name_;
    if (AtKeyword("generic")) {
      Next();
      unit.is_generic = true;
      ParseGenericPart(unit);
    }
    if (!AtKeyword("package")) {
      Error(unit.is_generic ? "generic formal or 'package'" : "'package'");
    }
    unit.package_location = Cur().location;
    Next();
    unit.package_name = ParseIdentifier("package name");
    ExpectKeyword("is");
    unit.visible_declarations = ParseDeclarations();
    if (AtKeyword("private")) {
      Next();
      unit.private_declarations = ParseDeclarations();
    }
    ExpectKeyword("end");
    if (Cur().kind == TokenKind::kIdentifier && !IsReservedWord(Cur().text)) {
      if (!EqualsIgnoreCase(Cur().text, unit.package_name)) {
        Error("'" + unit.package_name + "'");
      }
      Next();
    }
    ExpectSymbol(";");
    if (Cur().kind != TokenKind::kEnd) Error("end of file");
    for (const PendingAnnotation& a : annotations_) {
      if (!a.used) {
        throw ParseError(a.token.location,
                         "subprogram declaration adjacent to annotation",
                         Describe(a.token));
      }
    }
    return unit;
  }

 private:
  const Token& Cur() const { return tokens_[pos_]; }
  const Token& PeekAt(size_t ahead) const {
    const size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  void Next() {
    if (pos_ + 1 < tokens_.size()) ++pos_;
  }

  [[noreturn]] void Error(const std::string& expected) const {
    throw ParseError(Cur().location, expected, Describe(Cur()));
  }

  bool IsKeyword(const Token& t, std::string_view kw) const {
    return t.kind == TokenKind::kIdentifier && EqualsIgnoreCase(t.text, kw);
  }
  bool AtKeyword(std::string_view kw) const { return IsKeyword(Cur(), kw); }
  bool AtSymbol(std::string_view sym) const {
    return Cur().kind == TokenKind::kSymbol && Cur().text == sym;
  }

  void ExpectKeyword(std::string_view kw) {
    if (!AtKeyword(kw)) Error("'" + std::string(kw) + "'");
    Next();
  }
  void ExpectSymbol(std::string_view sym) {
    if (!AtSymbol(sym)) Error("'" + std::string(sym) + "'");
    Next();
  }
  // `<>` may also be written as two tokens.
  void ExpectBox() {
    if (AtSymbol("<>")) {
      Next();
      return;
    }
    ExpectSymbol("<");
    ExpectSymbol(">");
  }

  bool AtIdentifier() const {
    return Cur().kind == TokenKind::kIdentifier && !IsReservedWord(Cur().text);
  }

  std::string ParseIdentifier(const std::string& what) {
    if (!AtIdentifier()) Error(what);
    std::string text = Cur().text;
    Next();
    return text;
  }

  // name = id { "." id }
  std::string ParseName() {
    std::string name = ParseIdentifier("type name");
    while (AtSymbol(".")) {
      Next();
      name += "." + ParseIdentifier("identifier after '.'");
    }
    return name;
  }

  // Collects tokens up to (not including) one of `stops` at parenthesis depth
  // zero, returned as canonically spaced text.
  std::string ParseOpaque(std::initializer_list<std::string_view> stops,
                          const std::string& what) {
    std::vector<const Token*> collected;
    int depth = 0;
    while (true) {
      const Token& t = Cur();
      if (t.kind == TokenKind::kEnd || t.kind == TokenKind::kInvalid) break;
      if (t.kind == TokenKind::kSymbol) {
        if (depth == 0) {
          bool stop = false;
          for (std::string_view s : stops) stop = stop || t.text == s;
          if (stop) break;
          if (t.text == ")" || t.text == ";") break;
        }
        if (t.text == "(") ++depth;
        if (t.text == ")") --depth;
      }
      collected.push_back(&t);
      Next();
    }
    if (collected.empty()) Error(what);
    if (depth != 0) Error("')'");
    std::string out = collected[0]->text;
    for (size_t i = 1; i < collected.size(); ++i) {
      // A sign with no left operand is unary and hugs its operand.
      const Token& prev = *collected[i - 1];
      const bool unary_sign =
          prev.kind == TokenKind::kSymbol && (prev.text == "-" || prev.text == "+") &&
          (i == 1 || (collected[i - 2]->kind == TokenKind::kSymbol &&
                      collected[i - 2]->text != ")"));
      if (!unary_sign && !NoSpaceBetween(prev, *collected[i])) out += ' ';
      out += collected[i]->text;
    }
    return out;
  }

  void ParseGenericPart(ParsedUnit& unit) {
    while (true) {
      const SourceLocation loc = Cur().location;
      if (AtKeyword("type")) {
        Next();
        FormalType formal;
        formal.name = ParseIdentifier("formal type name");
        ExpectKeyword("is");
        if (AtSymbol("(")) {
          Next();
          ExpectBox();
          ExpectSymbol(")");
          formal.constraint = FormalTypeConstraint::kDiscrete;
        } else {
          bool limited = false;
          if (AtKeyword("limited")) {
            limited = true;
            Next();
          }
          if (!AtKeyword("private")) {
            Error(limited ? "'private'" : "'private', 'limited' or '(<>)'");
          }
          Next();
          formal.constraint = limited ? FormalTypeConstraint::kLimitedPrivate
                                      : FormalTypeConstraint::kPrivate;
        }
        ExpectSymbol(";");
        CheckUniqueFormal(unit, formal.name, loc);
        unit.generic_formals.push_back({loc, std::move(formal)});
      } else if (AtKeyword("with")) {
        Next();
        if (!AtKeyword("procedure") && !AtKeyword("function")) {
          Error("'procedure' or 'function'");
        }
        FormalSubprogram formal{ParseSubprogramProfile()};
        ExpectSymbol(";");
        CheckUniqueFormal(unit, formal.profile.name, loc);
        unit.generic_formals.push_back({loc, std::move(formal)});
      } else {
        return;
      }
    }
  }

  void CheckUniqueFormal(const ParsedUnit& unit, const std::string& name,
                         const SourceLocation& loc) const {
    for (const GenericFormal& f : unit.generic_formals) {
      const std::string& existing = f.AsType() ? f.AsType()->name
                                               : f.AsSubprogram()->profile.name;
      if (EqualsIgnoreCase(existing, name)) {
        throw ParseError(loc, "unique generic formal name",
                         "duplicate '" + name + "'");
      }
    }
  }

  std::vector<PendingAnnotation*> TakeAnnotationsAt(size_t position) {
    std::vector<PendingAnnotation*> out;
    for (PendingAnnotation& a : annotations_) {
      if (!a.used && a.position == position) out.push_back(&a);
    }
    return out;
  }

  void Attach(SubprogramDecl& sub, PendingAnnotation& a) {
    a.used = true;
    std::string_view rest = a.token.text;
    size_t start = 0;
    bool any = false;
    while (start <= rest.size()) {
      size_t comma = rest.find(',', start);
      if (comma == std::string_view::npos) comma = rest.size();
      std::string_view item = rest.substr(start, comma - start);
      while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) {
        item.remove_prefix(1);
      }
      while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) {
        item.remove_suffix(1);
      }
      if (!IsValidIdentifier(item) || IsReservedWord(item)) {
        throw ParseError(a.token.location, "exception name in annotation",
                         "'" + std::string(item) + "'");
      }
      if (!ContainsIgnoreCase(sub.raises, item)) {
        sub.raises.emplace_back(item);
      }
      any = true;
      start = comma + 1;
    }
    if (!any) {
      throw ParseError(a.token.location, "exception name in annotation",
                       "nothing");
    }
  }

  std::vector<Declaration> ParseDeclarations() {
    std::vector<Declaration> decls;
    int last_semicolon_line = 0;
    while (true) {
      std::vector<PendingAnnotation*> pending;
      for (PendingAnnotation* a : TakeAnnotationsAt(pos_)) {
        SubprogramDecl* prev =
            decls.empty() ? nullptr : decls.back().AsSubprogram();
        if (prev != nullptr && a->token.location.line <= last_semicolon_line + 1) {
          Attach(*prev, *a);
        } else {
          pending.push_back(a);
        }
      }
      const bool at_section_end = AtKeyword("private") || AtKeyword("end") ||
                                  Cur().kind == TokenKind::kEnd;
      if (at_section_end) {
        if (!pending.empty()) {
          SubprogramDecl* prev =
              decls.empty() ? nullptr : decls.back().AsSubprogram();
          if (prev == nullptr) {
            throw ParseError(pending.front()->token.location,
                             "subprogram declaration adjacent to annotation",
                             Describe(pending.front()->token));
          }
          for (PendingAnnotation* a : pending) Attach(*prev, *a);
        }
        return decls;
      }

      const size_t start = pos_;
      Declaration decl = ParseDeclaration();
      last_semicolon_line = tokens_[pos_ - 1].location.line;
      if (SubprogramDecl* sub = decl.AsSubprogram()) {
        for (PendingAnnotation& a : annotations_) {
          if (!a.used && a.position > start && a.position < pos_) {
            Attach(*sub, a);
          }
        }
      }
      if (!pending.empty()) {
        SubprogramDecl* target = decl.AsSubprogram();
        if (target == nullptr && !decls.empty()) {
          target = decls.back().AsSubprogram();
        }
        if (target == nullptr) {
          throw ParseError(pending.front()->token.location,
                           "subprogram declaration adjacent to annotation",
                           Describe(pending.front()->token));
        }
        for (PendingAnnotation* a : pending) Attach(*target, *a);
      }
      decls.push_back(std::move(decl));
    }
  }

  Declaration ParseDeclaration() {
    Declaration decl;
    decl.location = Cur().location;
    if (AtKeyword("type")) {
      decl.node = ParseTypeDecl();
    } else if (AtKeyword("procedure") || AtKeyword("function")) {
      SubprogramDecl sub = ParseSubprogramProfile();
      ExpectSymbol(";");
      decl.node = std::move(sub);
    } else if (AtIdentifier()) {
      std::vector<std::string> names;
      names.push_back(ParseIdentifier("identifier"));
      while (AtSymbol(",")) {
        Next();
        names.push_back(ParseIdentifier("identifier"));
      }
      ExpectSymbol(":");
      if (AtKeyword("exception")) {
        Next();
        ExpectSymbol(";");
        decl.node = ExceptionDecl{std::move(names)};
      } else {
        if (names.size() != 1) Error("'exception'");
        ObjectDecl obj;
        obj.name = std::move(names.front());
        if (AtKeyword("constant")) {
          obj.is_constant = true;
          Next();
        }
        obj.type_name = ParseName();
        if (AtSymbol(":=")) {
          Next();
          obj.initial_value = ParseOpaque({";"}, "expression");
        }
        ExpectSymbol(";");
        decl.node = std::move(obj);
      }
    } else {
      Error("declaration");
    }
    return decl;
  }

  TypeDecl ParseTypeDecl() {
    ExpectKeyword("type");
    TypeDecl type;
    type.name = ParseIdentifier("type name");
    ExpectKeyword("is");
    if (AtKeyword("limited") || AtKeyword("private")) {
      PrivateDef def;
      if (AtKeyword("limited")) {
        def.is_limited = true;
        Next();
      }
      ExpectKeyword("private");
      type.definition = def;
    } else if (AtKeyword("array")) {
      Next();
      ExpectSymbol("(");
      ArrayDef def;
      def.index = ParseRangeSpec();
      ExpectSymbol(")");
      ExpectKeyword("of");
      def.element_type = ParseName();
      type.definition = std::move(def);
    } else if (AtKeyword("record")) {
      Next();
      RecordDef def;
      while (!AtKeyword("end")) {
        RecordComponent c;
        c.name = ParseIdentifier("component name or 'end'");
        ExpectSymbol(":");
        c.type_name = ParseName();
        ExpectSymbol(";");
        def.components.push_back(std::move(c));
      }
      Next();
      ExpectKeyword("record");
      type.definition = std::move(def);
    } else if (AtKeyword("access")) {
      Next();
      type.definition = AccessDef{ParseName()};
    } else if (AtKeyword("range")) {
      Next();
      IntegerRangeDef def;
      def.low = ParseOpaque({".."}, "range bound");
      ExpectSymbol("..");
      def.high = ParseOpaque({";"}, "range bound");
      type.definition = std::move(def);
    } else if (AtSymbol("(")) {
      Next();
      EnumerationDef def;
      def.literals.push_back(ParseIdentifier("enumeration literal"));
      while (AtSymbol(",")) {
        Next();
        def.literals.push_back(ParseIdentifier("enumeration literal"));
      }
      ExpectSymbol(")");
      type.definition = std::move(def);
    } else {
      Error("type definition");
    }
    ExpectSymbol(";");
    return type;
  }

  std::variant<ConstrainedRange, UnconstrainedRange> ParseRangeSpec() {
    // name "range" "<>" needs lookahead past a dotted name.
    if (AtIdentifier()) {
      size_t ahead = 1;
      while (PeekAt(ahead).kind == TokenKind::kSymbol &&
             PeekAt(ahead).text == "." &&
             PeekAt(ahead + 1).kind == TokenKind::kIdentifier) {
        ahead += 2;
      }
      if (IsKeyword(PeekAt(ahead), "range")) {
        UnconstrainedRange r{ParseName()};
        ExpectKeyword("range");
        ExpectBox();
        return r;
      }
    }
    ConstrainedRange r;
    r.low = ParseOpaque({".."}, "index range");
    ExpectSymbol("..");
    r.high = ParseOpaque({")"}, "index bound");
    return r;
  }

  SubprogramDecl ParseSubprogramProfile() {
    SubprogramDecl sub;
    sub.kind = AtKeyword("function") ? SubprogramKind::kFunction
                                     : SubprogramKind::kProcedure;
    Next();
    sub.name = ParseIdentifier("subprogram name");
    if (AtSymbol("(")) {
      Next();
      sub.parameters.push_back(ParseParameter());
      while (AtSymbol(";")) {
        Next();
        sub.parameters.push_back(ParseParameter());
      }
      ExpectSymbol(")");
    }
    if (sub.is_function()) {
      ExpectKeyword("return");
      sub.return_type = ParseName();
    } else if (AtKeyword("return")) {
      Error("';'");
    }
    return sub;
  }

  Parameter ParseParameter() {
    Parameter p;
    p.names.push_back(ParseIdentifier("parameter name"));
    while (AtSymbol(",")) {
      Next();
      p.names.push_back(ParseIdentifier("parameter name"));
    }
    ExpectSymbol(":");
    if (AtKeyword("in")) {
      Next();
      if (AtKeyword("out")) {
        Next();
        p.mode = ParamMode::kInOut;
      }
    } else if (AtKeyword("out")) {
      Next();
      p.mode = ParamMode::kOut;
    }
    p.type_name = ParseName();
    if (AtSymbol(":=")) {
      Next();
      p.default_expression = ParseOpaque({";", ")"}, "default expression");
    }
    return p;
  }

  std::string file_name_;
  std::vector<Token> tokens_;
  std::vector<PendingAnnotation> annotations_;
  size_t pos_ = 0;
};

}  // namespace

ParsedUnit ParseComponent(std::string_view source,
                          const std::string& file_name) {
  return Parser(Tokenize(source, file_name), file_name).Run();
}

std::vector<std::string> DeclaredNames(const Declaration& decl) {
  if (const auto* t = decl.AsType()) return {t->name};
  if (const auto* s = decl.AsSubprogram()) return {s->name};
  if (const auto* e = decl.AsException()) return e->names;
  return {decl.AsObject()->name};
}

std::vector<const SubprogramDecl*> Subprograms(const ParsedUnit& unit) {
  std::vector<const SubprogramDecl*> out;
  for (const auto* part : {&unit.visible_declarations,
                           &unit.private_declarations}) {
    for (const Declaration& d : *part) {
      if (const auto* s = d.AsSubprogram()) out.push_back(s);
    }
  }
  return out;
}

}  // namespace rais
