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

#include "lexer.h"

#include <array>
#include <cctype>

#include "text_util.h"

namespace rais {
namespace {

constexpr std::string_view kReservedWords[] = {
    "abort",     "abs",       "abstract",   "accept",   "access",
    "aliased",   "all",       "and",        "array",    "at",
    "begin",     "body",      "case",       "constant", "declare",
    "delay",     "delta",     "digits",     "do",       "else",
    "elsif",     "end",       "entry",      "exception", "exit",
    "for",       "function",  "generic",    "goto",     "if",
    "in",        "interface", "is",         "limited",  "loop",
    "mod",       "new",       "not",        "null",     "of",
    "or",        "others",    "out",        "overriding", "package",
    "pragma",    "private",   "procedure",  "protected", "raise",
    "range",     "record",    "rem",        "renames",  "requeue",
    "return",    "reverse",   "select",     "separate", "some",
    "subtype",   "synchronized", "tagged",  "task",     "terminate",
    "then",      "type",      "until",      "use",      "when",
    "while",     "with",
};

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
 public:
  Lexer(std::string_view source, const std::string& file_name)
      : src_(source), file_name_(file_name) {}

  std::vector<Token> Run() {
    while (true) {
      SkipWhitespace();
      if (pos_ >= src_.size()) {
        Push(TokenKind::kEnd, "", Here());
        break;
      }
      if (!LexOne()) break;  // stop after an invalid token
    }
    return std::move(tokens_);
  }

 private:
  SourceLocation Here() const { return {file_name_, line_, column_}; }

  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void Advance(size_t n = 1) {
    for (size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void Push(TokenKind kind, std::string text, SourceLocation loc) {
    tokens_.push_back({kind, std::move(text), std::move(loc)});
  }

  bool Fail(std::string message, SourceLocation loc) {
    Push(TokenKind::kInvalid, std::move(message), std::move(loc));
    Push(TokenKind::kEnd, "", Here());
    return false;
  }

  void SkipWhitespace() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
          c == '\v') {
        Advance();
      } else {
        break;
      }
    }
  }

  // Tick is an attribute mark after a name or closing paren; otherwise `'`
  // opens a character literal.
  bool PreviousAllowsTick() const {
    if (tokens_.empty()) return false;
    const Token& prev = tokens_.back();
    if (prev.kind == TokenKind::kIdentifier) return true;
    return prev.kind == TokenKind::kSymbol && prev.text == ")";
  }

  bool LexOne() {
    const SourceLocation loc = Here();
    const char c = Peek();

    if (c == '-' && Peek(1) == '-') {
      LexComment(loc);
      return true;
    }
    if (IsIdentStart(c)) {
      const size_t start = pos_;
      while (IsIdentChar(Peek())) Advance();
      std::string word(src_.substr(start, pos_ - start));
      if (!IsValidIdentifier(word)) {
        return Fail("malformed identifier '" + word + "'", loc);
      }
      Push(TokenKind::kIdentifier, std::move(word), loc);
      return true;
    }
    if (IsDigit(c)) return LexNumber(loc);
    if (c == '"') return LexString(loc);
    if (c == '\'') {
      if (!PreviousAllowsTick() && Peek(2) == '\'' && Peek(1) != '\0') {
        std::string lit(src_.substr(pos_, 3));
        Advance(3);
        Push(TokenKind::kCharacter, std::move(lit), loc);
        return true;
      }
      Advance();
      Push(TokenKind::kSymbol, "'", loc);
      return true;
    }

    static constexpr std::array<std::string_view, 8> kCompound = {
        "..", ":=", "=>", "<>", "**", "/=", ">=", "<="};
    for (std::string_view sym : kCompound) {
      if (src_.substr(pos_, 2) == sym) {
        Advance(2);
        Push(TokenKind::kSymbol, std::string(sym), loc);
        return true;
      }
    }
    static constexpr std::string_view kSingle = "();:,.<>=+-*/&|";
    if (kSingle.find(c) != std::string_view::npos) {
      Advance();
      Push(TokenKind::kSymbol, std::string(1, c), loc);
      return true;
    }
    return Fail(std::string("unexpected character '") + c + "'", loc);
  }

  void LexComment(const SourceLocation& loc) {
    const size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] != '\n') Advance();
    std::string_view body = src_.substr(start, pos_ - start);
    if (body.size() < 3 || body[2] != '|') return;  // ordinary comment
    body.remove_prefix(3);
    while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) {
      body.remove_prefix(1);
    }
    constexpr std::string_view kRaises = "raises:";
    if (!StartsWithIgnoreCase(body, kRaises)) return;
    body.remove_prefix(kRaises.size());
    while (!body.empty() && (body.back() == ' ' || body.back() == '\t' ||
                             body.back() == '\r')) {
      body.remove_suffix(1);
    }
    Push(TokenKind::kAnnotation, std::string(body), loc);
  }

  bool LexNumber(const SourceLocation& loc) {
    const size_t start = pos_;
    auto digits = [&](bool extended) {
      while (IsDigit(Peek()) || Peek() == '_' ||
             (extended && std::isxdigit(static_cast<unsigned char>(Peek())))) {
        Advance();
      }
    };
    digits(false);
    if (Peek() == '#') {
      Advance();
      digits(true);
      if (Peek() == '.') {
        Advance();
        digits(true);
      }
      if (Peek() != '#') return Fail("unterminated based literal", loc);
      Advance();
    } else if (Peek() == '.' && IsDigit(Peek(1))) {
      Advance();
      digits(false);
    }
    if ((Peek() == 'e' || Peek() == 'E') &&
        (IsDigit(Peek(1)) ||
         ((Peek(1) == '+' || Peek(1) == '-') && IsDigit(Peek(2))))) {
      Advance(2);
      digits(false);
    }
    if (IsIdentChar(Peek())) {
      return Fail("malformed numeric literal", loc);
    }
    Push(TokenKind::kNumber, std::string(src_.substr(start, pos_ - start)),
         loc);
    return true;
  }

  bool LexString(const SourceLocation& loc) {
    const size_t start = pos_;
    Advance();
    while (true) {
      if (pos_ >= src_.size() || Peek() == '\n') {
        return Fail("unterminated string literal", loc);
      }
      if (Peek() == '"') {
        if (Peek(1) == '"') {
          Advance(2);
          continue;
        }
        Advance();
        break;
      }
      Advance();
    }
    Push(TokenKind::kString, std::string(src_.substr(start, pos_ - start)),
         loc);
    return true;
  }

  std::string_view src_;
  std::string file_name_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::vector<Token> tokens_;
};

}  // namespace

std::vector<Token> Tokenize(std::string_view source,
                            const std::string& file_name) {
  return Lexer(source, file_name).Run();
}

bool IsReservedWord(std::string_view word) {
  for (std::string_view w : kReservedWords) {
    if (EqualsIgnoreCase(w, word)) return true;
  }
  return false;
}

std::string Describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::kEnd:
      return "end of file";
    case TokenKind::kAnnotation:
      return "'--| raises:' annotation";
    case TokenKind::kInvalid:
      return token.text;
    default:
      return "'" + token.text + "'";
  }
}

}  // namespace rais
