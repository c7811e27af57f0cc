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

// Tokenizer for the package-specification subset.

#ifndef RAIS_LEXER_H_
#define RAIS_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "rais/syntax.h"

namespace rais {

enum class TokenKind {
  kIdentifier,  // includes reserved words; the parser tells them apart
  kNumber,
  kString,
  kCharacter,
  kSymbol,
  kAnnotation,  // `--| raises: ...`; text holds what follows `raises:`
  kInvalid,     // text holds the diagnostic
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  SourceLocation location;
};

// Never fails: malformed input produces a kInvalid token at the point of the
// problem, so the parser reports errors in source order.
std::vector<Token> Tokenize(std::string_view source,
                            const std::string& file_name);

bool IsReservedWord(std::string_view word);

// Human-readable rendering of a token for diagnostics.
std::string Describe(const Token& token);

}  // namespace rais

#endif  // RAIS_LEXER_H_
