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

// Recursive-descent parser for component specifications.

#ifndef RAIS_PARSER_H_
#define RAIS_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "rais/syntax.h"

namespace rais {

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLocation location, std::string expected, std::string found);

  const SourceLocation& location() const { return location_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourceLocation location_;
  std::string expected_;
  std::string found_;
};

// Parses one compilation (optional generic part plus package specification).
// Keywords match case-insensitively; identifiers keep their source spelling.
// `--| raises: A, B` comments attach to the adjacent subprogram: a comment on
// the line of, or the line after, a subprogram's closing `;` belongs to that
// subprogram, otherwise to the declaration that follows it. All other comments
// are discarded. The first error aborts with ParseError.
ParsedUnit ParseComponent(std::string_view source, const std::string& file_name);

}  // namespace rais

#endif  // RAIS_PARSER_H_
