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

#ifndef RAIS_PRINTER_H_
#define RAIS_PRINTER_H_

#include <string>

#include "rais/syntax.h"

namespace rais {

// Canonical source form: lower-case keywords, three-space indentation, one
// declaration per line, raises annotations re-emitted as `--| raises: ...`
// on the line after their subprogram. Re-parsing the output yields a unit
// equal to `unit`.
std::string PrettyPrint(const ParsedUnit& unit);

// `procedure P (X : in T)` / `function F return T`, without the semicolon.
std::string FormatProfile(const SubprogramDecl& sub);

std::string FormatParameters(const std::vector<Parameter>& params);

const char* ModeKeyword(ParamMode mode);

}  // namespace rais

#endif  // RAIS_PRINTER_H_
