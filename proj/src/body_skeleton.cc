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

#include <sstream>

#include "rais/improver.h"
#include "rais/printer.h"

namespace rais {

std::string GenerateBodySkeleton(const ParsedUnit& unit) {
  std::ostringstream out;
  out << "package body " << unit.package_name << " is\n";
  for (const SubprogramDecl* s : Subprograms(unit)) {
    out << "\n   " << FormatProfile(*s) << " is\n"
        << "   begin\n"
        << "      -- TODO implement\n"
        << "      null;\n";
    if (!s->raises.empty()) {
      out << "   exception\n";
      for (const std::string& e : s->raises) {
        out << "      when " << e << " =>\n"
            << "         -- TODO handle\n"
            << "         raise;\n";
      }
    }
    out << "   end " << s->name << ";\n";
  }
  out << "\nend " << unit.package_name << ";\n";
  return out.str();
}

}  // namespace rais
