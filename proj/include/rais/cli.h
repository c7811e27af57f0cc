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

// The `rais` command line.

#ifndef RAIS_CLI_H_
#define RAIS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace rais {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBelowThreshold = 3;
inline constexpr int kExitIo = 4;

// `args` excludes the program name. Prompts and reports go to `out`,
// diagnostics to `err`; interactive answers are read from `in`.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace rais

#endif  // RAIS_CLI_H_
