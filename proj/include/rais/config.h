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

// Tool configuration, loaded from JSON:
//
//   {
//     "enabled":   { "G3": false },
//     "weights":   { "G2": 5 },
//     "overrides": {
//       "operations": { "Frobnicate": "StateChange" },
//       "structure_kind": "dynamic",
//       "complex": true,
//       "element_type": "Item",
//       "element_independent": true
//     },
//     "interactive": false,
//     "emit_body": false
//   }

#ifndef RAIS_CONFIG_H_
#define RAIS_CONFIG_H_

#include <filesystem>
#include <stdexcept>
#include <string_view>

#include "rais/assessor.h"
#include "rais/component_model.h"

namespace rais {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  AssessmentConfig assessment;
  OverrideSet overrides;
  bool interactive = false;
  bool emit_body = false;
};

// Throws ConfigError on malformed JSON, unknown keys or guideline ids, bad
// class names, or weights below 1.
Config ParseConfig(std::string_view json_text);

}  // namespace rais

#endif  // RAIS_CONFIG_H_
