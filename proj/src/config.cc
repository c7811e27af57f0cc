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

#include "rais/config.h"

#include <json.hpp>

#include "rais/guidelines.h"

namespace rais {
namespace {

using json = nlohmann::json;

void CheckKeys(const json& object, std::initializer_list<std::string_view> allowed,
               const std::string& where) {
  if (!object.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : object.items()) {
    bool ok = false;
    for (std::string_view a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

const Guideline& RequireGuideline(const std::string& code) {
  const Guideline* g = FindGuideline(code);
  if (g == nullptr) throw ConfigError("unknown guideline id '" + code + "'");
  return *g;
}

bool RequireBool(const json& v, const std::string& what) {
  if (!v.is_boolean()) throw ConfigError(what + " must be true or false");
  return v.get<bool>();
}

std::string RequireString(const json& v, const std::string& what) {
  if (!v.is_string()) throw ConfigError(what + " must be a string");
  return v.get<std::string>();
}

}  // namespace

Config ParseConfig(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  CheckKeys(root, {"enabled", "weights", "overrides", "interactive", "emit_body"},
            "config");

  Config config;
  if (auto it = root.find("enabled"); it != root.end()) {
    if (!it->is_object()) throw ConfigError("enabled must be an object");
    for (const auto& [code, value] : it->items()) {
      const Guideline& g = RequireGuideline(code);
      config.assessment.enabled[std::string(g.code)] =
          RequireBool(value, "enabled." + code);
    }
  }
  if (auto it = root.find("weights"); it != root.end()) {
    if (!it->is_object()) throw ConfigError("weights must be an object");
    for (const auto& [code, value] : it->items()) {
      const Guideline& g = RequireGuideline(code);
      if (!value.is_number_integer() || value.get<long>() < 1) {
        throw ConfigError("weights." + code + " must be an integer >= 1");
      }
      config.assessment.weights[std::string(g.code)] = value.get<int>();
    }
  }
  if (auto it = root.find("overrides"); it != root.end()) {
    CheckKeys(*it,
              {"operations", "structure_kind", "complex", "element_type",
               "element_independent"},
              "overrides");
    OverrideSet& o = config.overrides;
    if (auto ops = it->find("operations"); ops != it->end()) {
      if (!ops->is_object()) throw ConfigError("overrides.operations must be an object");
      for (const auto& [name, value] : ops->items()) {
        const std::string text = RequireString(value, "overrides.operations." + name);
        auto c = ParseOperationClass(text);
        if (!c) throw ConfigError("unknown operation class '" + text + "'");
        o.op_class_overrides[name] = *c;
      }
    }
    if (auto v = it->find("structure_kind"); v != it->end()) {
      const std::string text = RequireString(*v, "overrides.structure_kind");
      auto k = ParseStructureKind(text);
      if (!k) throw ConfigError("unknown structure kind '" + text + "'");
      o.structure_kind = *k;
    }
    if (auto v = it->find("complex"); v != it->end()) {
      o.complex = RequireBool(*v, "overrides.complex");
    }
    if (auto v = it->find("element_type"); v != it->end()) {
      o.element_type = RequireString(*v, "overrides.element_type");
    }
    if (auto v = it->find("element_independent"); v != it->end()) {
      o.element_independence = RequireBool(*v, "overrides.element_independent");
    }
  }
  if (auto v = root.find("interactive"); v != root.end()) {
    config.interactive = RequireBool(*v, "interactive");
  }
  if (auto v = root.find("emit_body"); v != root.end()) {
    config.emit_body = RequireBool(*v, "emit_body");
  }
  return config;
}

}  // namespace rais
