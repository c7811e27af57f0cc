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

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>

#include "rais/component_model.h"
#include "rais/parser.h"
#include "text_util.h"

namespace rais {

namespace fs = std::filesystem;

std::string SiblingBaseName(std::string_view package_name) {
  std::string base = ToLower(package_name);
  for (std::string_view suffix : {"_static", "_dynamic"}) {
    if (base.size() > suffix.size() && EndsWithIgnoreCase(base, suffix)) {
      base.resize(base.size() - suffix.size());
      break;
    }
  }
  return base;
}

namespace {

bool SamePath(const fs::path& a, const fs::path& b) {
  std::error_code ec;
  if (fs::equivalent(a, b, ec)) return true;
  return fs::weakly_canonical(a, ec) == fs::weakly_canonical(b, ec);
}

std::optional<StructureKind> KindOfFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  try {
    const ParsedUnit unit = ParseComponent(text.str(), path.string());
    return BuildModel(unit).structure_kind;
  } catch (const ParseError&) {
  } catch (const ModelError&) {
  }
  return std::nullopt;
}

}  // namespace

SiblingContext FindSiblings(const ParsedUnit& unit, const fs::path& directory,
                            const fs::path& self) {
  SiblingContext context;
  const std::string base = SiblingBaseName(unit.package_name);
  const std::string static_name = base + "_static.ads";
  const std::string dynamic_name = base + "_dynamic.ads";
  const std::string plain_name = base + ".ads";

  std::vector<fs::path> candidates;
  std::error_code ec;
  for (fs::directory_iterator it(directory, ec), end; !ec && it != end;
       it.increment(ec)) {
    if (!it->is_regular_file(ec)) continue;
    const std::string name = ToLower(it->path().filename().string());
    if (name != static_name && name != dynamic_name && name != plain_name) {
      continue;
    }
    if (!self.empty() && SamePath(it->path(), self)) continue;
    candidates.push_back(it->path());
  }
  std::sort(candidates.begin(), candidates.end());

  for (const fs::path& path : candidates) {
    const std::string name = ToLower(path.filename().string());
    std::optional<StructureKind> kind = KindOfFile(path);
    if (!kind || *kind == StructureKind::kUnknown) {
      if (name == static_name) kind = StructureKind::kStatic;
      if (name == dynamic_name) kind = StructureKind::kDynamic;
    }
    if (kind == StructureKind::kStatic) context.static_sibling_exists = true;
    if (kind == StructureKind::kDynamic) context.dynamic_sibling_exists = true;
    context.sibling_files.push_back(path.filename().string());
  }
  return context;
}

}  // namespace rais
