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

// Assessment reports as fixed-width text, markdown, or JSON (schema 1).

#ifndef RAIS_REPORT_H_
#define RAIS_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rais/assessor.h"
#include "rais/component_model.h"
#include "rais/improver.h"

namespace rais {

enum class ReportFormat { kText, kJson, kMarkdown };

// "text", "json", "md" or "markdown".
std::optional<ReportFormat> ParseReportFormat(std::string_view text);

enum class ReportDetail {
  kSummary,  // header and guideline table
  kFull,     // plus subprogram, private type and exception tables
};

struct ImprovementSummary {
  bool dry_run = false;
  std::vector<Transformation> planned;
  std::vector<Transformation> applied;
  std::vector<Transformation> skipped;
  std::vector<ManualRepair> manual;
  std::optional<Assessment> before;
  std::vector<std::string> written_files;
};

inline constexpr int kReportSchemaVersion = 1;

// JSON ignores `detail`: it always carries every table.
std::string Render(const Assessment& assessment, const ComponentModel& model,
                   const ImprovementSummary* improvement, ReportFormat format,
                   ReportDetail detail = ReportDetail::kFull);

nlohmann::ordered_json ReportJson(const Assessment& assessment,
                                  const ComponentModel& model,
                                  const ImprovementSummary* improvement);

std::string RenderCatalog(const AssessmentConfig& config, ReportFormat format);

struct CorpusEntry {
  std::string file;
  std::string component;
  std::optional<Assessment> assessment;
  std::string error;  // set when the file could not be assessed
};

std::string RenderCorpus(const std::vector<CorpusEntry>& entries,
                         ReportFormat format);

}  // namespace rais

#endif  // RAIS_REPORT_H_
