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

// Weighted reusability score and reuse band.

#ifndef RAIS_ASSESSOR_H_
#define RAIS_ASSESSOR_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rais/component_model.h"
#include "rais/guidelines.h"

namespace rais {

// Ordered by threshold: Weakly < Strongly < Limitedly < Immediately.
enum class ReuseBand { kWeakly, kStrongly, kLimitedly, kImmediately };

// "weakly", "strongly", "limitedly", "immediately"
std::string_view ToString(ReuseBand band);
// "weakly reusable", ...
std::string Label(ReuseBand band);
std::optional<ReuseBand> ParseBand(std::string_view text);

// Half-open partition: [0,50) weakly, [50,70) strongly, [70,90) limitedly,
// [90,100] immediately. A critical violation forces weakly.
ReuseBand Band(double score_percent, bool critical_violated);

struct AssessmentConfig {
  // Guideline code -> enabled. Missing entries are enabled.
  std::map<std::string, bool> enabled;
  // Guideline code -> weight (>= 1). Missing entries use the significance.
  std::map<std::string, int> weights;

  bool IsEnabled(const Guideline& g) const;
  int WeightFor(const Guideline& g) const;
};

struct Assessment {
  std::vector<GuidelineResult> results;
  int applicable_weight_total = 0;
  int satisfied_weight_total = 0;
  double score_percent = 0.0;
  bool critical_violated = false;
  ReuseBand band = ReuseBand::kWeakly;

  // Score rounded half-up to hundredths of a percent, computed exactly from
  // the integer weight totals.
  long ScoreHundredths() const;
  // "26.67"
  std::string FormattedScore() const;
  const GuidelineResult* Find(std::string_view code) const;
};

Assessment Assess(const ComponentModel& model,
                  const AssessmentConfig& config = {});

}  // namespace rais

#endif  // RAIS_ASSESSOR_H_
