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

#include "rais/assessor.h"

#include <cstdio>

#include "text_util.h"

namespace rais {

std::string_view ToString(ReuseBand band) {
  switch (band) {
    case ReuseBand::kWeakly:
      return "weakly";
    case ReuseBand::kStrongly:
      return "strongly";
    case ReuseBand::kLimitedly:
      return "limitedly";
    case ReuseBand::kImmediately:
      return "immediately";
  }
  return "weakly";
}

std::string Label(ReuseBand band) {
  return std::string(ToString(band)) + " reusable";
}

std::optional<ReuseBand> ParseBand(std::string_view text) {
  for (ReuseBand b : {ReuseBand::kWeakly, ReuseBand::kStrongly,
                      ReuseBand::kLimitedly, ReuseBand::kImmediately}) {
    if (EqualsIgnoreCase(ToString(b), text)) return b;
  }
  return std::nullopt;
}

ReuseBand Band(double score_percent, bool critical_violated) {
  if (critical_violated) return ReuseBand::kWeakly;
  if (score_percent >= 90.0) return ReuseBand::kImmediately;
  if (score_percent >= 70.0) return ReuseBand::kLimitedly;
  if (score_percent >= 50.0) return ReuseBand::kStrongly;
  return ReuseBand::kWeakly;
}

bool AssessmentConfig::IsEnabled(const Guideline& g) const {
  auto it = enabled.find(std::string(g.code));
  return it == enabled.end() || it->second;
}

int AssessmentConfig::WeightFor(const Guideline& g) const {
  auto it = weights.find(std::string(g.code));
  return it == weights.end() ? DefaultWeight(g.significance) : it->second;
}

long Assessment::ScoreHundredths() const {
  if (applicable_weight_total <= 0) return 0;
  const long num = 10000L * satisfied_weight_total;
  const long den = applicable_weight_total;
  return (2 * num + den) / (2 * den);
}

std::string Assessment::FormattedScore() const {
  const long h = ScoreHundredths();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%ld.%02ld", h / 100, h % 100);
  return buf;
}

const GuidelineResult* Assessment::Find(std::string_view code) const {
  for (const GuidelineResult& r : results) {
    if (r.guideline_id == code) return &r;
  }
  return nullptr;
}

Assessment Assess(const ComponentModel& model, const AssessmentConfig& config) {
  Assessment a;
  for (const Guideline& g : Catalog()) {
    if (!config.IsEnabled(g)) continue;
    GuidelineResult r = Evaluate(g, model, config.WeightFor(g));
    if (r.outcome != Outcome::kNotApplicable) {
      a.applicable_weight_total += r.weight_used;
    }
    if (r.outcome == Outcome::kSatisfied) {
      a.satisfied_weight_total += r.weight_used;
    }
    if (r.outcome == Outcome::kViolated &&
        g.significance == Significance::kCritical) {
      a.critical_violated = true;
    }
    a.results.push_back(std::move(r));
  }
  a.score_percent =
      a.applicable_weight_total > 0
          ? 100.0 * a.satisfied_weight_total / a.applicable_weight_total
          : 0.0;
  a.band = Band(a.score_percent, a.critical_violated);
  return a;
}

}  // namespace rais
