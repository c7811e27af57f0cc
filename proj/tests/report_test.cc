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

#include <doctest.h>

#include <json.hpp>

#include "fixtures.h"
#include "rais/parser.h"
#include "rais/report.h"

namespace rais {
namespace {

struct Fixture {
  ParsedUnit unit;
  ComponentModel model;
  Assessment assessment;

  explicit Fixture(std::string_view text)
      : unit(ParseComponent(text, "int_stack.ads")) {
    model = BuildModel(unit);
    assessment = Assess(model);
  }
};

TEST_CASE("fixture A JSON report") {
  Fixture f(testing::kFixtureA);
  const std::string text = Render(f.assessment, f.model, nullptr, ReportFormat::kJson);
  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["schema"] == 1);
  CHECK(j["component"] == "Int_Stack");
  CHECK(j["kind"] == "static");
  CHECK(j["complex"] == true);
  CHECK(j["generic"] == false);
  CHECK(j["score"].get<double>() == 26.67);
  CHECK(j["band"] == "weakly");
  CHECK(j["critical_violated"] == true);
  REQUIRE(j["subprograms"].size() == 2);
  CHECK(j["subprograms"][0]["name"] == "Push");
  CHECK(j["subprograms"][0]["class"] == "StateChange");
  CHECK(j["subprograms"][0]["parameters"][1]["mode"] == "in");
  CHECK(j["subprograms"][1]["parameters"][1]["mode"] == "out");
  CHECK(j["private_types"][0]["name"] == "Stack");
  CHECK(j["private_types"][0]["kind"] == "private");
  CHECK(j["exceptions"].empty());
  REQUIRE(j["guidelines"].size() == 14);
  CHECK(j["guidelines"][7]["id"] == "G2");
  CHECK(j["guidelines"][7]["outcome"] == "violated");
  CHECK_FALSE(j.contains("improvement"));
}

TEST_CASE("JSON round-trips every value") {
  Fixture f(testing::kFixtureB);
  nlohmann::json j = ReportJson(f.assessment, f.model, nullptr);
  nlohmann::json back = nlohmann::json::parse(j.dump());
  CHECK(back == j);
  CHECK(back["score"].get<double>() ==
        static_cast<double>(f.assessment.ScoreHundredths()) / 100.0);
  CHECK(back["band"] == std::string(ToString(f.assessment.band)));
  REQUIRE(back["guidelines"].size() == f.assessment.results.size());
  for (size_t i = 0; i < f.assessment.results.size(); ++i) {
    CHECK(back["guidelines"][i]["outcome"] ==
          std::string(ToString(f.assessment.results[i].outcome)));
    CHECK(back["guidelines"][i]["weight"] == f.assessment.results[i].weight_used);
  }
  CHECK(back["subprograms"].size() == Subprograms(f.unit).size());
}

TEST_CASE("text and markdown agree with JSON") {
  Fixture f(testing::kFixtureA);
  const std::string text = Render(f.assessment, f.model, nullptr, ReportFormat::kText);
  const std::string md = Render(f.assessment, f.model, nullptr, ReportFormat::kMarkdown);
  for (const std::string& out : {text, md}) {
    CHECK(out.find("26.67%") != std::string::npos);
    CHECK(out.find("weakly reusable") != std::string::npos);
    CHECK(out.find("complex structure 'Stack' is not a generic") != std::string::npos);
    for (const GuidelineResult& r : f.assessment.results) {
      CHECK(out.find(r.guideline_id) != std::string::npos);
    }
    CHECK(out.find("Push") != std::string::npos);
  }
  CHECK(md.rfind("# Reuse assessment: Int_Stack", 0) == 0);
  CHECK(md.find("| G2 | Generic element parameter | critical | 3 | violated |") !=
        std::string::npos);
}

TEST_CASE("summary detail omits the subprogram table") {
  Fixture f(testing::kFixtureA);
  const std::string summary =
      Render(f.assessment, f.model, nullptr, ReportFormat::kText, ReportDetail::kSummary);
  CHECK(summary.find("Subprograms") == std::string::npos);
  CHECK(summary.find("Guidelines") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  Fixture a(testing::kFixtureA);
  Fixture b(testing::kFixtureA);
  for (ReportFormat fmt : {ReportFormat::kText, ReportFormat::kJson, ReportFormat::kMarkdown}) {
    CHECK(Render(a.assessment, a.model, nullptr, fmt) ==
          Render(b.assessment, b.model, nullptr, fmt));
  }
}

TEST_CASE("improvement section") {
  Fixture f(testing::kFixtureA);
  ImprovementSummary s;
  s.before = f.assessment;
  s.applied.push_back({TransformKind::kGenericize, "G2", std::nullopt, "make generic", {}});
  s.skipped.push_back(
      {TransformKind::kGenerateDualSibling, "G3", std::nullopt, "add sibling", {}});
  nlohmann::json j = ReportJson(f.assessment, f.model, &s);
  REQUIRE(j.contains("improvement"));
  CHECK(j["improvement"]["applied"][0]["id"] == "genericize");
  CHECK(j["improvement"]["skipped"][0]["id"] == "generate-dual-sibling");
  CHECK(j["improvement"]["score_before"].get<double>() == 26.67);
}

TEST_CASE("catalog rendering") {
  AssessmentConfig c;
  c.weights["G2"] = 7;
  nlohmann::json j = nlohmann::json::parse(RenderCatalog(c, ReportFormat::kJson));
  REQUIRE(j["guidelines"].size() == 14);
  CHECK(j["guidelines"][7]["weight"] == 7);
  CHECK(j["guidelines"][0]["applicability"] == "always");
  const std::string text = RenderCatalog(c, ReportFormat::kText);
  CHECK(text.find("G1.7") != std::string::npos);
  CHECK(text.find("add-freelist-ops") != std::string::npos);
}

TEST_CASE("format names") {
  CHECK(ParseReportFormat("md") == ReportFormat::kMarkdown);
  CHECK(ParseReportFormat("JSON") == ReportFormat::kJson);
  CHECK_FALSE(ParseReportFormat("html"));
}

}  // namespace
}  // namespace rais
