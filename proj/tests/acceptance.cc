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

// Acceptance suite: one PASS/FAIL line per acceptance criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fixtures.h"
#include "rais/assessor.h"
#include "rais/cli.h"
#include "rais/improver.h"
#include "rais/parser.h"
#include "rais/printer.h"
#include "repair_cases.h"

namespace rais {
namespace {

namespace fs = std::filesystem;

// Thrown by Expect; the message becomes the FAIL detail.
struct Failure {
  std::string message;
};

void Expect(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Cli(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<fs::path> CorpusFiles() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(testing::kCorpusDir)) {
    if (e.path().extension() == ".ads") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

int Ordinal(ReuseBand b) { return static_cast<int>(b); }

void BandThresholds() {
  // The paper's table read as a half-open partition of [0, 100].
  const std::vector<std::pair<double, ReuseBand>> table = {
      {0, ReuseBand::kWeakly},        {49.99, ReuseBand::kWeakly},
      {50, ReuseBand::kStrongly},     {69.99, ReuseBand::kStrongly},
      {70, ReuseBand::kLimitedly},    {89.99, ReuseBand::kLimitedly},
      {90, ReuseBand::kImmediately},  {100, ReuseBand::kImmediately}};
  for (const auto& [score, band] : table) {
    Expect(Band(score, false) == band,
           "band(" + std::to_string(score) + ") = " + std::string(ToString(Band(score, false))));
  }
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> dist(0.0, 100.0);
  std::vector<double> scores(10000);
  for (double& s : scores) s = dist(rng);
  std::sort(scores.begin(), scores.end());
  for (size_t i = 1; i < scores.size(); ++i) {
    Expect(Ordinal(Band(scores[i - 1], false)) <= Ordinal(Band(scores[i], false)),
           "band not monotone at " + std::to_string(scores[i]));
  }
}

void CriticalCap() {
  for (double eps : {1e-9, 1e-6, 0.01, 1.0}) {
    Expect(Band(100.0 - eps, true) == ReuseBand::kWeakly, "cap ignored near 100");
  }
  // A complete component lacking only its generic part.
  std::string text = testing::Replace(std::string(testing::kCompleteStatic),
                                      "generic\n   type Element is private;\n", "");
  text = testing::Replace(text, "Element", "Integer");
  ParsedUnit u = ParseComponent(text, "stack.ads");
  SiblingContext both;
  both.static_sibling_exists = both.dynamic_sibling_exists = true;
  Assessment a = Assess(BuildModel(u, {}, both));
  Expect(a.Find("G2")->outcome == Outcome::kViolated, "G2 not violated");
  Expect(a.score_percent > 80.0, "score unexpectedly low: " + a.FormattedScore());
  Expect(a.critical_violated && a.band == ReuseBand::kWeakly,
         "band " + std::string(ToString(a.band)));
}

void FixtureAScore() {
  // Hand-computed oracle. Applicable: G1.1-G1.6 at 1 each, G1.7 at 2, G2 at
  // 3, G3 at 1, G4 at 2, G5 at 1 = 15. Satisfied: G1.5 (1) + G4 (2) + G5 (1)
  // = 4. Score 4/15.
  const double oracle = 100.0 * 4.0 / 15.0;
  CliResult r = Cli({"assess", (fs::path(testing::kCorpusDir) / "int_stack.ads").string(),
                     "--format", "json"});
  Expect(r.code == kExitOk, "exit " + std::to_string(r.code) + ": " + r.err);
  nlohmann::json j = nlohmann::json::parse(r.out);
  const double score = j["score"].get<double>();
  Expect(std::abs(score - oracle) <= 0.01, "score " + std::to_string(score));
  Expect(j["band"] == "weakly", "band " + j["band"].dump());
}

void EndToEnd() {
  const fs::path dir = testing::ScratchDir("accept4");
  fs::copy_file(fs::path(testing::kCorpusDir) / "int_stack.ads", dir / "int_stack.ads");
  CliResult before = Cli({"assess", (dir / "int_stack.ads").string(), "--format", "json"});
  CliResult improve = Cli({"improve", (dir / "int_stack.ads").string(), "--yes", "-o",
                           (dir / "out.ads").string()});
  Expect(improve.code == kExitOk, "improve exit " + std::to_string(improve.code));
  CliResult after = Cli({"assess", (dir / "out.ads").string(), "--format", "json"});
  Expect(after.code == kExitOk, "assess exit " + std::to_string(after.code));
  nlohmann::json b = nlohmann::json::parse(before.out);
  nlohmann::json a = nlohmann::json::parse(after.out);
  fs::remove_all(dir);
  Expect(a["score"].get<double>() == 100.0, "score " + a["score"].dump());
  Expect(a["band"] == "immediately", "band " + a["band"].dump());
  const double delta = a["score"].get<double>() - b["score"].get<double>();
  Expect(delta >= 50.0, "improvement of " + std::to_string(delta) + " points");
}

void Idempotence() {
  ParsedUnit u = ParseComponent(testing::kFixtureA, "int_stack.ads");
  ComponentModel m = BuildModel(u);
  ImprovedArtifacts first = Improve(u, m, PlanImprovements(Assess(m), m), AcceptAll());
  // Round through text, as the CLI does.
  ParsedUnit written = ParseComponent(PrettyPrint(first.improved_spec), "out.ads");
  Expect(written == first.improved_spec, "improved spec does not re-parse identically");
  ComponentModel again = BuildModel(written, first.overrides, first.siblings);
  ImprovementPlan second = PlanImprovements(Assess(again), again);
  Expect(second.empty(), std::to_string(second.steps.size()) + " steps planned");
  ImprovedArtifacts out = Improve(written, again, second, AcceptAll());
  Expect(out.improved_spec == written, "second pass changed the tree");
  Expect(!out.sibling_spec, "second pass emitted a sibling");
}

void RoundTrip() {
  const std::vector<fs::path> files = CorpusFiles();
  Expect(files.size() >= 6, "corpus has " + std::to_string(files.size()) + " files");
  std::set<std::string> seen;
  for (const fs::path& f : files) {
    ParsedUnit u = ParseComponent(testing::ReadText(f), f.filename().string());
    ParsedUnit again = ParseComponent(PrettyPrint(u), f.filename().string());
    Expect(again == u, f.filename().string() + " does not round-trip");
    if (u.is_generic) seen.insert("generic");
    try {
      ComponentModel m = BuildModel(u);
      seen.insert(std::string(ToString(m.structure_kind)));
    } catch (const ModelError&) {
      seen.insert("degenerate");
    }
  }
  for (const char* kind : {"static", "dynamic", "generic", "degenerate"}) {
    Expect(seen.count(kind) == 1, std::string("corpus lacks a ") + kind + " component");
  }
}

void RepairSoundness() {
  std::set<TransformKind> covered;
  for (const testing::RepairCase& c : testing::RepairCases()) {
    const std::string name(ToString(c.kind));
    ParsedUnit u = ParseComponent(c.source, "case.ads");
    ComponentModel m = BuildModel(u, {}, c.siblings);
    Assessment a = Assess(m);
    int violated = 0;
    for (const GuidelineResult& r : a.results) {
      if (r.outcome == Outcome::kViolated) ++violated;
    }
    Expect(violated == 1 && a.Find(c.guideline)->outcome == Outcome::kViolated,
           name + ": fixture is not a single violation of " + c.guideline);
    ImprovementPlan plan = PlanImprovements(a, m);
    auto step = std::find_if(plan.steps.begin(), plan.steps.end(),
                             [&](const Transformation& t) { return t.kind == c.kind; });
    Expect(step != plan.steps.end(), name + ": not planned");
    TransformOutcome out = ApplyTransformation(u, *step, m);
    std::optional<SiblingContext> ctx = c.siblings;
    if (out.sibling) {
      const StructureKind k = BuildModel(*out.sibling).structure_kind;
      SiblingContext emitted = ctx.value_or(SiblingContext{});
      (k == StructureKind::kStatic ? emitted.static_sibling_exists
                                   : emitted.dynamic_sibling_exists) = true;
      ctx = emitted;
    }
    ParsedUnit reparsed = ParseComponent(PrettyPrint(out.unit), "case.ads");
    ComponentModel after = BuildModel(reparsed, {}, ctx);
    Expect(Evaluate(*FindGuideline(c.guideline), after).outcome == Outcome::kSatisfied,
           name + ": " + c.guideline + " still violated");
    covered.insert(c.kind);
  }
  for (TransformKind k : kAllTransformKinds) {
    Expect(covered.count(k) == 1, std::string(ToString(k)) + " has no fixture");
  }
}

void Determinism() {
  const fs::path dir = testing::ScratchDir("accept8");
  int count = 0;
  for (const fs::path& f : CorpusFiles()) {
    fs::copy_file(f, dir / f.filename());
    ++count;
    // Improved variant of every assessable corpus file.
    ParsedUnit u = ParseComponent(testing::ReadText(f), f.filename().string());
    try {
      ComponentModel m = BuildModel(u);
      ImprovedArtifacts out = Improve(u, m, PlanImprovements(Assess(m), m), AcceptAll());
      fs::create_directories(dir / "improved");
      testing::WriteText(dir / "improved" / f.filename(), PrettyPrint(out.improved_spec));
      ++count;
    } catch (const ModelError&) {
    }
  }
  int n = 0;
  for (const testing::RepairCase& c : testing::RepairCases()) {
    fs::create_directories(dir / "variants");
    testing::WriteText(dir / "variants" / ("case_" + std::to_string(++n) + ".ads"),
                       c.source);
    ++count;
  }
  Expect(count >= 20, "only " + std::to_string(count) + " files");
  CliResult first = Cli({"corpus", dir.string(), "--format", "json"});
  CliResult second = Cli({"corpus", dir.string(), "--format", "json"});
  fs::remove_all(dir);
  Expect(first.code == kExitOk && second.code == kExitOk, "corpus run failed");
  Expect(first.out == second.out, "corpus JSON differs between runs");
  nlohmann::json j = nlohmann::json::parse(first.out);
  Expect(static_cast<int>(j["files"].size()) == count, "file count mismatch");
}

void ExitCodesAndDryRun() {
  const fs::path dir = testing::ScratchDir("accept9");
  const std::string a = (dir / "int_stack.ads").string();
  testing::WriteText(a, testing::kFixtureA);
  testing::WriteText(dir / "bad.ads", "package P is task T; end P;");
  auto listing = [&] {
    std::set<std::string> names;
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
      names.insert(e.path().string());
    }
    return names;
  };
  const std::set<std::string> before = listing();
  const std::vector<std::pair<std::vector<std::string>, int>> cases = {
      {{"assess", a}, kExitOk},
      {{"assess", a, "--format", "xml"}, kExitUsage},
      {{"nonsense"}, kExitUsage},
      {{"assess", (dir / "bad.ads").string()}, kExitParse},
      {{"assess", a, "--fail-below", "strongly"}, kExitBelowThreshold},
      {{"assess", (dir / "absent.ads").string()}, kExitIo},
      {{"improve", a}, kExitOk},
      {{"improve", a, "--emit-body", "-o", (dir / "o.ads").string()}, kExitOk},
  };
  for (const auto& [args, expected] : cases) {
    CliResult r = Cli(args);
    std::string joined;
    for (const std::string& s : args) joined += " " + s;
    Expect(r.code == expected, "rais" + joined + " exited " + std::to_string(r.code) +
                                   ", expected " + std::to_string(expected));
  }
  const bool untouched = listing() == before;
  fs::remove_all(dir);
  Expect(untouched, "dry run wrote files");
}

struct Criterion {
  int number;
  const char* title;
  std::function<void()> check;
  double limit_seconds;
};

}  // namespace
}  // namespace rais

int main() {
  using rais::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "band thresholds and monotonicity", rais::BandThresholds, 1},
      {2, "critical violation caps the band", rais::CriticalCap, 1},
      {3, "fixture A scores 26.67% (4/15), weakly", rais::FixtureAScore, 1},
      {4, "improve --yes on fixture A reaches 100%, immediately", rais::EndToEnd, 2},
      {5, "second improvement pass is empty and identity", rais::Idempotence, 1},
      {6, "corpus parse/print/parse round-trip", rais::RoundTrip, 2},
      {7, "repair soundness for every transformation", rais::RepairSoundness, 2},
      {8, "corpus JSON is byte-identical across runs", rais::Determinism, 5},
      {9, "CLI exit codes and dry-run safety", rais::ExitCodesAndDryRun, 2},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.check();
    } catch (const rais::Failure& f) {
      ok = false;
      detail = f.message;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && seconds > c.limit_seconds) {
      ok = false;
      detail = "exceeded time limit";
    }
    std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL",
                c.number, c.title, seconds, c.limit_seconds, detail.empty() ? "" : ": ",
                detail.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
