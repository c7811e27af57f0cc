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

#include <set>
#include <sstream>

#include <json.hpp>

#include "fixtures.h"
#include "rais/cli.h"

namespace rais {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::set<std::string> Listing(const fs::path& dir) {
  std::set<std::string> names;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    names.insert(e.path().lexically_relative(dir).generic_string());
  }
  return names;
}

struct Scratch {
  fs::path dir = testing::ScratchDir("cli");
  fs::path fixture_a = dir / "int_stack.ads";
  Scratch() { testing::WriteText(fixture_a, testing::kFixtureA); }
  ~Scratch() { fs::remove_all(dir); }
  std::string Path(std::string_view name) const { return (dir / name).string(); }
};

TEST_CASE("assess fixture A") {
  Scratch s;
  Result r = Cli({"assess", s.fixture_a.string(), "--format", "json"});
  CHECK(r.code == kExitOk);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["band"] == "weakly");
  CHECK(Cli({"assess", s.fixture_a.string()}).out.find("weakly reusable") !=
        std::string::npos);
}

TEST_CASE("fail-below gate") {
  Scratch s;
  CHECK(Cli({"assess", s.fixture_a.string(), "--fail-below", "strongly"}).code ==
        kExitBelowThreshold);
  CHECK(Cli({"assess", s.fixture_a.string(), "--fail-below", "weakly"}).code == kExitOk);
}

TEST_CASE("usage errors exit 1") {
  Scratch s;
  CHECK(Cli({}).code == kExitUsage);
  CHECK(Cli({"frobnicate"}).code == kExitUsage);
  CHECK(Cli({"assess"}).code == kExitUsage);
  CHECK(Cli({"assess", s.fixture_a.string(), "--format", "html"}).code == kExitUsage);
  CHECK(Cli({"assess", s.fixture_a.string(), "--fail-below", "mostly"}).code ==
        kExitUsage);
  CHECK(Cli({"improve", s.fixture_a.string(), "--yes", "--interactive"}).code ==
        kExitUsage);
  CHECK(Cli({"improve", s.fixture_a.string(), "--record", s.Path("r.txt")}).code ==
        kExitUsage);
  testing::WriteText(s.dir / "bad.json", R"({"weights": {"G2": 0}})");
  CHECK(Cli({"assess", s.fixture_a.string(), "--config", s.Path("bad.json")}).code ==
        kExitUsage);
  CHECK(Cli({"--help"}).code == kExitOk);
}

TEST_CASE("parse and model errors exit 2") {
  Scratch s;
  testing::WriteText(s.dir / "task.ads", "package P is task T; end P;");
  Result r = Cli({"assess", s.Path("task.ads")});
  CHECK(r.code == kExitParse);
  CHECK(r.err.find("task.ads:1:14: expected declaration") != std::string::npos);
  testing::WriteText(s.dir / "empty.ads", "package P is end P;");
  Result m = Cli({"report", s.Path("empty.ads")});
  CHECK(m.code == kExitParse);
  CHECK(m.err.find("no abstraction") != std::string::npos);
}

TEST_CASE("I/O errors exit 4") {
  Scratch s;
  CHECK(Cli({"assess", s.Path("missing.ads")}).code == kExitIo);
  CHECK(Cli({"corpus", s.Path("nowhere")}).code == kExitIo);
  CHECK(Cli({"assess", s.fixture_a.string(), "--config", s.Path("none.json")}).code ==
        kExitIo);
  CHECK(Cli({"improve", s.fixture_a.string(), "--yes", "-o",
             s.Path("no/such/dir/out.ads")})
            .code == kExitIo);
}

TEST_CASE("dry run writes nothing") {
  Scratch s;
  const std::set<std::string> before = Listing(s.dir);
  Result r = Cli({"improve", s.fixture_a.string(), "--emit-body"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("dry run") != std::string::npos);
  CHECK(r.out.find("genericize") != std::string::npos);
  CHECK(Listing(s.dir) == before);
  Result j = Cli({"improve", s.fixture_a.string(), "--format", "json", "-o",
                  s.Path("x.ads")});
  CHECK(j.code == kExitOk);
  CHECK(nlohmann::json::parse(j.out)["improvement"]["planned"].size() == 9);
  CHECK(Listing(s.dir) == before);
}

TEST_CASE("improve then assess") {
  Scratch s;
  Result r = Cli({"improve", s.fixture_a.string(), "--yes", "--emit-body", "-o",
                  s.Path("out.ads")});
  REQUIRE(r.code == kExitOk);
  CHECK(fs::exists(s.dir / "out.ads"));
  CHECK(fs::exists(s.dir / "out.adb"));
  CHECK(fs::exists(s.dir / "int_stack_dynamic.ads"));
  Result a = Cli({"assess", s.Path("out.ads"), "--format", "json"});
  CHECK(a.code == kExitOk);
  nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(j["band"] == "immediately");
  CHECK(j["score"].get<double>() == 100.0);
  CHECK(Cli({"assess", s.Path("out.ads"), "--fail-below", "immediately"}).code ==
        kExitOk);
}

TEST_CASE("default output name") {
  Scratch s;
  REQUIRE(Cli({"improve", s.fixture_a.string(), "--yes", "--emit-body"}).code == kExitOk);
  CHECK(fs::exists(s.dir / "int_stack.improved.ads"));
  CHECK(fs::exists(s.dir / "int_stack.improved.adb"));
}

TEST_CASE("interactive session records and replays") {
  Scratch s;
  const std::string answers = "y\nn\ny\nq\n";
  Result live = Cli({"improve", s.fixture_a.string(), "--interactive", "-o",
                     s.Path("live.ads"), "--record", s.Path("answers.txt")},
                    answers);
  REQUIRE(live.code == kExitOk);
  CHECK(live.out.find("PROPOSAL 1/9: ") != std::string::npos);
  CHECK(live.out.find("PROPOSAL 4/9: ") != std::string::npos);
  CHECK(live.out.find("PROPOSAL 5/9: ") == std::string::npos);
  CHECK(testing::ReadText(s.dir / "answers.txt") == answers);

  Result replay = Cli({"improve", s.fixture_a.string(), "--interactive", "-o",
                       s.Path("replayed.ads"), "--replay", s.Path("answers.txt")});
  REQUIRE(replay.code == kExitOk);
  CHECK(testing::ReadText(s.dir / "replayed.ads") ==
        testing::ReadText(s.dir / "live.ads"));
  const std::string spec = testing::ReadText(s.dir / "live.ads");
  CHECK(spec.find("generic") == 0);
  CHECK(spec.find("function Create") != std::string::npos);
  CHECK(spec.find("exception") == std::string::npos);
}

TEST_CASE("interactive classification") {
  Scratch s;
  testing::WriteText(s.dir / "pool.ads", R"(package Pool is
   type Pool is limited private;
   function Acquire (P : in out Pool) return Natural;
end Pool;
)");
  // Classify Acquire as Creation, then decline every proposal.
  Result r = Cli({"improve", s.Path("pool.ads"), "--interactive", "--format", "json",
                  "-o", s.Path("out.ads")},
                 "creation\nq\n");
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("CLASSIFY Acquire [suggested: Unclassified] >") != std::string::npos);
  const std::string report = r.out.substr(r.out.find('{'));
  nlohmann::json j = nlohmann::json::parse(report);
  CHECK(j["subprograms"][0]["class"] == "Creation");
  CHECK(j["improvement"]["applied"].empty());
}

TEST_CASE("corpus mode") {
  Scratch s;
  testing::WriteText(s.dir / "empty.ads", "package Empty is end Empty;");
  testing::WriteText(s.dir / "broken.ads", "package");
  Result r = Cli({"corpus", s.dir.string(), "--format", "json"});
  CHECK(r.code == kExitOk);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j["files"].size() == 3);
  CHECK(j["files"][0]["file"] == "broken.ads");
  CHECK(j["files"][0].contains("error"));
  CHECK(j["files"][2]["band"] == "weakly");
  CHECK(j["bands"]["weakly"] == 1);
  CHECK(j["errors"] == 2);
}

TEST_CASE("guidelines listing") {
  Result r = Cli({"guidelines", "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["guidelines"].size() == 14);
}

}  // namespace
}  // namespace rais
