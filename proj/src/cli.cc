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

#include "rais/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "rais/assessor.h"
#include "rais/component_model.h"
#include "rais/config.h"
#include "rais/improver.h"
#include "rais/parser.h"
#include "rais/printer.h"
#include "rais/report.h"
#include "text_util.h"

namespace rais {
namespace {

namespace fs = std::filesystem;

// Carries an exit code out of nested helpers; the message goes to `err`.
struct ExitError {
  int code;
  std::string message;
};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in || fs::is_directory(path)) {
    throw ExitError{kExitIo, "cannot read " + path.string()};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw ExitError{kExitIo, "cannot read " + path.string()};
  return ss.str();
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (out) out << text;
  if (!out) throw ExitError{kExitIo, "cannot write " + path.string()};
}

struct Options {
  std::string file;
  std::string config_path;
  std::string format = "text";
  std::string fail_below;
  std::string output;
  bool yes = false;
  bool interactive = false;
  bool emit_body = false;
  std::string record_path;
  std::string replay_path;
};

Config LoadConfig(const std::string& path) {
  if (path.empty()) return Config{};
  const std::string text = ReadFile(path);
  try {
    return ParseConfig(text);
  } catch (const ConfigError& e) {
    throw ExitError{kExitUsage, path + ": " + e.what()};
  }
}

ReportFormat FormatOption(const std::string& text) {
  std::optional<ReportFormat> f = ParseReportFormat(text);
  if (!f) throw ExitError{kExitUsage, "unknown format '" + text + "'"};
  return *f;
}

// A parsed unit together with the model built over it; the model points
// into the unit, so both live on the heap together.
struct Component {
  std::unique_ptr<ParsedUnit> unit;
  ComponentModel model;
};

Component Load(const fs::path& path, const std::string& display_name,
               const OverrideSet& overrides) {
  Component c;
  const std::string text = ReadFile(path);
  try {
    c.unit = std::make_unique<ParsedUnit>(ParseComponent(text, display_name));
    SiblingContext siblings =
        FindSiblings(*c.unit, path.parent_path().empty() ? "." : path.parent_path(),
                     path);
    c.model = BuildModel(*c.unit, overrides, siblings);
  } catch (const ParseError& e) {
    throw ExitError{kExitParse, e.what()};
  } catch (const ModelError& e) {
    throw ExitError{kExitParse, display_name + ": " + e.what()};
  }
  return c;
}

// Answers for the interactive dialogue: from the replay file when given,
// otherwise from the input stream; optionally recorded.
class AnswerSource {
 public:
  AnswerSource(std::istream& in, std::ostream& out,
               const std::string& replay_path, const std::string& record_path)
      : in_(&in), out_(out) {
    if (!replay_path.empty()) {
      replay_ = std::make_unique<std::ifstream>(replay_path);
      if (!*replay_) throw ExitError{kExitIo, "cannot read " + replay_path};
      in_ = replay_.get();
      echo_ = true;
    }
    if (!record_path.empty()) {
      record_ = std::make_unique<std::ofstream>(record_path, std::ios::trunc);
      if (!*record_) throw ExitError{kExitIo, "cannot write " + record_path};
    }
  }

  // Prints the prompt and reads one line; nullopt at end of input.
  std::optional<std::string> Ask(const std::string& prompt) {
    out_ << prompt << " " << std::flush;
    std::string line;
    if (!std::getline(*in_, line)) {
      out_ << "\n";
      return std::nullopt;
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (echo_) out_ << line;
    // A terminal echoes the newline itself.
    if (echo_ || in_ != &std::cin || !isatty(STDIN_FILENO)) out_ << "\n";
    if (record_) {
      *record_ << line << "\n";
      if (!*record_) throw ExitError{kExitIo, "cannot write answer record"};
    }
    return line;
  }

 private:
  std::istream* in_;
  std::ostream& out_;
  std::unique_ptr<std::ifstream> replay_;
  std::unique_ptr<std::ofstream> record_;
  bool echo_ = false;
};

std::string Trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

// CLASSIFY prompts for unclassified and low-confidence operations. Returns
// the overrides extended with the engineer's answers.
OverrideSet ClassifyInteractively(const ComponentModel& model,
                                  OverrideSet overrides, AnswerSource& answers,
                                  std::ostream& err) {
  for (const ClassifiedOperation& op : model.classified_ops) {
    if (op.op_class != OperationClass::kUnclassified && !op.low_confidence) {
      continue;
    }
    const std::string& name = op.subprogram->name;
    if (overrides.op_class_overrides.count(name) != 0) continue;
    const std::string prompt = "CLASSIFY " + name + " [suggested: " +
                               std::string(ToString(op.op_class)) + "] >";
    while (true) {
      std::optional<std::string> answer = answers.Ask(prompt);
      if (!answer) return overrides;
      const std::string text = Trim(*answer);
      if (text.empty()) {
        if (op.op_class != OperationClass::kUnclassified) {
          overrides.op_class_overrides[name] = op.op_class;
        }
        break;
      }
      if (std::optional<OperationClass> c = ParseOperationClass(text)) {
        overrides.op_class_overrides[name] = *c;
        break;
      }
      err << "unknown operation class '" << text << "'\n";
    }
  }
  return overrides;
}

DecisionSource ProposalDialogue(AnswerSource& answers, std::ostream& err) {
  return [&answers, &err](const Transformation& t, size_t index,
                          size_t total) -> Decision {
    const std::string prompt = "PROPOSAL " + std::to_string(index + 1) + "/" +
                               std::to_string(total) + ": " + t.description +
                               " [y/n/q] >";
    while (true) {
      std::optional<std::string> answer = answers.Ask(prompt);
      if (!answer) return Decision::kSkipRemaining;
      const std::string text = ToLower(Trim(*answer));
      if (text == "y" || text == "yes") return Decision::kAccept;
      if (text == "n" || text == "no") return Decision::kSkip;
      if (text == "q" || text == "quit") return Decision::kSkipRemaining;
      err << "answer y, n or q\n";
    }
  };
}

int Assess(const Options& o, ReportDetail detail, std::ostream& out) {
  const ReportFormat format = FormatOption(o.format);
  std::optional<ReuseBand> threshold;
  if (!o.fail_below.empty()) {
    threshold = ParseBand(o.fail_below);
    if (!threshold) throw ExitError{kExitUsage, "unknown band '" + o.fail_below + "'"};
  }
  const Config config = LoadConfig(o.config_path);
  Component c = Load(o.file, o.file, config.overrides);
  const Assessment a = rais::Assess(c.model, config.assessment);
  out << Render(a, c.model, nullptr, format, detail);
  if (threshold && a.band < *threshold) return kExitBelowThreshold;
  return kExitOk;
}

fs::path DefaultOutput(const fs::path& input) {
  fs::path out = input;
  out.replace_extension();
  out += ".improved.ads";
  return out;
}

int Improve(const Options& o, std::istream& in, std::ostream& out,
            std::ostream& err) {
  const ReportFormat format = FormatOption(o.format);
  const Config config = LoadConfig(o.config_path);
  const bool interactive = o.interactive || (config.interactive && !o.yes);
  const bool apply = o.yes || interactive;
  const bool emit_body = o.emit_body || config.emit_body;
  if (!interactive && (!o.record_path.empty() || !o.replay_path.empty())) {
    throw ExitError{kExitUsage, "--record and --replay require --interactive"};
  }

  Component c = Load(o.file, o.file, config.overrides);
  std::unique_ptr<AnswerSource> answers;
  if (interactive) {
    answers = std::make_unique<AnswerSource>(in, out, o.replay_path, o.record_path);
    OverrideSet overrides =
        ClassifyInteractively(c.model, config.overrides, *answers, err);
    try {
      c.model = BuildModel(*c.unit, overrides, c.model.siblings);
    } catch (const ModelError& e) {
      throw ExitError{kExitParse, o.file + ": " + e.what()};
    }
  }

  ImprovementSummary summary;
  summary.before = rais::Assess(c.model, config.assessment);
  const ImprovementPlan plan = PlanImprovements(*summary.before, c.model);
  summary.planned = plan.steps;
  summary.manual = plan.manual;

  if (!apply) {
    summary.dry_run = true;
    out << Render(*summary.before, c.model, &summary, format);
    return kExitOk;
  }

  const DecisionSource decide =
      interactive ? ProposalDialogue(*answers, err) : AcceptAll();
  ImprovedArtifacts artifacts = rais::Improve(*c.unit, c.model, plan, decide, emit_body);
  summary.applied = artifacts.applied;
  summary.skipped = artifacts.skipped;

  const fs::path spec_path =
      o.output.empty() ? DefaultOutput(o.file) : fs::path(o.output);
  WriteFile(spec_path, PrettyPrint(artifacts.improved_spec));
  summary.written_files.push_back(spec_path.string());
  if (artifacts.body_skeleton) {
    fs::path body_path = spec_path;
    body_path.replace_extension(".adb");
    WriteFile(body_path, *artifacts.body_skeleton);
    summary.written_files.push_back(body_path.string());
  }
  if (artifacts.sibling_spec) {
    const fs::path sibling_path =
        spec_path.parent_path() /
        (ToLower(artifacts.sibling_spec->package_name) + ".ads");
    if (fs::exists(sibling_path)) {
      err << "not overwriting existing " << sibling_path.string() << "\n";
    } else {
      WriteFile(sibling_path, PrettyPrint(*artifacts.sibling_spec));
      summary.written_files.push_back(sibling_path.string());
    }
  }

  ComponentModel after;
  try {
    after = BuildModel(artifacts.improved_spec, artifacts.overrides,
                       artifacts.siblings);
  } catch (const ModelError& e) {
    throw ExitError{kExitParse, o.file + ": " + e.what()};
  }
  const Assessment a = rais::Assess(after, config.assessment);
  out << Render(a, after, &summary, format);
  return kExitOk;
}

int Guidelines(const Options& o, std::ostream& out) {
  const ReportFormat format = FormatOption(o.format);
  const Config config = LoadConfig(o.config_path);
  out << RenderCatalog(config.assessment, format);
  return kExitOk;
}

int Corpus(const Options& o, std::ostream& out) {
  const ReportFormat format = FormatOption(o.format);
  const Config config = LoadConfig(o.config_path);
  const fs::path root(o.file);
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw ExitError{kExitIo, "not a directory: " + o.file};
  }
  std::vector<fs::path> files;
  for (fs::recursive_directory_iterator it(root, ec), end; !ec && it != end;
       it.increment(ec)) {
    if (it->is_regular_file() && EqualsIgnoreCase(it->path().extension().string(), ".ads")) {
      files.push_back(it->path());
    }
  }
  if (ec) throw ExitError{kExitIo, "cannot list " + o.file + ": " + ec.message()};
  std::sort(files.begin(), files.end(), [&](const fs::path& a, const fs::path& b) {
    return a.lexically_relative(root).generic_string() <
           b.lexically_relative(root).generic_string();
  });

  std::vector<std::future<CorpusEntry>> pending;
  pending.reserve(files.size());
  for (const fs::path& file : files) {
    pending.push_back(std::async(std::launch::async, [&config, &root, file] {
      CorpusEntry entry;
      entry.file = file.lexically_relative(root).generic_string();
      try {
        Component c = Load(file, entry.file, config.overrides);
        entry.component = c.unit->package_name;
        entry.assessment = rais::Assess(c.model, config.assessment);
      } catch (const ExitError& e) {
        entry.error = e.message;
      }
      return entry;
    }));
  }
  std::vector<CorpusEntry> entries;
  for (auto& f : pending) entries.push_back(f.get());
  out << RenderCorpus(entries, format);
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Reuse assessment and improvement of component specifications",
               "rais"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "text, json or md");
  };
  auto add_config = [&o](CLI::App* cmd) {
    cmd->add_option("--config", o.config_path, "JSON configuration file");
  };

  CLI::App* assess = app.add_subcommand("assess", "Assess a component specification");
  assess->add_option("FILE", o.file)->required();
  add_config(assess);
  add_format(assess);
  assess->add_option("--fail-below", o.fail_below,
                     "Exit 3 when the band is below weakly|strongly|limitedly|immediately");

  CLI::App* improve = app.add_subcommand("improve", "Plan and apply improvements");
  improve->add_option("FILE", o.file)->required();
  improve->add_option("-o,--output", o.output, "Improved specification path");
  CLI::Option* yes = improve->add_flag("--yes,-y", o.yes, "Apply every planned transformation");
  CLI::Option* inter =
      improve->add_flag("--interactive,-i", o.interactive, "Confirm each transformation");
  yes->excludes(inter);
  improve->add_flag("--emit-body", o.emit_body, "Also write a body skeleton");
  improve->add_option("--record", o.record_path, "Record interactive answers");
  improve->add_option("--replay", o.replay_path, "Replay recorded answers");
  add_config(improve);
  add_format(improve);

  CLI::App* report = app.add_subcommand("report", "Assess and print full tables");
  report->add_option("FILE", o.file)->required();
  add_config(report);
  add_format(report);

  CLI::App* guidelines = app.add_subcommand("guidelines", "List the guideline catalog");
  add_config(guidelines);
  add_format(guidelines);

  CLI::App* corpus = app.add_subcommand("corpus", "Assess every .ads file under DIR");
  corpus->add_option("DIR", o.file)->required();
  add_config(corpus);
  add_format(corpus);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rais: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (assess->parsed()) return Assess(o, ReportDetail::kSummary, out);
    if (report->parsed()) return Assess(o, ReportDetail::kFull, out);
    if (improve->parsed()) return Improve(o, in, out, err);
    if (guidelines->parsed()) return Guidelines(o, out);
    if (corpus->parsed()) return Corpus(o, out);
  } catch (const ExitError& e) {
    err << "rais: " << e.message << "\n";
    return e.code;
  } catch (const TransformError& e) {
    err << "rais: internal error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}

}  // namespace rais
