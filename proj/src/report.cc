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

#include "rais/report.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "rais/printer.h"
#include "text_util.h"

namespace rais {
namespace {

using ojson = nlohmann::ordered_json;

double RoundedScore(const Assessment& a) {
  return static_cast<double>(a.ScoreHundredths()) / 100.0;
}

std::string FullViewKind(const TypeDecl* t) {
  if (t == nullptr) return "";
  struct V {
    std::string operator()(const PrivateDef&) const { return ""; }
    std::string operator()(const ArrayDef& a) const {
      return a.is_constrained() ? "constrained array" : "unconstrained array";
    }
    std::string operator()(const RecordDef&) const { return "record"; }
    std::string operator()(const AccessDef&) const { return "access"; }
    std::string operator()(const EnumerationDef&) const { return "enumeration"; }
    std::string operator()(const IntegerRangeDef&) const { return "range"; }
  };
  return std::visit(V{}, t->definition);
}

struct PrivateTypeRow {
  std::string name;
  std::string kind;
  std::string full_view;
};

std::vector<PrivateTypeRow> PrivateTypes(const ComponentModel& model) {
  std::vector<PrivateTypeRow> rows;
  for (const Declaration& d : model.unit->visible_declarations) {
    const TypeDecl* t = d.AsType();
    if (t == nullptr) continue;
    const auto* p = std::get_if<PrivateDef>(&t->definition);
    if (p == nullptr) continue;
    const TypeDecl* full = nullptr;
    for (const Declaration& pd : model.unit->private_declarations) {
      const TypeDecl* ft = pd.AsType();
      if (ft != nullptr && EqualsIgnoreCase(ft->name, t->name) &&
          !std::holds_alternative<PrivateDef>(ft->definition)) {
        full = ft;
        break;
      }
    }
    rows.push_back({t->name, p->is_limited ? "limited private" : "private",
                    FullViewKind(full)});
  }
  return rows;
}

std::vector<std::string> Notes(const ComponentModel& model) {
  std::vector<std::string> notes;
  if (!model.overrides.complex) {
    notes.push_back(
        "'complex' means: full view is an array, record or access type, or the "
        "type is limited private");
  }
  if (model.element_type && model.independence_assumed) {
    notes.push_back("element independence of operations assumed at "
                    "specification level; confirm interactively");
  }
  if (!model.unanalyzed_types.empty()) {
    notes.push_back("only the primary abstraction is assessed; not analyzed: " +
                    Join(model.unanalyzed_types, ", "));
  }
  return notes;
}

std::string ComponentClass(const ComponentModel& model) {
  std::string out(ToString(model.structure_kind));
  out += model.is_complex ? ", complex" : ", simple";
  out += model.is_generic ? ", generic" : ", not generic";
  if (model.element_type) {
    out += ", element " + *model.element_type;
    if (model.element_is_generic_formal) out += " (formal)";
  }
  return out;
}

ojson TransformationJson(const Transformation& t) {
  ojson j;
  j["id"] = t.Id();
  j["guideline"] = t.target_guideline;
  j["description"] = t.description;
  return j;
}

ojson TransformationList(const std::vector<Transformation>& ts) {
  ojson arr = ojson::array();
  for (const Transformation& t : ts) arr.push_back(TransformationJson(t));
  return arr;
}

// Fixed-width table; the last column is never padded.
class Table {
 public:
  explicit Table(std::vector<std::string> headers)
      : headers_(std::move(headers)) {}

  void Add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  bool empty() const { return rows_.empty(); }

  std::string Text(const std::string& indent) const {
    std::vector<size_t> widths(headers_.size());
    for (size_t c = 0; c < headers_.size(); ++c) {
      widths[c] = headers_[c].size();
      for (const auto& r : rows_) widths[c] = std::max(widths[c], r[c].size());
    }
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
      std::string l = indent;
      for (size_t c = 0; c < cells.size(); ++c) {
        l += cells[c];
        if (c + 1 < cells.size()) {
          l += std::string(widths[c] - cells[c].size() + 2, ' ');
        }
      }
      while (!l.empty() && l.back() == ' ') l.pop_back();
      out += l + "\n";
    };
    line(headers_);
    std::vector<std::string> rule;
    for (size_t w : widths) rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto& r : rows_) line(r);
    return out;
  }

  std::string Markdown() const {
    auto esc = [](const std::string& s) {
      std::string o;
      for (char c : s) {
        if (c == '|') o += '\\';
        o += c;
      }
      return o;
    };
    std::string out = "|";
    for (const auto& h : headers_) out += " " + esc(h) + " |";
    out += "\n|";
    for (size_t i = 0; i < headers_.size(); ++i) out += " --- |";
    out += "\n";
    for (const auto& r : rows_) {
      out += "|";
      for (const auto& c : r) out += " " + esc(c) + " |";
      out += "\n";
    }
    return out;
  }

 private:
  std::vector<std::string> headers_;
  std::vector<std::vector<std::string>> rows_;
};

Table GuidelineTable(const Assessment& a) {
  Table t({"ID", "Guideline", "Significance", "Weight", "Outcome", "Evidence"});
  for (const GuidelineResult& r : a.results) {
    const Guideline* g = FindGuideline(r.guideline_id);
    t.Add({r.guideline_id, g ? std::string(g->title) : "",
           g ? std::string(ToString(g->significance)) : "",
           std::to_string(r.weight_used), std::string(ToString(r.outcome)),
           r.evidence});
  }
  return t;
}

Table SubprogramTable(const ComponentModel& m) {
  Table t({"Subprogram", "Class", "Parameters", "Return", "Raises"});
  for (const ClassifiedOperation& op : m.classified_ops) {
    const SubprogramDecl& s = *op.subprogram;
    t.Add({s.name, std::string(ToString(op.op_class)),
           FormatParameters(s.parameters), s.return_type.value_or(""),
           Join(s.raises, ", ")});
  }
  return t;
}

Table PrivateTypeTable(const ComponentModel& m) {
  Table t({"Type", "Kind", "Full view"});
  for (const PrivateTypeRow& r : PrivateTypes(m)) {
    t.Add({r.name, r.kind, r.full_view.empty() ? "(none)" : r.full_view});
  }
  return t;
}

Table TransformationTable(const std::vector<Transformation>& ts) {
  Table t({"Transformation", "Guideline", "Description"});
  for (const Transformation& x : ts) {
    t.Add({x.Id(), x.target_guideline, x.description});
  }
  return t;
}

std::string BandLine(const Assessment& a) {
  std::string s = Label(a.band);
  if (a.critical_violated) s += " (critical guideline violated)";
  return s;
}

std::string RenderText(const Assessment& a, const ComponentModel& m,
                       const ImprovementSummary* imp, ReportDetail detail,
                       bool markdown) {
  std::ostringstream out;
  auto heading = [&](const std::string& title) {
    out << "\n" << (markdown ? "## " : "") << title << "\n";
    if (markdown) out << "\n";
  };
  auto table = [&](const Table& t) {
    out << (markdown ? t.Markdown() : t.Text("  "));
  };
  auto field = [&](const std::string& name, const std::string& value) {
    if (markdown) {
      out << "- **" << name << "**: " << value << "\n";
    } else {
      out << "  " << name << std::string(13 - std::min<size_t>(12, name.size()), ' ')
          << ": " << value << "\n";
    }
  };

  out << (markdown ? "# " : "") << "Reuse assessment: " << m.unit->package_name
      << "\n";
  if (markdown) out << "\n";
  field("File", m.unit->file_name);
  field("Abstraction",
        m.adt_name + " (" + std::string(ToString(m.adt_privacy)) + ")");
  field("Class", ComponentClass(m));
  field("Score", a.FormattedScore() + "% (" +
                     std::to_string(a.satisfied_weight_total) + " of " +
                     std::to_string(a.applicable_weight_total) +
                     " weighted points)");
  field("Band", BandLine(a));

  if (detail == ReportDetail::kFull) {
    heading("Subprograms");
    table(SubprogramTable(m));
    heading("Private types");
    table(PrivateTypeTable(m));
    heading("Exceptions");
    out << (markdown ? "" : "  ")
        << (m.exceptions.empty() ? "(none)" : Join(m.exceptions, ", ")) << "\n";
  }
  heading("Guidelines");
  table(GuidelineTable(a));

  const std::vector<std::string> notes = Notes(m);
  if (!notes.empty()) {
    heading("Notes");
    for (const std::string& n : notes) out << (markdown ? "- " : "  - ") << n << "\n";
  }

  if (imp != nullptr) {
    if (imp->before) {
      heading("Improvement");
      field("Before", imp->before->FormattedScore() + "% " + Label(imp->before->band));
      if (!imp->dry_run) {
        field("After", a.FormattedScore() + "% " + Label(a.band));
      }
    }
    if (imp->dry_run) {
      heading("Planned transformations (dry run, nothing written)");
      if (imp->planned.empty()) {
        out << (markdown ? "" : "  ") << "(none)\n";
      } else {
        table(TransformationTable(imp->planned));
      }
    } else {
      heading("Applied transformations");
      if (imp->applied.empty()) {
        out << (markdown ? "" : "  ") << "(none)\n";
      } else {
        table(TransformationTable(imp->applied));
      }
      if (!imp->skipped.empty()) {
        heading("Skipped transformations");
        table(TransformationTable(imp->skipped));
      }
    }
    if (!imp->manual.empty()) {
      heading("Needs manual repair");
      for (const ManualRepair& r : imp->manual) {
        out << (markdown ? "- " : "  - ") << r.guideline_id << ": " << r.reason
            << "\n";
      }
    }
    if (!imp->written_files.empty()) {
      heading("Written");
      for (const std::string& f : imp->written_files) {
        out << (markdown ? "- " : "  ") << f << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view text) {
  if (EqualsIgnoreCase(text, "text")) return ReportFormat::kText;
  if (EqualsIgnoreCase(text, "json")) return ReportFormat::kJson;
  if (EqualsIgnoreCase(text, "md") || EqualsIgnoreCase(text, "markdown")) {
    return ReportFormat::kMarkdown;
  }
  return std::nullopt;
}

ojson ReportJson(const Assessment& a, const ComponentModel& m,
                 const ImprovementSummary* imp) {
  ojson j;
  j["schema"] = kReportSchemaVersion;
  j["component"] = m.unit->package_name;
  j["file"] = m.unit->file_name;
  j["adt"] = m.adt_name;
  j["adt_privacy"] = std::string(ToString(m.adt_privacy));
  j["kind"] = std::string(ToString(m.structure_kind));
  j["complex"] = m.is_complex;
  j["generic"] = m.is_generic;
  j["element_type"] = m.element_type ? ojson(*m.element_type) : ojson(nullptr);
  j["element_is_generic_formal"] = m.element_is_generic_formal;
  j["element_independent"] = m.element_independent_ops;
  j["independence_assumed"] = m.independence_assumed;

  ojson subs = ojson::array();
  for (const ClassifiedOperation& op : m.classified_ops) {
    const SubprogramDecl& s = *op.subprogram;
    ojson row;
    row["name"] = s.name;
    row["kind"] = s.is_function() ? "function" : "procedure";
    row["class"] = std::string(ToString(op.op_class));
    ojson params = ojson::array();
    for (const Parameter& p : s.parameters) {
      for (const std::string& n : p.names) {
        ojson pj;
        pj["name"] = n;
        pj["mode"] = ModeKeyword(p.mode);
        pj["type"] = p.type_name;
        if (p.default_expression) pj["default"] = *p.default_expression;
        params.push_back(std::move(pj));
      }
    }
    row["parameters"] = std::move(params);
    row["return"] = s.return_type ? ojson(*s.return_type) : ojson(nullptr);
    row["raises"] = s.raises;
    subs.push_back(std::move(row));
  }
  j["subprograms"] = std::move(subs);

  ojson privs = ojson::array();
  for (const PrivateTypeRow& r : PrivateTypes(m)) {
    ojson row;
    row["name"] = r.name;
    row["kind"] = r.kind;
    row["full_view"] = r.full_view.empty() ? ojson(nullptr) : ojson(r.full_view);
    privs.push_back(std::move(row));
  }
  j["private_types"] = std::move(privs);
  j["exceptions"] = m.exceptions;

  ojson gls = ojson::array();
  for (const GuidelineResult& r : a.results) {
    const Guideline* g = FindGuideline(r.guideline_id);
    ojson row;
    row["id"] = r.guideline_id;
    row["title"] = g ? std::string(g->title) : "";
    row["significance"] = g ? std::string(ToString(g->significance)) : "";
    row["weight"] = r.weight_used;
    row["outcome"] = std::string(ToString(r.outcome));
    row["evidence"] = r.evidence;
    ojson locs = ojson::array();
    for (const SourceLocation& l : r.locations) locs.push_back(l.ToString());
    row["locations"] = std::move(locs);
    gls.push_back(std::move(row));
  }
  j["guidelines"] = std::move(gls);
  j["applicable_weight"] = a.applicable_weight_total;
  j["satisfied_weight"] = a.satisfied_weight_total;
  j["score"] = RoundedScore(a);
  j["band"] = std::string(ToString(a.band));
  j["critical_violated"] = a.critical_violated;
  j["notes"] = Notes(m);

  if (imp != nullptr) {
    ojson ij;
    ij["dry_run"] = imp->dry_run;
    if (imp->dry_run) ij["planned"] = TransformationList(imp->planned);
    ij["applied"] = TransformationList(imp->applied);
    ij["skipped"] = TransformationList(imp->skipped);
    ojson manual = ojson::array();
    for (const ManualRepair& r : imp->manual) {
      manual.push_back({{"guideline", r.guideline_id}, {"reason", r.reason}});
    }
    ij["manual"] = std::move(manual);
    if (imp->before) {
      ij["score_before"] = RoundedScore(*imp->before);
      ij["band_before"] = std::string(ToString(imp->before->band));
    }
    ij["written"] = imp->written_files;
    j["improvement"] = std::move(ij);
  }
  return j;
}

std::string Render(const Assessment& assessment, const ComponentModel& model,
                   const ImprovementSummary* improvement, ReportFormat format,
                   ReportDetail detail) {
  switch (format) {
    case ReportFormat::kJson:
      return ReportJson(assessment, model, improvement).dump(2) + "\n";
    case ReportFormat::kMarkdown:
      return RenderText(assessment, model, improvement, detail, true);
    case ReportFormat::kText:
      break;
  }
  return RenderText(assessment, model, improvement, detail, false);
}

std::string RenderCatalog(const AssessmentConfig& config, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    ojson arr = ojson::array();
    for (const Guideline& g : Catalog()) {
      ojson row;
      row["id"] = std::string(g.code);
      row["title"] = std::string(g.title);
      row["description"] = std::string(g.description);
      row["significance"] = std::string(ToString(g.significance));
      row["weight"] = config.WeightFor(g);
      row["enabled"] = config.IsEnabled(g);
      row["applicability"] = std::string(g.applicability);
      row["transformation"] = g.transformation
                                  ? ojson(std::string(ToString(*g.transformation)))
                                  : ojson(nullptr);
      arr.push_back(std::move(row));
    }
    ojson j;
    j["schema"] = kReportSchemaVersion;
    j["guidelines"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  Table t({"ID", "Guideline", "Significance", "Weight", "Enabled",
           "Applicability", "Transformation"});
  for (const Guideline& g : Catalog()) {
    t.Add({std::string(g.code), std::string(g.title),
           std::string(ToString(g.significance)),
           std::to_string(config.WeightFor(g)),
           config.IsEnabled(g) ? "yes" : "no", std::string(g.applicability),
           g.transformation ? std::string(ToString(*g.transformation)) : "-"});
  }
  if (format == ReportFormat::kMarkdown) {
    return "# Reuse guidelines\n\n" + t.Markdown();
  }
  return "Reuse guidelines\n" + t.Text("  ");
}

std::string RenderCorpus(const std::vector<CorpusEntry>& entries,
                         ReportFormat format) {
  std::map<std::string, int> counts = {
      {"weakly", 0}, {"strongly", 0}, {"limitedly", 0}, {"immediately", 0}};
  int errors = 0;
  for (const CorpusEntry& e : entries) {
    if (e.assessment) {
      ++counts[std::string(ToString(e.assessment->band))];
    } else {
      ++errors;
    }
  }
  const ReuseBand kOrder[] = {ReuseBand::kWeakly, ReuseBand::kStrongly,
                              ReuseBand::kLimitedly, ReuseBand::kImmediately};

  if (format == ReportFormat::kJson) {
    ojson files = ojson::array();
    for (const CorpusEntry& e : entries) {
      ojson row;
      row["file"] = e.file;
      if (e.assessment) {
        row["component"] = e.component;
        row["score"] = RoundedScore(*e.assessment);
        row["band"] = std::string(ToString(e.assessment->band));
        row["critical_violated"] = e.assessment->critical_violated;
      } else {
        row["error"] = e.error;
      }
      files.push_back(std::move(row));
    }
    ojson bands;
    for (ReuseBand b : kOrder) {
      bands[std::string(ToString(b))] = counts[std::string(ToString(b))];
    }
    ojson j;
    j["schema"] = kReportSchemaVersion;
    j["files"] = std::move(files);
    j["bands"] = std::move(bands);
    j["errors"] = errors;
    return j.dump(2) + "\n";
  }

  Table t({"File", "Component", "Score", "Band"});
  for (const CorpusEntry& e : entries) {
    if (e.assessment) {
      t.Add({e.file, e.component, e.assessment->FormattedScore() + "%",
             Label(e.assessment->band)});
    } else {
      t.Add({e.file, "-", "-", "error: " + e.error});
    }
  }
  Table totals({"Band", "Components"});
  for (ReuseBand b : kOrder) {
    totals.Add({Label(b), std::to_string(counts[std::string(ToString(b))])});
  }
  totals.Add({"errors", std::to_string(errors)});
  if (format == ReportFormat::kMarkdown) {
    return "# Corpus assessment\n\n" + t.Markdown() + "\n## Totals\n\n" +
           totals.Markdown();
  }
  return "Corpus assessment\n" + t.Text("  ") + "\nTotals\n" + totals.Text("  ");
}

}  // namespace rais
