// Copyright 2026 The parascad Authors.
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

#include "parascad/analyzer.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json_util.h"

namespace parascad {

namespace {

using detail::Json;

struct PrimitiveParams {
  std::vector<std::string_view> positional;
  std::set<std::string_view> sizes;  // named parameters that count
};

const std::map<std::string_view, PrimitiveParams>& primitive_params() {
  static const std::map<std::string_view, PrimitiveParams> table = {
      {"cube", {{"size", "center"}, {"size"}}},
      {"sphere", {{"r"}, {"r", "d"}}},
      {"cylinder", {{"h", "r1", "r2", "center"}, {"h", "r", "r1", "r2", "d", "d1", "d2"}}},
      {"square", {{"size", "center"}, {"size"}}},
      {"circle", {{"r"}, {"r", "d"}}},
  };
  return table;
}

std::optional<double> fold(const Expr& e) {
  if (contains_variable(e)) return std::nullopt;
  try {
    return evaluate(e, Environment{});
  } catch (const Error&) {
    return std::nullopt;
  }
}

class Walker {
 public:
  Walker(std::string file, std::vector<ClassificationRecord>& out)
      : file_(std::move(file)), out_(out) {}

  void statements(const std::vector<AstPtr>& stmts) {
    for (const auto& s : stmts) statement(*s);
  }

  void statement(const AstNode& node) {
    if (const auto* inst = node.as<ast::Instantiation>()) {
      instantiation(*inst);
      statements(inst->children);
    } else if (const auto* m = node.as<ast::ModuleDef>()) {
      statements(m->body);
    } else if (const auto* loop = node.as<ast::For>()) {
      statements(loop->body);
    } else if (const auto* cond = node.as<ast::If>()) {
      statements(cond->then_body);
      statements(cond->else_body);
    } else if (const auto* block = node.as<ast::Block>()) {
      statements(block->children);
    }
  }

 private:
  void instantiation(const ast::Instantiation& inst) {
    auto prim = primitive_params().find(inst.callee);
    if (prim != primitive_params().end()) {
      std::size_t position = 0;
      std::size_t component = 0;
      for (const auto& arg : inst.args) {
        std::string_view name;
        if (arg.name) {
          name = *arg.name;
        } else if (position < prim->second.positional.size()) {
          name = prim->second.positional[position++];
        } else {
          continue;
        }
        if (!prim->second.sizes.contains(name)) continue;
        for (const ExprPtr& c : components(arg.value))
          record(StatementKind::Primitive, *c, component++, arg.span);
      }
      return;
    }
    StatementKind kind;
    const ast::Argument* arg = nullptr;
    double identity = 0.0;
    if (inst.callee == "translate") {
      kind = StatementKind::Translate;
      arg = inst.named("v") ? inst.named("v") : inst.positional(0);
    } else if (inst.callee == "rotate") {
      kind = StatementKind::Rotate;
      arg = inst.named("a") ? inst.named("a") : inst.positional(0);
    } else if (inst.callee == "scale") {
      kind = StatementKind::Scale;
      arg = inst.named("v") ? inst.named("v") : inst.positional(0);
      identity = 1.0;
    } else {
      return;
    }
    if (!arg) return;
    std::size_t component = 0;
    for (const ExprPtr& c : components(arg->value)) {
      std::size_t index = component++;
      if (auto v = fold(*c); v && *v == identity) continue;
      record(kind, *c, index, arg->span);
    }
  }

  static std::vector<ExprPtr> components(const ExprPtr& value) {
    if (const auto* v = value->as<expr::Vector>()) return v->elements;
    return {value};
  }

  void record(StatementKind kind, const Expr& e, std::size_t component,
              const SourceSpan& fallback) {
    out_.push_back({file_, e.span().value_or(fallback), kind, component, classify(e)});
  }

  std::string file_;
  std::vector<ClassificationRecord>& out_;
};

constexpr std::array<std::string_view, kCategories> kCategoryNames = {"C1", "C2", "C3", "C4",
                                                                      "C5"};
constexpr std::array<std::string_view, kStatementKinds> kKindNames = {"primitive", "translate",
                                                                      "rotate", "scale"};
constexpr std::array<std::string_view, kStatementKinds> kKindTitles = {"Primitive", "Translate",
                                                                       "Rotate", "Scale"};

double round_tenth(double v) { return std::round(v * 10.0) / 10.0; }

std::string percent_text(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", p);
  return buf;
}

std::string cell_text(std::size_t n, double p) {
  return std::to_string(n) + " (" + percent_text(p) + ")";
}

std::string render_table(const CorpusReport& r) {
  auto pct = r.cell_percentages();
  std::vector<std::vector<std::string>> rows;
  rows.push_back({""});
  for (auto t : kKindTitles) rows.back().emplace_back(t);
  rows.back().emplace_back("Total");
  for (std::size_t c = 0; c < kCategories; ++c) {
    std::vector<std::string> row{std::string(kCategoryNames[c])};
    for (std::size_t k = 0; k < kStatementKinds; ++k)
      row.push_back(cell_text(r.counts[c][k], pct[c][k]));
    row.push_back(cell_text(r.row_total(c), r.row_percentage(c)));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> total{"Total"};
  for (std::size_t k = 0; k < kStatementKinds; ++k)
    total.push_back(cell_text(r.column_total(k), r.column_percentage(k)));
  total.push_back(cell_text(r.grand_total(), r.grand_total() ? 100.0 : 0.0));
  rows.push_back(std::move(total));

  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string render_csv(const CorpusReport& r) {
  std::string out = "category,primitive,translate,rotate,scale,total\n";
  for (std::size_t c = 0; c < kCategories; ++c) {
    out += kCategoryNames[c];
    for (std::size_t k = 0; k < kStatementKinds; ++k) out += "," + std::to_string(r.counts[c][k]);
    out += "," + std::to_string(r.row_total(c)) + "\n";
  }
  return out;
}

Json report_json(const CorpusReport& r) {
  auto pct = r.cell_percentages();
  Json j;
  j["categories"] = kCategoryNames;
  j["kinds"] = kKindNames;
  j["counts"] = r.counts;
  Json rows = Json::array(), cols = Json::array();
  for (std::size_t c = 0; c < kCategories; ++c) rows.push_back(r.row_total(c));
  for (std::size_t k = 0; k < kStatementKinds; ++k) cols.push_back(r.column_total(k));
  j["rowTotals"] = rows;
  j["columnTotals"] = cols;
  j["grandTotal"] = r.grand_total();
  Json cell_pct = Json::array();
  for (const auto& row : pct) {
    Json jr = Json::array();
    for (double p : row) jr.push_back(detail::number_json(p));
    cell_pct.push_back(jr);
  }
  Json row_pct = Json::array(), col_pct = Json::array();
  for (std::size_t c = 0; c < kCategories; ++c)
    row_pct.push_back(detail::number_json(r.row_percentage(c)));
  for (std::size_t k = 0; k < kStatementKinds; ++k)
    col_pct.push_back(detail::number_json(r.column_percentage(k)));
  j["percentages"] = cell_pct;
  j["rowPercentages"] = row_pct;
  j["columnPercentages"] = col_pct;
  j["files"] = r.files;
  Json errors = Json::array();
  for (const auto& e : r.errors) {
    Json je = detail::diagnostic_json(e.diagnostic);
    je["file"] = e.file;
    errors.push_back(je);
  }
  j["errors"] = errors;
  return j;
}

}  // namespace

std::string_view statement_kind_name(StatementKind k) {
  return kKindNames[static_cast<std::size_t>(k)];
}

std::vector<ClassificationRecord> analyze_program(const AstNode& root, const std::string& file) {
  std::vector<ClassificationRecord> out;
  Walker(file, out).statement(root);
  return out;
}

std::vector<ClassificationRecord> analyze_source(std::string_view source,
                                                 const std::string& file) {
  AstPtr root = parse(source);
  return analyze_program(*root, file);
}

bool FileError::operator==(const FileError& o) const {
  return file == o.file && diagnostic.kind == o.diagnostic.kind &&
         diagnostic.message == o.diagnostic.message && diagnostic.span == o.diagnostic.span;
}

void CorpusReport::add(const std::vector<ClassificationRecord>& records) {
  for (const auto& r : records)
    ++counts[static_cast<std::size_t>(r.category) - 1][static_cast<std::size_t>(r.kind)];
}

CorpusReport& CorpusReport::operator+=(const CorpusReport& other) {
  for (std::size_t c = 0; c < kCategories; ++c)
    for (std::size_t k = 0; k < kStatementKinds; ++k) counts[c][k] += other.counts[c][k];
  files += other.files;
  errors.insert(errors.end(), other.errors.begin(), other.errors.end());
  return *this;
}

std::size_t CorpusReport::row_total(std::size_t category) const {
  std::size_t s = 0;
  for (std::size_t v : counts[category]) s += v;
  return s;
}

std::size_t CorpusReport::column_total(std::size_t kind) const {
  std::size_t s = 0;
  for (const auto& row : counts) s += row[kind];
  return s;
}

std::size_t CorpusReport::grand_total() const {
  std::size_t s = 0;
  for (std::size_t c = 0; c < kCategories; ++c) s += row_total(c);
  return s;
}

// Largest-remainder apportionment of 1000 tenths of a percent.
std::array<std::array<double, kStatementKinds>, kCategories> CorpusReport::cell_percentages()
    const {
  std::array<std::array<double, kStatementKinds>, kCategories> out{};
  std::size_t total = grand_total();
  if (total == 0) return out;
  struct Cell {
    std::size_t c, k;
    std::size_t tenths;
    std::size_t remainder;  // numerator of the fractional part, over `total`
  };
  std::vector<Cell> cells;
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < kCategories; ++c)
    for (std::size_t k = 0; k < kStatementKinds; ++k) {
      std::size_t scaled = counts[c][k] * 1000;
      cells.push_back({c, k, scaled / total, scaled % total});
      assigned += scaled / total;
    }
  std::vector<std::size_t> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cells[a].remainder > cells[b].remainder;
  });
  for (std::size_t i = 0; assigned < 1000 && i < order.size(); ++i, ++assigned)
    ++cells[order[i]].tenths;
  for (const auto& cell : cells) out[cell.c][cell.k] = static_cast<double>(cell.tenths) / 10.0;
  return out;
}

double CorpusReport::row_percentage(std::size_t category) const {
  std::size_t total = grand_total();
  if (total == 0) return 0.0;
  return round_tenth(100.0 * static_cast<double>(row_total(category)) /
                     static_cast<double>(total));
}

double CorpusReport::column_percentage(std::size_t kind) const {
  std::size_t total = grand_total();
  if (total == 0) return 0.0;
  return round_tenth(100.0 * static_cast<double>(column_total(kind)) /
                     static_cast<double>(total));
}

bool CorpusReport::operator==(const CorpusReport& other) const {
  return counts == other.counts && files == other.files && errors == other.errors;
}

void analyze_into(CorpusReport& report, const std::string& file, std::string_view source) {
  try {
    report.add(analyze_source(source, file));
    ++report.files;
  } catch (const ParseError& e) {
    for (const auto& d : e.diagnostics()) report.errors.push_back({file, d});
  } catch (const Error& e) {
    report.errors.push_back({file, e.diagnostic()});
  }
}

std::vector<std::filesystem::path> collect_corpus_files(
    const std::vector<std::filesystem::path>& paths, std::vector<FileError>& errors) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      for (fs::recursive_directory_iterator it(p, ec), end; !ec && it != end; it.increment(ec))
        if (it->is_regular_file(ec) && it->path().extension() == ".scad")
          files.push_back(it->path());
      if (ec)
        errors.push_back(
            {p.string(), {ErrorKind::Io, "cannot list directory: " + ec.message(), {}}});
    } else {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.string() < b.string(); });
  files.erase(std::unique(files.begin(), files.end()), files.end());
  return files;
}

void analyze_file_into(CorpusReport& report, const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    report.errors.push_back({file.string(), {ErrorKind::Io, "cannot read file", {}}});
    return;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  analyze_into(report, file.string(), buf.str());
}

CorpusReport analyze_corpus(const std::vector<std::filesystem::path>& paths) {
  CorpusReport report;
  for (const auto& f : collect_corpus_files(paths, report.errors)) analyze_file_into(report, f);
  return report;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw Error(ErrorKind::Unsupported,
              "unknown report format '" + std::string(name) + "' (expected table, csv or json)");
}

std::string render_report(const CorpusReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Table: return render_table(report);
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Json: return report_json(report).dump() + "\n";
  }
  return "";
}

CorpusReport report_from_json(std::string_view text) {
  CorpusReport r;
  try {
    Json j = Json::parse(text);
    r.counts = j.at("counts").get<decltype(r.counts)>();
    r.files = j.at("files").get<std::size_t>();
    for (const auto& e : j.at("errors")) {
      FileError fe;
      fe.file = e.at("file").get<std::string>();
      std::string kind = e.at("kind").get<std::string>();
      fe.diagnostic.kind = ErrorKind::Io;
      for (int k = 0; k <= static_cast<int>(ErrorKind::Io); ++k)
        if (error_kind_name(static_cast<ErrorKind>(k)) == kind)
          fe.diagnostic.kind = static_cast<ErrorKind>(k);
      fe.diagnostic.message = e.at("message").get<std::string>();
      if (!e.at("span").is_null()) {
        const auto& s = e.at("span");
        fe.diagnostic.span =
            SourceSpan{s.at("start").get<std::size_t>(),  s.at("end").get<std::size_t>(),
                       s.at("startLine").get<int>(),      s.at("startColumn").get<int>(),
                       s.at("endLine").get<int>(),        s.at("endColumn").get<int>()};
      }
      r.errors.push_back(std::move(fe));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed report JSON: ") + e.what());
  }
  return r;
}

}  // namespace parascad
