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

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "parascad/diagnostics.h"
#include "parascad/expr.h"
#include "parascad/lang.h"

namespace parascad {

enum class StatementKind { Primitive, Translate, Rotate, Scale };
inline constexpr std::size_t kStatementKinds = 4;
inline constexpr std::size_t kCategories = 5;

std::string_view statement_kind_name(StatementKind k);

/// One classified parameter component.
struct ClassificationRecord {
  std::string file;
  SourceSpan span;
  StatementKind kind;
  std::size_t component = 0;
  ExprCategory category;
};

/// Static pass over one program. Loop bodies and module bodies are visited
/// once; loop variables and formals count as ordinary variables. Transform
/// components that fold to the identity (0 for translate/rotate, 1 for
/// scale) are skipped. Throws ParseError.
std::vector<ClassificationRecord> analyze_source(std::string_view source,
                                                 const std::string& file = "");
std::vector<ClassificationRecord> analyze_program(const AstNode& root,
                                                  const std::string& file = "");

struct FileError {
  std::string file;
  Diagnostic diagnostic;
  bool operator==(const FileError& o) const;
};

/// Category x statement-kind counts.
struct CorpusReport {
  std::array<std::array<std::size_t, kStatementKinds>, kCategories> counts{};
  std::size_t files = 0;  // successfully analyzed
  std::vector<FileError> errors;

  void add(const std::vector<ClassificationRecord>& records);
  CorpusReport& operator+=(const CorpusReport& other);

  std::size_t row_total(std::size_t category) const;
  std::size_t column_total(std::size_t kind) const;
  std::size_t grand_total() const;

  /// Cell shares of the grand total in percent with one decimal, rounded so
  /// that the cells sum to exactly 100.0 (all zero for an empty report).
  std::array<std::array<double, kStatementKinds>, kCategories> cell_percentages() const;
  double row_percentage(std::size_t category) const;
  double column_percentage(std::size_t kind) const;

  bool operator==(const CorpusReport& other) const;
};

/// Analyzes one named source, recording parse failures instead of throwing.
void analyze_into(CorpusReport& report, const std::string& file, std::string_view source);

/// Expands directories into the `.scad` files below them; other paths are
/// kept as given. Sorted by path text, without duplicates. Unlistable directories are
/// appended to `errors`.
std::vector<std::filesystem::path> collect_corpus_files(
    const std::vector<std::filesystem::path>& paths, std::vector<FileError>& errors);

/// Reads and analyzes one file, recording read failures as errors.
void analyze_file_into(CorpusReport& report, const std::filesystem::path& file);

/// Directories are searched recursively for `.scad` files; files listed
/// explicitly are taken whatever their extension. Files are processed in
/// sorted path order; unreadable and unparseable files become errors.
CorpusReport analyze_corpus(const std::vector<std::filesystem::path>& paths);

enum class ReportFormat { Table, Csv, Json };

/// Throws Error (Unsupported) for unknown names.
ReportFormat parse_report_format(std::string_view name);
std::string render_report(const CorpusReport& report, ReportFormat format);
/// Inverse of the JSON rendering.
CorpusReport report_from_json(std::string_view json);

}  // namespace parascad
