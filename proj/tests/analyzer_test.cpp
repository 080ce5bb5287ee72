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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numeric>

#include "parascad/analyzer.h"
#include "support/oracles.h"

namespace parascad {
namespace {

namespace fs = std::filesystem;
using testing::fixture;
using testing::fixture_path;

// Counted by hand from the fixture sources, rows C1..C5, columns
// primitive, translate, rotate, scale.
constexpr std::size_t kHandCount[5][4] = {
    {7, 0, 3, 2}, {18, 5, 1, 0}, {5, 5, 0, 0}, {1, 2, 0, 0}, {2, 1, 0, 0}};

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("parascad_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
  }

 private:
  fs::path path_;
};

std::vector<std::pair<StatementKind, ExprCategory>> records(std::string_view src) {
  std::vector<std::pair<StatementKind, ExprCategory>> out;
  for (const auto& r : analyze_source(src)) out.emplace_back(r.kind, r.category);
  return out;
}

using K = StatementKind;
using C = ExprCategory;

TEST(Analyze, CubeComponents) {
  EXPECT_EQ(records("cube(size=[5, size_y, size_z+3]);"),
            (std::vector<std::pair<K, C>>{{K::Primitive, C::C1}, {K::Primitive, C::C2}, {K::Primitive, C::C3}}));
}

TEST(Analyze, IdentityTransformComponentsSkipped) {
  EXPECT_EQ(records("translate([0,0,size_x*i]) cube();"), (std::vector<std::pair<K, C>>{{K::Translate, C::C4}}));
  EXPECT_EQ(records("translate([0, 1 - 1, 0]) rotate([0, 0, 0]) scale([1, 2/2, 1]) sphere();"),
            (std::vector<std::pair<K, C>>{}));
  EXPECT_EQ(records("scale([2, 1, s]) cube(0);"),
            (std::vector<std::pair<K, C>>{{K::Scale, C::C1}, {K::Scale, C::C2}, {K::Primitive, C::C1}}));
}

TEST(Analyze, SpikeTranslate) {
  EXPECT_EQ(records("translate([-width/2, num*(length+spike_thickness)+spike_thickness-thickness, 0]) cube(1);"),
            (std::vector<std::pair<K, C>>{{K::Translate, C::C3}, {K::Translate, C::C4}, {K::Primitive, C::C1}}));
}

TEST(Analyze, ScalarTransformArgumentIsOneComponent) {
  EXPECT_EQ(records("rotate(a) scale(2) cube(1);"),
            (std::vector<std::pair<K, C>>{{K::Rotate, C::C2}, {K::Scale, C::C1}, {K::Primitive, C::C1}}));
}

TEST(Analyze, WalksModulesLoopsAndBranches) {
  auto r = records(
      "module m(s) { sphere(s); }\n"
      "for (i = [0:3]) translate([i * w, 0, 0]) m(2);\n"
      "if (flag) cylinder(h = h, r = r); else square(x > 1 ? 1 : 2);\n");
  EXPECT_EQ(r, (std::vector<std::pair<K, C>>{{K::Primitive, C::C2},
                                             {K::Translate, C::C4},
                                             {K::Primitive, C::C2},
                                             {K::Primitive, C::C2},
                                             {K::Primitive, C::C5}}));
}

TEST(Analyze, RecordsCarrySpans) {
  std::string src = "cube([a, b + 1, 2]);";
  auto r = analyze_source(src, "f.scad");
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[1].file, "f.scad");
  EXPECT_EQ(r[1].component, 1u);
  EXPECT_EQ(src.substr(r[1].span.start, r[1].span.end - r[1].span.start), "b + 1");
}

TEST(Corpus, FixtureMatchesHandCount) {
  auto report = analyze_corpus({fixture_path("corpus")});
  EXPECT_EQ(report.files, 5u);
  EXPECT_TRUE(report.errors.empty());
  std::size_t sum = 0;
  for (std::size_t c = 0; c < 5; ++c)
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_EQ(report.counts[c][k], kHandCount[c][k]) << "C" << c + 1 << " kind " << k;
      sum += kHandCount[c][k];
    }
  EXPECT_EQ(report.grand_total(), sum);
}

TEST(Corpus, GrandTotalEqualsRecordCount) {
  std::vector<FileError> errors;
  std::size_t n = 0;
  for (const auto& f : collect_corpus_files({fixture_path("corpus")}, errors))
    n += analyze_source(testing::read_text(f.string())).size();
  EXPECT_EQ(analyze_corpus({fixture_path("corpus")}).grand_total(), n);
}

TEST(Corpus, TotalsAndPercentages) {
  auto report = analyze_corpus({fixture_path("corpus")});
  for (std::size_t c = 0; c < 5; ++c) {
    std::size_t row = std::accumulate(report.counts[c].begin(), report.counts[c].end(), std::size_t{0});
    EXPECT_EQ(report.row_total(c), row);
  }
  EXPECT_EQ(report.column_total(0), 33u);
  double pct = 0;
  for (const auto& row : report.cell_percentages())
    for (double p : row) pct += p;
  EXPECT_NEAR(pct, 100.0, 0.5);
  EXPECT_DOUBLE_EQ(report.row_percentage(1), 46.2);
}

TEST(Corpus, SortedDeduplicatedFiles) {
  std::vector<FileError> errors;
  auto files = collect_corpus_files({fixture_path("corpus"), fixture_path("corpus/c_wheel.scad")}, errors);
  ASSERT_EQ(files.size(), 5u);
  EXPECT_TRUE(std::is_sorted(files.begin(), files.end(),
                             [](const fs::path& a, const fs::path& b) { return a.string() < b.string(); }));
  EXPECT_EQ(files.back().filename(), "e_misc.scad");
}

TEST(Corpus, EmptyDirectoryIsAllZero) {
  TempDir dir;
  auto report = analyze_corpus({dir.path()});
  EXPECT_EQ(report.grand_total(), 0u);
  EXPECT_EQ(report.files, 0u);
  EXPECT_EQ(render_report(report, ReportFormat::Csv),
            "category,primitive,translate,rotate,scale,total\n"
            "C1,0,0,0,0,0\nC2,0,0,0,0,0\nC3,0,0,0,0,0\nC4,0,0,0,0,0\nC5,0,0,0,0,0\n");
}

TEST(Corpus, MalformedFileIsListed) {
  TempDir dir;
  dir.write("bad.scad", fixture("broken.scad"));
  dir.write("notes.txt", "cube(1);");
  auto report = analyze_corpus({dir.path()});
  EXPECT_EQ(report.grand_total(), 0u);
  ASSERT_EQ(report.errors.size(), 1u);
  EXPECT_EQ(fs::path(report.errors[0].file).filename(), "bad.scad");
  EXPECT_EQ(report.errors[0].diagnostic.kind, ErrorKind::Parse);
}

TEST(Corpus, MissingPathIsAnError) {
  auto report = analyze_corpus({"/nonexistent/parascad"});
  EXPECT_EQ(report.errors.size(), 1u);
  EXPECT_EQ(report.errors[0].diagnostic.kind, ErrorKind::Io);
}

TEST(Corpus, ReportsAdd) {
  CorpusReport a, b, whole;
  analyze_into(a, "a", "cube([1, x, 2]);");
  analyze_into(b, "b", "translate([y, 0, 0]) sphere(r);");
  analyze_into(whole, "a", "cube([1, x, 2]);");
  analyze_into(whole, "b", "translate([y, 0, 0]) sphere(r);");
  CorpusReport sum = a;
  sum += b;
  EXPECT_EQ(sum, whole);
  CorpusReport other = b;
  other += a;
  EXPECT_EQ(other.counts, sum.counts);
}

TEST(Render, TableMatchesGolden) {
  auto report = analyze_corpus({fixture_path("corpus")});
  EXPECT_EQ(render_report(report, ReportFormat::Table), fixture("corpus_table.txt"));
}

TEST(Render, CsvCarriesCounts) {
  auto report = analyze_corpus({fixture_path("corpus")});
  EXPECT_EQ(render_report(report, ReportFormat::Csv),
            "category,primitive,translate,rotate,scale,total\n"
            "C1,7,0,3,2,12\nC2,18,5,1,0,24\nC3,5,5,0,0,10\nC4,1,2,0,0,3\nC5,2,1,0,0,3\n");
}

TEST(Render, JsonRoundTrips) {
  TempDir dir;
  dir.write("bad.scad", fixture("broken.scad"));
  auto report = analyze_corpus({fixture_path("corpus"), dir.path()});
  ASSERT_EQ(report.errors.size(), 1u);
  CorpusReport back = report_from_json(render_report(report, ReportFormat::Json));
  EXPECT_EQ(back, report);
}

TEST(Render, FormatNames) {
  EXPECT_EQ(parse_report_format("table"), ReportFormat::Table);
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::Csv);
  EXPECT_EQ(parse_report_format("json"), ReportFormat::Json);
  EXPECT_THROW(parse_report_format("xml"), Error);
}

}  // namespace
}  // namespace parascad
