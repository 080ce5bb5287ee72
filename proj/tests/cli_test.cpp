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
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "support/oracles.h"

namespace {

namespace fs = std::filesystem;
using parascad::testing::fixture;
using parascad::testing::fixture_path;
using parascad::testing::read_text;

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout when `merge` is set.
Result cli(const std::string& args, bool merge = false) {
  std::string cmd = std::string(PARASCAD_CLI_PATH) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  Result r;
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Cli, Position) {
  auto r = cli("position " + fixture_path("cup.scad") + " --node 1/0 --handle 1,1,2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"symbolic\":[\"0\",\"0\",\"h_stem + thickness\"],\"numeric\":[0,0,36]}\n");
}

TEST(Cli, Delta) {
  auto r = cli("delta " + fixture_path("cup.scad") + " --from 3:2,1,1 --to 0/0:2,1,2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "{\"symbolic\":[\"r_top - r_sphere\",\"0\",\"h_stem + h_top + thickness\"],\"numeric\":[14,0,69]}\n");
}

TEST(Cli, AnalyzeTable) {
  auto r = cli("analyze " + fixture_path("corpus"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, fixture("corpus_table.txt"));
}

TEST(Cli, Parse) {
  auto r = cli("parse " + fixture_path("translated_cube.scad"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("translate([tx, ty, tz]) cube([size_x, size_y, size_z]);"), std::string::npos);
  EXPECT_EQ(cli("parse --ast-json " + fixture_path("translated_cube.scad")).out.front(), '{');
}

TEST(Cli, CompileWritesFiles) {
  fs::path dir = fs::temp_directory_path() / "parascad_cli_test";
  fs::create_directories(dir);
  auto r = cli("compile " + fixture_path("cup.scad") + " --scene " + (dir / "s.json").string() + " --stl " +
               (dir / "m.stl").string() + " --fn 12");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(read_text((dir / "s.json").string()).substr(0, 13), "{\"variables\":");
  std::string stl = read_text((dir / "m.stl").string());
  std::vector<std::uint8_t> bytes(stl.begin(), stl.end());
  ASSERT_GE(bytes.size(), 84u);
  EXPECT_EQ(bytes.size(), 84u + 50u * parascad::testing::stl_triangle_count(bytes));
  fs::remove_all(dir);
}

TEST(Cli, ParseErrorIsLocated) {
  auto r = cli("position " + fixture_path("broken.scad") + " --node 0 --handle center", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, fixture_path("broken.scad") + ":2:15: error: expected ']', found ';'\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("").code, 1);
  EXPECT_EQ(cli("bogus").code, 1);
  EXPECT_EQ(cli("position " + fixture_path("cup.scad") + " --node 1/0").code, 1);
  EXPECT_EQ(cli("analyze " + fixture_path("corpus") + " --format xml").code, 1);
  EXPECT_EQ(cli("parse /nonexistent/file.scad").code, 2);
  EXPECT_EQ(cli("position " + fixture_path("cup.scad") + " --node 9 --handle center").code, 2);
  EXPECT_EQ(cli("analyze /nonexistent/dir").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, RotatedSelectionReportsDiagnostic) {
  fs::path file = fs::temp_directory_path() / "parascad_cli_rotated.scad";
  { std::FILE* f = std::fopen(file.c_str(), "w"); std::fputs("rotate([0, 0, 90]) translate([1, 0, 0]) cube(1);\n", f); std::fclose(f); }
  auto r = cli("position " + file.string() + " --node 0/0/0 --handle center");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 18), "{\"symbolic\":null,\"");
  EXPECT_NE(r.out.find("\"diagnostics\""), std::string::npos);
  fs::remove(file);
}

}  // namespace
