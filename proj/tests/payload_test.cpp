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

#include "json.hpp"
#include "parascad/lang.h"
#include "parascad/model.h"
#include "parascad/payload.h"
#include "support/oracles.h"

namespace parascad {
namespace {

using nlohmann::json;

TEST(Payload, PositionBytes) {
  auto model = Model::compile(testing::fixture("cup.scad"));
  EXPECT_EQ(vector_payload(model->position({1, 0}, HandleId::grid(1, 1, 2))),
            "{\"symbolic\":[\"0\",\"0\",\"h_stem + thickness\"],\"numeric\":[0,0,36]}\n");
}

TEST(Payload, DeltaBytes) {
  auto model = Model::compile(testing::fixture("cup.scad"));
  EXPECT_EQ(vector_payload(model->delta(parse_selection("3:2,1,1"), parse_selection("0/0:2,1,2"))),
            "{\"symbolic\":[\"r_top - r_sphere\",\"0\",\"h_stem + h_top + thickness\"],"
            "\"numeric\":[14,0,69]}\n");
}

TEST(Payload, UnavailableSymbolicCarriesDiagnostic) {
  auto model = Model::compile("scale(2) translate([1, 0, 0]) cube(1);");
  json j = json::parse(vector_payload(model->position({0, 0, 0}, HandleId::center())));
  EXPECT_TRUE(j["symbolic"].is_null());
  EXPECT_EQ(j["numeric"], json::parse("[3, 1, 1]"));
  ASSERT_EQ(j["diagnostics"].size(), 1u);
  EXPECT_EQ(j["diagnostics"][0]["span"]["startLine"], 1);
}

TEST(Payload, SceneDocument) {
  auto model = Model::compile(testing::fixture("cup.scad"));
  json j = json::parse(scene_payload(model->scene()));
  ASSERT_EQ(j["variables"].size(), 8u);
  EXPECT_EQ(j["variables"][0], json::parse(R"({"name":"thickness","value":6})"));
  ASSERT_EQ(j["nodes"].size(), 7u);
  const json& root = j["nodes"][0];
  EXPECT_EQ(root["pathText"], "");
  EXPECT_EQ(root["origin"], "root");
  for (const auto& n : j["nodes"]) {
    if (n["pathText"] != "1/0") continue;
    EXPECT_EQ(n["kind"], "cylinder");
    EXPECT_EQ(n["path"], json::parse("[1, 0]"));
    EXPECT_EQ(n["handles"].size(), 27u);
    EXPECT_EQ(n["mesh"]["vertices"].size() % 3, 0u);
    EXPECT_EQ(n["mesh"]["triangles"].size() % 3, 0u);
    bool found = false;
    for (const auto& p : n["params"])
      if (p["name"] == "h") {
        EXPECT_EQ(p["symbolic"], "h_stem");
        EXPECT_EQ(p["value"], 30);
        found = true;
      }
    EXPECT_TRUE(found);
  }
}

TEST(Payload, ErrorDocument) {
  try {
    parse(testing::fixture("broken.scad"));
    FAIL();
  } catch (const ParseError& e) {
    json j = json::parse(error_payload(e.diagnostics().front()));
    EXPECT_EQ(j["error"]["kind"], "ParseError");
    EXPECT_EQ(j["error"]["message"], "expected ']', found ';'");
    EXPECT_EQ(j["error"]["span"]["startLine"], 2);
    EXPECT_EQ(j["error"]["span"]["startColumn"], 15);
  }
}

TEST(Payload, AstDocument) {
  json j = json::parse(ast_payload(*parse("a = 1;\n%cube(a);")));
  EXPECT_EQ(j["type"], "block");
  ASSERT_EQ(j["children"].size(), 2u);
  EXPECT_EQ(j["children"][0]["type"], "assignment");
  EXPECT_EQ(j["children"][1]["modifier"], "%");
  EXPECT_EQ(j["children"][1]["args"][0]["value"]["name"], "a");
}

}  // namespace
}  // namespace parascad
