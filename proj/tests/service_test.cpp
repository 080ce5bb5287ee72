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
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "parascad/service.h"
#include "support/oracles.h"

namespace parascad {
namespace {

using nlohmann::json;
using testing::fixture;

HttpResponse post(const Service& s, const std::string& path, const json& body) {
  return s.handle("POST", path, body.dump());
}

TEST(Service, Position) {
  Service s;
  auto r = post(s, "/position", {{"source", fixture("cup.scad")}, {"node", "1/0"}, {"handle", "1,1,2"}});
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type, "application/json");
  EXPECT_EQ(r.body, "{\"symbolic\":[\"0\",\"0\",\"h_stem + thickness\"],\"numeric\":[0,0,36]}\n");
}

TEST(Service, DeltaAcceptsBothSelectionForms) {
  Service s;
  auto a = post(s, "/delta", {{"source", fixture("cup.scad")}, {"from", "3:2,1,1"}, {"to", "0/0:2,1,2"}});
  auto b = post(s, "/delta",
                {{"source", fixture("cup.scad")},
                 {"from", {{"node", "3"}, {"handle", "2,1,1"}}},
                 {"to", {{"node", "0/0"}, {"handle", "2,1,2"}}}});
  EXPECT_EQ(a.status, 200);
  EXPECT_EQ(a.body, b.body);
  EXPECT_EQ(json::parse(a.body)["symbolic"][0], "r_top - r_sphere");
}

TEST(Service, Compile) {
  Service s;
  auto r = post(s, "/compile", {{"source", "cube(1);"}, {"fn", 8}});
  ASSERT_EQ(r.status, 200);
  json j = json::parse(r.body);
  EXPECT_EQ(j["nodes"].size(), 2u);
  EXPECT_EQ(j["nodes"][1]["mesh"]["triangles"].size(), 36u);
}

TEST(Service, AnalyzeSortsFiles) {
  Service s;
  json files = json::array({{{"path", "b.scad"}, {"source", "cube(x);"}}, {{"path", "a.scad"}, {"source", "cube(1"}}});
  auto r = post(s, "/analyze", {{"files", files}});
  ASSERT_EQ(r.status, 200);
  json j = json::parse(r.body);
  EXPECT_EQ(j["files"], 1);
  EXPECT_EQ(j["grandTotal"], 1);
  ASSERT_EQ(j["errors"].size(), 1u);
  EXPECT_EQ(j["errors"][0]["file"], "a.scad");

  auto csv = post(s, "/analyze", {{"files", files}, {"format", "csv"}});
  EXPECT_EQ(csv.content_type, "text/plain");
  EXPECT_EQ(csv.body.substr(0, 8), "category");
}

TEST(Service, ErrorStatuses) {
  Service s;
  EXPECT_EQ(s.handle("POST", "/position", "not json").status, 400);
  EXPECT_EQ(post(s, "/position", {{"source", "cube(1);"}}).status, 400);
  EXPECT_EQ(post(s, "/position", {{"source", "cube(1);"}, {"node", "0"}, {"handle", "1,1,1"}, {"fn", "x"}}).status,
            400);
  EXPECT_EQ(post(s, "/analyze", {{"files", json::array()}, {"format", "xml"}}).status, 400);
  EXPECT_EQ(s.handle("GET", "/position", "").status, 400);
  EXPECT_EQ(post(s, "/nothing", {{"source", ""}}).status, 404);

  auto parse = post(s, "/compile", {{"source", fixture("broken.scad")}});
  EXPECT_EQ(parse.status, 422);
  json j = json::parse(parse.body);
  EXPECT_EQ(j["error"]["span"]["startLine"], 2);

  auto path = post(s, "/position", {{"source", "cube(1);"}, {"node", "5"}, {"handle", "center"}});
  EXPECT_EQ(path.status, 422);
  EXPECT_EQ(json::parse(path.body)["error"]["kind"], "InvalidPath");
}

TEST(Service, CacheServesRepeatedSources) {
  ServiceOptions o;
  o.cache_capacity = 1;
  Service s(o);
  for (int i = 0; i < 3; ++i) {
    auto a = post(s, "/position", {{"source", "w = 1; cube(w);"}, {"node", "0"}, {"handle", "2,2,2"}});
    auto b = post(s, "/position", {{"source", "w = 2; cube(w);"}, {"node", "0"}, {"handle", "2,2,2"}});
    EXPECT_EQ(json::parse(a.body)["numeric"][0], 1);
    EXPECT_EQ(json::parse(b.body)["numeric"][0], 2);
  }
}

TEST(Service, ConcurrentRequests) {
  Service s;
  std::vector<std::thread> threads;
  std::atomic<int> ok{0};
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (int i = 0; i < 20; ++i) {
        auto r = post(s, "/position",
                      {{"source", "w = " + std::to_string(i % 3 + t) + "; cube(w);"}, {"node", "0"}, {"handle", "2,2,2"}});
        if (json::parse(r.body)["numeric"][0] == i % 3 + t) ++ok;
      }
    });
  for (auto& th : threads) th.join();
  EXPECT_EQ(ok, 80);
}

TEST(Service, HttpRoundTrip) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "parascad_static_test";
  fs::create_directories(dir);
  std::ofstream(dir / "index.html") << "<html>viewer</html>";

  ServiceOptions o;
  o.static_dir = dir.string();
  Service s(o);
  int port = s.bind("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  std::thread server([&] { s.listen(); });
  httplib::Client client("127.0.0.1", port);

  json body{{"source", fixture("cup.scad")}, {"node", "1/0"}, {"handle", "1,1,2"}};
  auto r = client.Post("/position", body.dump(), "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 200);
  EXPECT_EQ(r->body, post(s, "/position", body).body);
  EXPECT_EQ(r->get_header_value("Access-Control-Allow-Origin"), "*");

  auto bad = client.Post("/compile", "{", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);

  auto page = client.Get("/index.html");
  ASSERT_TRUE(page);
  EXPECT_EQ(page->body, "<html>viewer</html>");

  auto pre = client.Options("/position");
  ASSERT_TRUE(pre);
  EXPECT_EQ(pre->status, 204);

  s.stop();
  server.join();
  fs::remove_all(dir);
}

}  // namespace
}  // namespace parascad
