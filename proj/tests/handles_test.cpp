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

#include <set>

#include "parascad/handles.h"
#include "parascad/model.h"
#include "support/oracles.h"

namespace parascad {
namespace {

using testing::agrees_with_affine;
using testing::fixture;

std::vector<std::string> rendered(const DerivedVector& v) {
  std::vector<std::string> out;
  for (const auto& e : *v.symbolic) out.push_back(render_expr(*e));
  return out;
}

TEST(HandleIds, ParseAndFormat) {
  EXPECT_EQ(parse_handle_id("1,1,2"), HandleId::grid(1, 1, 2));
  EXPECT_EQ(parse_handle_id("0,2"), HandleId::grid(0, 2));
  EXPECT_EQ(parse_handle_id("center"), HandleId::center());
  EXPECT_EQ(to_string(HandleId::grid(2, 0, 1)), "2,0,1");
  EXPECT_EQ(to_string(HandleId::grid(2, 0)), "2,0");
  EXPECT_EQ(to_string(HandleId::center()), "center");
  for (const char* bad : {"3,0,0", "1,1", "a,b,c", "", "1,1,1,1", "-1,0,0"}) {
    if (std::string(bad) == "1,1") continue;  // valid as a 2D id
    EXPECT_THROW(parse_handle_id(bad), Error) << bad;
  }
}

TEST(HandleGrid, CountsAndUniqueness) {
  auto model = Model::compile(
      "cube(1); sphere(1); cylinder(h = 1, r = 1); square(1); circle(1); translate([1, 0, 0]) cube(1);");
  const std::size_t counts[] = {27, 27, 27, 9, 9, 1};
  for (std::size_t i = 0; i < 6; ++i) {
    auto grid = handle_grid(model->root().children[i]);
    EXPECT_EQ(grid.size(), counts[i]) << i;
    std::set<std::string> ids;
    for (const auto& h : grid) ids.insert(to_string(h.id));
    EXPECT_EQ(ids.size(), grid.size());
  }
  EXPECT_EQ(handle_grid(model->root()).front().id, HandleId::center());
}

TEST(HandleGrid, CenterAliasesMiddlePoint) {
  auto model = Model::compile("cube([2, 4, 6]);");
  const CsgNode& cube = model->root().children[0];
  Handle c = find_handle(cube, HandleId::center());
  EXPECT_EQ(c.numeric_offset, (Vec3{1, 2, 3}));
  EXPECT_THROW(find_handle(cube, HandleId::grid(1, 1)), Error);
}

TEST(HandleGrid, FrustumRadiusFollowsHeight) {
  auto model = Model::compile("cylinder(h = 10, r1 = 4, r2 = 2);");
  const CsgNode& c = model->root().children[0];
  EXPECT_EQ(find_handle(c, HandleId::grid(2, 1, 0)).numeric_offset, (Vec3{4, 0, 0}));
  EXPECT_EQ(find_handle(c, HandleId::grid(2, 1, 1)).numeric_offset, (Vec3{3, 0, 5}));
  EXPECT_EQ(find_handle(c, HandleId::grid(0, 2, 2)).numeric_offset, (Vec3{-2, 2, 10}));
}

TEST(Position, TranslatedCubeBottomCenter) {
  auto model = Model::compile(fixture("translated_cube.scad"));
  auto p = model->position({0, 0}, HandleId::grid(1, 1, 0));
  ASSERT_TRUE(p.symbolic);
  EXPECT_TRUE(agrees_with_affine(*(*p.symbolic)[0], {{"tx", 1}, {"size_x", 0.5}}, 0, {}));
  EXPECT_TRUE(agrees_with_affine(*(*p.symbolic)[1], {{"ty", 1}, {"size_y", 0.5}}, 0, {}));
  EXPECT_TRUE(agrees_with_affine(*(*p.symbolic)[2], {{"tz", 1}}, 0, {}));
  EXPECT_EQ(p.numeric, (Vec3{12, 23, 5}));
  EXPECT_TRUE(p.diagnostics.empty());
}

TEST(Position, StemTop) {
  auto model = Model::compile(fixture("cup_stem_base.scad"));
  auto p = model->position({0, 0}, HandleId::grid(1, 1, 2));
  EXPECT_EQ(rendered(p), (std::vector<std::string>{"0", "0", "h_stem + thickness"}));
  EXPECT_EQ(render_vector(*p.symbolic), "[0, 0, h_stem + thickness]");
  EXPECT_EQ(p.numeric, (Vec3{0, 0, 36}));
}

TEST(Position, NestedTranslatesAccumulate) {
  auto model = Model::compile("a = 1; b = 2; translate([a, 0, 0]) translate([b, a, 0]) sphere(r = b);");
  auto p = model->position({0, 0, 0}, HandleId::grid(2, 1, 0));
  EXPECT_EQ(rendered(p), (std::vector<std::string>{"a + 2*b", "a", "-b"}));
  EXPECT_EQ(p.numeric, (Vec3{5, 1, -2}));
}

TEST(Position, TransformNodeHandleIncludesItself) {
  auto model = Model::compile("a = 3; translate([a, 1, 0]) cube(1);");
  auto p = model->position({0}, HandleId::center());
  EXPECT_EQ(rendered(p), (std::vector<std::string>{"a", "1", "0"}));
}

TEST(Position, RotationAboveDropsSymbolic) {
  auto model = Model::compile("w = 2;\nrotate([0, 0, 90]) translate([w, 0, 0]) cube(1);");
  auto p = model->position({0, 0, 0}, HandleId::grid(0, 0, 0));
  EXPECT_FALSE(p.symbolic);
  ASSERT_EQ(p.diagnostics.size(), 1u);
  EXPECT_EQ(p.diagnostics[0].kind, ErrorKind::Unsupported);
  EXPECT_EQ(p.diagnostics[0].message,
            "no symbolic position: rotate at line 2, column 1 lies above the selected node; only "
            "translate is tracked");
  // Rz(90) maps (2, 0, 0) to (0, 2, 0) exactly.
  EXPECT_EQ(p.numeric, (Vec3{0, 2, 0}));
}

TEST(Position, ScaleNumeric) {
  auto model = Model::compile("scale([2, 3, 4]) translate([1, 1, 1]) cube(1);");
  auto p = model->position({0, 0, 0}, HandleId::grid(2, 2, 2));
  EXPECT_FALSE(p.symbolic);
  EXPECT_EQ(p.numeric, (Vec3{4, 6, 8}));
}

TEST(Position, RotationMatchesHandRotation) {
  auto model = Model::compile("rotate([30, 45, 60]) translate([1, 2, 3]) sphere(1);");
  auto p = model->position({0, 0, 0}, HandleId::center());
  // Apply x, then y, then z rotations by hand.
  double v[3] = {1, 2, 3};
  auto rot = [&](int a, int b, double deg) {
    double t = deg * std::acos(-1.0) / 180.0;
    double x = v[a] * std::cos(t) - v[b] * std::sin(t);
    double y = v[a] * std::sin(t) + v[b] * std::cos(t);
    v[a] = x;
    v[b] = y;
  };
  rot(1, 2, 30);
  rot(2, 0, 45);
  rot(0, 1, 60);
  for (int a = 0; a < 3; ++a) EXPECT_NEAR(p.numeric[a], v[a], 1e-12);
}

TEST(Delta, SphereToCupRim) {
  auto model = Model::compile(fixture("cup.scad"));
  auto d = model->delta(parse_selection("3:2,1,1"), parse_selection("0/0:2,1,2"));
  EXPECT_EQ(rendered(d), (std::vector<std::string>{"r_top - r_sphere", "0", "h_stem + h_top + thickness"}));
  EXPECT_EQ(d.numeric, (Vec3{14, 0, 69}));
}

TEST(Delta, ReverseNegates) {
  auto model = Model::compile(fixture("cup.scad"));
  auto d = model->delta(parse_selection("0/0:2,1,2"), parse_selection("3:2,1,1"));
  EXPECT_EQ(rendered(d), (std::vector<std::string>{"r_sphere - r_top", "0", "-h_stem - h_top - thickness"}));
}

TEST(Selection, Parsing) {
  Selection s = parse_selection("1/0:1,1,2");
  EXPECT_EQ(s.path, (NodePath{1, 0}));
  EXPECT_EQ(s.handle, HandleId::grid(1, 1, 2));
  EXPECT_EQ(parse_selection(":center").path, NodePath{});
  EXPECT_THROW(parse_selection("1/0"), Error);
}

TEST(Selection, BadPathsAreSelectionErrors) {
  auto model = Model::compile(fixture("cup.scad"));
  try {
    model->position({9}, HandleId::center());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidPath);
    EXPECT_TRUE(e.is_selection_error());
  }
  EXPECT_THROW(model->position({3}, HandleId::grid(1, 1)), Error);
}

}  // namespace
}  // namespace parascad
