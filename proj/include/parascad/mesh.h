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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parascad/csg.h"
#include "parascad/handles.h"

namespace parascad {

/// Indexed triangle mesh, counterclockwise winding seen from outside.
struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
};

/// Mesh in the primitive's local frame. Cube and cylinder sit on z = 0 unless
/// centered; spheres and circles are centered on the origin; 2D shapes are
/// flat at z = 0 with both faces present. Throws DegenerateGeometry for
/// nonpositive sizes.
TriMesh tessellate(const csg::Primitive& primitive);

/// Applies `m` to every vertex, reversing winding for mirroring transforms.
TriMesh transformed(const TriMesh& mesh, const Mat4& m);

struct SceneParam {
  std::string name;
  double value = 0.0;
  std::string symbolic;
};

struct SceneHandle {
  HandleId id;
  Vec3 position{};  // world space
  std::optional<std::array<std::string, 3>> symbolic;
};

struct SceneNode {
  NodePath path;
  std::string kind;
  std::string origin;  // for groups: root, for, module <name>, ...
  SourceSpan span;
  NodeFlags flags;
  std::vector<SceneParam> params;
  std::vector<SceneHandle> handles;
  std::optional<TriMesh> mesh;  // world space; primitives only
};

struct SceneVariable {
  std::string name;
  double value = 0.0;
};

/// Everything a viewer needs: nodes in depth-first order with their
/// handles and meshes, plus the global variables.
struct Scene {
  std::vector<SceneVariable> variables;
  std::vector<SceneNode> nodes;
  std::vector<Diagnostic> diagnostics;
};

Scene assemble_scene(const EvaluatedProgram& program);

/// Binary STL of the solid part of the scene: subtracted and background
/// nodes are left out.
std::vector<std::uint8_t> export_stl(const Scene& scene);
std::vector<std::uint8_t> export_stl(const std::vector<TriMesh>& meshes);

}  // namespace parascad
