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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parascad/csg.h"

namespace parascad {

using Vec3 = std::array<double, 3>;

/// Row-major affine transform.
struct Mat4 {
  std::array<double, 16> m{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};

  static Mat4 translation(const Vec3& t);
  /// Rotation by Euler angles in degrees, applied x then y then z.
  static Mat4 rotation(const Vec3& degrees);
  static Mat4 scaling(const Vec3& s);

  Mat4 operator*(const Mat4& rhs) const;
  Vec3 apply(const Vec3& p) const;
};

/// Matrix of a single node; identity for everything but transforms.
Mat4 node_matrix(const CsgNode& node);

/// Product of the matrices from the root down to the node at `path`,
/// including the node's own matrix when `include_self` is set.
Mat4 world_matrix(const CsgNode& root, const NodePath& path, bool include_self);

/// Grid coordinates of a handle: (i,j,k) for 3D primitives, (i,j) for 2D
/// primitives, `center` for everything else. Each coordinate is 0, 1 or 2
/// along its axis (min, middle, max).
struct HandleId {
  enum class Kind { Grid3, Grid2, Center };
  Kind kind = Kind::Center;
  std::array<int, 3> ijk{1, 1, 1};

  static HandleId center() { return {}; }
  static HandleId grid(int i, int j, int k) { return {Kind::Grid3, {i, j, k}}; }
  static HandleId grid(int i, int j) { return {Kind::Grid2, {i, j, 1}}; }

  bool operator==(const HandleId&) const = default;
};

std::string to_string(const HandleId& id);
/// Accepts `i,j,k`, `i,j` and `center`. Throws InvalidHandle.
HandleId parse_handle_id(std::string_view text);

struct Handle {
  HandleId id;
  std::array<ExprPtr, 3> offset;  // node-local, symbolic in size bindings
  Vec3 numeric_offset{};
};

/// 27 handles for 3D primitives, 9 for 2D primitives, a single `center`
/// handle otherwise.
std::vector<Handle> handle_grid(const CsgNode& node);

/// For primitives `center` names the middle grid point. Throws InvalidHandle.
Handle find_handle(const CsgNode& node, const HandleId& id);

/// A handle position or a difference of two. `symbolic` is absent when a
/// rotate or scale sits above the selection; `diagnostics` says which.
struct DerivedVector {
  std::optional<std::array<ExprPtr, 3>> symbolic;
  Vec3 numeric{};
  std::vector<Diagnostic> diagnostics;
};

DerivedVector derive_position(const CsgNode& root, const NodePath& path,
                              const HandleId& handle);

/// Destination minus origin.
DerivedVector derive_delta(const CsgNode& root, const NodePath& from_path,
                           const HandleId& from_handle, const NodePath& to_path,
                           const HandleId& to_handle);

/// `[a, b, c]` with canonical component text.
std::string render_vector(const std::array<ExprPtr, 3>& v);

}  // namespace parascad
