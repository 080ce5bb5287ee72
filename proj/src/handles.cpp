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

#include "parascad/handles.h"

#include <charconv>

namespace parascad {

Mat4 Mat4::translation(const Vec3& t) {
  Mat4 r;
  r.m[3] = t[0];
  r.m[7] = t[1];
  r.m[11] = t[2];
  return r;
}

Mat4 Mat4::rotation(const Vec3& deg) {
  double cx = cos_degrees(deg[0]), sx = sin_degrees(deg[0]);
  double cy = cos_degrees(deg[1]), sy = sin_degrees(deg[1]);
  double cz = cos_degrees(deg[2]), sz = sin_degrees(deg[2]);
  Mat4 rx, ry, rz;
  rx.m = {1, 0, 0, 0, 0, cx, -sx, 0, 0, sx, cx, 0, 0, 0, 0, 1};
  ry.m = {cy, 0, sy, 0, 0, 1, 0, 0, -sy, 0, cy, 0, 0, 0, 0, 1};
  rz.m = {cz, -sz, 0, 0, sz, cz, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
  return rz * ry * rx;
}

Mat4 Mat4::scaling(const Vec3& s) {
  Mat4 r;
  r.m[0] = s[0];
  r.m[5] = s[1];
  r.m[10] = s[2];
  return r;
}

Mat4 Mat4::operator*(const Mat4& rhs) const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 4; ++k) sum += m[i * 4 + k] * rhs.m[k * 4 + j];
      r.m[i * 4 + j] = sum;
    }
  return r;
}

Vec3 Mat4::apply(const Vec3& p) const {
  Vec3 r;
  for (int i = 0; i < 3; ++i)
    r[i] = m[i * 4] * p[0] + m[i * 4 + 1] * p[1] + m[i * 4 + 2] * p[2] + m[i * 4 + 3];
  return r;
}

Mat4 node_matrix(const CsgNode& node) {
  const auto* t = node.as<csg::Transform>();
  if (!t) return {};
  Vec3 v{t->vector[0].numeric, t->vector[1].numeric, t->vector[2].numeric};
  switch (t->kind) {
    case TransformKind::Translate: return Mat4::translation(v);
    case TransformKind::Rotate: return Mat4::rotation(v);
    case TransformKind::Scale: return Mat4::scaling(v);
  }
  return {};
}

Mat4 world_matrix(const CsgNode& root, const NodePath& path, bool include_self) {
  auto chain = ancestry(root, path);
  if (!include_self) chain.pop_back();
  Mat4 m;
  for (const CsgNode* n : chain) m = m * node_matrix(*n);
  return m;
}

std::string to_string(const HandleId& id) {
  switch (id.kind) {
    case HandleId::Kind::Center: return "center";
    case HandleId::Kind::Grid2:
      return std::to_string(id.ijk[0]) + "," + std::to_string(id.ijk[1]);
    case HandleId::Kind::Grid3:
      return std::to_string(id.ijk[0]) + "," + std::to_string(id.ijk[1]) + "," +
             std::to_string(id.ijk[2]);
  }
  return "";
}

HandleId parse_handle_id(std::string_view text) {
  if (text == "center") return HandleId::center();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
    int v = -1;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || v < 0 ||
        v > 2)
      throw Error(ErrorKind::InvalidHandle,
                  "malformed handle id '" + std::string(text) +
                      "' (expected i,j,k with each in 0..2, or center)");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (parts.size() == 3) return HandleId::grid(parts[0], parts[1], parts[2]);
  if (parts.size() == 2) return HandleId::grid(parts[0], parts[1]);
  throw Error(ErrorKind::InvalidHandle, "malformed handle id '" + std::string(text) + "'");
}

namespace {

struct AxisLevels {
  std::array<ExprPtr, 3> expr;
  std::array<double, 3> value;
};

ExprPtr half(const ExprPtr& e) { return binary(BinaryOp::Div, e, number(2)); }

// Extent s: {0, s/2, s}, or {-s/2, 0, s/2} when centered.
AxisLevels box_axis(const ParamBinding& s, bool centered) {
  if (centered)
    return {{-half(s.symbolic), number(0), half(s.symbolic)},
            {-s.numeric / 2, 0.0, s.numeric / 2}};
  return {{number(0), half(s.symbolic), s.symbolic}, {0.0, s.numeric / 2, s.numeric}};
}

AxisLevels radius_axis(const ExprPtr& r, double value) {
  return {{-r, number(0), r}, {-value, 0.0, value}};
}

Handle make(HandleId id, const std::array<const AxisLevels*, 3>& axes) {
  Handle h;
  h.id = id;
  for (int a = 0; a < 3; ++a) {
    if (!axes[a]) {
      h.offset[a] = number(0);
      h.numeric_offset[a] = 0.0;
      continue;
    }
    h.offset[a] = axes[a]->expr[id.ijk[a]];
    h.numeric_offset[a] = axes[a]->value[id.ijk[a]];
  }
  return h;
}

}  // namespace

std::vector<Handle> handle_grid(const CsgNode& node) {
  std::vector<Handle> out;
  const auto* p = node.as<csg::Primitive>();
  if (!p) {
    Handle h;
    h.id = HandleId::center();
    h.offset = {number(0), number(0), number(0)};
    out.push_back(std::move(h));
    return out;
  }
  switch (p->shape) {
    case Shape::Cube: {
      AxisLevels x = box_axis(p->size[0], p->center);
      AxisLevels y = box_axis(p->size[1], p->center);
      AxisLevels z = box_axis(p->size[2], p->center);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) out.push_back(make(HandleId::grid(i, j, k), {&x, &y, &z}));
      break;
    }
    case Shape::Sphere: {
      AxisLevels r = radius_axis(p->size[0].symbolic, p->size[0].numeric);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) out.push_back(make(HandleId::grid(i, j, k), {&r, &r, &r}));
      break;
    }
    case Shape::Cylinder: {
      const ParamBinding& d1 = p->size[0];
      const ParamBinding& d2 = p->size[1];
      AxisLevels z = box_axis(p->size[2], p->center);
      std::array<AxisLevels, 3> levels = {
          radius_axis(half(d1.symbolic), d1.numeric / 2),
          radius_axis(half(half(d1.symbolic + d2.symbolic)), (d1.numeric + d2.numeric) / 4),
          radius_axis(half(d2.symbolic), d2.numeric / 2)};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            out.push_back(make(HandleId::grid(i, j, k), {&levels[k], &levels[k], &z}));
      break;
    }
    case Shape::Square: {
      AxisLevels x = box_axis(p->size[0], p->center);
      AxisLevels y = box_axis(p->size[1], p->center);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.push_back(make(HandleId::grid(i, j), {&x, &y, nullptr}));
      break;
    }
    case Shape::Circle: {
      AxisLevels r = radius_axis(p->size[0].symbolic, p->size[0].numeric);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.push_back(make(HandleId::grid(i, j), {&r, &r, nullptr}));
      break;
    }
  }
  return out;
}

Handle find_handle(const CsgNode& node, const HandleId& id) {
  HandleId wanted = id;
  if (const auto* p = node.as<csg::Primitive>(); p && id.kind == HandleId::Kind::Center)
    wanted = is_3d(p->shape) ? HandleId::grid(1, 1, 1) : HandleId::grid(1, 1);
  for (Handle& h : handle_grid(node))
    if (h.id == wanted) {
      h.id = id;
      return h;
    }
  std::string expected = "center";
  if (const auto* p = node.as<csg::Primitive>())
    expected = is_3d(p->shape) ? "i,j,k or center" : "i,j or center";
  throw Error(ErrorKind::InvalidHandle,
              "handle '" + to_string(id) + "' does not exist on " + node.kind_name() +
                  " node '" + path_to_string(node.path) + "' (expected " + expected + ")",
              node.span);
}

DerivedVector derive_position(const CsgNode& root, const NodePath& path,
                              const HandleId& handle) {
  auto chain = ancestry(root, path);
  const CsgNode& node = *chain.back();
  Handle h = find_handle(node, handle);

  DerivedVector out;
  Mat4 m;
  for (const CsgNode* n : chain) m = m * node_matrix(*n);
  out.numeric = m.apply(h.numeric_offset);

  std::array<ExprPtr, 3> sum = h.offset;
  bool symbolic = true;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto* t = chain[i]->as<csg::Transform>();
    if (!t) continue;
    bool self = i + 1 == chain.size();
    if (t->kind == TransformKind::Translate) {
      for (int a = 0; a < 3; ++a) sum[a] = t->vector[a].symbolic + sum[a];
    } else if (!self) {
      symbolic = false;
      const SourceSpan& s = chain[i]->span;
      out.diagnostics.push_back(
          {ErrorKind::Unsupported,
           "no symbolic position: " + chain[i]->kind_name() + " at line " +
               std::to_string(s.start_line) + ", column " + std::to_string(s.start_column) +
               " lies above the selected node; only translate is tracked",
           s});
    }
  }
  if (symbolic) {
    std::array<ExprPtr, 3> simplified;
    for (int a = 0; a < 3; ++a) simplified[a] = simplify(sum[a]);
    out.symbolic = simplified;
  }
  return out;
}

DerivedVector derive_delta(const CsgNode& root, const NodePath& from_path,
                           const HandleId& from_handle, const NodePath& to_path,
                           const HandleId& to_handle) {
  DerivedVector from = derive_position(root, from_path, from_handle);
  DerivedVector to = derive_position(root, to_path, to_handle);
  DerivedVector out;
  for (int a = 0; a < 3; ++a) out.numeric[a] = to.numeric[a] - from.numeric[a];
  if (from.symbolic && to.symbolic) {
    std::array<ExprPtr, 3> d;
    for (int a = 0; a < 3; ++a) d[a] = simplify((*to.symbolic)[a] - (*from.symbolic)[a]);
    out.symbolic = d;
  }
  out.diagnostics = std::move(from.diagnostics);
  out.diagnostics.insert(out.diagnostics.end(), to.diagnostics.begin(), to.diagnostics.end());
  return out;
}

std::string render_vector(const std::array<ExprPtr, 3>& v) {
  return "[" + render_expr(*v[0]) + ", " + render_expr(*v[1]) + ", " + render_expr(*v[2]) +
         "]";
}

}  // namespace parascad
