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

#include "parascad/mesh.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <numbers>

namespace parascad {

namespace {

using Tri = std::array<std::uint32_t, 3>;

std::uint32_t add(TriMesh& m, double x, double y, double z) {
  m.vertices.push_back({x, y, z});
  return static_cast<std::uint32_t>(m.vertices.size() - 1);
}

Vec3 ring_point(int i, int n, double r, double z) {
  double t = 2.0 * std::numbers::pi * i / n;
  return {r * std::cos(t), r * std::sin(t), z};
}

void require_positive(const csg::Primitive& p, double v, const char* what) {
  if (!(v > 0.0))
    throw Error(ErrorKind::DegenerateGeometry, std::string(shape_name(p.shape)) + " has " +
                                                   what + " " + format_number(v) +
                                                   "; nothing to draw");
}

TriMesh cube(const csg::Primitive& p) {
  double sx = p.size[0].numeric, sy = p.size[1].numeric, sz = p.size[2].numeric;
  require_positive(p, std::min({sx, sy, sz}), "size");
  double ox = p.center ? -sx / 2 : 0, oy = p.center ? -sy / 2 : 0, oz = p.center ? -sz / 2 : 0;
  TriMesh m;
  for (int v = 0; v < 8; ++v)
    add(m, ox + (v & 1 ? sx : 0), oy + (v & 2 ? sy : 0), oz + (v & 4 ? sz : 0));
  // Vertex bit 0 = +x, bit 1 = +y, bit 2 = +z.
  m.triangles = {{0, 2, 3}, {0, 3, 1},   // -z
                 {4, 5, 7}, {4, 7, 6},   // +z
                 {0, 1, 5}, {0, 5, 4},   // -y
                 {2, 6, 7}, {2, 7, 3},   // +y
                 {0, 4, 6}, {0, 6, 2},   // -x
                 {1, 3, 7}, {1, 7, 5}};  // +x
  return m;
}

TriMesh sphere(const csg::Primitive& p) {
  double r = p.size[0].numeric;
  require_positive(p, r, "radius");
  int slices = p.fn;
  int stacks = std::max(2, p.fn / 2);
  TriMesh m;
  std::uint32_t north = add(m, 0, 0, r);
  for (int s = 1; s < stacks; ++s) {
    double phi = std::numbers::pi * s / stacks;
    for (int i = 0; i < slices; ++i) {
      Vec3 q = ring_point(i, slices, r * std::sin(phi), r * std::cos(phi));
      add(m, q[0], q[1], q[2]);
    }
  }
  std::uint32_t south = add(m, 0, 0, -r);
  auto at = [&](int ring, int i) {
    return static_cast<std::uint32_t>(1 + ring * slices + (i % slices));
  };
  for (int i = 0; i < slices; ++i) m.triangles.push_back({north, at(0, i), at(0, i + 1)});
  for (int s = 0; s + 1 < stacks - 1; ++s)
    for (int i = 0; i < slices; ++i) {
      m.triangles.push_back({at(s, i), at(s + 1, i), at(s + 1, i + 1)});
      m.triangles.push_back({at(s, i), at(s + 1, i + 1), at(s, i + 1)});
    }
  for (int i = 0; i < slices; ++i)
    m.triangles.push_back({south, at(stacks - 2, i + 1), at(stacks - 2, i)});
  return m;
}

TriMesh cylinder(const csg::Primitive& p) {
  double r1 = p.size[0].numeric / 2, r2 = p.size[1].numeric / 2, h = p.size[2].numeric;
  require_positive(p, h, "height");
  if (r1 < 0 || r2 < 0) require_positive(p, std::min(r1, r2) * 2, "diameter");
  require_positive(p, std::max(r1, r2) * 2, "diameter");
  double z0 = p.center ? -h / 2 : 0, z1 = z0 + h;
  int n = p.fn;
  TriMesh m;
  auto ring = [&](double r, double z) -> std::vector<std::uint32_t> {
    if (r == 0.0) return std::vector<std::uint32_t>(n, add(m, 0, 0, z));
    std::vector<std::uint32_t> ids;
    for (int i = 0; i < n; ++i) {
      Vec3 q = ring_point(i, n, r, z);
      ids.push_back(add(m, q[0], q[1], q[2]));
    }
    return ids;
  };
  auto bottom = ring(r1, z0);
  auto top = ring(r2, z1);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    if (r1 > 0) m.triangles.push_back({bottom[i], bottom[j], top[j]});
    if (r2 > 0) m.triangles.push_back({bottom[i], top[j], top[i]});
  }
  if (r1 > 0) {
    std::uint32_t c = add(m, 0, 0, z0);
    for (int i = 0; i < n; ++i) m.triangles.push_back({c, bottom[(i + 1) % n], bottom[i]});
  }
  if (r2 > 0) {
    std::uint32_t c = add(m, 0, 0, z1);
    for (int i = 0; i < n; ++i) m.triangles.push_back({c, top[i], top[(i + 1) % n]});
  }
  return m;
}

void add_back_faces(TriMesh& m) {
  std::size_t n = m.triangles.size();
  for (std::size_t i = 0; i < n; ++i) {
    Tri t = m.triangles[i];
    m.triangles.push_back({t[0], t[2], t[1]});
  }
}

TriMesh square(const csg::Primitive& p) {
  double sx = p.size[0].numeric, sy = p.size[1].numeric;
  require_positive(p, std::min(sx, sy), "size");
  double ox = p.center ? -sx / 2 : 0, oy = p.center ? -sy / 2 : 0;
  TriMesh m;
  add(m, ox, oy, 0);
  add(m, ox + sx, oy, 0);
  add(m, ox + sx, oy + sy, 0);
  add(m, ox, oy + sy, 0);
  m.triangles = {{0, 1, 2}, {0, 2, 3}};
  add_back_faces(m);
  return m;
}

TriMesh circle(const csg::Primitive& p) {
  double r = p.size[0].numeric;
  require_positive(p, r, "radius");
  TriMesh m;
  std::uint32_t c = add(m, 0, 0, 0);
  for (int i = 0; i < p.fn; ++i) {
    Vec3 q = ring_point(i, p.fn, r, 0);
    add(m, q[0], q[1], 0);
  }
  for (int i = 0; i < p.fn; ++i)
    m.triangles.push_back({c, static_cast<std::uint32_t>(1 + i),
                           static_cast<std::uint32_t>(1 + (i + 1) % p.fn)});
  add_back_faces(m);
  return m;
}

double determinant3(const Mat4& t) {
  const auto& a = t.m;
  return a[0] * (a[5] * a[10] - a[6] * a[9]) - a[1] * (a[4] * a[10] - a[6] * a[8]) +
         a[2] * (a[4] * a[9] - a[5] * a[8]);
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f32(std::vector<std::uint8_t>& out, double v) {
  put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
}

}  // namespace

TriMesh tessellate(const csg::Primitive& p) {
  switch (p.shape) {
    case Shape::Cube: return cube(p);
    case Shape::Sphere: return sphere(p);
    case Shape::Cylinder: return cylinder(p);
    case Shape::Square: return square(p);
    case Shape::Circle: return circle(p);
  }
  return {};
}

TriMesh transformed(const TriMesh& mesh, const Mat4& m) {
  TriMesh out;
  out.vertices.reserve(mesh.vertices.size());
  for (const Vec3& v : mesh.vertices) out.vertices.push_back(m.apply(v));
  out.triangles = mesh.triangles;
  if (determinant3(m) < 0)
    for (Tri& t : out.triangles) std::swap(t[1], t[2]);
  return out;
}

Scene assemble_scene(const EvaluatedProgram& program) {
  Scene scene;
  for (const auto& name : program.globals.names)
    scene.variables.push_back({name, program.globals.values.lookup(name)});
  scene.diagnostics = program.warnings;

  const CsgNode& root = *program.root;
  for_each_node(root, [&](const CsgNode& node) {
    SceneNode entry;
    entry.path = node.path;
    entry.kind = node.kind_name();
    if (const auto* g = node.as<csg::Group>()) entry.origin = g->origin;
    entry.span = node.span;
    entry.flags = node.flags;
    for (const auto& [name, binding] : node.named_params())
      entry.params.push_back({name, binding->numeric, render_expr(*binding->symbolic)});
    for (const Handle& h : handle_grid(node)) {
      DerivedVector pos = derive_position(root, node.path, h.id);
      SceneHandle sh{h.id, pos.numeric, std::nullopt};
      if (pos.symbolic)
        sh.symbolic = std::array<std::string, 3>{render_expr(*(*pos.symbolic)[0]),
                                                 render_expr(*(*pos.symbolic)[1]),
                                                 render_expr(*(*pos.symbolic)[2])};
      entry.handles.push_back(std::move(sh));
    }
    if (const auto* p = node.as<csg::Primitive>()) {
      try {
        entry.mesh = transformed(tessellate(*p), world_matrix(root, node.path, false));
      } catch (const Error& e) {
        entry.mesh = TriMesh{};
        Diagnostic d = e.diagnostic();
        d.span = node.span;
        scene.diagnostics.push_back(std::move(d));
      }
    }
    scene.nodes.push_back(std::move(entry));
  });
  return scene;
}

std::vector<std::uint8_t> export_stl(const std::vector<TriMesh>& meshes) {
  std::size_t count = 0;
  for (const auto& m : meshes) count += m.triangles.size();
  std::vector<std::uint8_t> out;
  out.reserve(84 + 50 * count);
  const char header[] = "parascad binary STL";
  out.insert(out.end(), header, header + sizeof header - 1);
  out.resize(80, 0);
  put_u32(out, static_cast<std::uint32_t>(count));
  for (const auto& m : meshes)
    for (const Tri& t : m.triangles) {
      const Vec3& a = m.vertices[t[0]];
      const Vec3& b = m.vertices[t[1]];
      const Vec3& c = m.vertices[t[2]];
      Vec3 u{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
      Vec3 v{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
      Vec3 n{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
      double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
      for (double x : n) put_f32(out, len > 0 ? x / len : 0.0);
      for (const Vec3* p : {&a, &b, &c})
        for (double x : *p) put_f32(out, x);
      out.push_back(0);
      out.push_back(0);
    }
  return out;
}

std::vector<std::uint8_t> export_stl(const Scene& scene) {
  std::vector<TriMesh> solids;
  for (const auto& n : scene.nodes)
    if (n.mesh && !n.flags.subtracted && !n.flags.background) solids.push_back(*n.mesh);
  return export_stl(solids);
}

}  // namespace parascad
