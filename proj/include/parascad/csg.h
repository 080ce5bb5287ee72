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
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "parascad/diagnostics.h"
#include "parascad/expr.h"
#include "parascad/lang.h"

namespace parascad {

/// A parameter value as both the authored definition and its number.
/// `symbolic` refers only to global variables and literals, so it can be
/// pasted at top level of the source.
struct ParamBinding {
  ExprPtr symbolic;
  double numeric = 0.0;
};

enum class Shape { Cube, Sphere, Cylinder, Square, Circle };
enum class TransformKind { Translate, Rotate, Scale };
enum class BooleanOp { Union, Difference, Intersection };

std::string_view shape_name(Shape s);
std::string_view transform_name(TransformKind k);
std::string_view boolean_name(BooleanOp op);
bool is_3d(Shape s);

namespace csg {

/// Size parameters per shape:
///   cube     [size_x, size_y, size_z]
///   sphere   [r]
///   cylinder [d1, d2, h]   (bottom diameter, top diameter, height)
///   square   [size_x, size_y]
///   circle   [r]
struct Primitive {
  Shape shape;
  std::vector<ParamBinding> size;
  bool center = false;
  int fn = 32;
};

struct Transform {
  TransformKind kind;
  std::array<ParamBinding, 3> vector;
};

struct Boolean {
  BooleanOp op;
};

/// Implicit grouping: program root, loops, conditionals, blocks and user
/// module calls. `origin` says which.
struct Group {
  std::string origin;
};

}  // namespace csg

struct NodeFlags {
  bool background = false;
  bool debug = false;
  bool subtracted = false;
  bool operator==(const NodeFlags&) const = default;
};

using NodePath = std::vector<std::size_t>;

std::string path_to_string(const NodePath& path);
/// Parses `1/0/2`; the empty string and `/` denote the root.
NodePath parse_path(std::string_view text);

struct CsgNode {
  using Kind = std::variant<csg::Primitive, csg::Transform, csg::Boolean, csg::Group>;

  Kind kind;
  std::vector<CsgNode> children;
  NodePath path;
  SourceSpan span;
  NodeFlags flags;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&kind);
  }
  bool is_primitive() const { return as<csg::Primitive>() != nullptr; }
  /// cube, translate, union, group, ...
  std::string kind_name() const;
  /// Named parameter bindings for display (size params or transform vector).
  std::vector<std::pair<std::string, const ParamBinding*>> named_params() const;
};

/// Top-level assignments in source order, evaluated once; later assignments
/// to the same name overwrite earlier ones.
struct GlobalEnvironment {
  Environment values;
  std::vector<std::string> names;  // first-assignment order, no `$` names
};

struct EvaluationOptions {
  int default_fn = 32;
  int max_module_depth = 64;
};

struct EvaluatedProgram {
  std::shared_ptr<const CsgNode> root;
  GlobalEnvironment globals;
  std::vector<Diagnostic> warnings;
};

/// Builds the CSG tree: loops unrolled, modules inlined, conditionals
/// resolved. Throws Error on unbound names, unknown modules, recursion past
/// the limit or non-finite parameters.
EvaluatedProgram evaluate_program(const AstNode& root,
                                  const EvaluationOptions& options = {});

/// Throws InvalidPath.
const CsgNode& node_at_path(const CsgNode& root, const NodePath& path);
/// Root first, target last.
std::vector<const CsgNode*> ancestry(const CsgNode& root, const NodePath& path);

/// Visits every node depth-first, parents before children.
void for_each_node(const CsgNode& root, const std::function<void(const CsgNode&)>& fn);

}  // namespace parascad
