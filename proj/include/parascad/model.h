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

#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "parascad/csg.h"
#include "parascad/handles.h"
#include "parascad/lang.h"
#include "parascad/mesh.h"

namespace parascad {

/// A node and one of its handles, written `PATH:ID` (e.g. `1/0:1,1,2`).
struct Selection {
  NodePath path;
  HandleId handle;
};

/// Throws InvalidPath or InvalidHandle.
Selection parse_selection(std::string_view text);

/// A parsed and evaluated program. Immutable once built; the scene is
/// assembled on first use.
class Model {
 public:
  /// Throws ParseError or Error.
  static std::shared_ptr<const Model> compile(std::string_view source,
                                              const EvaluationOptions& options = {});

  const AstNode& ast() const { return *ast_; }
  const EvaluatedProgram& program() const { return program_; }
  const CsgNode& root() const { return *program_.root; }
  const Scene& scene() const;

  DerivedVector position(const NodePath& path, const HandleId& handle) const;
  DerivedVector delta(const Selection& from, const Selection& to) const;

 private:
  Model() = default;

  AstPtr ast_;
  EvaluatedProgram program_;
  mutable std::once_flag scene_once_;
  mutable Scene scene_;
};

}  // namespace parascad
