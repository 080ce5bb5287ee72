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

#include "parascad/model.h"

namespace parascad {

Selection parse_selection(std::string_view text) {
  std::size_t colon = text.rfind(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::InvalidHandle,
                "selection '" + std::string(text) + "' needs the form PATH:HANDLE");
  return {parse_path(text.substr(0, colon)), parse_handle_id(text.substr(colon + 1))};
}

std::shared_ptr<const Model> Model::compile(std::string_view source,
                                            const EvaluationOptions& options) {
  std::shared_ptr<Model> m(new Model());
  m->ast_ = parse(source);
  m->program_ = evaluate_program(*m->ast_, options);
  return m;
}

const Scene& Model::scene() const {
  std::call_once(scene_once_, [this] { scene_ = assemble_scene(program_); });
  return scene_;
}

DerivedVector Model::position(const NodePath& path, const HandleId& handle) const {
  return derive_position(root(), path, handle);
}

DerivedVector Model::delta(const Selection& from, const Selection& to) const {
  return derive_delta(root(), from.path, from.handle, to.path, to.handle);
}

}  // namespace parascad
