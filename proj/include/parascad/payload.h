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

// JSON documents shared by the command line tool, the C API and the HTTP
// service. Every function returns compact JSON followed by a newline, so
// the same bytes can be printed or sent.

#pragma once

#include <string>

#include "parascad/diagnostics.h"
#include "parascad/handles.h"
#include "parascad/lang.h"
#include "parascad/mesh.h"

namespace parascad {

/// `{"symbolic":[...]|null,"numeric":[...]}`, plus `"diagnostics"` when
/// there are any.
std::string vector_payload(const DerivedVector& v);

/// Nodes, handles, meshes and variables in camelCase fields.
std::string scene_payload(const Scene& scene);

std::string ast_payload(const AstNode& root);

/// `{"error":{"kind":...,"message":...,"span":{...}|null}}`
std::string error_payload(const Diagnostic& d);

}  // namespace parascad
