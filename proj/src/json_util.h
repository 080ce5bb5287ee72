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

// Shared JSON encoding helpers (internal).

#pragma once

#include <cmath>
#include <cstdint>

#include "json.hpp"
#include "parascad/diagnostics.h"

namespace parascad::detail {

using Json = nlohmann::ordered_json;

/// Integral values print without a fraction; -0 prints as 0.
inline Json number_json(double v) {
  if (v == 0.0) return 0;
  if (std::floor(v) == v && std::fabs(v) < 9007199254740992.0)
    return static_cast<std::int64_t>(v);
  return v;
}

inline Json span_json(const SourceSpan& s) {
  return Json{{"start", s.start},           {"end", s.end},
              {"startLine", s.start_line},  {"startColumn", s.start_column},
              {"endLine", s.end_line},      {"endColumn", s.end_column}};
}

inline Json diagnostic_json(const Diagnostic& d) {
  Json j{{"kind", error_kind_name(d.kind)}, {"message", d.message}};
  j["span"] = d.span ? span_json(*d.span) : Json(nullptr);
  return j;
}

}  // namespace parascad::detail
