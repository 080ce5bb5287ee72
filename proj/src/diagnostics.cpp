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

#include "parascad/diagnostics.h"

#include <utility>

namespace parascad {

SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan out;
  const SourceSpan& first = a.start <= b.start ? a : b;
  const SourceSpan& last = a.end >= b.end ? a : b;
  out.start = first.start;
  out.start_line = first.start_line;
  out.start_column = first.start_column;
  out.end = last.end;
  out.end_line = last.end_line;
  out.end_column = last.end_column;
  return out;
}

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Unsupported: return "UnsupportedConstruct";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnknownModule: return "UnknownModule";
    case ErrorKind::RecursionLimitExceeded: return "RecursionLimitExceeded";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::InvalidHandle: return "InvalidHandle";
    case ErrorKind::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, std::string message,
             std::optional<SourceSpan> span)
    : std::runtime_error(std::move(message)), kind_(kind), span_(span) {}

bool Error::is_source_error() const {
  switch (kind_) {
    case ErrorKind::Parse:
    case ErrorKind::Unsupported:
    case ErrorKind::UnboundVariable:
    case ErrorKind::DivisionByZero:
    case ErrorKind::TypeMismatch:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::UnknownModule:
    case ErrorKind::RecursionLimitExceeded:
    case ErrorKind::NonFiniteValue:
    case ErrorKind::DegenerateGeometry:
      return true;
    default:
      return false;
  }
}

bool Error::is_selection_error() const {
  return kind_ == ErrorKind::InvalidPath || kind_ == ErrorKind::InvalidHandle;
}

}  // namespace parascad
