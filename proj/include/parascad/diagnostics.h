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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parascad {

/// Byte range into UTF-8 source plus 1-based line/column of both ends.
/// `end` is exclusive; `end_line`/`end_column` point at the last byte.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  int start_line = 0;
  int start_column = 0;
  int end_line = 0;
  int end_column = 0;

  bool contains(std::size_t offset) const {
    return start <= offset && offset < end;
  }
  bool encloses(const SourceSpan& other) const {
    return start <= other.start && other.end <= end;
  }
  bool operator==(const SourceSpan&) const = default;
};

/// Smallest span covering both arguments.
SourceSpan join(const SourceSpan& a, const SourceSpan& b);

enum class ErrorKind {
  Parse,
  Unsupported,
  UnboundVariable,
  DivisionByZero,
  TypeMismatch,
  IndexOutOfRange,
  UnknownModule,
  RecursionLimitExceeded,
  NonFiniteValue,
  InvalidPath,
  InvalidHandle,
  DegenerateGeometry,
  Io,
};

std::string_view error_kind_name(ErrorKind kind);

struct Diagnostic {
  ErrorKind kind;
  std::string message;
  std::optional<SourceSpan> span;
};

/// Every failure surfaced by the kernel. Carries a kind so callers can map
/// to exit codes / HTTP statuses, and the span of the offending source.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message,
        std::optional<SourceSpan> span = std::nullopt);

  ErrorKind kind() const { return kind_; }
  const std::optional<SourceSpan>& span() const { return span_; }
  Diagnostic diagnostic() const { return {kind_, what(), span_}; }

  /// True for errors caused by the model source (parse and evaluation).
  bool is_source_error() const;
  /// True for bad node paths / handle ids.
  bool is_selection_error() const;

 private:
  ErrorKind kind_;
  std::optional<SourceSpan> span_;
};

}  // namespace parascad
