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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "parascad/diagnostics.h"
#include "parascad/expr.h"

namespace parascad {

class AstNode;
using AstPtr = std::shared_ptr<const AstNode>;

enum class Modifier { None, Background, Debug };

namespace ast {

struct Assignment {
  std::string name;
  ExprPtr value;
};

struct Formal {
  std::string name;
  ExprPtr default_value;  // may be null
  SourceSpan span;
};

struct ModuleDef {
  std::string name;
  std::vector<Formal> formals;
  std::vector<AstPtr> body;
};

struct Argument {
  std::optional<std::string> name;
  ExprPtr value;
  SourceSpan span;
};

struct Instantiation {
  std::string callee;
  std::vector<Argument> args;  // source order, positional and named mixed
  Modifier modifier = Modifier::None;
  std::vector<AstPtr> children;
  /// True when children were written as `{ ... }` rather than a single
  /// trailing statement or `;`.
  bool block_children = false;

  /// The i-th positional argument (named ones skipped), or null.
  const Argument* positional(std::size_t i) const;
  const Argument* named(std::string_view name) const;
};

struct Range {
  ExprPtr start;
  ExprPtr step;  // null when written as [start:end]
  ExprPtr end;
};

struct For {
  std::string variable;
  std::variant<Range, std::vector<ExprPtr>> iterable;
  std::vector<AstPtr> body;
  bool block_body = false;
};

struct If {
  ExprPtr condition;
  std::vector<AstPtr> then_body;
  std::vector<AstPtr> else_body;
  bool then_block = false;
  bool has_else = false;
  bool else_block = false;
};

struct Block {
  std::vector<AstPtr> children;
};

}  // namespace ast

class AstNode {
 public:
  using Node = std::variant<ast::Assignment, ast::ModuleDef,
                            ast::Instantiation, ast::For, ast::If, ast::Block>;

  AstNode(Node node, SourceSpan span) : node_(std::move(node)), span_(span) {}

  const Node& node() const { return node_; }
  const SourceSpan& span() const { return span_; }

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
  SourceSpan span_;
};

/// Thrown for malformed source. Parsing stops at the first error, so the
/// list holds exactly one entry today.
class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Parses a program. The root is a Block spanning the first to the last
/// token. Throws ParseError.
AstPtr parse(std::string_view source);

/// Parses a single expression (used for rendering round trips).
ExprPtr parse_expression(std::string_view source);

/// Deepest statement or expression whose span contains `offset`.
struct LocatedNode {
  const AstNode* statement = nullptr;  // innermost enclosing statement
  const Expr* expression = nullptr;    // set when the hit is an expression
  std::vector<const AstNode*> ancestry;  // root .. statement
};

std::optional<LocatedNode> locate_node(const AstNode& root, std::size_t offset);

/// Canonical source text for a parsed program; reparses to an equal AST.
std::string render_program(const AstNode& root);

/// Structural equality ignoring spans.
bool structurally_equal(const AstNode& a, const AstNode& b);

std::string_view modifier_text(Modifier m);

}  // namespace parascad
