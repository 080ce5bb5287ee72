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

#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "parascad/diagnostics.h"

namespace parascad {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class UnaryOp { Negate, Not };

enum class BinaryOp {
  Add,
  Sub,
  Mul,
  Div,
  Mod,
  Less,
  LessEqual,
  Greater,
  GreaterEqual,
  Equal,
  NotEqual,
  And,
  Or,
};

std::string_view op_text(BinaryOp op);
bool is_arithmetic(BinaryOp op);

namespace expr {
struct Number {
  double value;
};
/// Only produced by the parser for `center = true|false`.
struct Boolean {
  bool value;
};
struct Variable {
  std::string name;
};
struct Unary {
  UnaryOp op;
  ExprPtr operand;
};
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Ternary {
  ExprPtr condition;
  ExprPtr if_true;
  ExprPtr if_false;
};
struct Call {
  std::string function;
  std::vector<ExprPtr> args;
};
struct Vector {
  std::vector<ExprPtr> elements;
};
struct Index {
  ExprPtr base;
  ExprPtr index;
};
}  // namespace expr

/// Immutable expression tree node. The span is informational and ignored by
/// structural comparison.
class Expr {
 public:
  using Node = std::variant<expr::Number, expr::Boolean, expr::Variable,
                            expr::Unary, expr::Binary, expr::Ternary,
                            expr::Call, expr::Vector, expr::Index>;

  Expr(Node node, std::optional<SourceSpan> span = std::nullopt)
      : node_(std::move(node)), span_(span) {}

  const Node& node() const { return node_; }
  const std::optional<SourceSpan>& span() const { return span_; }

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node_);
  }
  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node_);
  }

 private:
  Node node_;
  std::optional<SourceSpan> span_;
};

// Builders. All return shared immutable nodes.
ExprPtr number(double value, std::optional<SourceSpan> span = std::nullopt);
/// Like number() but keeps literals non-negative: negative values become
/// Negate(Number(|v|)), which is what the parser produces for `-3`.
ExprPtr signed_number(double value);
ExprPtr boolean(bool value, std::optional<SourceSpan> span = std::nullopt);
ExprPtr variable(std::string name,
                 std::optional<SourceSpan> span = std::nullopt);
ExprPtr unary(UnaryOp op, ExprPtr operand,
              std::optional<SourceSpan> span = std::nullopt);
ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs,
               std::optional<SourceSpan> span = std::nullopt);
ExprPtr ternary(ExprPtr condition, ExprPtr if_true, ExprPtr if_false,
                std::optional<SourceSpan> span = std::nullopt);
ExprPtr call(std::string function, std::vector<ExprPtr> args,
             std::optional<SourceSpan> span = std::nullopt);
ExprPtr vector(std::vector<ExprPtr> elements,
               std::optional<SourceSpan> span = std::nullopt);
ExprPtr index(ExprPtr base, ExprPtr idx,
              std::optional<SourceSpan> span = std::nullopt);

inline ExprPtr operator+(ExprPtr a, ExprPtr b) {
  return binary(BinaryOp::Add, std::move(a), std::move(b));
}
inline ExprPtr operator-(ExprPtr a, ExprPtr b) {
  return binary(BinaryOp::Sub, std::move(a), std::move(b));
}
inline ExprPtr operator*(ExprPtr a, ExprPtr b) {
  return binary(BinaryOp::Mul, std::move(a), std::move(b));
}
inline ExprPtr operator/(ExprPtr a, ExprPtr b) {
  return binary(BinaryOp::Div, std::move(a), std::move(b));
}
inline ExprPtr operator-(ExprPtr a) {
  return unary(UnaryOp::Negate, std::move(a));
}

/// Functions callable from expressions. Trig functions take degrees.
bool is_builtin_function(std::string_view name);

/// Trigonometry in degrees, exact at multiples of 90.
double sin_degrees(double deg);
double cos_degrees(double deg);

/// Structural equality; spans are ignored.
bool structurally_equal(const Expr& a, const Expr& b);

bool contains_variable(const Expr& e);
void collect_variables(const Expr& e, std::vector<std::string>& out);

/// Replaces every variable reference through `lookup`. A null result leaves
/// the reference untouched.
ExprPtr substitute(const ExprPtr& e,
                   const std::function<ExprPtr(const std::string&)>& lookup);

/// Variable bindings for evaluation. Looking up an unbound name throws
/// UnboundVariable.
class Environment {
 public:
  Environment() = default;
  Environment(std::initializer_list<std::pair<const std::string, double>> init)
      : values_(init) {}

  void set(const std::string& name, double value) { values_[name] = value; }
  bool contains(const std::string& name) const {
    return values_.count(name) != 0;
  }
  double lookup(const std::string& name,
                const std::optional<SourceSpan>& span = std::nullopt) const;
  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

/// Scalar or vector result of evaluation.
using Value = std::variant<double, std::vector<double>>;

Value evaluate_value(const Expr& e, const Environment& env);
/// Evaluates a scalar expression; vectors raise TypeMismatch.
double evaluate(const Expr& e, const Environment& env);

/// Σ αⱼ·xⱼ + c with zero terms (|α| ≤ 1e-12) dropped.
class LinearForm {
 public:
  static constexpr double kZeroThreshold = 1e-12;

  LinearForm() = default;
  explicit LinearForm(double constant) : constant_(constant) {}
  LinearForm(std::map<std::string, double> coefficients, double constant);

  static LinearForm of_variable(const std::string& name);

  const std::map<std::string, double>& coefficients() const {
    return coefficients_;
  }
  double coefficient(const std::string& name) const;
  double constant() const { return constant_; }
  bool is_constant() const { return coefficients_.empty(); }

  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);
  LinearForm& operator*=(double factor);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) {
    return a += b;
  }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) {
    return a -= b;
  }
  friend LinearForm operator*(LinearForm a, double k) { return a *= k; }

  /// Coefficient-wise comparison with absolute tolerance.
  bool approx_equal(const LinearForm& other, double tolerance = 1e-9) const;
  double evaluate(const Environment& env) const;

 private:
  void prune();

  std::map<std::string, double> coefficients_;
  double constant_ = 0.0;
};

/// Degree ≤ 1 normal form, or nullopt when `e` is not linear.
std::optional<LinearForm> to_linear_form(const Expr& e);

/// Canonical expression for a linear form: positive terms by ascending
/// name, then negative terms by ascending name, constant last.
ExprPtr to_expr(const LinearForm& form);

ExprPtr simplify(const ExprPtr& e);

enum class ExprCategory { C1 = 1, C2, C3, C4, C5 };
std::string_view category_name(ExprCategory c);

ExprCategory classify(const Expr& e);

/// Renders OpenSCAD source text that parses back to `e`.
std::string render_expr(const Expr& e);
std::string render_expr(const LinearForm& form);

/// Shortest of up to 9 significant digits that reproduces `value` to 1e-12
/// relative; falls back to the shortest exact representation.
std::string format_number(double value);

}  // namespace parascad
