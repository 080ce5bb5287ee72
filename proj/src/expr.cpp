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

#include "parascad/expr.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

namespace parascad {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::array<std::string_view, 7> kBuiltinFunctions = {
    "sin", "cos", "sqrt", "min", "max", "floor", "abs"};

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

// Exact values at multiples of 90 degrees so that rotate([0,0,90]) does not
// leave 6e-17 residue in numeric positions.
double sin_degrees(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0) r += 360.0;
  if (r == 0.0 || r == 180.0) return 0.0;
  if (r == 90.0) return 1.0;
  if (r == 270.0) return -1.0;
  return std::sin(deg_to_rad(deg));
}
double cos_degrees(double deg) { return sin_degrees(deg + 90.0); }

namespace {

double as_scalar(const Value& v, const Expr& where) {
  if (const double* d = std::get_if<double>(&v)) return *d;
  throw Error(ErrorKind::TypeMismatch, "vector used where a number is expected",
              where.span());
}

bool truthy(double v) { return v != 0.0; }

Value eval_binary(const expr::Binary& b, const Expr& self,
                  const Environment& env) {
  if (b.op == BinaryOp::And) {
    double l = as_scalar(evaluate_value(*b.lhs, env), *b.lhs);
    if (!truthy(l)) return 0.0;
    return truthy(as_scalar(evaluate_value(*b.rhs, env), *b.rhs)) ? 1.0 : 0.0;
  }
  if (b.op == BinaryOp::Or) {
    double l = as_scalar(evaluate_value(*b.lhs, env), *b.lhs);
    if (truthy(l)) return 1.0;
    return truthy(as_scalar(evaluate_value(*b.rhs, env), *b.rhs)) ? 1.0 : 0.0;
  }
  Value lv = evaluate_value(*b.lhs, env);
  Value rv = evaluate_value(*b.rhs, env);
  const auto* lvec = std::get_if<std::vector<double>>(&lv);
  const auto* rvec = std::get_if<std::vector<double>>(&rv);
  if (lvec || rvec) {
    // Elementwise vector arithmetic: v±v of equal length, v*s, s*v, v/s.
    if (lvec && rvec && lvec->size() == rvec->size() &&
        (b.op == BinaryOp::Add || b.op == BinaryOp::Sub)) {
      std::vector<double> out(lvec->size());
      for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = b.op == BinaryOp::Add ? (*lvec)[i] + (*rvec)[i]
                                       : (*lvec)[i] - (*rvec)[i];
      return out;
    }
    if (lvec && !rvec && (b.op == BinaryOp::Mul || b.op == BinaryOp::Div)) {
      double s = std::get<double>(rv);
      if (b.op == BinaryOp::Div && s == 0.0)
        throw Error(ErrorKind::DivisionByZero, "division by zero", self.span());
      std::vector<double> out(*lvec);
      for (double& x : out) x = b.op == BinaryOp::Mul ? x * s : x / s;
      return out;
    }
    if (rvec && !lvec && b.op == BinaryOp::Mul) {
      double s = std::get<double>(lv);
      std::vector<double> out(*rvec);
      for (double& x : out) x *= s;
      return out;
    }
    throw Error(ErrorKind::TypeMismatch,
                "unsupported vector operand for '" +
                    std::string(op_text(b.op)) + "'",
                self.span());
  }
  double l = std::get<double>(lv);
  double r = std::get<double>(rv);
  switch (b.op) {
    case BinaryOp::Add: return l + r;
    case BinaryOp::Sub: return l - r;
    case BinaryOp::Mul: return l * r;
    case BinaryOp::Div:
      if (r == 0.0)
        throw Error(ErrorKind::DivisionByZero, "division by zero", self.span());
      return l / r;
    case BinaryOp::Mod:
      if (r == 0.0)
        throw Error(ErrorKind::DivisionByZero, "modulo by zero", self.span());
      return std::fmod(l, r);
    case BinaryOp::Less: return l < r ? 1.0 : 0.0;
    case BinaryOp::LessEqual: return l <= r ? 1.0 : 0.0;
    case BinaryOp::Greater: return l > r ? 1.0 : 0.0;
    case BinaryOp::GreaterEqual: return l >= r ? 1.0 : 0.0;
    case BinaryOp::Equal: return l == r ? 1.0 : 0.0;
    case BinaryOp::NotEqual: return l != r ? 1.0 : 0.0;
    case BinaryOp::And:
    case BinaryOp::Or: break;
  }
  return 0.0;
}

Value eval_call(const expr::Call& c, const Expr& self, const Environment& env) {
  std::vector<double> args;
  args.reserve(c.args.size());
  for (const ExprPtr& a : c.args)
    args.push_back(as_scalar(evaluate_value(*a, env), *a));
  auto arity = [&](std::size_t n) {
    if (args.size() != n)
      throw Error(ErrorKind::TypeMismatch,
                  c.function + "() takes " + std::to_string(n) + " argument" +
                      (n == 1 ? "" : "s"),
                  self.span());
  };
  if (c.function == "sin") {
    arity(1);
    return sin_degrees(args[0]);
  }
  if (c.function == "cos") {
    arity(1);
    return cos_degrees(args[0]);
  }
  if (c.function == "sqrt") {
    arity(1);
    return std::sqrt(args[0]);
  }
  if (c.function == "floor") {
    arity(1);
    return std::floor(args[0]);
  }
  if (c.function == "abs") {
    arity(1);
    return std::fabs(args[0]);
  }
  if (c.function == "min" || c.function == "max") {
    if (args.empty())
      throw Error(ErrorKind::TypeMismatch,
                  c.function + "() needs at least one argument", self.span());
    return c.function == "min" ? *std::min_element(args.begin(), args.end())
                               : *std::max_element(args.begin(), args.end());
  }
  throw Error(ErrorKind::Unsupported, "unknown function '" + c.function + "'",
              self.span());
}

bool numbers_equal(double a, double b) {
  return a == b || (std::isnan(a) && std::isnan(b));
}

bool ptr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  return structurally_equal(*a, *b);
}

bool lists_equal(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!ptr_equal(a[i], b[i])) return false;
  return true;
}

}  // namespace

std::string_view op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Less: return "<";
    case BinaryOp::LessEqual: return "<=";
    case BinaryOp::Greater: return ">";
    case BinaryOp::GreaterEqual: return ">=";
    case BinaryOp::Equal: return "==";
    case BinaryOp::NotEqual: return "!=";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "?";
}

bool is_arithmetic(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add:
    case BinaryOp::Sub:
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod:
      return true;
    default:
      return false;
  }
}

bool is_builtin_function(std::string_view name) {
  return std::find(kBuiltinFunctions.begin(), kBuiltinFunctions.end(), name) !=
         kBuiltinFunctions.end();
}

ExprPtr number(double value, std::optional<SourceSpan> span) {
  return std::make_shared<const Expr>(expr::Number{value}, span);
}

ExprPtr signed_number(double value) {
  if (value == 0.0) return number(0.0);  // also folds -0.0
  if (value < 0.0) return unary(UnaryOp::Negate, number(-value));
  return number(value);
}

ExprPtr boolean(bool value, std::optional<SourceSpan> span) {
  return std::make_shared<const Expr>(expr::Boolean{value}, span);
}

ExprPtr variable(std::string name, std::optional<SourceSpan> span) {
  return std::make_shared<const Expr>(expr::Variable{std::move(name)}, span);
}

ExprPtr unary(UnaryOp op, ExprPtr operand, std::optional<SourceSpan> span) {
  return std::make_shared<const Expr>(expr::Unary{op, std::move(operand)},
                                      span);
}

ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs,
               std::optional<SourceSpan> span) {
  return std::make_shared<const Expr>(
      expr::Binary{op, std::move(lhs), std::move(rhs)}, span);
}

ExprPtr ternary(ExprPtr condition, ExprPtr if_true, ExprPtr if_false,
                std::optional<SourceSpan> span) {
  return std::make_shared<const Expr>(
      expr::Ternary{std::move(condition), std::move(if_true),
                    std::move(if_false)},
      span);
}

ExprPtr call(std::string function, std::vector<ExprPtr> args,
             std::optional<SourceSpan> span) {
  return std::make_shared<const Expr>(
      expr::Call{std::move(function), std::move(args)}, span);
}

ExprPtr vector(std::vector<ExprPtr> elements, std::optional<SourceSpan> span) {
  return std::make_shared<const Expr>(expr::Vector{std::move(elements)}, span);
}

ExprPtr index(ExprPtr base, ExprPtr idx, std::optional<SourceSpan> span) {
  return std::make_shared<const Expr>(
      expr::Index{std::move(base), std::move(idx)}, span);
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      overloaded{
          [&](const expr::Number& n) {
            return numbers_equal(n.value, b.as<expr::Number>()->value);
          },
          [&](const expr::Boolean& n) {
            return n.value == b.as<expr::Boolean>()->value;
          },
          [&](const expr::Variable& v) {
            return v.name == b.as<expr::Variable>()->name;
          },
          [&](const expr::Unary& u) {
            const auto* o = b.as<expr::Unary>();
            return u.op == o->op && ptr_equal(u.operand, o->operand);
          },
          [&](const expr::Binary& x) {
            const auto* o = b.as<expr::Binary>();
            return x.op == o->op && ptr_equal(x.lhs, o->lhs) &&
                   ptr_equal(x.rhs, o->rhs);
          },
          [&](const expr::Ternary& t) {
            const auto* o = b.as<expr::Ternary>();
            return ptr_equal(t.condition, o->condition) &&
                   ptr_equal(t.if_true, o->if_true) &&
                   ptr_equal(t.if_false, o->if_false);
          },
          [&](const expr::Call& c) {
            const auto* o = b.as<expr::Call>();
            return c.function == o->function && lists_equal(c.args, o->args);
          },
          [&](const expr::Vector& v) {
            return lists_equal(v.elements, b.as<expr::Vector>()->elements);
          },
          [&](const expr::Index& i) {
            const auto* o = b.as<expr::Index>();
            return ptr_equal(i.base, o->base) && ptr_equal(i.index, o->index);
          },
      },
      a.node());
}

bool contains_variable(const Expr& e) {
  return std::visit(
      overloaded{
          [](const expr::Number&) { return false; },
          [](const expr::Boolean&) { return false; },
          [](const expr::Variable&) { return true; },
          [](const expr::Unary& u) { return contains_variable(*u.operand); },
          [](const expr::Binary& b) {
            return contains_variable(*b.lhs) || contains_variable(*b.rhs);
          },
          [](const expr::Ternary& t) {
            return contains_variable(*t.condition) ||
                   contains_variable(*t.if_true) ||
                   contains_variable(*t.if_false);
          },
          [](const expr::Call& c) {
            return std::any_of(c.args.begin(), c.args.end(),
                               [](const ExprPtr& a) {
                                 return contains_variable(*a);
                               });
          },
          [](const expr::Vector& v) {
            return std::any_of(v.elements.begin(), v.elements.end(),
                               [](const ExprPtr& a) {
                                 return contains_variable(*a);
                               });
          },
          [](const expr::Index& i) {
            return contains_variable(*i.base) || contains_variable(*i.index);
          },
      },
      e.node());
}

void collect_variables(const Expr& e, std::vector<std::string>& out) {
  std::visit(overloaded{
                 [](const expr::Number&) {},
                 [](const expr::Boolean&) {},
                 [&](const expr::Variable& v) {
                   if (std::find(out.begin(), out.end(), v.name) == out.end())
                     out.push_back(v.name);
                 },
                 [&](const expr::Unary& u) { collect_variables(*u.operand, out); },
                 [&](const expr::Binary& b) {
                   collect_variables(*b.lhs, out);
                   collect_variables(*b.rhs, out);
                 },
                 [&](const expr::Ternary& t) {
                   collect_variables(*t.condition, out);
                   collect_variables(*t.if_true, out);
                   collect_variables(*t.if_false, out);
                 },
                 [&](const expr::Call& c) {
                   for (const auto& a : c.args) collect_variables(*a, out);
                 },
                 [&](const expr::Vector& v) {
                   for (const auto& a : v.elements) collect_variables(*a, out);
                 },
                 [&](const expr::Index& i) {
                   collect_variables(*i.base, out);
                   collect_variables(*i.index, out);
                 },
             },
             e.node());
}

ExprPtr substitute(const ExprPtr& e,
                   const std::function<ExprPtr(const std::string&)>& lookup) {
  auto sub = [&](const ExprPtr& x) { return substitute(x, lookup); };
  auto sub_all = [&](const std::vector<ExprPtr>& xs) {
    std::vector<ExprPtr> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(sub(x));
    return out;
  };
  return std::visit(
      overloaded{
          [&](const expr::Number&) { return e; },
          [&](const expr::Boolean&) { return e; },
          [&](const expr::Variable& v) {
            ExprPtr r = lookup(v.name);
            return r ? r : e;
          },
          [&](const expr::Unary& u) {
            return unary(u.op, sub(u.operand), e->span());
          },
          [&](const expr::Binary& b) {
            return binary(b.op, sub(b.lhs), sub(b.rhs), e->span());
          },
          [&](const expr::Ternary& t) {
            return ternary(sub(t.condition), sub(t.if_true), sub(t.if_false),
                           e->span());
          },
          [&](const expr::Call& c) {
            return call(c.function, sub_all(c.args), e->span());
          },
          [&](const expr::Vector& v) {
            return vector(sub_all(v.elements), e->span());
          },
          [&](const expr::Index& i) {
            return index(sub(i.base), sub(i.index), e->span());
          },
      },
      e->node());
}

double Environment::lookup(const std::string& name,
                           const std::optional<SourceSpan>& span) const {
  auto it = values_.find(name);
  if (it == values_.end())
    throw Error(ErrorKind::UnboundVariable, "unbound variable '" + name + "'",
                span);
  return it->second;
}

Value evaluate_value(const Expr& e, const Environment& env) {
  return std::visit(
      overloaded{
          [](const expr::Number& n) -> Value { return n.value; },
          [](const expr::Boolean& b) -> Value { return b.value ? 1.0 : 0.0; },
          [&](const expr::Variable& v) -> Value {
            return env.lookup(v.name, e.span());
          },
          [&](const expr::Unary& u) -> Value {
            Value v = evaluate_value(*u.operand, env);
            if (u.op == UnaryOp::Not)
              return truthy(as_scalar(v, *u.operand)) ? 0.0 : 1.0;
            if (auto* vec = std::get_if<std::vector<double>>(&v)) {
              for (double& x : *vec) x = -x;
              return v;
            }
            return -std::get<double>(v);
          },
          [&](const expr::Binary& b) -> Value {
            return eval_binary(b, e, env);
          },
          [&](const expr::Ternary& t) -> Value {
            double c = as_scalar(evaluate_value(*t.condition, env), *t.condition);
            return evaluate_value(truthy(c) ? *t.if_true : *t.if_false, env);
          },
          [&](const expr::Call& c) -> Value { return eval_call(c, e, env); },
          [&](const expr::Vector& v) -> Value {
            std::vector<double> out;
            out.reserve(v.elements.size());
            for (const auto& el : v.elements)
              out.push_back(as_scalar(evaluate_value(*el, env), *el));
            return out;
          },
          [&](const expr::Index& i) -> Value {
            Value base = evaluate_value(*i.base, env);
            double k = as_scalar(evaluate_value(*i.index, env), *i.index);
            const auto* vec = std::get_if<std::vector<double>>(&base);
            if (!vec)
              throw Error(ErrorKind::TypeMismatch, "indexing a number",
                          e.span());
            if (k != std::floor(k) || k < 0 ||
                k >= static_cast<double>(vec->size()))
              throw Error(ErrorKind::IndexOutOfRange,
                          "index " + format_number(k) + " out of range",
                          e.span());
            return (*vec)[static_cast<std::size_t>(k)];
          },
      },
      e.node());
}

double evaluate(const Expr& e, const Environment& env) {
  return as_scalar(evaluate_value(e, env), e);
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[64];
  if (value == std::floor(value) && std::fabs(value) < 1e15) {
    std::snprintf(buf, sizeof buf, "%.0f", value);
    return buf;
  }
  for (int precision = 1; precision <= 9; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    double back = std::strtod(buf, nullptr);
    if (std::fabs(back - value) <= 1e-12 * std::fabs(value)) return buf;
  }
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace parascad
