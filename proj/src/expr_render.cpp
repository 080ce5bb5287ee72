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

#include <string>

#include "parascad/expr.h"

namespace parascad {

namespace {

// Binding strength, loosest first. Mirrors the parser's precedence ladder.
enum Precedence : int {
  kTernary = 1,
  kOr,
  kAnd,
  kEquality,
  kRelational,
  kAdditive,
  kMultiplicative,
  kUnary,
  kPostfix,
  kPrimary,
};

int binary_precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return kOr;
    case BinaryOp::And: return kAnd;
    case BinaryOp::Equal:
    case BinaryOp::NotEqual: return kEquality;
    case BinaryOp::Less:
    case BinaryOp::LessEqual:
    case BinaryOp::Greater:
    case BinaryOp::GreaterEqual: return kRelational;
    case BinaryOp::Add:
    case BinaryOp::Sub: return kAdditive;
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod: return kMultiplicative;
  }
  return kPrimary;
}

int precedence(const Expr& e) {
  if (const auto* n = e.as<expr::Number>()) return n->value < 0 ? kUnary : kPrimary;
  if (e.is<expr::Unary>()) return kUnary;
  if (const auto* b = e.as<expr::Binary>()) return binary_precedence(b->op);
  if (e.is<expr::Ternary>()) return kTernary;
  if (e.is<expr::Call>() || e.is<expr::Index>()) return kPostfix;
  return kPrimary;
}

void render(const Expr& e, std::string& out);

void render_wrapped(const Expr& e, bool parens, std::string& out) {
  if (parens) out += '(';
  render(e, out);
  if (parens) out += ')';
}

void render_list(const std::vector<ExprPtr>& items, std::string& out) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    render(*items[i], out);
  }
}

void render(const Expr& e, std::string& out) {
  if (const auto* n = e.as<expr::Number>()) {
    out += format_number(n->value);
  } else if (const auto* b = e.as<expr::Boolean>()) {
    out += b->value ? "true" : "false";
  } else if (const auto* v = e.as<expr::Variable>()) {
    out += v->name;
  } else if (const auto* u = e.as<expr::Unary>()) {
    out += u->op == UnaryOp::Negate ? "-" : "!";
    render_wrapped(*u->operand, precedence(*u->operand) < kUnary, out);
  } else if (const auto* bin = e.as<expr::Binary>()) {
    int p = binary_precedence(bin->op);
    render_wrapped(*bin->lhs, precedence(*bin->lhs) < p, out);
    if (p == kMultiplicative) {
      out += op_text(bin->op);
    } else {
      out += ' ';
      out += op_text(bin->op);
      out += ' ';
    }
    render_wrapped(*bin->rhs, precedence(*bin->rhs) <= p, out);
  } else if (const auto* t = e.as<expr::Ternary>()) {
    render_wrapped(*t->condition, precedence(*t->condition) <= kTernary, out);
    out += " ? ";
    render(*t->if_true, out);
    out += " : ";
    render(*t->if_false, out);
  } else if (const auto* c = e.as<expr::Call>()) {
    out += c->function;
    out += '(';
    render_list(c->args, out);
    out += ')';
  } else if (const auto* vec = e.as<expr::Vector>()) {
    out += '[';
    render_list(vec->elements, out);
    out += ']';
  } else if (const auto* idx = e.as<expr::Index>()) {
    render_wrapped(*idx->base, precedence(*idx->base) < kPostfix, out);
    out += '[';
    render(*idx->index, out);
    out += ']';
  }
}

}  // namespace

std::string render_expr(const Expr& e) {
  std::string out;
  render(e, out);
  return out;
}

std::string render_expr(const LinearForm& form) {
  return render_expr(*to_expr(form));
}

}  // namespace parascad
