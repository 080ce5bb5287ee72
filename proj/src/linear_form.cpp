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

// Linear normal forms, the polynomial expansion behind them, and the
// simplifier/classifier built on top.

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "parascad/expr.h"

namespace parascad {

namespace {

// Monomial = sorted multiset of variable names; the empty monomial is the
// constant term.
using Monomial = std::vector<std::string>;

// Expansion stops past this many terms; such expressions are reported as
// polynomial but never as linear.
constexpr std::size_t kMaxTerms = 4096;

struct Polynomial {
  std::map<Monomial, double> terms;

  static Polynomial constant(double c) {
    Polynomial p;
    if (c != 0.0) p.terms[{}] = c;
    return p;
  }
  static Polynomial variable(const std::string& name) {
    Polynomial p;
    p.terms[{name}] = 1.0;
    return p;
  }

  void add(const Polynomial& o, double sign) {
    for (const auto& [m, c] : o.terms) terms[m] += sign * c;
  }
  void scale(double k) {
    for (auto& [m, c] : terms) c *= k;
  }
  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms)
      if (std::fabs(c) > LinearForm::kZeroThreshold) d = std::max(d, m.size());
    return d;
  }
};

enum class PolyStatus { Ok, NotPolynomial, TooLarge };

struct PolyResult {
  PolyStatus status;
  Polynomial poly;
};

PolyResult not_poly() { return {PolyStatus::NotPolynomial, {}}; }

// Folds a variable-free subtree to a finite number, if it can be evaluated.
std::optional<double> fold(const Expr& e) {
  if (contains_variable(e)) return std::nullopt;
  try {
    double v = evaluate(e, Environment{});
    if (!std::isfinite(v)) return std::nullopt;
    return v;
  } catch (const Error&) {
    return std::nullopt;
  }
}

PolyResult to_polynomial(const Expr& e) {
  if (!contains_variable(e)) {
    auto v = fold(e);
    if (!v) return not_poly();
    return {PolyStatus::Ok, Polynomial::constant(*v)};
  }
  if (const auto* v = e.as<expr::Variable>())
    return {PolyStatus::Ok, Polynomial::variable(v->name)};
  if (const auto* u = e.as<expr::Unary>()) {
    if (u->op != UnaryOp::Negate) return not_poly();
    PolyResult r = to_polynomial(*u->operand);
    if (r.status == PolyStatus::Ok) r.poly.scale(-1.0);
    return r;
  }
  if (const auto* idx = e.as<expr::Index>()) {
    // [a, b, c][k] with literal k selects an element.
    const auto* base = idx->base->as<expr::Vector>();
    auto k = fold(*idx->index);
    if (!base || !k || *k != std::floor(*k) || *k < 0 ||
        *k >= static_cast<double>(base->elements.size()))
      return not_poly();
    return to_polynomial(*base->elements[static_cast<std::size_t>(*k)]);
  }
  const auto* b = e.as<expr::Binary>();
  if (!b) return not_poly();
  switch (b->op) {
    case BinaryOp::Add:
    case BinaryOp::Sub: {
      PolyResult l = to_polynomial(*b->lhs);
      if (l.status == PolyStatus::NotPolynomial) return l;
      PolyResult r = to_polynomial(*b->rhs);
      if (r.status == PolyStatus::NotPolynomial) return r;
      if (l.status == PolyStatus::TooLarge || r.status == PolyStatus::TooLarge)
        return {PolyStatus::TooLarge, {}};
      l.poly.add(r.poly, b->op == BinaryOp::Add ? 1.0 : -1.0);
      if (l.poly.terms.size() > kMaxTerms) return {PolyStatus::TooLarge, {}};
      return l;
    }
    case BinaryOp::Mul: {
      PolyResult l = to_polynomial(*b->lhs);
      if (l.status == PolyStatus::NotPolynomial) return l;
      PolyResult r = to_polynomial(*b->rhs);
      if (r.status == PolyStatus::NotPolynomial) return r;
      if (l.status == PolyStatus::TooLarge || r.status == PolyStatus::TooLarge)
        return {PolyStatus::TooLarge, {}};
      if (l.poly.terms.size() * r.poly.terms.size() > kMaxTerms)
        return {PolyStatus::TooLarge, {}};
      Polynomial out;
      for (const auto& [lm, lc] : l.poly.terms) {
        for (const auto& [rm, rc] : r.poly.terms) {
          Monomial m;
          m.reserve(lm.size() + rm.size());
          std::merge(lm.begin(), lm.end(), rm.begin(), rm.end(),
                     std::back_inserter(m));
          out.terms[m] += lc * rc;
        }
      }
      return {PolyStatus::Ok, std::move(out)};
    }
    case BinaryOp::Div: {
      auto divisor = fold(*b->rhs);
      if (!divisor || *divisor == 0.0) return not_poly();
      PolyResult l = to_polynomial(*b->lhs);
      if (l.status == PolyStatus::Ok) l.poly.scale(1.0 / *divisor);
      return l;
    }
    default:
      return not_poly();
  }
}

bool nearly_integral(double x, double tolerance) {
  return std::fabs(x - std::round(x)) <= tolerance;
}

// |coefficient|·name, without sign.
ExprPtr term_magnitude(double magnitude, const std::string& name) {
  ExprPtr var = variable(name);
  double k = std::round(magnitude);
  if (k >= 1.0 && nearly_integral(magnitude, 1e-12 * std::max(1.0, magnitude))) {
    if (k == 1.0) return var;
    return binary(BinaryOp::Mul, number(k), var);
  }
  double inverse = 1.0 / magnitude;
  if (inverse >= 2.0 && nearly_integral(inverse, 1e-9))
    return binary(BinaryOp::Div, var, number(std::round(inverse)));
  return binary(BinaryOp::Mul, number(magnitude), var);
}

// Applies a leading minus the way the parser would attach it: to the
// leftmost operand, since unary minus binds tighter than * and /.
ExprPtr negate_leading(const ExprPtr& term) {
  if (const auto* b = term->as<expr::Binary>())
    return binary(b->op, negate_leading(b->lhs), b->rhs);
  return unary(UnaryOp::Negate, term);
}

bool is_number(const ExprPtr& e, double value) {
  const auto* n = e->as<expr::Number>();
  return n && n->value == value;
}

ExprPtr simplify_structure(const ExprPtr& e);

ExprPtr simplify_impl(const ExprPtr& e) {
  if (const auto* v = e->as<expr::Vector>()) {
    std::vector<ExprPtr> elements;
    elements.reserve(v->elements.size());
    for (const auto& el : v->elements) elements.push_back(simplify_impl(el));
    return vector(std::move(elements));
  }
  if (auto form = to_linear_form(*e)) return to_expr(*form);
  ExprPtr r = simplify_structure(e);
  if (!r->is<expr::Vector>())
    if (auto form = to_linear_form(*r)) return to_expr(*form);
  return r;
}

ExprPtr simplify_structure(const ExprPtr& e) {
  if (!contains_variable(*e))
    if (auto v = fold(*e)) return signed_number(*v);

  if (const auto* u = e->as<expr::Unary>()) {
    ExprPtr operand = simplify_impl(u->operand);
    if (u->op == UnaryOp::Negate) {
      if (const auto* inner = operand->as<expr::Unary>();
          inner && inner->op == UnaryOp::Negate)
        return inner->operand;
    }
    return unary(u->op, operand);
  }
  if (const auto* b = e->as<expr::Binary>()) {
    ExprPtr l = simplify_impl(b->lhs);
    ExprPtr r = simplify_impl(b->rhs);
    switch (b->op) {
      case BinaryOp::Add:
        if (is_number(l, 0.0)) return r;
        if (is_number(r, 0.0)) return l;
        break;
      case BinaryOp::Sub:
        if (is_number(r, 0.0)) return l;
        break;
      case BinaryOp::Mul:
        if (is_number(l, 0.0) || is_number(r, 0.0)) return number(0.0);
        if (is_number(l, 1.0)) return r;
        if (is_number(r, 1.0)) return l;
        break;
      case BinaryOp::Div:
        if (is_number(r, 1.0)) return l;
        break;
      default:
        break;
    }
    ExprPtr out = binary(b->op, l, r);
    if (!contains_variable(*out))
      if (auto v = fold(*out)) return signed_number(*v);
    return out;
  }
  if (const auto* t = e->as<expr::Ternary>()) {
    ExprPtr c = simplify_impl(t->condition);
    if (auto v = fold(*c)) return simplify_impl(*v != 0.0 ? t->if_true : t->if_false);
    return ternary(c, simplify_impl(t->if_true), simplify_impl(t->if_false));
  }
  if (const auto* c = e->as<expr::Call>()) {
    std::vector<ExprPtr> args;
    args.reserve(c->args.size());
    for (const auto& a : c->args) args.push_back(simplify_impl(a));
    return call(c->function, std::move(args));
  }
  if (const auto* i = e->as<expr::Index>()) {
    ExprPtr base = simplify_impl(i->base);
    ExprPtr idx = simplify_impl(i->index);
    const auto* vec = base->as<expr::Vector>();
    if (auto k = fold(*idx); vec && k && *k == std::floor(*k) && *k >= 0 &&
                             *k < static_cast<double>(vec->elements.size()))
      return vec->elements[static_cast<std::size_t>(*k)];
    return index(base, idx);
  }
  return e;
}

}  // namespace

LinearForm::LinearForm(std::map<std::string, double> coefficients,
                       double constant)
    : coefficients_(std::move(coefficients)), constant_(constant) {
  prune();
}

LinearForm LinearForm::of_variable(const std::string& name) {
  return LinearForm({{name, 1.0}}, 0.0);
}

double LinearForm::coefficient(const std::string& name) const {
  auto it = coefficients_.find(name);
  return it == coefficients_.end() ? 0.0 : it->second;
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  for (const auto& [name, c] : other.coefficients_) coefficients_[name] += c;
  constant_ += other.constant_;
  prune();
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
  for (const auto& [name, c] : other.coefficients_) coefficients_[name] -= c;
  constant_ -= other.constant_;
  prune();
  return *this;
}

LinearForm& LinearForm::operator*=(double factor) {
  for (auto& [name, c] : coefficients_) c *= factor;
  constant_ *= factor;
  prune();
  return *this;
}

bool LinearForm::approx_equal(const LinearForm& other, double tolerance) const {
  if (std::fabs(constant_ - other.constant_) > tolerance) return false;
  for (const auto& [name, c] : coefficients_)
    if (std::fabs(c - other.coefficient(name)) > tolerance) return false;
  for (const auto& [name, c] : other.coefficients_)
    if (std::fabs(c - coefficient(name)) > tolerance) return false;
  return true;
}

double LinearForm::evaluate(const Environment& env) const {
  double sum = constant_;
  for (const auto& [name, c] : coefficients_) sum += c * env.lookup(name);
  return sum;
}

void LinearForm::prune() {
  std::erase_if(coefficients_,
                [](const auto& kv) { return std::fabs(kv.second) <= kZeroThreshold; });
  if (constant_ == 0.0) constant_ = 0.0;  // drop -0
}

std::optional<LinearForm> to_linear_form(const Expr& e) {
  PolyResult r = to_polynomial(e);
  if (r.status != PolyStatus::Ok || r.poly.degree() > 1) return std::nullopt;
  std::map<std::string, double> coefficients;
  double constant = 0.0;
  for (const auto& [m, c] : r.poly.terms) {
    if (m.empty())
      constant = c;
    else if (m.size() == 1)
      coefficients[m.front()] += c;
  }
  return LinearForm(std::move(coefficients), constant);
}

ExprPtr to_expr(const LinearForm& form) {
  std::vector<std::pair<bool, ExprPtr>> terms;  // (negative, magnitude)
  for (const auto& [name, c] : form.coefficients())
    if (c > 0) terms.emplace_back(false, term_magnitude(c, name));
  for (const auto& [name, c] : form.coefficients())
    if (c < 0) terms.emplace_back(true, term_magnitude(-c, name));
  if (form.constant() != 0.0)
    terms.emplace_back(form.constant() < 0, number(std::fabs(form.constant())));
  if (terms.empty()) return number(0.0);

  ExprPtr acc = terms.front().first ? negate_leading(terms.front().second)
                                    : terms.front().second;
  for (std::size_t i = 1; i < terms.size(); ++i)
    acc = binary(terms[i].first ? BinaryOp::Sub : BinaryOp::Add, acc,
                 terms[i].second);
  return acc;
}

ExprPtr simplify(const ExprPtr& e) { return simplify_impl(e); }

std::string_view category_name(ExprCategory c) {
  switch (c) {
    case ExprCategory::C1: return "C1";
    case ExprCategory::C2: return "C2";
    case ExprCategory::C3: return "C3";
    case ExprCategory::C4: return "C4";
    case ExprCategory::C5: return "C5";
  }
  return "?";
}

ExprCategory classify(const Expr& e) {
  if (!contains_variable(e))
    return fold(e) ? ExprCategory::C1 : ExprCategory::C5;
  if (e.is<expr::Variable>()) return ExprCategory::C2;
  PolyResult r = to_polynomial(e);
  switch (r.status) {
    case PolyStatus::Ok:
      return r.poly.degree() <= 1 ? ExprCategory::C3 : ExprCategory::C4;
    case PolyStatus::TooLarge:
      return ExprCategory::C4;
    case PolyStatus::NotPolynomial:
      break;
  }
  return ExprCategory::C5;
}

}  // namespace parascad
