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

#include "parascad/lang.h"

namespace parascad {

namespace {

// ---- cursor lookup ---------------------------------------------------------

const Expr* deepest_expr(const Expr& e, std::size_t offset) {
  if (!e.span() || !e.span()->contains(offset)) return nullptr;
  const Expr* best = &e;
  auto consider = [&](const ExprPtr& child) {
    if (!child) return;
    if (const Expr* hit = deepest_expr(*child, offset)) best = hit;
  };
  if (const auto* u = e.as<expr::Unary>()) {
    consider(u->operand);
  } else if (const auto* b = e.as<expr::Binary>()) {
    consider(b->lhs);
    consider(b->rhs);
  } else if (const auto* t = e.as<expr::Ternary>()) {
    consider(t->condition);
    consider(t->if_true);
    consider(t->if_false);
  } else if (const auto* c = e.as<expr::Call>()) {
    for (const auto& a : c->args) consider(a);
  } else if (const auto* v = e.as<expr::Vector>()) {
    for (const auto& el : v->elements) consider(el);
  } else if (const auto* i = e.as<expr::Index>()) {
    consider(i->base);
    consider(i->index);
  }
  return best;
}

void locate_in(const AstNode& node, std::size_t offset, LocatedNode& out) {
  out.statement = &node;
  out.expression = nullptr;
  out.ancestry.push_back(&node);

  // Children are visited in source order; a later hit replaces an earlier one.
  const AstNode* child_hit = nullptr;
  const Expr* expr_hit = nullptr;
  auto expr_candidate = [&](const ExprPtr& e) {
    if (!e) return;
    if (const Expr* hit = deepest_expr(*e, offset)) {
      expr_hit = hit;
      child_hit = nullptr;
    }
  };
  auto stmt_candidates = [&](const std::vector<AstPtr>& stmts) {
    for (const auto& s : stmts)
      if (s->span().contains(offset)) {
        child_hit = s.get();
        expr_hit = nullptr;
      }
  };

  if (const auto* a = node.as<ast::Assignment>()) {
    expr_candidate(a->value);
  } else if (const auto* m = node.as<ast::ModuleDef>()) {
    for (const auto& f : m->formals) expr_candidate(f.default_value);
    stmt_candidates(m->body);
  } else if (const auto* inst = node.as<ast::Instantiation>()) {
    for (const auto& arg : inst->args) expr_candidate(arg.value);
    stmt_candidates(inst->children);
  } else if (const auto* loop = node.as<ast::For>()) {
    if (const auto* r = std::get_if<ast::Range>(&loop->iterable)) {
      expr_candidate(r->start);
      expr_candidate(r->step);
      expr_candidate(r->end);
    } else {
      for (const auto& e : std::get<std::vector<ExprPtr>>(loop->iterable))
        expr_candidate(e);
    }
    stmt_candidates(loop->body);
  } else if (const auto* cond = node.as<ast::If>()) {
    expr_candidate(cond->condition);
    stmt_candidates(cond->then_body);
    stmt_candidates(cond->else_body);
  } else if (const auto* block = node.as<ast::Block>()) {
    stmt_candidates(block->children);
  }

  if (child_hit) {
    locate_in(*child_hit, offset, out);
  } else if (expr_hit) {
    out.expression = expr_hit;
  }
}

// ---- rendering -------------------------------------------------------------

class ProgramRenderer {
 public:
  std::string run(const AstNode& root) {
    if (const auto* b = root.as<ast::Block>()) {
      for (const auto& s : b->children) statement_line(*s);
    } else {
      statement_line(root);
    }
    return std::move(out_);
  }

 private:
  void indent() { out_.append(static_cast<std::size_t>(depth_) * 2, ' '); }

  void statement_line(const AstNode& node) {
    indent();
    statement(node);
    out_ += '\n';
  }

  void body(const std::vector<AstPtr>& stmts, bool as_block) {
    if (!as_block && stmts.size() == 1) {
      out_ += ' ';
      statement(*stmts.front());
      return;
    }
    block(stmts);
  }

  void block(const std::vector<AstPtr>& stmts) {
    out_ += " {\n";
    ++depth_;
    for (const auto& s : stmts) statement_line(*s);
    --depth_;
    indent();
    out_ += '}';
  }

  void statement(const AstNode& node) {
    if (const auto* a = node.as<ast::Assignment>()) {
      out_ += a->name + " = " + render_expr(*a->value) + ";";
    } else if (const auto* m = node.as<ast::ModuleDef>()) {
      out_ += "module " + m->name + "(";
      for (std::size_t i = 0; i < m->formals.size(); ++i) {
        if (i) out_ += ", ";
        out_ += m->formals[i].name;
        if (m->formals[i].default_value)
          out_ += " = " + render_expr(*m->formals[i].default_value);
      }
      out_ += ")";
      block(m->body);
    } else if (const auto* inst = node.as<ast::Instantiation>()) {
      out_ += modifier_text(inst->modifier);
      out_ += inst->callee + "(";
      for (std::size_t i = 0; i < inst->args.size(); ++i) {
        if (i) out_ += ", ";
        if (inst->args[i].name) out_ += *inst->args[i].name + " = ";
        out_ += render_expr(*inst->args[i].value);
      }
      out_ += ")";
      if (inst->children.empty() && !inst->block_children)
        out_ += ';';
      else
        body(inst->children, inst->block_children);
    } else if (const auto* loop = node.as<ast::For>()) {
      out_ += "for (" + loop->variable + " = [";
      if (const auto* r = std::get_if<ast::Range>(&loop->iterable)) {
        out_ += render_expr(*r->start) + ":";
        if (r->step) out_ += render_expr(*r->step) + ":";
        out_ += render_expr(*r->end);
      } else {
        const auto& items = std::get<std::vector<ExprPtr>>(loop->iterable);
        for (std::size_t i = 0; i < items.size(); ++i) {
          if (i) out_ += ", ";
          out_ += render_expr(*items[i]);
        }
      }
      out_ += "])";
      loop_body(loop->body, loop->block_body);
    } else if (const auto* cond = node.as<ast::If>()) {
      out_ += "if (" + render_expr(*cond->condition) + ")";
      loop_body(cond->then_body, cond->then_block);
      if (cond->has_else) {
        out_ += " else";
        loop_body(cond->else_body, cond->else_block);
      }
    } else if (const auto* b = node.as<ast::Block>()) {
      out_ += '{';
      out_ += '\n';
      ++depth_;
      for (const auto& s : b->children) statement_line(*s);
      --depth_;
      indent();
      out_ += '}';
    }
  }

  // A non-block body with no statement was written as a bare `;`.
  void loop_body(const std::vector<AstPtr>& stmts, bool as_block) {
    if (!as_block && stmts.empty()) {
      out_ += " ;";
      return;
    }
    body(stmts, as_block);
  }

  std::string out_;
  int depth_ = 0;
};

// ---- equality --------------------------------------------------------------

bool expr_eq(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  return structurally_equal(*a, *b);
}

bool list_eq(const std::vector<AstPtr>& a, const std::vector<AstPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!structurally_equal(*a[i], *b[i])) return false;
  return true;
}

}  // namespace

std::optional<LocatedNode> locate_node(const AstNode& root, std::size_t offset) {
  if (!root.span().contains(offset)) return std::nullopt;
  LocatedNode out;
  locate_in(root, offset, out);
  return out;
}

std::string render_program(const AstNode& root) {
  return ProgramRenderer().run(root);
}

std::string_view modifier_text(Modifier m) {
  switch (m) {
    case Modifier::Background: return "%";
    case Modifier::Debug: return "#";
    case Modifier::None: break;
  }
  return "";
}

bool structurally_equal(const AstNode& a, const AstNode& b) {
  if (a.node().index() != b.node().index()) return false;
  if (const auto* x = a.as<ast::Assignment>()) {
    const auto* y = b.as<ast::Assignment>();
    return x->name == y->name && expr_eq(x->value, y->value);
  }
  if (const auto* x = a.as<ast::ModuleDef>()) {
    const auto* y = b.as<ast::ModuleDef>();
    if (x->name != y->name || x->formals.size() != y->formals.size())
      return false;
    for (std::size_t i = 0; i < x->formals.size(); ++i)
      if (x->formals[i].name != y->formals[i].name ||
          !expr_eq(x->formals[i].default_value, y->formals[i].default_value))
        return false;
    return list_eq(x->body, y->body);
  }
  if (const auto* x = a.as<ast::Instantiation>()) {
    const auto* y = b.as<ast::Instantiation>();
    if (x->callee != y->callee || x->modifier != y->modifier ||
        x->block_children != y->block_children ||
        x->args.size() != y->args.size())
      return false;
    for (std::size_t i = 0; i < x->args.size(); ++i)
      if (x->args[i].name != y->args[i].name ||
          !expr_eq(x->args[i].value, y->args[i].value))
        return false;
    return list_eq(x->children, y->children);
  }
  if (const auto* x = a.as<ast::For>()) {
    const auto* y = b.as<ast::For>();
    if (x->variable != y->variable || x->block_body != y->block_body ||
        x->iterable.index() != y->iterable.index())
      return false;
    if (const auto* rx = std::get_if<ast::Range>(&x->iterable)) {
      const auto& ry = std::get<ast::Range>(y->iterable);
      if (!expr_eq(rx->start, ry.start) || !expr_eq(rx->step, ry.step) ||
          !expr_eq(rx->end, ry.end))
        return false;
    } else {
      const auto& lx = std::get<std::vector<ExprPtr>>(x->iterable);
      const auto& ly = std::get<std::vector<ExprPtr>>(y->iterable);
      if (lx.size() != ly.size()) return false;
      for (std::size_t i = 0; i < lx.size(); ++i)
        if (!expr_eq(lx[i], ly[i])) return false;
    }
    return list_eq(x->body, y->body);
  }
  if (const auto* x = a.as<ast::If>()) {
    const auto* y = b.as<ast::If>();
    return expr_eq(x->condition, y->condition) &&
           x->then_block == y->then_block && x->has_else == y->has_else &&
           x->else_block == y->else_block &&
           list_eq(x->then_body, y->then_body) &&
           list_eq(x->else_body, y->else_body);
  }
  const auto* x = a.as<ast::Block>();
  const auto* y = b.as<ast::Block>();
  return list_eq(x->children, y->children);
}

}  // namespace parascad
