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

#include "parascad/payload.h"

#include "json_util.h"

namespace parascad {

namespace {

using detail::Json;
using detail::number_json;
using detail::span_json;

Json vec3_json(const Vec3& v) {
  return Json::array({number_json(v[0]), number_json(v[1]), number_json(v[2])});
}

Json expr_json(const Expr& e) {
  Json j;
  if (const auto* n = e.as<expr::Number>()) {
    j = {{"type", "number"}, {"value", number_json(n->value)}};
  } else if (const auto* b = e.as<expr::Boolean>()) {
    j = {{"type", "boolean"}, {"value", b->value}};
  } else if (const auto* v = e.as<expr::Variable>()) {
    j = {{"type", "variable"}, {"name", v->name}};
  } else if (const auto* u = e.as<expr::Unary>()) {
    j = {{"type", "unary"},
         {"op", u->op == UnaryOp::Negate ? "-" : "!"},
         {"operand", expr_json(*u->operand)}};
  } else if (const auto* bin = e.as<expr::Binary>()) {
    j = {{"type", "binary"},
         {"op", op_text(bin->op)},
         {"lhs", expr_json(*bin->lhs)},
         {"rhs", expr_json(*bin->rhs)}};
  } else if (const auto* t = e.as<expr::Ternary>()) {
    j = {{"type", "ternary"},
         {"condition", expr_json(*t->condition)},
         {"then", expr_json(*t->if_true)},
         {"else", expr_json(*t->if_false)}};
  } else if (const auto* c = e.as<expr::Call>()) {
    Json args = Json::array();
    for (const auto& a : c->args) args.push_back(expr_json(*a));
    j = {{"type", "call"}, {"function", c->function}, {"args", args}};
  } else if (const auto* vec = e.as<expr::Vector>()) {
    Json items = Json::array();
    for (const auto& a : vec->elements) items.push_back(expr_json(*a));
    j = {{"type", "vector"}, {"elements", items}};
  } else if (const auto* i = e.as<expr::Index>()) {
    j = {{"type", "index"}, {"base", expr_json(*i->base)}, {"index", expr_json(*i->index)}};
  }
  j["span"] = e.span() ? span_json(*e.span()) : Json(nullptr);
  return j;
}

Json opt_expr_json(const ExprPtr& e) { return e ? expr_json(*e) : Json(nullptr); }

Json ast_json(const AstNode& node);

Json list_json(const std::vector<AstPtr>& stmts) {
  Json a = Json::array();
  for (const auto& s : stmts) a.push_back(ast_json(*s));
  return a;
}

Json ast_json(const AstNode& node) {
  Json j;
  if (const auto* a = node.as<ast::Assignment>()) {
    j = {{"type", "assignment"}, {"name", a->name}, {"value", expr_json(*a->value)}};
  } else if (const auto* m = node.as<ast::ModuleDef>()) {
    Json formals = Json::array();
    for (const auto& f : m->formals)
      formals.push_back({{"name", f.name}, {"default", opt_expr_json(f.default_value)}});
    j = {{"type", "module"}, {"name", m->name}, {"formals", formals}, {"body", list_json(m->body)}};
  } else if (const auto* inst = node.as<ast::Instantiation>()) {
    Json args = Json::array();
    for (const auto& arg : inst->args)
      args.push_back({{"name", arg.name ? Json(*arg.name) : Json(nullptr)},
                      {"value", expr_json(*arg.value)}});
    j = {{"type", "instantiation"},
         {"callee", inst->callee},
         {"modifier", modifier_text(inst->modifier)},
         {"args", args},
         {"children", list_json(inst->children)}};
  } else if (const auto* loop = node.as<ast::For>()) {
    Json iterable;
    if (const auto* r = std::get_if<ast::Range>(&loop->iterable)) {
      iterable = {{"type", "range"},
                  {"start", expr_json(*r->start)},
                  {"step", opt_expr_json(r->step)},
                  {"end", expr_json(*r->end)}};
    } else {
      Json items = Json::array();
      for (const auto& e : std::get<std::vector<ExprPtr>>(loop->iterable))
        items.push_back(expr_json(*e));
      iterable = {{"type", "list"}, {"elements", items}};
    }
    j = {{"type", "for"},
         {"variable", loop->variable},
         {"iterable", iterable},
         {"body", list_json(loop->body)}};
  } else if (const auto* cond = node.as<ast::If>()) {
    j = {{"type", "if"},
         {"condition", expr_json(*cond->condition)},
         {"then", list_json(cond->then_body)},
         {"else", list_json(cond->else_body)}};
  } else if (const auto* block = node.as<ast::Block>()) {
    j = {{"type", "block"}, {"children", list_json(block->children)}};
  }
  j["span"] = span_json(node.span());
  return j;
}

Json flags_json(const NodeFlags& f) {
  return {{"background", f.background}, {"debug", f.debug}, {"subtracted", f.subtracted}};
}

Json path_json(const NodePath& p) {
  Json a = Json::array();
  for (std::size_t i : p) a.push_back(i);
  return a;
}

}  // namespace

std::string vector_payload(const DerivedVector& v) {
  Json j;
  if (v.symbolic) {
    Json s = Json::array();
    for (const auto& e : *v.symbolic) s.push_back(render_expr(*e));
    j["symbolic"] = s;
  } else {
    j["symbolic"] = nullptr;
  }
  j["numeric"] = vec3_json(v.numeric);
  if (!v.diagnostics.empty()) {
    Json d = Json::array();
    for (const auto& diag : v.diagnostics) d.push_back(detail::diagnostic_json(diag));
    j["diagnostics"] = d;
  }
  return j.dump() + "\n";
}

std::string scene_payload(const Scene& scene) {
  Json vars = Json::array();
  for (const auto& v : scene.variables)
    vars.push_back({{"name", v.name}, {"value", number_json(v.value)}});

  Json nodes = Json::array();
  for (const auto& n : scene.nodes) {
    Json jn;
    jn["path"] = path_json(n.path);
    jn["pathText"] = path_to_string(n.path);
    jn["kind"] = n.kind;
    if (!n.origin.empty()) jn["origin"] = n.origin;
    jn["span"] = span_json(n.span);
    jn["flags"] = flags_json(n.flags);
    Json params = Json::array();
    for (const auto& p : n.params)
      params.push_back(
          {{"name", p.name}, {"value", number_json(p.value)}, {"symbolic", p.symbolic}});
    jn["params"] = params;
    Json handles = Json::array();
    for (const auto& h : n.handles) {
      Json jh{{"id", to_string(h.id)}, {"position", vec3_json(h.position)}};
      if (h.symbolic)
        jh["symbolic"] = *h.symbolic;
      else
        jh["symbolic"] = nullptr;
      jh["symbolicAvailable"] = h.symbolic.has_value();
      handles.push_back(jh);
    }
    jn["handles"] = handles;
    if (n.mesh) {
      Json verts = Json::array();
      for (const Vec3& v : n.mesh->vertices)
        for (double x : v) verts.push_back(x);
      Json tris = Json::array();
      for (const auto& t : n.mesh->triangles)
        for (auto i : t) tris.push_back(i);
      jn["mesh"] = {{"vertices", verts}, {"triangles", tris}};
    }
    nodes.push_back(jn);
  }
  Json diags = Json::array();
  for (const auto& d : scene.diagnostics) diags.push_back(detail::diagnostic_json(d));
  Json j{{"variables", vars}, {"nodes", nodes}, {"diagnostics", diags}};
  return j.dump() + "\n";
}

std::string ast_payload(const AstNode& root) { return ast_json(root).dump() + "\n"; }

std::string error_payload(const Diagnostic& d) {
  return Json{{"error", detail::diagnostic_json(d)}}.dump() + "\n";
}

}  // namespace parascad
