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

// AST -> CSG tree. Every parameter keeps the expression that produced it,
// rewritten so that it only mentions global variables: module formals are
// replaced by the caller's argument expressions, loop variables by their
// per-iteration value, and block-local assignments by their definitions.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "parascad/csg.h"

namespace parascad {

namespace {

constexpr std::size_t kMaxIterations = 1000000;

struct Scope {
  explicit Scope(const Scope* p = nullptr) : parent(p) {}

  const Scope* parent;
  // Local names mapped to their definition in global terms. A null entry is
  // a module formal that received no value.
  std::map<std::string, ExprPtr> vars;
  std::map<std::string, const ast::ModuleDef*> modules;
  // Set on module-call scopes for children().
  const std::vector<AstPtr>* caller_children = nullptr;
  const Scope* caller_scope = nullptr;
};

std::optional<SourceSpan> find_variable_span(const Expr& e, const std::string& name) {
  std::optional<SourceSpan> found;
  auto visit = [&](const ExprPtr& x) {
    if (!found && x) found = find_variable_span(*x, name);
  };
  if (const auto* v = e.as<expr::Variable>()) {
    if (v->name == name) return e.span();
  } else if (const auto* u = e.as<expr::Unary>()) {
    visit(u->operand);
  } else if (const auto* b = e.as<expr::Binary>()) {
    visit(b->lhs);
    visit(b->rhs);
  } else if (const auto* t = e.as<expr::Ternary>()) {
    visit(t->condition);
    visit(t->if_true);
    visit(t->if_false);
  } else if (const auto* c = e.as<expr::Call>()) {
    for (const auto& a : c->args) visit(a);
  } else if (const auto* vec = e.as<expr::Vector>()) {
    for (const auto& a : vec->elements) visit(a);
  } else if (const auto* i = e.as<expr::Index>()) {
    visit(i->base);
    visit(i->index);
  }
  return found;
}

struct ParamSpec {
  std::vector<std::string> positional;  // positional order
  std::vector<std::string> named_only;
};

const std::map<std::string, ParamSpec, std::less<>>& builtin_params() {
  static const std::map<std::string, ParamSpec, std::less<>> specs = {
      {"cube", {{"size", "center"}, {}}},
      {"sphere", {{"r"}, {"d"}}},
      {"cylinder", {{"h", "r1", "r2", "center"}, {"r", "d", "d1", "d2"}}},
      {"square", {{"size", "center"}, {}}},
      {"circle", {{"r"}, {"d"}}},
      {"translate", {{"v"}, {}}},
      {"rotate", {{"a"}, {}}},
      {"scale", {{"v"}, {}}},
      {"union", {{}, {}}},
      {"difference", {{}, {}}},
      {"intersection", {{}, {}}},
      {"group", {{}, {}}},
      {"children", {{}, {}}},
  };
  return specs;
}

class Evaluator {
 public:
  Evaluator(const EvaluationOptions& options, EvaluatedProgram& out)
      : options_(options), out_(out) {}

  void run(const AstNode& root) {
    const auto* program = root.as<ast::Block>();
    const std::vector<AstPtr> single{};
    const auto& stmts = program ? program->children : single;

    evaluate_globals(stmts);

    Scope global;
    CsgNode node;
    node.kind = csg::Group{"root"};
    node.span = root.span();
    node.children = evaluate_block(stmts, global, /*top_level=*/true, 0);
    finalize(node, {}, {});
    out_.root = std::make_shared<const CsgNode>(std::move(node));
  }

 private:
  // ---- variables --------------------------------------------------------

  void evaluate_globals(const std::vector<AstPtr>& stmts) {
    for (const auto& s : stmts) {
      const auto* a = s->as<ast::Assignment>();
      if (!a) continue;
      Value v = evaluate_value(*a->value, out_.globals.values);
      const double* d = std::get_if<double>(&v);
      if (!d)
        throw Error(ErrorKind::TypeMismatch,
                    "vector-valued variable '" + a->name + "' is not supported",
                    s->span());
      if (!std::isfinite(*d))
        throw Error(ErrorKind::NonFiniteValue,
                    "variable '" + a->name + "' is not finite", s->span());
      if (!out_.globals.values.contains(a->name) && a->name.front() != '$')
        out_.globals.names.push_back(a->name);
      out_.globals.values.set(a->name, *d);
    }
  }

  const ExprPtr* find_local(const Scope& scope, const std::string& name) const {
    for (const Scope* s = &scope; s; s = s->parent) {
      auto it = s->vars.find(name);
      if (it != s->vars.end()) return &it->second;
    }
    return nullptr;
  }

  // Expression in global terms.
  ExprPtr to_global(const ExprPtr& e, const Scope& scope) const {
    return substitute(e, [&](const std::string& name) -> ExprPtr {
      if (const ExprPtr* local = find_local(scope, name)) {
        if (!*local)
          throw Error(ErrorKind::UnboundVariable,
                      "parameter '" + name + "' has no value",
                      find_variable_span(*e, name));
        return *local;
      }
      if (!out_.globals.values.contains(name))
        throw Error(ErrorKind::UnboundVariable, "unbound variable '" + name + "'",
                    find_variable_span(*e, name));
      return nullptr;
    });
  }

  Value numeric_value(const ExprPtr& global_expr) const {
    return evaluate_value(*global_expr, out_.globals.values);
  }

  double scalar(const ExprPtr& global_expr, const std::optional<SourceSpan>& span) const {
    Value v = numeric_value(global_expr);
    const double* d = std::get_if<double>(&v);
    if (!d) throw Error(ErrorKind::TypeMismatch, "expected a number, got a vector", span);
    if (!std::isfinite(*d))
      throw Error(ErrorKind::NonFiniteValue, "value is not finite", span);
    return *d;
  }

  ParamBinding bind(const ExprPtr& global_expr, const std::optional<SourceSpan>& span) const {
    ParamBinding b;
    b.numeric = scalar(global_expr, span);
    b.symbolic = simplify(global_expr);
    return b;
  }

  // Components of a vector-valued argument: literal elements when written as
  // a vector literal, `expr[i]` otherwise.
  std::vector<ExprPtr> components(const ExprPtr& global_expr,
                                  const std::optional<SourceSpan>& span) const {
    if (const auto* v = global_expr->as<expr::Vector>()) return v->elements;
    Value value = numeric_value(global_expr);
    if (const auto* vec = std::get_if<std::vector<double>>(&value)) {
      std::vector<ExprPtr> out;
      for (std::size_t i = 0; i < vec->size(); ++i)
        out.push_back(index(global_expr, number(static_cast<double>(i))));
      return out;
    }
    (void)span;
    return {global_expr};
  }

  // ---- statements -------------------------------------------------------

  std::vector<CsgNode> evaluate_block(const std::vector<AstPtr>& stmts, Scope& scope,
                                      bool top_level, int depth) {
    for (const auto& s : stmts)
      if (const auto* m = s->as<ast::ModuleDef>()) scope.modules[m->name] = m;
    if (!top_level) {
      for (const auto& s : stmts)
        if (const auto* a = s->as<ast::Assignment>())
          scope.vars[a->name] = to_global(a->value, scope);
    }
    std::vector<CsgNode> nodes;
    for (const auto& s : stmts) {
      if (s->as<ast::Assignment>() || s->as<ast::ModuleDef>()) continue;
      nodes.push_back(evaluate_statement(*s, scope, depth));
    }
    return nodes;
  }

  CsgNode group(std::string origin, const SourceSpan& span, std::vector<CsgNode> children) {
    CsgNode n;
    n.kind = csg::Group{std::move(origin)};
    n.span = span;
    n.children = std::move(children);
    return n;
  }

  CsgNode evaluate_statement(const AstNode& stmt, const Scope& scope, int depth) {
    if (const auto* inst = stmt.as<ast::Instantiation>())
      return evaluate_instantiation(*inst, stmt.span(), scope, depth);
    if (const auto* loop = stmt.as<ast::For>())
      return evaluate_for(*loop, stmt.span(), scope, depth);
    if (const auto* cond = stmt.as<ast::If>()) {
      double c = scalar(to_global(cond->condition, scope), cond->condition->span());
      Scope inner{&scope};
      return group("if", stmt.span(),
                   evaluate_block(c != 0.0 ? cond->then_body : cond->else_body,
                                  inner, false, depth));
    }
    const auto* block = stmt.as<ast::Block>();
    Scope inner{&scope};
    return group("block", stmt.span(), evaluate_block(block->children, inner, false, depth));
  }

  CsgNode evaluate_for(const ast::For& loop, const SourceSpan& span, const Scope& scope,
                       int depth) {
    std::vector<double> values;
    if (const auto* r = std::get_if<ast::Range>(&loop.iterable)) {
      double start = scalar(to_global(r->start, scope), r->start->span());
      double step = r->step ? scalar(to_global(r->step, scope), r->step->span()) : 1.0;
      double end = scalar(to_global(r->end, scope), r->end->span());
      if (step == 0.0)
        throw Error(ErrorKind::TypeMismatch, "range step must be nonzero",
                    r->step ? r->step->span() : span);
      double steps = (end - start) / step;
      if (steps >= -1e-9) {
        double count = std::floor(steps + 1e-9) + 1.0;
        if (count > static_cast<double>(kMaxIterations))
          throw Error(ErrorKind::TypeMismatch, "range has too many elements", span);
        for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i)
          values.push_back(start + static_cast<double>(i) * step);
      }
    } else {
      for (const auto& item : std::get<std::vector<ExprPtr>>(loop.iterable))
        values.push_back(scalar(to_global(item, scope), item->span()));
    }

    std::vector<CsgNode> iterations;
    iterations.reserve(values.size());
    for (double v : values) {
      Scope inner{&scope};
      inner.vars[loop.variable] = signed_number(v);
      std::vector<CsgNode> nodes = evaluate_block(loop.body, inner, false, depth);
      if (nodes.size() == 1)
        iterations.push_back(std::move(nodes.front()));
      else
        iterations.push_back(group("for iteration", span, std::move(nodes)));
    }
    return group("for", span, std::move(iterations));
  }

  const ast::ModuleDef* find_module(const Scope& scope, const std::string& name,
                                    const Scope** where) const {
    for (const Scope* s = &scope; s; s = s->parent) {
      auto it = s->modules.find(name);
      if (it != s->modules.end()) {
        *where = s;
        return it->second;
      }
    }
    return nullptr;
  }

  void apply_modifier(CsgNode& n, Modifier m) {
    if (m == Modifier::Background) n.flags.background = true;
    if (m == Modifier::Debug) n.flags.debug = true;
  }

  CsgNode evaluate_instantiation(const ast::Instantiation& inst, const SourceSpan& span,
                                 const Scope& scope, int depth) {
    const Scope* def_scope = nullptr;
    if (const ast::ModuleDef* def = find_module(scope, inst.callee, &def_scope)) {
      CsgNode n = evaluate_module_call(inst, *def, *def_scope, span, scope, depth);
      apply_modifier(n, inst.modifier);
      return n;
    }
    auto spec_it = builtin_params().find(inst.callee);
    if (spec_it == builtin_params().end())
      throw Error(ErrorKind::UnknownModule, "unknown module '" + inst.callee + "'", span);
    const ParamSpec& spec = spec_it->second;

    // Map arguments to parameter names.
    std::map<std::string, const ast::Argument*> args;
    std::size_t position = 0;
    for (const auto& a : inst.args) {
      if (a.name) {
        bool known = a.name->front() == '$' ||
                     std::find(spec.positional.begin(), spec.positional.end(), *a.name) !=
                         spec.positional.end() ||
                     std::find(spec.named_only.begin(), spec.named_only.end(), *a.name) !=
                         spec.named_only.end();
        if (!known)
          warn(ErrorKind::TypeMismatch,
               inst.callee + "(): unknown parameter '" + *a.name + "' ignored", a.span);
        args[*a.name] = &a;
      } else if (position < spec.positional.size()) {
        args[spec.positional[position++]] = &a;
      } else {
        warn(ErrorKind::TypeMismatch, inst.callee + "(): extra argument ignored", a.span);
      }
    }
    auto arg = [&](const std::string& name) -> ExprPtr {
      auto it = args.find(name);
      if (it == args.end()) return nullptr;
      return to_global(it->second->value, scope);
    };

    CsgNode n;
    n.span = span;
    const std::string& name = inst.callee;
    if (name == "cube" || name == "sphere" || name == "cylinder" || name == "square" ||
        name == "circle") {
      n.kind = primitive(name, arg, span, scope);
      if (!inst.children.empty())
        warn(ErrorKind::TypeMismatch, name + "() does not take children; ignored", span);
    } else if (name == "children") {
      const Scope* s = &scope;
      while (s && !s->caller_children) s = s->parent;
      n.kind = csg::Group{"children"};
      if (s) {
        Scope inner{s->caller_scope};
        n.children = evaluate_block(*s->caller_children, inner, false, depth);
      }
    } else {
      if (name == "translate" || name == "rotate" || name == "scale")
        n.kind = transform(name, arg, span);
      else if (name == "union")
        n.kind = csg::Boolean{BooleanOp::Union};
      else if (name == "difference")
        n.kind = csg::Boolean{BooleanOp::Difference};
      else if (name == "intersection")
        n.kind = csg::Boolean{BooleanOp::Intersection};
      else
        n.kind = csg::Group{"group"};
      Scope inner{&scope};
      n.children = evaluate_block(inst.children, inner, false, depth);
    }
    apply_modifier(n, inst.modifier);
    return n;
  }

  template <typename ArgFn>
  csg::Primitive primitive(const std::string& name, ArgFn& arg, const SourceSpan& span,
                           const Scope& scope) {
    csg::Primitive p;
    if (ExprPtr c = arg("center")) p.center = scalar(c, c->span()) != 0.0;
    p.fn = segment_count(arg("$fn"), scope);

    auto one = [&](double v) { return number(v); };
    auto twice = [&](const ExprPtr& e) { return binary(BinaryOp::Mul, number(2), e); };
    auto half = [&](const ExprPtr& e) { return binary(BinaryOp::Div, e, number(2)); };

    if (name == "cube" || name == "square") {
      p.shape = name == "cube" ? Shape::Cube : Shape::Square;
      std::size_t dims = name == "cube" ? 3 : 2;
      std::vector<ExprPtr> comps;
      if (ExprPtr size = arg("size")) {
        comps = components(size, size->span());
        if (comps.size() == 1) comps.assign(dims, comps.front());
        if (comps.size() != dims)
          throw Error(ErrorKind::TypeMismatch,
                      name + "() size needs " + std::to_string(dims) + " components",
                      size->span() ? size->span() : span);
      } else {
        comps.assign(dims, one(1));
      }
      for (const auto& c : comps) p.size.push_back(bind(c, c->span() ? c->span() : span));
    } else if (name == "sphere" || name == "circle") {
      p.shape = name == "sphere" ? Shape::Sphere : Shape::Circle;
      ExprPtr r = arg("r");
      if (!r) {
        if (ExprPtr d = arg("d")) r = half(d);
      }
      if (!r) r = one(1);
      p.size.push_back(bind(r, r->span() ? r->span() : span));
    } else {
      p.shape = Shape::Cylinder;
      auto diameter = [&](const char* d_name, const char* r_name) -> ExprPtr {
        if (ExprPtr d = arg(d_name)) return d;
        if (ExprPtr r = arg(r_name)) return twice(r);
        if (ExprPtr d = arg("d")) return d;
        if (ExprPtr r = arg("r")) return twice(r);
        return one(2);
      };
      ExprPtr h = arg("h");
      if (!h) h = one(1);
      for (const ExprPtr& e : {diameter("d1", "r1"), diameter("d2", "r2"), h})
        p.size.push_back(bind(e, e->span() ? e->span() : span));
    }
    return p;
  }

  int segment_count(const ExprPtr& explicit_fn, const Scope& scope) const {
    ExprPtr fn = explicit_fn;
    if (!fn) {
      if (const ExprPtr* local = find_local(scope, "$fn"); local && *local)
        fn = *local;
      else if (out_.globals.values.contains("$fn"))
        fn = variable("$fn");
    }
    if (!fn) return options_.default_fn;
    double v = scalar(fn, fn->span());
    if (v <= 0) return options_.default_fn;
    return std::max(3, static_cast<int>(std::min(v, 100000.0)));
  }

  template <typename ArgFn>
  csg::Transform transform(const std::string& name, ArgFn& arg, const SourceSpan& span) {
    csg::Transform t;
    t.kind = name == "translate" ? TransformKind::Translate
             : name == "rotate"  ? TransformKind::Rotate
                                 : TransformKind::Scale;
    ExprPtr v = arg(name == "rotate" ? "a" : "v");
    double identity = t.kind == TransformKind::Scale ? 1.0 : 0.0;
    std::vector<ExprPtr> comps;
    if (v) {
      comps = components(v, v->span());
      bool is_vector = v->is<expr::Vector>() || comps.size() > 1;
      if (!is_vector) {
        if (t.kind == TransformKind::Translate)
          throw Error(ErrorKind::TypeMismatch, "translate() needs a vector",
                      v->span() ? v->span() : span);
        if (t.kind == TransformKind::Rotate)
          comps = {number(0), number(0), comps.front()};
        else
          comps.assign(3, comps.front());
      }
      if (comps.size() < 2 || comps.size() > 3)
        throw Error(ErrorKind::TypeMismatch,
                    name + "() vector needs 2 or 3 components", v->span() ? v->span() : span);
    }
    while (comps.size() < 3) comps.push_back(number(identity));
    for (std::size_t i = 0; i < 3; ++i)
      t.vector[i] = bind(comps[i], comps[i]->span() ? comps[i]->span() : span);
    return t;
  }

  CsgNode evaluate_module_call(const ast::Instantiation& inst, const ast::ModuleDef& def,
                               const Scope& def_scope, const SourceSpan& span,
                               const Scope& caller, int depth) {
    if (depth + 1 > options_.max_module_depth)
      throw Error(ErrorKind::RecursionLimitExceeded,
                  "module nesting deeper than " + std::to_string(options_.max_module_depth) +
                      " levels in '" + def.name + "'",
                  span);
    Scope callee{&def_scope};
    callee.caller_children = &inst.children;
    callee.caller_scope = &caller;

    std::size_t position = 0;
    std::map<std::string, ExprPtr> bound;
    for (const auto& a : inst.args) {
      ExprPtr value = to_global(a.value, caller);
      if (a.name) {
        bool known = a.name->front() == '$' ||
                     std::any_of(def.formals.begin(), def.formals.end(),
                                 [&](const ast::Formal& f) { return f.name == *a.name; });
        if (!known)
          warn(ErrorKind::TypeMismatch,
               def.name + "(): unknown parameter '" + *a.name + "' ignored", a.span);
        bound[*a.name] = value;
      } else if (position < def.formals.size()) {
        bound[def.formals[position++].name] = value;
      } else {
        warn(ErrorKind::TypeMismatch, def.name + "(): extra argument ignored", a.span);
      }
    }
    for (const auto& f : def.formals) {
      auto it = bound.find(f.name);
      if (it != bound.end())
        callee.vars[f.name] = it->second;
      else if (f.default_value)
        callee.vars[f.name] = to_global(f.default_value, def_scope);
      else
        callee.vars[f.name] = nullptr;
    }
    for (const auto& [name, value] : bound)
      if (name.front() == '$') callee.vars[name] = value;

    CsgNode n = group("module " + def.name, span, {});
    n.children = evaluate_block(def.body, callee, false, depth + 1);
    return n;
  }

  void warn(ErrorKind kind, std::string message, const SourceSpan& span) {
    out_.warnings.push_back({kind, std::move(message), span});
  }

  // Paths and inherited flags.
  void finalize(CsgNode& n, NodePath path, NodeFlags inherited) {
    n.path = path;
    n.flags.background |= inherited.background;
    n.flags.debug |= inherited.debug;
    n.flags.subtracted |= inherited.subtracted;
    const auto* b = n.as<csg::Boolean>();
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      NodeFlags child = n.flags;
      if (b && b->op == BooleanOp::Difference && i > 0) child.subtracted = true;
      NodePath p = path;
      p.push_back(i);
      finalize(n.children[i], std::move(p), child);
    }
  }

  const EvaluationOptions& options_;
  EvaluatedProgram& out_;
};

}  // namespace

std::string_view shape_name(Shape s) {
  switch (s) {
    case Shape::Cube: return "cube";
    case Shape::Sphere: return "sphere";
    case Shape::Cylinder: return "cylinder";
    case Shape::Square: return "square";
    case Shape::Circle: return "circle";
  }
  return "?";
}

std::string_view transform_name(TransformKind k) {
  switch (k) {
    case TransformKind::Translate: return "translate";
    case TransformKind::Rotate: return "rotate";
    case TransformKind::Scale: return "scale";
  }
  return "?";
}

std::string_view boolean_name(BooleanOp op) {
  switch (op) {
    case BooleanOp::Union: return "union";
    case BooleanOp::Difference: return "difference";
    case BooleanOp::Intersection: return "intersection";
  }
  return "?";
}

bool is_3d(Shape s) { return s != Shape::Square && s != Shape::Circle; }

std::string path_to_string(const NodePath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '/';
    out += std::to_string(path[i]);
  }
  return out;
}

NodePath parse_path(std::string_view text) {
  NodePath path;
  if (text.empty() || text == "/") return path;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t slash = text.find('/', pos);
    std::string_view part = text.substr(pos, slash == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : slash - pos);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw Error(ErrorKind::InvalidPath,
                  "malformed node path '" + std::string(text) + "'");
    path.push_back(value);
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
  return path;
}

std::string CsgNode::kind_name() const {
  if (const auto* p = as<csg::Primitive>()) return std::string(shape_name(p->shape));
  if (const auto* t = as<csg::Transform>()) return std::string(transform_name(t->kind));
  if (const auto* b = as<csg::Boolean>()) return std::string(boolean_name(b->op));
  return "group";
}

std::vector<std::pair<std::string, const ParamBinding*>> CsgNode::named_params() const {
  std::vector<std::pair<std::string, const ParamBinding*>> out;
  if (const auto* p = as<csg::Primitive>()) {
    static const std::vector<std::string> cube = {"size_x", "size_y", "size_z"};
    static const std::vector<std::string> radius = {"r"};
    static const std::vector<std::string> cylinder = {"d1", "d2", "h"};
    const std::vector<std::string>* names = &cube;
    if (p->shape == Shape::Sphere || p->shape == Shape::Circle) names = &radius;
    if (p->shape == Shape::Cylinder) names = &cylinder;
    for (std::size_t i = 0; i < p->size.size() && i < names->size(); ++i)
      out.emplace_back((*names)[i], &p->size[i]);
  } else if (const auto* t = as<csg::Transform>()) {
    static const char* axes[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < 3; ++i) out.emplace_back(axes[i], &t->vector[i]);
  }
  return out;
}

EvaluatedProgram evaluate_program(const AstNode& root, const EvaluationOptions& options) {
  EvaluatedProgram out;
  Evaluator(options, out).run(root);
  return out;
}

const CsgNode& node_at_path(const CsgNode& root, const NodePath& path) {
  const CsgNode* n = &root;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= n->children.size())
      throw Error(ErrorKind::InvalidPath,
                  "no node at path '" + path_to_string(path) + "' (node '" +
                      path_to_string(NodePath(path.begin(), path.begin() + i)) + "' has " +
                      std::to_string(n->children.size()) + " children)");
    n = &n->children[path[i]];
  }
  return *n;
}

std::vector<const CsgNode*> ancestry(const CsgNode& root, const NodePath& path) {
  node_at_path(root, path);  // validates
  std::vector<const CsgNode*> chain{&root};
  const CsgNode* n = &root;
  for (std::size_t idx : path) {
    n = &n->children[idx];
    chain.push_back(n);
  }
  return chain;
}

void for_each_node(const CsgNode& root, const std::function<void(const CsgNode&)>& fn) {
  fn(root);
  for (const auto& c : root.children) for_each_node(c, fn);
}

}  // namespace parascad
