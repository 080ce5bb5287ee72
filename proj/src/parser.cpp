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

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

#include "parascad/lang.h"

namespace parascad {

namespace {

enum class Tok {
  Identifier,
  Number,
  String,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Semicolon,
  Colon,
  Question,
  Assign,
  Plus,
  Minus,
  Star,
  Slash,
  Percent,
  Hash,
  Bang,
  Less,
  LessEqual,
  Greater,
  GreaterEqual,
  EqualEqual,
  NotEqual,
  AndAnd,
  OrOr,
  Other,
  End,
};

struct Token {
  Tok kind;
  std::string_view text;
  SourceSpan span;
};

constexpr std::array<std::string_view, 6> kUnsupportedModules = {
    "minkowski", "hull", "text", "import", "linear_extrude", "rotate_extrude"};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (pos_ >= src_.size()) {
        SourceSpan s = mark();
        s.end = pos_;
        s.end_line = line_;
        s.end_column = column_;
        out.push_back({Tok::End, {}, s});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  SourceSpan mark() const {
    SourceSpan s;
    s.start = pos_;
    s.start_line = line_;
    s.start_column = column_;
    return s;
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourceSpan start = mark();
        advance();
        advance();
        while (pos_ < src_.size() && !(src_[pos_] == '*' && peek(1) == '/'))
          advance();
        if (pos_ >= src_.size()) {
          start.end = start.start + 2;
          start.end_line = start.start_line;
          start.end_column = start.start_column + 1;
          throw ParseError({{ErrorKind::Parse, "unterminated block comment", start}});
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  Token finish(Tok kind, SourceSpan span, std::size_t len) {
    for (std::size_t i = 0; i + 1 < len; ++i) advance();
    span.end_line = line_;
    span.end_column = column_;
    advance();
    span.end = pos_;
    return {kind, src_.substr(span.start, len), span};
  }

  Token next() {
    SourceSpan s = mark();
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
      std::size_t len = 1;
      while (std::isalnum(static_cast<unsigned char>(peek(len))) ||
             peek(len) == '_')
        ++len;
      return finish(Tok::Identifier, s, len);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      std::size_t len = 0;
      while (std::isdigit(static_cast<unsigned char>(peek(len)))) ++len;
      if (peek(len) == '.') {
        ++len;
        while (std::isdigit(static_cast<unsigned char>(peek(len)))) ++len;
      }
      if (peek(len) == 'e' || peek(len) == 'E') {
        std::size_t k = len + 1;
        if (peek(k) == '+' || peek(k) == '-') ++k;
        if (std::isdigit(static_cast<unsigned char>(peek(k)))) {
          len = k;
          while (std::isdigit(static_cast<unsigned char>(peek(len)))) ++len;
        }
      }
      return finish(Tok::Number, s, len);
    }
    if (c == '"') {
      std::size_t len = 1;
      while (pos_ + len < src_.size() && peek(len) != '"') {
        if (peek(len) == '\\') ++len;
        ++len;
      }
      len = std::min(len + 1, src_.size() - pos_);
      return finish(Tok::String, s, len);
    }
    auto two = [&](char second) { return peek(1) == second; };
    switch (c) {
      case '(': return finish(Tok::LParen, s, 1);
      case ')': return finish(Tok::RParen, s, 1);
      case '[': return finish(Tok::LBracket, s, 1);
      case ']': return finish(Tok::RBracket, s, 1);
      case '{': return finish(Tok::LBrace, s, 1);
      case '}': return finish(Tok::RBrace, s, 1);
      case ',': return finish(Tok::Comma, s, 1);
      case ';': return finish(Tok::Semicolon, s, 1);
      case ':': return finish(Tok::Colon, s, 1);
      case '?': return finish(Tok::Question, s, 1);
      case '+': return finish(Tok::Plus, s, 1);
      case '-': return finish(Tok::Minus, s, 1);
      case '*': return finish(Tok::Star, s, 1);
      case '/': return finish(Tok::Slash, s, 1);
      case '%': return finish(Tok::Percent, s, 1);
      case '#': return finish(Tok::Hash, s, 1);
      case '=': return two('=') ? finish(Tok::EqualEqual, s, 2)
                                : finish(Tok::Assign, s, 1);
      case '!': return two('=') ? finish(Tok::NotEqual, s, 2)
                                : finish(Tok::Bang, s, 1);
      case '<': return two('=') ? finish(Tok::LessEqual, s, 2)
                                : finish(Tok::Less, s, 1);
      case '>': return two('=') ? finish(Tok::GreaterEqual, s, 2)
                                : finish(Tok::Greater, s, 1);
      case '&':
        if (two('&')) return finish(Tok::AndAnd, s, 2);
        break;
      case '|':
        if (two('|')) return finish(Tok::OrOr, s, 2);
        break;
      default:
        break;
    }
    // Consume a whole UTF-8 sequence so the error quotes a full character.
    std::size_t len = 1;
    while (pos_ + len < src_.size() &&
           (static_cast<unsigned char>(peek(len)) & 0xC0) == 0x80)
      ++len;
    return finish(Tok::Other, s, len);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool contains_boolean(const Expr& e) {
  if (e.is<expr::Boolean>()) return true;
  if (const auto* u = e.as<expr::Unary>()) return contains_boolean(*u->operand);
  if (const auto* b = e.as<expr::Binary>())
    return contains_boolean(*b->lhs) || contains_boolean(*b->rhs);
  if (const auto* t = e.as<expr::Ternary>())
    return contains_boolean(*t->condition) || contains_boolean(*t->if_true) ||
           contains_boolean(*t->if_false);
  if (const auto* c = e.as<expr::Call>())
    return std::any_of(c->args.begin(), c->args.end(),
                       [](const ExprPtr& a) { return contains_boolean(*a); });
  if (const auto* v = e.as<expr::Vector>())
    return std::any_of(v->elements.begin(), v->elements.end(),
                       [](const ExprPtr& a) { return contains_boolean(*a); });
  if (const auto* i = e.as<expr::Index>())
    return contains_boolean(*i->base) || contains_boolean(*i->index);
  return false;
}

// Position of the positional `center` parameter for builtins that have one.
std::optional<std::size_t> center_slot(std::string_view callee) {
  if (callee == "cube" || callee == "square") return 1;
  if (callee == "cylinder") return 3;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src), tokens_(Lexer(src).run()) {}

  AstPtr program() {
    std::vector<AstPtr> stmts;
    while (!at(Tok::End))
      if (AstPtr s = statement()) stmts.push_back(std::move(s));
    SourceSpan span;
    if (tokens_.size() > 1) span = join(tokens_.front().span, tokens_[tokens_.size() - 2].span);
    return std::make_shared<const AstNode>(ast::Block{std::move(stmts)}, span);
  }

  ExprPtr lone_expression() {
    ExprPtr e = expression();
    if (!at(Tok::End)) fail("expected end of expression, found " + describe(cur()));
    return e;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  const Token& peek(std::size_t ahead = 1) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(Tok k) const { return cur().kind == k; }
  bool at_word(std::string_view w) const {
    return at(Tok::Identifier) && cur().text == w;
  }
  const Token& take() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  const SourceSpan& last_span() const { return tokens_[pos_ - 1].span; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError({{ErrorKind::Parse, message, cur().span}});
  }
  [[noreturn]] void unsupported(const std::string& what,
                                const SourceSpan& span) const {
    throw ParseError(
        {{ErrorKind::Unsupported, "unsupported construct: " + what, span}});
  }

  const Token& expect(Tok k, std::string_view what) {
    if (!at(k)) fail("expected " + std::string(what) + ", found " + describe(cur()));
    return take();
  }

  std::string identifier(std::string_view what) {
    return std::string(expect(Tok::Identifier, what).text);
  }

  // ---- statements -------------------------------------------------------

  AstPtr statement() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Semicolon:
        take();
        return nullptr;
      case Tok::LBrace: {
        bool unused = false;
        SourceSpan start = t.span;
        auto body = block(unused);
        return std::make_shared<const AstNode>(ast::Block{std::move(body)},
                                               join(start, last_span()));
      }
      case Tok::Percent:
      case Tok::Hash:
        return instantiation();
      case Tok::Star:
      case Tok::Bang:
        unsupported("'" + std::string(t.text) + "' modifier", t.span);
      case Tok::Identifier:
        break;
      default:
        fail("expected statement, found " + describe(t));
    }
    if (t.text == "module") return module_def();
    if (t.text == "function") unsupported("user-defined functions", t.span);
    if (t.text == "include" || t.text == "use")
      unsupported("'" + std::string(t.text) + "' statements", t.span);
    if (t.text == "let") unsupported("'let'", t.span);
    if (t.text == "for") return for_stmt();
    if (t.text == "if") return if_stmt();
    if (peek().kind == Tok::Assign) return assignment();
    if (peek().kind == Tok::LParen) return instantiation();
    fail("expected '=' or '(' after " + describe(t));
  }

  AstPtr assignment() {
    SourceSpan start = cur().span;
    std::string name = identifier("identifier");
    expect(Tok::Assign, "'='");
    ExprPtr value = expression();
    if (contains_boolean(*value))
      fail_at(*value, "boolean values are only accepted for 'center'");
    expect(Tok::Semicolon, "';'");
    return std::make_shared<const AstNode>(ast::Assignment{name, value},
                                           join(start, last_span()));
  }

  [[noreturn]] void fail_at(const Expr& e, const std::string& message) const {
    throw ParseError({{ErrorKind::Parse, message, e.span()}});
  }

  // Statements that may follow a transform or loop header.
  AstPtr child_statement() {
    if (at(Tok::Identifier) && peek().kind == Tok::Assign)
      fail("assignment is not allowed here");
    if (at_word("module")) fail("module definition is not allowed here");
    return statement();
  }

  std::vector<AstPtr> block(bool& is_block) {
    is_block = true;
    expect(Tok::LBrace, "'{'");
    std::vector<AstPtr> out;
    while (!at(Tok::RBrace)) {
      if (at(Tok::End)) fail("expected '}', found end of input");
      if (AstPtr s = statement()) out.push_back(std::move(s));
    }
    take();
    return out;
  }

  std::vector<AstPtr> body(bool& is_block) {
    if (at(Tok::LBrace)) return block(is_block);
    is_block = false;
    std::vector<AstPtr> out;
    if (AstPtr s = child_statement()) out.push_back(std::move(s));
    return out;
  }

  AstPtr module_def() {
    SourceSpan start = take().span;
    ast::ModuleDef def;
    def.name = identifier("module name");
    expect(Tok::LParen, "'('");
    while (!at(Tok::RParen)) {
      ast::Formal f;
      f.span = cur().span;
      f.name = identifier("parameter name");
      if (at(Tok::Assign)) {
        take();
        f.default_value = expression();
        f.span = join(f.span, *f.default_value->span());
      }
      def.formals.push_back(std::move(f));
      if (!at(Tok::Comma)) break;
      take();
    }
    expect(Tok::RParen, "')'");
    bool is_block = false;
    def.body = body(is_block);
    return std::make_shared<const AstNode>(std::move(def), join(start, last_span()));
  }

  AstPtr instantiation() {
    SourceSpan start = cur().span;
    ast::Instantiation inst;
    if (at(Tok::Percent) || at(Tok::Hash)) {
      inst.modifier = take().kind == Tok::Percent ? Modifier::Background
                                                  : Modifier::Debug;
      if (!at(Tok::Identifier) || peek().kind != Tok::LParen ||
          cur().text == "for" || cur().text == "if")
        fail("expected module instantiation after modifier, found " +
             describe(cur()));
    }
    const Token& callee = expect(Tok::Identifier, "module name");
    inst.callee = std::string(callee.text);
    if (std::find(kUnsupportedModules.begin(), kUnsupportedModules.end(),
                  inst.callee) != kUnsupportedModules.end())
      unsupported("'" + inst.callee + "'", callee.span);
    expect(Tok::LParen, "'('");
    while (!at(Tok::RParen)) {
      inst.args.push_back(argument());
      if (!at(Tok::Comma)) break;
      take();
    }
    expect(Tok::RParen, "')'");
    validate_arguments(inst, callee.span);

    if (at(Tok::Semicolon)) {
      take();
    } else {
      inst.children = body(inst.block_children);
    }
    return std::make_shared<const AstNode>(std::move(inst), join(start, last_span()));
  }

  ast::Argument argument() {
    ast::Argument arg;
    SourceSpan start = cur().span;
    if (at(Tok::Identifier) && peek().kind == Tok::Assign) {
      arg.name = std::string(take().text);
      take();
    }
    arg.value = expression();
    arg.span = join(start, *arg.value->span());
    return arg;
  }

  void validate_arguments(const ast::Instantiation& inst,
                          const SourceSpan& callee_span) const {
    auto slot = center_slot(inst.callee);
    std::size_t positional = 0;
    for (const auto& a : inst.args) {
      bool center = a.name ? *a.name == "center"
                           : (slot && positional == *slot);
      if (!a.name) ++positional;
      if (contains_boolean(*a.value) && !(center && a.value->is<expr::Boolean>()))
        fail_at(*a.value, "boolean values are only accepted for 'center'");
    }
    if (inst.callee == "rotate" && (positional > 1 || inst.named("v")))
      unsupported("rotate(a, v) axis-angle form", callee_span);
  }

  AstPtr for_stmt() {
    SourceSpan start = take().span;
    ast::For loop;
    expect(Tok::LParen, "'('");
    loop.variable = identifier("loop variable");
    expect(Tok::Assign, "'='");
    if (!at(Tok::LBracket)) fail("expected range or list, found " + describe(cur()));
    take();
    if (at(Tok::RBracket)) {
      take();
      loop.iterable = std::vector<ExprPtr>{};
    } else {
      if (at_word("for")) unsupported("list comprehensions", cur().span);
      ExprPtr first = expression();
      if (at(Tok::Colon)) {
        take();
        ast::Range range;
        range.start = first;
        ExprPtr second = expression();
        if (at(Tok::Colon)) {
          take();
          range.step = second;
          range.end = expression();
        } else {
          range.end = second;
        }
        expect(Tok::RBracket, "']'");
        loop.iterable = std::move(range);
      } else {
        std::vector<ExprPtr> items{first};
        while (at(Tok::Comma)) {
          take();
          items.push_back(expression());
        }
        expect(Tok::RBracket, "']'");
        loop.iterable = std::move(items);
      }
    }
    if (at(Tok::Comma)) unsupported("multi-variable for loops", cur().span);
    expect(Tok::RParen, "')'");
    loop.body = body(loop.block_body);
    return std::make_shared<const AstNode>(std::move(loop), join(start, last_span()));
  }

  AstPtr if_stmt() {
    SourceSpan start = take().span;
    ast::If stmt;
    expect(Tok::LParen, "'('");
    stmt.condition = expression();
    expect(Tok::RParen, "')'");
    stmt.then_body = body(stmt.then_block);
    if (at_word("else")) {
      take();
      stmt.has_else = true;
      stmt.else_body = body(stmt.else_block);
    }
    return std::make_shared<const AstNode>(std::move(stmt), join(start, last_span()));
  }

  // ---- expressions ------------------------------------------------------

  ExprPtr expression() { return ternary_expr(); }

  ExprPtr ternary_expr() {
    ExprPtr cond = or_expr();
    if (!at(Tok::Question)) return cond;
    take();
    ExprPtr a = expression();
    expect(Tok::Colon, "':'");
    ExprPtr b = ternary_expr();
    return ternary(cond, a, b, join(*cond->span(), *b->span()));
  }

  template <typename Next>
  ExprPtr left_assoc(Next next, std::initializer_list<std::pair<Tok, BinaryOp>> ops) {
    ExprPtr lhs = (this->*next)();
    for (;;) {
      auto it = std::find_if(ops.begin(), ops.end(),
                             [&](const auto& p) { return at(p.first); });
      if (it == ops.end()) return lhs;
      take();
      ExprPtr rhs = (this->*next)();
      lhs = binary(it->second, lhs, rhs, join(*lhs->span(), *rhs->span()));
    }
  }

  ExprPtr or_expr() {
    return left_assoc(&Parser::and_expr, {{Tok::OrOr, BinaryOp::Or}});
  }
  ExprPtr and_expr() {
    return left_assoc(&Parser::equality_expr, {{Tok::AndAnd, BinaryOp::And}});
  }
  ExprPtr equality_expr() {
    return left_assoc(&Parser::relational_expr,
                      {{Tok::EqualEqual, BinaryOp::Equal},
                       {Tok::NotEqual, BinaryOp::NotEqual}});
  }
  ExprPtr relational_expr() {
    return left_assoc(&Parser::additive_expr,
                      {{Tok::Less, BinaryOp::Less},
                       {Tok::LessEqual, BinaryOp::LessEqual},
                       {Tok::Greater, BinaryOp::Greater},
                       {Tok::GreaterEqual, BinaryOp::GreaterEqual}});
  }
  ExprPtr additive_expr() {
    return left_assoc(&Parser::multiplicative_expr,
                      {{Tok::Plus, BinaryOp::Add}, {Tok::Minus, BinaryOp::Sub}});
  }
  ExprPtr multiplicative_expr() {
    return left_assoc(&Parser::unary_expr, {{Tok::Star, BinaryOp::Mul},
                                            {Tok::Slash, BinaryOp::Div},
                                            {Tok::Percent, BinaryOp::Mod}});
  }

  ExprPtr unary_expr() {
    if (at(Tok::Minus) || at(Tok::Bang)) {
      const Token& op = take();
      ExprPtr operand = unary_expr();
      return unary(op.kind == Tok::Minus ? UnaryOp::Negate : UnaryOp::Not,
                   operand, join(op.span, *operand->span()));
    }
    if (at(Tok::Plus)) {
      take();
      return unary_expr();
    }
    return postfix_expr();
  }

  ExprPtr postfix_expr() {
    ExprPtr e = primary();
    while (at(Tok::LBracket)) {
      take();
      ExprPtr idx = expression();
      expect(Tok::RBracket, "']'");
      e = index(e, idx, join(*e->span(), last_span()));
    }
    return e;
  }

  ExprPtr primary() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Number: {
        take();
        std::string text(t.text);
        return number(std::strtod(text.c_str(), nullptr), t.span);
      }
      case Tok::String:
        unsupported("string values", t.span);
      case Tok::LParen: {
        take();
        ExprPtr e = expression();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LBracket:
        return vector_literal();
      case Tok::Identifier:
        break;
      default:
        fail("expected expression, found " + describe(t));
    }
    take();
    if (t.text == "true" || t.text == "false") return boolean(t.text == "true", t.span);
    if (t.text == "let" || t.text == "function" || t.text == "each")
      unsupported("'" + std::string(t.text) + "'", t.span);
    if (t.text == "undef") unsupported("'undef'", t.span);
    if (!at(Tok::LParen)) return variable(std::string(t.text), t.span);
    std::string name(t.text);
    if (!is_builtin_function(name)) unsupported("function '" + name + "'", t.span);
    take();
    std::vector<ExprPtr> args;
    while (!at(Tok::RParen)) {
      if (at(Tok::Identifier) && peek().kind == Tok::Assign)
        fail("named arguments are not supported in function calls");
      args.push_back(expression());
      if (!at(Tok::Comma)) break;
      take();
    }
    expect(Tok::RParen, "')'");
    return call(name, std::move(args), join(t.span, last_span()));
  }

  ExprPtr vector_literal() {
    SourceSpan start = take().span;
    std::vector<ExprPtr> elements;
    if (at_word("for") || at_word("each"))
      unsupported("list comprehensions", cur().span);
    while (!at(Tok::RBracket)) {
      elements.push_back(expression());
      if (at(Tok::Colon)) fail("ranges are only allowed in for loops");
      if (!at(Tok::Comma)) break;
      take();
    }
    expect(Tok::RBracket, "']'");
    return vector(std::move(elements), join(start, last_span()));
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(diagnostics.empty() ? ErrorKind::Parse : diagnostics.front().kind,
            diagnostics.empty() ? "parse error" : diagnostics.front().message,
            diagnostics.empty() ? std::nullopt : diagnostics.front().span),
      diagnostics_(std::move(diagnostics)) {}

AstPtr parse(std::string_view source) { return Parser(source).program(); }

ExprPtr parse_expression(std::string_view source) {
  return Parser(source).lone_expression();
}

const ast::Argument* ast::Instantiation::positional(std::size_t i) const {
  for (const auto& a : args) {
    if (a.name) continue;
    if (i == 0) return &a;
    --i;
  }
  return nullptr;
}

const ast::Argument* ast::Instantiation::named(std::string_view name) const {
  for (const auto& a : args)
    if (a.name && *a.name == name) return &a;
  return nullptr;
}

}  // namespace parascad
