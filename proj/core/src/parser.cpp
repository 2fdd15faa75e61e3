// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

// Recursive-descent parser for the class subset in docs/grammar.md.
//
// Class bodies are parsed in two passes. The first pass collects member
// declarations and records the token range of every method body; the second
// pass walks each body once the full field table is known, so a method may
// reference a field declared below it.
//
// Field accesses are resolved lazily: an expression yields an ExprRef that
// names the field it denotes (if any) and the consumer decides whether that
// occurrence is a read, a write, or both.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dropin/extractor.hpp"
#include "lexer.hpp"

namespace dropin {

std::string SourceError::to_string() const {
  return locator + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

namespace {

using detail::Token;
using detail::TokenKind;

struct ParseFailure {
  int line;
  int column;
  std::string message;
};

struct Modifiers {
  std::optional<Visibility> visibility;
  bool is_static = false;
  bool is_final = false;
};

struct ExprRef {
  enum class Kind { kNone, kThis, kSuper, kField, kIndexedField };
  Kind kind = Kind::kNone;
  std::string field;

  static ExprRef none() { return {}; }
  static ExprRef of(Kind k, std::string f = {}) { return ExprRef{k, std::move(f)}; }
};

using TypeScope = std::vector<std::string>;

// Per-method analysis state.
struct Body {
  MethodDescriptor* method = nullptr;
  const std::set<std::string>* fields = nullptr;
  std::vector<std::set<std::string>> scopes;
  TypeScope type_vars;
};

struct PendingBody {
  std::size_t method_index;
  std::size_t open;   // index of '{'
  std::size_t close;  // index of matching '}'
  TypeScope type_vars;
};

bool is_primitive_keyword(const Token& t) { return t.kind == TokenKind::kKeyword && is_primitive_name(t.text); }

bool is_assignment_op(const std::string& op) {
  static const std::set<std::string> kOps = {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="};
  return kOps.contains(op);
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string locator) : toks_(std::move(tokens)), locator_(std::move(locator)) {}

  void parse_compilation_unit() {
    if (accept("package")) {
      parse_qualified_name();
      expect(";");
    }
    while (at("import")) {
      advance();
      accept("static");
      parse_qualified_name(true);
      expect(";");
    }
    while (cur().kind != TokenKind::kEnd) {
      if (accept(";")) continue;
      const Modifiers mods = parse_modifiers();
      parse_type_declaration(package_, {}, mods);
    }
  }

  std::vector<ClassDescriptor> completed() const {
    std::vector<ClassDescriptor> out;
    for (const auto& slot : slots_)
      if (slot) out.push_back(*slot);
    return out;
  }

 private:
  // ---- token helpers -----------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t n = 1) const { return toks_[std::min(pos_ + n, toks_.size() - 1)]; }
  bool at(std::string_view s) const { return cur().is(s); }
  bool peek_is(std::size_t n, std::string_view s) const { return peek(n).is(s); }
  void advance() {
    if (cur().kind != TokenKind::kEnd) ++pos_;
  }
  bool accept(std::string_view s) {
    if (!at(s)) return false;
    advance();
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = cur();
    throw ParseFailure{t.line, t.column,
                       message + (t.kind == TokenKind::kEnd ? " at end of input" : " near '" + t.text + "'")};
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  std::string expect_ident() {
    if (!cur().is_identifier()) fail("expected identifier");
    std::string s = cur().text;
    advance();
    return s;
  }
  // Adjacent tokens with no whitespace between them.
  bool adjacent(std::size_t i) const {
    return i + 1 < toks_.size() && toks_[i + 1].offset == toks_[i].offset + toks_[i].text.size();
  }

  void skip_balanced(std::string_view open, std::string_view close) {
    const Token start = cur();
    expect(open);
    int depth = 1;
    while (depth > 0) {
      if (cur().kind == TokenKind::kEnd)
        throw ParseFailure{start.line, start.column, "unbalanced '" + std::string(open) + "'"};
      if (at(open))
        ++depth;
      else if (at(close))
        --depth;
      advance();
    }
  }

  std::string parse_qualified_name(bool allow_star = false) {
    std::string name = expect_ident();
    while (at(".")) {
      advance();
      if (allow_star && accept("*")) {
        name += ".*";
        break;
      }
      name += "." + expect_ident();
    }
    return name;
  }

  void skip_annotation() {
    expect("@");
    parse_qualified_name();
    if (at("(")) skip_balanced("(", ")");
  }

  Modifiers parse_modifiers() {
    Modifiers m;
    for (;;) {
      if (at("@") && !peek_is(1, "interface")) {
        skip_annotation();
        continue;
      }
      if (at("public"))
        m.visibility = Visibility::kPublic;
      else if (at("protected"))
        m.visibility = Visibility::kProtected;
      else if (at("private"))
        m.visibility = Visibility::kPrivate;
      else if (at("static"))
        m.is_static = true;
      else if (at("final"))
        m.is_final = true;
      else if (!(at("abstract") || at("native") || at("synchronized") || at("transient") || at("volatile") ||
                 at("strictfp") || (at("default") && !peek_is(1, ":"))))
        break;
      advance();
    }
    return m;
  }

  // ---- types -------------------------------------------------------------

  void parse_type_arguments() {
    expect("<");
    if (accept(">")) return;  // diamond
    for (;;) {
      while (at("@")) skip_annotation();
      if (accept("?")) {
        if (accept("extends") || accept("super")) parse_type({});
      } else {
        parse_type({});
      }
      while (accept("&")) parse_type({});
      if (!accept(",")) break;
    }
    expect(">");
  }

  std::vector<std::string> parse_type_parameters() {
    std::vector<std::string> names;
    expect("<");
    for (;;) {
      while (at("@")) skip_annotation();
      names.push_back(expect_ident());
      if (accept("extends")) {
        parse_type({});
        while (accept("&")) parse_type({});
      }
      if (!accept(",")) break;
    }
    expect(">");
    return names;
  }

  TypeRef parse_type(const TypeScope& scope) {
    while (at("@")) skip_annotation();
    TypeRef base;
    if (is_primitive_keyword(cur())) {
      base = TypeRef::primitive(cur().text);
      advance();
    } else {
      std::string name = expect_ident();
      if (at("<")) parse_type_arguments();
      while (at(".") && peek(1).is_identifier()) {
        advance();
        name += "." + expect_ident();
        if (at("<")) parse_type_arguments();
      }
      const bool is_var =
          name.find('.') == std::string::npos && std::find(scope.begin(), scope.end(), name) != scope.end();
      base = is_var ? TypeRef::variable(name) : TypeRef::named(name);
    }
    int dims = 0;
    while (at("[") && peek_is(1, "]")) {
      advance();
      advance();
      ++dims;
    }
    return dims > 0 ? TypeRef::array_of(base, dims) : base;
  }

  static std::string erased_name(const TypeRef& t) { return t.element().name; }

  // ---- declarations ------------------------------------------------------

  void parse_type_declaration(const std::string& prefix, const TypeScope& outer, const Modifiers&) {
    if (at("enum")) fail("enum declarations are not supported");
    if (at("@") && peek_is(1, "interface")) fail("annotation type declarations are not supported");
    if (cur().is_identifier() && cur().text == "record") fail("record declarations are not supported");
    const bool is_interface = at("interface");
    if (!accept("class") && !accept("interface")) fail("expected class or interface declaration");
    parse_class_body_decl(prefix, outer, is_interface);
  }

  void parse_class_body_decl(const std::string& prefix, const TypeScope& outer, bool is_interface) {
    ClassDescriptor c;
    c.simple_name = expect_ident();
    c.qualified_name = prefix.empty() ? c.simple_name : prefix + "." + c.simple_name;
    c.source_id = locator_;
    const std::size_t slot = slots_.size();
    slots_.emplace_back();

    TypeScope scope = outer;
    if (at("<")) {
      c.type_parameters = parse_type_parameters();
      scope.insert(scope.end(), c.type_parameters.begin(), c.type_parameters.end());
    }
    if (is_interface) {
      if (accept("extends")) {
        do c.supertypes.push_back(erased_name(parse_type(scope)));
        while (accept(","));
      }
    } else {
      if (accept("extends")) c.supertypes.push_back(erased_name(parse_type(scope)));
      if (accept("implements")) {
        do c.supertypes.push_back(erased_name(parse_type(scope)));
        while (accept(","));
      }
    }

    expect("{");
    std::vector<PendingBody> pending;
    while (!accept("}")) {
      if (cur().kind == TokenKind::kEnd) fail("unterminated class body");
      parse_member(c, scope, is_interface, pending);
    }

    std::set<std::string> field_names;
    for (const auto& f : c.fields) field_names.insert(f.name);
    const std::size_t resume = pos_;
    for (const auto& p : pending) analyze_body(c.methods[p.method_index], field_names, p);
    pos_ = resume;

    slots_[slot] = std::move(c);
  }

  void parse_member(ClassDescriptor& c, const TypeScope& scope, bool is_interface, std::vector<PendingBody>& pending) {
    if (accept(";")) return;
    const Modifiers mods = parse_modifiers();
    if (at("{")) {  // instance or static initializer
      skip_balanced("{", "}");
      return;
    }
    if (at("class") || at("interface") || at("enum") || (at("@") && peek_is(1, "interface"))) {
      parse_type_declaration(c.qualified_name, mods.is_static ? TypeScope{} : scope, mods);
      return;
    }

    TypeScope member_scope = scope;
    if (at("<")) {
      auto params = parse_type_parameters();
      member_scope.insert(member_scope.end(), params.begin(), params.end());
    }

    const Visibility default_vis = is_interface ? Visibility::kPublic : Visibility::kPackage;
    const Visibility vis = mods.visibility.value_or(default_vis);

    MethodDescriptor m;
    if (cur().is_identifier() && cur().text == c.simple_name && peek_is(1, "(")) {
      advance();
      m.name = std::string(kConstructorName);
      m.return_type = TypeRef::primitive("void");
    } else {
      m.return_type = parse_type(member_scope);
      const std::string name = expect_ident();
      if (!at("(")) {
        parse_field_declarators(c, m.return_type, name, mods, is_interface, vis, member_scope);
        return;
      }
      m.name = name;
    }
    m.visibility = vis;
    m.is_static = mods.is_static;
    m.parameters = parse_parameters(member_scope);
    while (at("[") && peek_is(1, "]")) {
      advance();
      advance();
      m.return_type = TypeRef::array_of(m.return_type);
    }
    if (accept("throws")) {
      do parse_type(member_scope);
      while (accept(","));
    }
    if (at("{")) {
      const std::size_t open = pos_;
      skip_balanced("{", "}");
      pending.push_back({c.methods.size(), open, pos_ - 1, member_scope});
    } else {
      expect(";");
    }
    c.methods.push_back(std::move(m));
  }

  void parse_field_declarators(ClassDescriptor& c, TypeRef type, std::string name, const Modifiers& mods,
                               bool is_interface, Visibility vis, const TypeScope& scope) {
    for (;;) {
      TypeRef t = type;
      while (at("[") && peek_is(1, "]")) {
        advance();
        advance();
        t = TypeRef::array_of(t);
      }
      FieldDescriptor f;
      f.name = name;
      f.type = t;
      f.is_static = mods.is_static || is_interface;
      f.is_final = mods.is_final || is_interface;
      f.visibility = vis;
      c.fields.push_back(std::move(f));
      if (accept("=")) {
        // Initializers belong to no method; analyze them for syntax only.
        MethodDescriptor scratch;
        const std::set<std::string> no_fields;
        Body body{&scratch, &no_fields, {{}}, scope};
        Body* saved = body_;
        body_ = &body;
        parse_variable_initializer();
        body_ = saved;
      }
      if (!accept(",")) break;
      name = expect_ident();
    }
    expect(";");
  }

  std::vector<Parameter> parse_parameters(const TypeScope& scope) {
    std::vector<Parameter> params;
    expect("(");
    if (accept(")")) return params;
    for (;;) {
      parse_modifiers();
      TypeRef t = parse_type(scope);
      if (accept("...")) t = TypeRef::array_of(t);
      if (at("this")) {  // receiver parameter
        advance();
      } else {
        std::string name = expect_ident();
        while (at("[") && peek_is(1, "]")) {
          advance();
          advance();
          t = TypeRef::array_of(t);
        }
        params.push_back({std::move(name), std::move(t)});
      }
      if (!accept(",")) break;
    }
    expect(")");
    return params;
  }

  // ---- method bodies -----------------------------------------------------

  void analyze_body(MethodDescriptor& m, const std::set<std::string>& fields, const PendingBody& p) {
    for (std::size_t i = p.open + 1; i < p.close; ++i)
      if (toks_[i].is_identifier()) m.body_tokens.push_back(toks_[i].text);

    Body body{&m, &fields, {}, p.type_vars};
    std::set<std::string> params;
    for (const auto& param : m.parameters) params.insert(param.name);
    body.scopes.push_back(std::move(params));
    body_ = &body;
    pos_ = p.open + 1;
    while (pos_ < p.close) parse_block_statement();
    if (pos_ != p.close) fail("method body did not end where expected");
    body_ = nullptr;
  }

  bool is_local(const std::string& name) const {
    for (const auto& s : body_->scopes)
      if (s.contains(name)) return true;
    return false;
  }
  void declare_local(const std::string& name) {
    body_->scopes.back().insert(name);
    body_->method->local_variables.push_back(name);
  }
  void push_scope() { body_->scopes.emplace_back(); }
  void pop_scope() { body_->scopes.pop_back(); }
  bool is_field(const std::string& name) const { return body_->fields->contains(name); }

  void use(const ExprRef& r) {
    if (r.kind == ExprRef::Kind::kField || r.kind == ExprRef::Kind::kIndexedField)
      body_->method->fields_read.insert(r.field);
  }

  // Plain `f = v` writes f. Compound assignment, ++/--, and stores into an
  // element of an array held in f count as both a read and a write of f.
  void assign_to(const ExprRef& target, bool compound) {
    if (target.kind == ExprRef::Kind::kField) {
      body_->method->fields_written.insert(target.field);
      if (compound) body_->method->fields_read.insert(target.field);
    } else if (target.kind == ExprRef::Kind::kIndexedField) {
      body_->method->fields_written.insert(target.field);
      body_->method->fields_read.insert(target.field);
    }
  }

  void record_call(const std::string& name, int args, Receiver receiver) {
    body_->method->invoked_methods.push_back({name, args, receiver});
  }

  // ---- statements --------------------------------------------------------

  void parse_block() {
    expect("{");
    push_scope();
    while (!accept("}")) {
      if (cur().kind == TokenKind::kEnd) fail("unterminated block");
      parse_block_statement();
    }
    pop_scope();
  }

  bool looks_like_local_declaration() {
    if (!cur().is_identifier() && !is_primitive_keyword(cur())) return false;
    const std::size_t saved = pos_;
    bool result = false;
    try {
      parse_type(body_->type_vars);
      result = cur().is_identifier() &&
               (peek_is(1, "=") || peek_is(1, ";") || peek_is(1, ",") || peek_is(1, "[") || peek_is(1, ":"));
    } catch (const ParseFailure&) {
      result = false;
    }
    pos_ = saved;
    return result;
  }

  bool looks_like_local_class() {
    std::size_t i = pos_;
    while (toks_[i].is("abstract") || toks_[i].is("final") || toks_[i].is("static") || toks_[i].is("strictfp")) ++i;
    return toks_[i].is("class") || toks_[i].is("interface") || toks_[i].is("enum");
  }

  void parse_local_declaration() {
    const TypeRef type = parse_type(body_->type_vars);
    (void)type;
    for (;;) {
      const std::string name = expect_ident();
      while (at("[") && peek_is(1, "]")) {
        advance();
        advance();
      }
      declare_local(name);
      if (accept("=")) parse_variable_initializer();
      if (!accept(",")) break;
    }
  }

  void parse_variable_initializer() {
    if (at("{")) {
      parse_array_initializer();
    } else {
      use(parse_expression());
    }
  }

  void parse_array_initializer() {
    expect("{");
    while (!accept("}")) {
      if (at("{"))
        parse_array_initializer();
      else
        use(parse_expression());
      if (!accept(",") && !at("}")) fail("expected ',' or '}' in array initializer");
    }
  }

  void parse_block_statement() {
    if (looks_like_local_class()) {
      parse_modifiers();
      advance();  // class / interface / enum
      expect_ident();
      while (!at("{")) {
        if (cur().kind == TokenKind::kEnd) fail("unterminated local class");
        advance();
      }
      skip_balanced("{", "}");
      return;
    }
    if (at("final") || at("@")) {
      parse_modifiers();
      parse_local_declaration();
      expect(";");
      return;
    }
    if (cur().is_identifier() && peek_is(1, ":")) {
      advance();
      advance();
      parse_statement();
      return;
    }
    if (looks_like_local_declaration()) {
      parse_local_declaration();
      expect(";");
      return;
    }
    parse_statement();
  }

  void parse_paren_condition() {
    expect("(");
    use(parse_expression());
    expect(")");
  }

  void parse_statement() {
    if (at("{")) {
      parse_block();
    } else if (accept(";")) {
    } else if (accept("if")) {
      parse_paren_condition();
      parse_scoped_statement();
      if (accept("else")) parse_scoped_statement();
    } else if (accept("while")) {
      parse_paren_condition();
      parse_scoped_statement();
    } else if (accept("do")) {
      parse_scoped_statement();
      expect("while");
      parse_paren_condition();
      expect(";");
    } else if (accept("for")) {
      parse_for();
    } else if (accept("try")) {
      parse_try();
    } else if (accept("switch")) {
      parse_switch();
    } else if (accept("return")) {
      if (!at(";")) use(parse_expression());
      expect(";");
    } else if (accept("throw")) {
      use(parse_expression());
      expect(";");
    } else if (accept("break") || accept("continue")) {
      if (cur().is_identifier()) advance();
      expect(";");
    } else if (accept("synchronized")) {
      parse_paren_condition();
      parse_block();
    } else if (accept("assert")) {
      use(parse_expression());
      if (accept(":")) use(parse_expression());
      expect(";");
    } else if (cur().is_identifier() && peek_is(1, ":")) {
      advance();
      advance();
      parse_statement();
    } else if (looks_like_local_class() || looks_like_local_declaration() || at("final")) {
      // A declaration as the direct body of if/while: give it its own scope.
      push_scope();
      parse_block_statement();
      pop_scope();
    } else {
      use(parse_expression());
      expect(";");
    }
  }

  void parse_scoped_statement() {
    push_scope();
    parse_statement();
    pop_scope();
  }

  void parse_for() {
    expect("(");
    push_scope();
    if (!at(";")) {
      bool declaration = false;
      if (at("final") || at("@")) {
        parse_modifiers();
        declaration = true;
      } else {
        declaration = looks_like_local_declaration();
      }
      if (declaration) {
        parse_type(body_->type_vars);
        const std::string name = expect_ident();
        while (at("[") && peek_is(1, "]")) {
          advance();
          advance();
        }
        declare_local(name);
        if (accept(":")) {
          use(parse_expression());
          expect(")");
          parse_scoped_statement();
          pop_scope();
          return;
        }
        if (accept("=")) parse_variable_initializer();
        while (accept(",")) {
          declare_local(expect_ident());
          while (at("[") && peek_is(1, "]")) {
            advance();
            advance();
          }
          if (accept("=")) parse_variable_initializer();
        }
      } else {
        use(parse_expression());
        while (accept(",")) use(parse_expression());
      }
    }
    expect(";");
    if (!at(";")) use(parse_expression());
    expect(";");
    if (!at(")")) {
      use(parse_expression());
      while (accept(",")) use(parse_expression());
    }
    expect(")");
    parse_scoped_statement();
    pop_scope();
  }

  void parse_try() {
    bool resources = false;
    if (accept("(")) {
      resources = true;
      push_scope();
      while (!accept(")")) {
        if (at("final") || at("@")) parse_modifiers();
        if (looks_like_local_declaration()) {
          parse_type(body_->type_vars);
          declare_local(expect_ident());
          expect("=");
          use(parse_expression());
        } else {
          use(parse_expression());
        }
        if (!accept(";") && !at(")")) fail("expected ';' or ')' in try resources");
      }
    }
    parse_block();
    if (resources) pop_scope();
    bool handled = resources;
    while (accept("catch")) {
      handled = true;
      expect("(");
      parse_modifiers();
      parse_type(body_->type_vars);
      while (accept("|")) parse_type(body_->type_vars);
      push_scope();
      declare_local(expect_ident());
      expect(")");
      parse_block();
      pop_scope();
    }
    if (accept("finally")) {
      handled = true;
      parse_block();
    }
    if (!handled) fail("try without catch or finally");
  }

  void parse_switch() {
    parse_paren_condition();
    expect("{");
    push_scope();
    while (!accept("}")) {
      if (cur().kind == TokenKind::kEnd) fail("unterminated switch");
      if (accept("case")) {
        use(parse_ternary());
        expect(":");
      } else if (at("default") && peek_is(1, ":")) {
        advance();
        advance();
      } else {
        parse_block_statement();
      }
    }
    pop_scope();
  }

  // ---- expressions -------------------------------------------------------

  // Returns the operator spelled by the tokens at pos_ (reassembling '>'
  // runs) and how many tokens it spans.
  std::pair<std::string, std::size_t> peek_operator() const {
    const Token& t = cur();
    if (t.kind == TokenKind::kKeyword && t.text == "instanceof") return {"instanceof", 1};
    if (t.kind != TokenKind::kOperator) return {"", 0};
    if (t.text != ">") return {t.text, 1};
    std::string op = ">";
    std::size_t n = 1;
    std::size_t i = pos_;
    while (adjacent(i) && toks_[i + 1].text == ">" && op.size() < 3) {
      op += ">";
      ++n;
      ++i;
    }
    if (adjacent(i) && toks_[i + 1].text == "=") {
      op += "=";
      ++n;
    }
    return {op, n};
  }

  static int binary_precedence(const std::string& op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "|") return 3;
    if (op == "^") return 4;
    if (op == "&") return 5;
    if (op == "==" || op == "!=") return 6;
    if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "instanceof") return 7;
    if (op == "<<" || op == ">>" || op == ">>>") return 8;
    if (op == "+" || op == "-") return 9;
    if (op == "*" || op == "/" || op == "%") return 10;
    return 0;
  }

  void consume(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) advance();
  }

  ExprRef parse_expression() {
    if (is_lambda_start()) {
      parse_lambda();
      return ExprRef::none();
    }
    ExprRef lhs = parse_ternary();
    const auto [op, n] = peek_operator();
    if (!op.empty() && is_assignment_op(op)) {
      consume(n);
      assign_to(lhs, op != "=");
      use(parse_expression());
      return ExprRef::none();
    }
    return lhs;
  }

  ExprRef parse_ternary() {
    ExprRef cond = parse_binary(1);
    if (!accept("?")) return cond;
    use(cond);
    use(parse_expression());
    expect(":");
    if (is_lambda_start()) {
      parse_lambda();
    } else {
      use(parse_ternary());
    }
    return ExprRef::none();
  }

  ExprRef parse_binary(int min_prec) {
    ExprRef lhs = parse_unary();
    for (;;) {
      const auto [op, n] = peek_operator();
      const int prec = op.empty() ? 0 : binary_precedence(op);
      if (prec == 0 || prec < min_prec) break;
      consume(n);
      use(lhs);
      if (op == "instanceof") {
        accept("final");
        parse_type(body_->type_vars);
      } else {
        use(parse_binary(prec + 1));
      }
      lhs = ExprRef::none();
    }
    return lhs;
  }

  ExprRef parse_unary() {
    if (at("++") || at("--")) {
      advance();
      assign_to(parse_unary(), true);
      return ExprRef::none();
    }
    if (at("+") || at("-") || at("!") || at("~")) {
      advance();
      use(parse_unary());
      return ExprRef::none();
    }
    if (at("(") && is_cast()) {
      advance();
      parse_type(body_->type_vars);
      while (accept("&")) parse_type(body_->type_vars);
      expect(")");
      use(parse_unary());
      return ExprRef::none();
    }
    return parse_postfix(parse_primary());
  }

  bool is_cast() {
    const std::size_t saved = pos_;
    bool result = false;
    try {
      advance();  // '('
      if (is_primitive_keyword(cur())) {
        parse_type(body_->type_vars);
        result = accept(")");
      } else if (cur().is_identifier()) {
        parse_type(body_->type_vars);
        while (accept("&")) parse_type(body_->type_vars);
        if (accept(")")) {
          const Token& n = cur();
          result = n.is_identifier() || n.kind == TokenKind::kLiteral || n.is("(") || n.is("this") || n.is("super") ||
                   n.is("new") || n.is("!") || n.is("~") || is_primitive_keyword(n);
        }
      }
    } catch (const ParseFailure&) {
      result = false;
    }
    pos_ = saved;
    return result;
  }

  bool is_lambda_start() const {
    if (cur().is_identifier() && peek_is(1, "->")) return true;
    if (!at("(")) return false;
    int depth = 0;
    for (std::size_t i = pos_; i < toks_.size(); ++i) {
      if (toks_[i].is("("))
        ++depth;
      else if (toks_[i].is(")")) {
        if (--depth == 0) return i + 1 < toks_.size() && toks_[i + 1].is("->");
      } else if (toks_[i].kind == TokenKind::kEnd || toks_[i].is(";") || toks_[i].is("{")) {
        return false;
      }
    }
    return false;
  }

  void parse_lambda() {
    push_scope();
    if (cur().is_identifier()) {
      declare_local(expect_ident());
    } else {
      expect("(");
      while (!accept(")")) {
        parse_modifiers();
        if (cur().is_identifier() && (peek_is(1, ",") || peek_is(1, ")"))) {
          declare_local(expect_ident());
        } else {
          parse_type(body_->type_vars);
          accept("...");
          declare_local(expect_ident());
        }
        if (!accept(",") && !at(")")) fail("expected ',' or ')' in lambda parameters");
      }
    }
    expect("->");
    if (at("{")) {
      parse_block();
    } else {
      use(parse_expression());
    }
    pop_scope();
  }

  int parse_arguments() {
    expect("(");
    int n = 0;
    if (accept(")")) return 0;
    for (;;) {
      use(parse_expression());
      ++n;
      if (accept(",")) continue;
      expect(")");
      return n;
    }
  }

  void parse_creator() {
    expect("new");
    while (at("@")) skip_annotation();
    if (is_primitive_keyword(cur())) {
      advance();
    } else {
      expect_ident();
      if (at("<")) parse_type_arguments();
      while (accept(".")) {
        expect_ident();
        if (at("<")) parse_type_arguments();
      }
    }
    if (at("[")) {
      while (accept("[")) {
        if (accept("]")) continue;
        use(parse_expression());
        expect("]");
      }
      if (at("{")) parse_array_initializer();
      return;
    }
    parse_arguments();
    if (at("{")) skip_balanced("{", "}");  // anonymous class body
  }

  ExprRef parse_primary() {
    const Token& t = cur();
    if (t.kind == TokenKind::kLiteral) {
      advance();
      return ExprRef::none();
    }
    if (t.is("this")) {
      advance();
      if (at("(")) {  // this(...) constructor chaining
        parse_arguments();
        return ExprRef::none();
      }
      return ExprRef::of(ExprRef::Kind::kThis);
    }
    if (t.is("super")) {
      advance();
      if (at("(")) {
        parse_arguments();
        return ExprRef::none();
      }
      return ExprRef::of(ExprRef::Kind::kSuper);
    }
    if (t.is("new")) {
      parse_creator();
      return ExprRef::none();
    }
    if (t.is("(")) {
      advance();
      ExprRef inner = parse_expression();
      expect(")");
      return inner;
    }
    if (is_primitive_keyword(t) || t.is("void")) {
      advance();
      return ExprRef::none();  // int.class, int[]::new; postfix consumes the rest
    }
    if (t.is_identifier()) {
      const std::string name = t.text;
      advance();
      if (at("(")) {
        record_call(name, parse_arguments(), Receiver::kSelf);
        return ExprRef::none();
      }
      if (is_local(name)) return ExprRef::none();
      if (is_field(name)) return ExprRef::of(ExprRef::Kind::kField, name);
      return ExprRef::none();
    }
    fail("expected expression");
  }

  ExprRef parse_postfix(ExprRef r) {
    for (;;) {
      if (at(".")) {
        advance();
        if (at("<")) parse_type_arguments();
        if (accept("class") || accept("this")) {
          r = ExprRef::none();
          continue;
        }
        if (at("new")) {
          use(r);
          parse_creator();
          r = ExprRef::none();
          continue;
        }
        if (accept("super")) {
          r = ExprRef::of(ExprRef::Kind::kSuper);
          continue;
        }
        const std::string name = expect_ident();
        if (at("(")) {
          const bool self = r.kind == ExprRef::Kind::kThis;
          use(r);
          record_call(name, parse_arguments(), self ? Receiver::kSelf : Receiver::kOther);
          r = ExprRef::none();
          continue;
        }
        if (r.kind == ExprRef::Kind::kThis) {
          r = is_field(name) ? ExprRef::of(ExprRef::Kind::kField, name) : ExprRef::none();
          continue;
        }
        use(r);
        r = ExprRef::none();
        continue;
      }
      if (at("[")) {
        if (peek_is(1, "]")) {  // array type in String[].class / int[]::new
          while (at("[") && peek_is(1, "]")) {
            advance();
            advance();
          }
          r = ExprRef::none();
          continue;
        }
        advance();
        use(parse_expression());
        expect("]");
        if (r.kind == ExprRef::Kind::kField || r.kind == ExprRef::Kind::kIndexedField) {
          r = ExprRef::of(ExprRef::Kind::kIndexedField, r.field);
        } else {
          r = ExprRef::none();
        }
        continue;
      }
      if (at("++") || at("--")) {
        advance();
        assign_to(r, true);
        r = ExprRef::none();
        continue;
      }
      if (at("::")) {
        advance();
        use(r);
        if (at("<")) parse_type_arguments();
        if (!accept("new")) expect_ident();
        r = ExprRef::none();
        continue;
      }
      return r;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string locator_;
  std::string package_;
  std::vector<std::optional<ClassDescriptor>> slots_;
  Body* body_ = nullptr;

  friend ParseResult dropin::parse_source(std::string_view, std::string_view);
};

}  // namespace

ParseResult parse_source(std::string_view text, std::string_view locator) {
  ParseResult result;
  std::vector<Token> tokens;
  try {
    tokens = detail::lex(text);
  } catch (const detail::LexError& e) {
    result.error = SourceError{std::string(locator), e.line, e.column, e.what()};
    return result;
  }
  Parser parser(std::move(tokens), std::string(locator));
  try {
    if (parser.at("package")) {
      parser.advance();
      parser.package_ = parser.parse_qualified_name();
      parser.expect(";");
    }
    parser.parse_compilation_unit();
  } catch (const ParseFailure& f) {
    result.error = SourceError{std::string(locator), f.line, f.column, f.message};
  }
  result.classes = parser.completed();
  return result;
}

}  // namespace dropin
