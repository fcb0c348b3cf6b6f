// SPDX-License-Identifier: Apache-2.0
#include "svagen/sva_parser.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <memory>
#include <set>

namespace svagen::sva {

namespace {

struct Tok {
  enum Kind { Ident, SysIdent, Number, SymLit, String, Punct, End } kind = End;
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {
      "property", "endproperty", "assert",   "else",  "end",     "generate",
      "endgenerate", "genvar",   "for",      "begin", "disable", "iff",
      "posedge",     "negedge",  "property"};
  return kw;
}

std::vector<Tok> lex(const std::string& src) {
  std::vector<Tok> toks;
  std::size_t i = 0;
  const std::size_t n = src.size();
  auto push = [&](Tok::Kind k, std::size_t b, std::size_t e) {
    toks.push_back({k, src.substr(b, e - b), b, e});
  };
  while (i < n) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      i += 2;
      while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) ++i;
      i = (i + 1 < n) ? i + 2 : n;
      continue;
    }
    if (c == '"') {
      std::size_t b = i++;
      while (i < n && src[i] != '"') {
        if (src[i] == '\\' && i + 1 < n) ++i;
        ++i;
      }
      if (i < n) ++i;
      push(Tok::String, b, i);
      continue;
    }
    if (c == '\'') {
      // A quoted state label like 'Checking' (spaces allowed); otherwise a
      // based literal tail like 'b0.
      std::size_t j = i + 1;
      while (j < n && j - i < 80 && src[j] != '\'' && src[j] != '\n') ++j;
      bool label = j < n && src[j] == '\'' && j > i + 1 && is_ident_start(src[i + 1]);
      if (label) {
        toks.push_back({Tok::SymLit, src.substr(i + 1, j - i - 1), i, j + 1});
        i = j + 1;
        continue;
      }
      std::size_t b = i++;
      if (i < n && (src[i] == 's' || src[i] == 'S')) ++i;
      if (i < n && std::isalpha(static_cast<unsigned char>(src[i]))) ++i;
      while (i < n && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      push(Tok::Number, b, i);
      continue;
    }
    if (c == '$' && i + 1 < n && is_ident_start(src[i + 1])) {
      std::size_t b = i++;
      while (i < n && is_ident_char(src[i])) ++i;
      push(Tok::SysIdent, b, i);
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t b = i;
      while (i < n && is_ident_char(src[i])) ++i;
      push(Tok::Ident, b, i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = i;
      while (i < n && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_' ||
                       src[i] == '\''))
        ++i;
      push(Tok::Number, b, i);
      continue;
    }
    // Longest-match punctuation.
    static const char* multi[] = {"|->", "|=>", "===", "!==", "##", "==", "!=",
                                  "<=",  ">=",  "&&",  "||",  "++"};
    bool matched = false;
    for (const char* m : multi) {
      std::size_t len = std::char_traits<char>::length(m);
      if (src.compare(i, len, m) == 0) {
        push(Tok::Punct, i, i + len);
        i += len;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    push(Tok::Punct, i, i + 1);
    ++i;
  }
  toks.push_back({Tok::End, "", n, n});
  return toks;
}

std::int64_t number_value(const std::string& text) {
  auto tick = text.find('\'');
  if (tick == std::string::npos) {
    std::string digits;
    for (char c : text)
      if (c != '_') digits.push_back(c);
    return std::strtoll(digits.c_str(), nullptr, 10);
  }
  std::size_t p = tick + 1;
  if (p < text.size() && (text[p] == 's' || text[p] == 'S')) ++p;
  int base = 10;
  if (p < text.size()) {
    switch (std::tolower(static_cast<unsigned char>(text[p]))) {
      case 'b': base = 2; break;
      case 'o': base = 8; break;
      case 'h': base = 16; break;
      default: base = 10; break;
    }
    ++p;
  }
  std::int64_t v = 0;
  for (; p < text.size(); ++p) {
    char c = std::tolower(static_cast<unsigned char>(text[p]));
    if (c == '_') continue;
    int d = (c >= 'a') ? 10 + (c - 'a') : c - '0';
    if (d < 0 || d >= base) break;
    v = v * base + d;
  }
  return v;
}

// Parse-layer tree: boolean leaves plus sequence/property operators. The
// lowering step turns it into Sequence/PropertyExpr and rejects nesting.
struct PTree {
  enum Kind { Bool, Concat, Impl } kind = Bool;
  ExprPtr expr;  // Bool
  std::shared_ptr<PTree> lhs, rhs;
  DelayRange delay{0, 0};  // Concat: separation between lhs tail and rhs
  DelayRange lead{0, 0};   // leading ## on the whole node
  ImplKind impl = ImplKind::Overlapping;
};
using PTreePtr = std::shared_ptr<PTree>;

PTreePtr bool_node(ExprPtr e) {
  auto t = std::make_shared<PTree>();
  t->kind = PTree::Bool;
  t->expr = std::move(e);
  return t;
}

struct SvaParser {
  const std::string& src;
  std::vector<Tok> toks;
  std::size_t pos = 0;
  ParseResult result;
  bool prop_error = false;  // set while parsing one property

  // Properties seen so far, with an asserted flag for directive binding.
  std::vector<std::size_t> unasserted;  // indices into result.assertions

  std::optional<GenerateBinding> gen_ctx;
  std::set<std::string> genvars;

  explicit SvaParser(const std::string& s) : src(s), toks(lex(s)) {}

  const Tok& cur() const { return toks[pos]; }
  const Tok& peek(std::size_t k = 1) const {
    return toks[std::min(pos + k, toks.size() - 1)];
  }
  void advance() {
    if (pos + 1 < toks.size()) ++pos;
  }
  bool at_punct(const char* s) const { return cur().kind == Tok::Punct && cur().text == s; }
  bool at_ident(const char* s) const { return cur().kind == Tok::Ident && cur().text == s; }
  bool at_keyword() const {
    return cur().kind == Tok::Ident && keywords().count(cur().text) > 0;
  }

  Span span_of(const Tok& t) const { return {t.begin, std::max(t.end, t.begin + 1)}; }

  void error(const std::string& code, const std::string& msg, const Tok& at) {
    result.diagnostics.push_back(make_error(code, msg, span_of(at)));
    prop_error = true;
  }
  void warn(const std::string& code, const std::string& msg, const Tok& at) {
    result.diagnostics.push_back(make_warning(code, msg, span_of(at)));
  }

  // ---- expressions ----------------------------------------------------

  PTreePtr parse_property_expr() {
    PTreePtr lhs = parse_concat();
    if (!lhs) return nullptr;
    if (at_punct("|->") || at_punct("|=>")) {
      Tok op = cur();
      ImplKind kind = at_punct("|->") ? ImplKind::Overlapping : ImplKind::NonOverlapping;
      advance();
      PTreePtr rhs = parse_property_expr();
      if (!rhs) return nullptr;
      if (rhs->kind == PTree::Impl) {
        error("NestedImplication", "at most one implication per property in this subset", op);
        return nullptr;
      }
      auto t = std::make_shared<PTree>();
      t->kind = PTree::Impl;
      t->impl = kind;
      t->lhs = std::move(lhs);
      t->rhs = std::move(rhs);
      return t;
    }
    return lhs;
  }

  bool parse_delay(DelayRange& d) {
    Tok at = cur();
    advance();  // '##'
    if (cur().kind == Tok::Number) {
      int v = static_cast<int>(number_value(cur().text));
      advance();
      d = {v, v};
      return true;
    }
    if (at_punct("[")) {
      advance();
      if (cur().kind != Tok::Number) {
        error("SyntaxError", "expected lower delay bound", cur());
        return false;
      }
      int lo = static_cast<int>(number_value(cur().text));
      advance();
      if (!at_punct(":")) {
        error("SyntaxError", "expected ':' in delay range", cur());
        return false;
      }
      advance();
      if (cur().kind != Tok::Number) {
        error("SyntaxError", "expected upper delay bound", cur());
        return false;
      }
      int hi = static_cast<int>(number_value(cur().text));
      advance();
      if (!at_punct("]")) {
        error("SyntaxError", "expected ']' after delay range", cur());
        return false;
      }
      advance();
      if (hi < lo) {
        error("SyntaxError", "delay range upper bound below lower bound", at);
        return false;
      }
      d = {lo, hi};
      return true;
    }
    error("SyntaxError", "expected delay after '##'", cur());
    return false;
  }

  PTreePtr parse_concat() {
    DelayRange lead{0, 0};
    if (at_punct("##")) {
      if (!parse_delay(lead)) return nullptr;
    }
    PTreePtr node = parse_or();
    if (!node) return nullptr;
    while (at_punct("##")) {
      DelayRange d;
      if (!parse_delay(d)) return nullptr;
      PTreePtr rhs = parse_or();
      if (!rhs) return nullptr;
      ExprPtr rhs_expr = as_bool(rhs, "a '##' operand");
      if (!rhs_expr) return nullptr;
      if (node->kind == PTree::Impl) {
        error("SyntaxError", "implication cannot be an operand of '##'", cur());
        return nullptr;
      }
      auto t = std::make_shared<PTree>();
      t->kind = PTree::Concat;
      t->lhs = std::move(node);
      t->rhs = bool_node(rhs_expr);
      t->delay = d;
      node = std::move(t);
    }
    // Merge rather than overwrite: a parenthesized operand may already
    // carry a lead of its own.
    node->lead.lo += lead.lo;
    node->lead.hi += lead.hi;
    return node;
  }

  // Requires a plain boolean operand (no lead, no sequence operators).
  ExprPtr as_bool(const PTreePtr& t, const char* what) {
    if (!t) return nullptr;
    if (t->kind != PTree::Bool || !(t->lead == DelayRange{0, 0})) {
      error("SyntaxError",
            std::string(what) + " must be a boolean expression in this subset", cur());
      return nullptr;
    }
    return t->expr;
  }

  PTreePtr parse_or() {
    PTreePtr lhs = parse_and();
    if (!lhs) return nullptr;
    while (at_punct("||")) {
      advance();
      ExprPtr a = as_bool(lhs, "a '||' operand");
      if (!a) return nullptr;
      PTreePtr r = parse_and();
      ExprPtr b = as_bool(r, "a '||' operand");
      if (!b) return nullptr;
      lhs = bool_node(make_or(a, b));
    }
    return lhs;
  }

  PTreePtr parse_and() {
    PTreePtr lhs = parse_cmp();
    if (!lhs) return nullptr;
    while (at_punct("&&")) {
      advance();
      ExprPtr a = as_bool(lhs, "a '&&' operand");
      if (!a) return nullptr;
      PTreePtr r = parse_cmp();
      ExprPtr b = as_bool(r, "a '&&' operand");
      if (!b) return nullptr;
      lhs = bool_node(make_and(a, b));
    }
    return lhs;
  }

  PTreePtr parse_cmp() {
    PTreePtr lhs = parse_arith();
    if (!lhs) return nullptr;
    for (;;) {
      CmpOp op;
      if (at_punct("==")) op = CmpOp::Eq;
      else if (at_punct("!=")) op = CmpOp::Ne;
      else if (at_punct("===") || at_punct("!==")) {
        warn("CaseEquality", "'" + cur().text + "' treated as its two-state form", cur());
        op = cur().text == "===" ? CmpOp::Eq : CmpOp::Ne;
      } else if (at_punct("<")) op = CmpOp::Lt;
      else if (at_punct("<=")) op = CmpOp::Le;
      else if (at_punct(">")) op = CmpOp::Gt;
      else if (at_punct(">=")) op = CmpOp::Ge;
      else break;
      advance();
      ExprPtr a = as_bool(lhs, "a comparison operand");
      if (!a) return nullptr;
      PTreePtr r = parse_arith();
      ExprPtr b = as_bool(r, "a comparison operand");
      if (!b) return nullptr;
      lhs = bool_node(make_cmp(op, a, b));
    }
    return lhs;
  }

  PTreePtr parse_arith() {
    PTreePtr lhs = parse_unary();
    if (!lhs) return nullptr;
    while ((at_punct("+") || at_punct("-"))) {
      ArithOp op = at_punct("+") ? ArithOp::Add : ArithOp::Sub;
      advance();
      ExprPtr a = as_bool(lhs, "an arithmetic operand");
      if (!a) return nullptr;
      PTreePtr r = parse_unary();
      ExprPtr b = as_bool(r, "an arithmetic operand");
      if (!b) return nullptr;
      lhs = bool_node(make_arith(op, a, b));
    }
    return lhs;
  }

  PTreePtr parse_unary() {
    if (at_punct("!")) {
      Tok at = cur();
      advance();
      PTreePtr r = parse_unary();
      ExprPtr a = as_bool(r, "a '!' operand");
      if (!a) return nullptr;
      (void)at;
      return bool_node(make_not(a));
    }
    return parse_primary();
  }

  PTreePtr parse_primary() {
    if (at_punct("(")) {
      Tok open = cur();
      advance();
      PTreePtr inner = parse_property_expr();
      if (!inner) return nullptr;
      if (at_punct(")"))
        advance();
      else
        warn("UnclosedParen", "missing ')' supplied at expression end", open);
      return inner;
    }
    if (cur().kind == Tok::SysIdent) return parse_sysfunc();
    if (cur().kind == Tok::Number) {
      std::int64_t v = number_value(cur().text);
      advance();
      return bool_node(make_int(v));
    }
    if (cur().kind == Tok::SymLit) {
      ExprPtr e = make_sym(cur().text);
      advance();
      return bool_node(e);
    }
    if (cur().kind == Tok::Ident && !at_keyword()) {
      std::string name = cur().text;
      advance();
      std::optional<Index> index;
      if (at_punct("[")) {
        advance();
        if (cur().kind == Tok::Number) {
          index = static_cast<std::int64_t>(number_value(cur().text));
          advance();
        } else if (cur().kind == Tok::Ident && !at_keyword()) {
          index = cur().text;
          advance();
        } else {
          error("SyntaxError", "expected index after '['", cur());
          return nullptr;
        }
        if (at_punct("]"))
          advance();
        else {
          error("SyntaxError", "expected ']' after index", cur());
          return nullptr;
        }
      }
      return bool_node(make_ident(std::move(name), std::move(index)));
    }
    error("SyntaxError", "expected expression, found '" + cur().text + "'", cur());
    return nullptr;
  }

  PTreePtr parse_sysfunc() {
    Tok fn = cur();
    advance();
    if (fn.text == "$past" || fn.text == "$rose" || fn.text == "$fell" ||
        fn.text == "$stable") {
      if (!at_punct("(")) {
        error("SyntaxError", "expected '(' after " + fn.text, cur());
        return nullptr;
      }
      advance();
      PTreePtr arg = parse_property_expr();
      ExprPtr a = as_bool(arg, (fn.text + " argument").c_str());
      if (!a) return nullptr;
      int depth = 1;
      if (fn.text == "$past" && at_punct(",")) {
        advance();
        if (cur().kind != Tok::Number) {
          error("SyntaxError", "expected integer depth in $past", cur());
          return nullptr;
        }
        depth = static_cast<int>(number_value(cur().text));
        if (depth < 1) {
          error("SyntaxError", "$past depth must be at least 1", cur());
          return nullptr;
        }
        advance();
      }
      if (!at_punct(")")) {
        error("SyntaxError", "expected ')' after " + fn.text + " argument", cur());
        return nullptr;
      }
      advance();
      if (fn.text == "$past") return bool_node(make_past(a, depth));
      if (fn.text == "$rose") return bool_node(make_unary(ExprKind::Rose, a));
      if (fn.text == "$fell") return bool_node(make_unary(ExprKind::Fell, a));
      return bool_node(make_unary(ExprKind::Stable, a));
    }
    error("UnknownSystemFunction",
          fn.text + " is not part of the supported sampled-value subset", fn);
    return nullptr;
  }

  // ---- sequence lowering ----------------------------------------------

  bool to_sequence(const PTreePtr& t, Sequence& seq) {
    if (!t) return false;
    if (t->kind == PTree::Impl) {
      error("NestedImplication", "implication not allowed here", cur());
      return false;
    }
    if (t->kind == PTree::Bool) {
      seq.lead = t->lead;
      seq.elements = {t->expr};
      seq.delays.clear();
      return true;
    }
    // Concat: left spine, rhs leaves.
    if (!to_sequence(t->lhs, seq)) return false;
    seq.delays.push_back(t->delay);
    seq.elements.push_back(t->rhs->expr);
    seq.lead = t->lead;  // the lead was attached to the chain root
    return true;
  }

  bool lower(const PTreePtr& t, PropertyExpr& body) {
    if (!t) return false;
    if (t->kind == PTree::Impl) {
      if (!to_sequence(t->lhs, body.antecedent)) return false;
      Sequence cons;
      if (!to_sequence(t->rhs, cons)) return false;
      body.impl_kind = t->impl;
      body.consequent = std::move(cons);
      return true;
    }
    body.impl_kind.reset();
    body.consequent.reset();
    return to_sequence(t, body.antecedent);
  }

  // ---- statements ------------------------------------------------------

  void skip_action_block() {
    // `$fatal("...")` or similar; consume the call, leave ';' for the caller.
    if (cur().kind == Tok::SysIdent || cur().kind == Tok::Ident) advance();
    if (at_punct("(")) {
      int depth = 0;
      while (cur().kind != Tok::End) {
        if (at_punct("(")) ++depth;
        if (at_punct(")")) {
          --depth;
          if (depth == 0) {
            advance();
            break;
          }
        }
        advance();
      }
    }
  }

  void recover_to_sync() {
    while (cur().kind != Tok::End) {
      if (at_ident("property") || at_ident("assert") || at_ident("generate") ||
          at_ident("endgenerate") || at_ident("for") || at_ident("genvar"))
        return;
      if (at_ident("endproperty")) {
        advance();
        return;
      }
      if (at_ident("end") && peek().kind == Tok::Ident && peek().text == "property" &&
          !(peek(2).kind == Tok::Ident && !keywords().count(peek(2).text)) &&
          !(peek(2).kind == Tok::Punct && peek(2).text == "(")) {
        advance();
        advance();
        return;
      }
      if (at_ident("end")) return;
      advance();
    }
  }

  bool at_end_property_variant() const {
    if (!(cur().kind == Tok::Ident && cur().text == "end")) return false;
    if (!(peek().kind == Tok::Ident && peek().text == "property")) return false;
    // `end property` followed by a property NAME would be a new declaration.
    const Tok& after = peek(2);
    if (after.kind == Tok::Ident && !keywords().count(after.text)) return false;
    if (after.kind == Tok::Punct && after.text == "(") return false;
    return true;
  }

  void parse_property_decl() {
    Tok kw = cur();
    advance();  // 'property'
    std::string name;
    if (at_punct("(")) {
      Tok open = cur();
      advance();
      if (cur().kind == Tok::Ident && !at_keyword()) {
        name = cur().text;
        advance();
      } else {
        error("SyntaxError", "expected property name", cur());
        recover_to_sync();
        return;
      }
      if (at_punct(")"))
        advance();
      else
        warn("UnclosedParen", "missing ')' after property name", open);
      warn("ParenPropertyName", "parenthesized property name accepted", open);
    } else if (cur().kind == Tok::Ident && !at_keyword()) {
      name = cur().text;
      advance();
    } else {
      error("SyntaxError", "expected property name after 'property'", cur());
      recover_to_sync();
      return;
    }
    if (at_punct(";"))
      advance();
    else
      warn("MissingSemicolon", "expected ';' after property name", cur());

    prop_error = false;
    AssertionAst ast;
    ast.name = name;

    // Optional wrapping paren around the whole body including the clocking.
    int wrap = 0;
    while (at_punct("(") && (peek().kind == Tok::Punct && peek().text == "@")) {
      warn("ParenthesizedBody", "parenthesized property body accepted", cur());
      advance();
      ++wrap;
    }
    if (!at_punct("@")) {
      error("SyntaxError", "expected '@(posedge <clock>)' clocking event", cur());
      recover_to_sync();
      return;
    }
    advance();
    if (!at_punct("(")) {
      error("SyntaxError", "expected '(' after '@'", cur());
      recover_to_sync();
      return;
    }
    advance();
    if (at_ident("negedge")) {
      error("SyntaxError", "only posedge clocking is supported in this subset", cur());
      recover_to_sync();
      return;
    }
    if (!at_ident("posedge")) {
      error("SyntaxError", "expected 'posedge' in clocking event", cur());
      recover_to_sync();
      return;
    }
    advance();
    if (cur().kind != Tok::Ident || at_keyword()) {
      error("SyntaxError", "expected clock signal name", cur());
      recover_to_sync();
      return;
    }
    ast.clock = cur().text;
    advance();
    if (at_punct(")"))
      advance();
    else {
      error("SyntaxError", "expected ')' after clocking event", cur());
      recover_to_sync();
      return;
    }

    if (at_ident("disable")) {
      advance();
      if (!at_ident("iff")) {
        error("SyntaxError", "expected 'iff' after 'disable'", cur());
        recover_to_sync();
        return;
      }
      advance();
      if (!at_punct("(")) {
        error("SyntaxError", "expected '(' after 'disable iff'", cur());
        recover_to_sync();
        return;
      }
      Tok open = cur();
      advance();
      PTreePtr dis = parse_or();
      ExprPtr de = as_bool(dis, "the disable iff condition");
      if (!de) {
        recover_to_sync();
        return;
      }
      ast.disable_expr = de;
      if (at_punct(")"))
        advance();
      else
        warn("UnclosedParen", "missing ')' after disable iff condition", open);
    }

    PTreePtr tree = parse_property_expr();
    if (!tree || !lower(tree, ast.body)) {
      recover_to_sync();
      return;
    }

    // Wrap closes, stray parens, action block, semicolon — in any
    // interleaving the listings exhibit.
    while (at_punct(")")) {
      if (wrap > 0)
        --wrap;
      else
        warn("StrayParen", "extra ')' ignored", cur());
      advance();
    }
    if (wrap > 0) warn("UnclosedParen", "parenthesized body never closed", cur());
    if (at_ident("else")) {
      Tok at = cur();
      advance();
      skip_action_block();
      warn("ActionBlock", "assertion action block ignored", at);
    }
    if (at_punct(";"))
      advance();
    else
      warn("MissingSemicolon", "expected ';' after property body", cur());

    if (at_ident("endproperty")) {
      advance();
    } else if (at_end_property_variant()) {
      warn("SpacedEndProperty", "'end property' accepted as 'endproperty'", cur());
      advance();
      advance();
    } else {
      warn("MissingEndproperty", "property '" + name + "' has no endproperty", kw);
    }

    if (prop_error) return;  // diagnostics recorded; drop the declaration
    ast.origin = Origin::Manual;
    ast.binding = gen_ctx;
    result.assertions.push_back(std::move(ast));
    unasserted.push_back(result.assertions.size() - 1);
  }

  void parse_assert_directive() {
    Tok kw = cur();
    advance();  // 'assert'
    if (!at_ident("property")) {
      error("SyntaxError", "expected 'property' after 'assert'", cur());
      prop_error = false;
      recover_to_sync();
      return;
    }
    advance();
    std::string name;
    if (at_punct("(")) {
      Tok open = cur();
      advance();
      if (cur().kind == Tok::Ident && !at_keyword()) {
        name = cur().text;
        advance();
      } else {
        error("SyntaxError", "expected property name in assert directive", cur());
        prop_error = false;
        recover_to_sync();
        return;
      }
      if (at_punct(")"))
        advance();
      else
        warn("UnclosedParen", "missing ')' in assert directive", open);
    } else if (cur().kind == Tok::Ident && !at_keyword()) {
      name = cur().text;
      warn("BareAssert", "assert directive without parentheses accepted", cur());
      advance();
    } else {
      error("SyntaxError", "expected property name in assert directive", cur());
      prop_error = false;
      recover_to_sync();
      return;
    }
    if (at_ident("else")) {
      Tok at = cur();
      advance();
      skip_action_block();
      warn("ActionBlock", "assertion action block ignored", at);
    }
    if (at_punct(";"))
      advance();
    else
      warn("MissingSemicolon", "expected ';' after assert directive", cur());

    // Bind to the declaration; a name mismatch binds the most recent
    // unasserted property, which is the LLM-typo case.
    for (auto it = unasserted.begin(); it != unasserted.end(); ++it) {
      if (result.assertions[*it].name == name) {
        unasserted.erase(it);
        return;
      }
    }
    if (!unasserted.empty()) {
      std::size_t idx = unasserted.back();
      unasserted.pop_back();
      warn("AssertNameMismatch",
           "assert names '" + name + "' but the nearest unasserted property is '" +
               result.assertions[idx].name + "'; binding to it",
           kw);
      return;
    }
    warn("DanglingAssert", "assert directive '" + name + "' matches no property", kw);
  }

  void parse_for_header() {
    Tok kw = cur();
    advance();  // 'for'
    if (!at_punct("(")) {
      error("SyntaxError", "expected '(' after 'for'", cur());
      prop_error = false;
      recover_to_sync();
      return;
    }
    advance();
    GenerateBinding b;
    if (at_ident("genvar")) advance();
    if (cur().kind != Tok::Ident || at_keyword()) {
      error("SyntaxError", "expected loop variable in generate for", cur());
      prop_error = false;
      recover_to_sync();
      return;
    }
    b.loop_var = cur().text;
    advance();
    if (!at_punct("=")) {
      error("SyntaxError", "expected '=' in generate for header", cur());
      prop_error = false;
      recover_to_sync();
      return;
    }
    advance();
    if (cur().kind != Tok::Number) {
      error("SyntaxError", "expected integer lower bound in generate for", cur());
      prop_error = false;
      recover_to_sync();
      return;
    }
    b.lower = number_value(cur().text);
    advance();
    if (!at_punct(";")) {
      error("SyntaxError", "expected ';' in generate for header", cur());
      prop_error = false;
      recover_to_sync();
      return;
    }
    advance();
    if (cur().kind != Tok::Ident || cur().text != b.loop_var) {
      error("SyntaxError", "generate for condition must test the loop variable", cur());
      prop_error = false;
      recover_to_sync();
      return;
    }
    advance();
    if (!at_punct("<")) {
      error("SyntaxError", "expected '<' in generate for condition", cur());
      prop_error = false;
      recover_to_sync();
      return;
    }
    advance();
    if (cur().kind == Tok::Number) {
      b.upper_exclusive = number_value(cur().text);
      advance();
    } else if (cur().kind == Tok::Ident && !at_keyword()) {
      b.upper_exclusive = cur().text;
      advance();
    } else {
      error("SyntaxError", "expected bound in generate for condition", cur());
      prop_error = false;
      recover_to_sync();
      return;
    }
    // Increment clause: accept anything up to ')'.
    while (cur().kind != Tok::End && !at_punct(")")) advance();
    if (at_punct(")")) advance();
    if (at_ident("begin")) {
      advance();
      if (at_punct(":")) {
        advance();
        if (cur().kind == Tok::Ident) advance();  // block label, not retained
      }
    }
    (void)kw;
    gen_ctx = b;
  }

  void run() {
    while (cur().kind != Tok::End) {
      if (at_ident("generate")) {
        advance();
        continue;
      }
      if (at_ident("endgenerate")) {
        gen_ctx.reset();
        advance();
        continue;
      }
      if (at_ident("genvar")) {
        advance();
        if (cur().kind == Tok::Ident && !at_keyword()) {
          genvars.insert(cur().text);
          advance();
        }
        if (at_punct(";")) advance();
        continue;
      }
      if (at_ident("for")) {
        parse_for_header();
        continue;
      }
      if (at_ident("end") && !at_end_property_variant()) {
        gen_ctx.reset();
        advance();
        continue;
      }
      if (at_end_property_variant()) {
        // An orphaned `end property`; consume it.
        advance();
        advance();
        continue;
      }
      if (at_ident("endproperty")) {
        advance();
        continue;
      }
      if (at_ident("property")) {
        parse_property_decl();
        continue;
      }
      if (at_ident("assert")) {
        parse_assert_directive();
        continue;
      }
      if (at_punct(";")) {
        advance();
        continue;
      }
      error("SyntaxError", "unexpected '" + cur().text + "' at top level", cur());
      prop_error = false;
      advance();
      recover_to_sync();
    }
  }
};

}  // namespace

ParseResult parse_assertions(const std::string& source) {
  SvaParser p(source);
  p.run();
  return std::move(p.result);
}

}  // namespace svagen::sva
