// SPDX-License-Identifier: Apache-2.0
#include "svagen/verilog_extract.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "svagen/util.hpp"

namespace svagen::rtl {

namespace {

struct Tok {
  enum Kind { Ident, Number, Punct, End } kind = End;
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct LexOutput {
  std::vector<Tok> toks;
  std::vector<Diagnostic> diags;  // fatal when nonempty
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

LexOutput lex(const std::string& src) {
  LexOutput out;
  std::size_t i = 0;
  const std::size_t n = src.size();
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
      std::size_t start = i;
      i += 2;
      while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) ++i;
      if (i + 1 >= n) {
        out.diags.push_back(make_error("UnbalancedBlock", "unterminated block comment",
                                       {start, n}));
        return out;
      }
      i += 2;
      continue;
    }
    if (c == '`') {
      out.diags.push_back(make_error(
          "UnsupportedConstruct",
          "preprocessor directives are not supported in the declaration subset", {i, i + 1}));
      return out;
    }
    if (c == '\\') {
      out.diags.push_back(make_error("UnsupportedConstruct",
                                     "escaped identifiers are not supported", {i, i + 1}));
      return out;
    }
    if (c == '"') {
      std::size_t start = i++;
      while (i < n && src[i] != '"') {
        if (src[i] == '\\' && i + 1 < n) ++i;
        ++i;
      }
      if (i < n) ++i;
      out.toks.push_back({Tok::Punct, src.substr(start, i - start), start, i});
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t start = i;
      while (i < n && is_ident_char(src[i])) ++i;
      out.toks.push_back({Tok::Ident, src.substr(start, i - start), start, i});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '\'') {
      // Plain decimal or a based literal like 12'h4 or 'b0.
      std::size_t start = i;
      while (i < n && (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      if (i < n && src[i] == '\'') {
        ++i;
        if (i < n && (src[i] == 's' || src[i] == 'S')) ++i;
        if (i < n && std::isalpha(static_cast<unsigned char>(src[i]))) ++i;
        while (i < n && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      }
      out.toks.push_back({Tok::Number, src.substr(start, i - start), start, i});
      continue;
    }
    out.toks.push_back({Tok::Punct, std::string(1, c), i, i + 1});
    ++i;
  }
  out.toks.push_back({Tok::End, "", n, n});
  return out;
}

// Parses a number token: plain decimal or size'base digits. Returns false on
// x/z digits or an unknown base.
bool parse_number(const std::string& text, std::int64_t& value) {
  auto tick = text.find('\'');
  if (tick == std::string::npos) {
    std::string digits;
    for (char c : text)
      if (c != '_') digits.push_back(c);
    if (digits.empty()) return false;
    value = std::strtoll(digits.c_str(), nullptr, 10);
    return true;
  }
  std::size_t p = tick + 1;
  if (p < text.size() && (text[p] == 's' || text[p] == 'S')) ++p;
  if (p >= text.size()) return false;
  int base = 0;
  switch (std::tolower(static_cast<unsigned char>(text[p]))) {
    case 'b': base = 2; break;
    case 'o': base = 8; break;
    case 'd': base = 10; break;
    case 'h': base = 16; break;
    default: return false;
  }
  ++p;
  std::int64_t v = 0;
  bool any = false;
  for (; p < text.size(); ++p) {
    char c = std::tolower(static_cast<unsigned char>(text[p]));
    if (c == '_') continue;
    int d;
    if (c >= '0' && c <= '9')
      d = c - '0';
    else if (c >= 'a' && c <= 'f')
      d = 10 + (c - 'a');
    else
      return false;  // x/z carry no usable numeric value here
    if (d >= base) return false;
    v = v * base + d;
    any = true;
  }
  if (!any) return false;
  value = v;
  return true;
}

const char* kOpeners[] = {"begin", "case", "casex", "casez", "fork"};
const char* kClosers[] = {"end", "endcase", "join", "join_any", "join_none"};

bool is_in(const std::string& s, const char* const* arr, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (s == arr[i]) return true;
  return false;
}

struct Parser {
  const std::vector<Tok>& toks;
  std::size_t pos = 0;
  std::vector<Diagnostic>& diags;
  SignalInventory inv;
  RoleConfig roles;
  bool fatal = false;

  Parser(const std::vector<Tok>& t, std::vector<Diagnostic>& d, RoleConfig r)
      : toks(t), diags(d), roles(std::move(r)) {}

  const Tok& cur() const { return toks[pos]; }
  const Tok& peek(std::size_t k = 1) const {
    std::size_t i = std::min(pos + k, toks.size() - 1);
    return toks[i];
  }
  void advance() {
    if (pos + 1 < toks.size()) ++pos;
  }
  bool at_ident(const char* s) const { return cur().kind == Tok::Ident && cur().text == s; }
  bool at_punct(const char* s) const { return cur().kind == Tok::Punct && cur().text == s; }

  void error(const std::string& code, const std::string& msg, const Tok& at) {
    diags.push_back(make_error(code, msg, {at.begin, std::max(at.end, at.begin + 1)}));
    fatal = true;
  }
  void warn(const std::string& code, const std::string& msg, const Tok& at) {
    diags.push_back(make_warning(code, msg, {at.begin, at.end}));
  }

  SignalDecl* find_signal(const std::string& name) {
    for (auto& s : inv.signals)
      if (s.name == name) return &s;
    return nullptr;
  }

  // Constant expression over integers and already-known parameters.
  // Returns false without reporting; the caller owns the diagnostic.
  bool const_expr(std::int64_t& value) { return const_add(value); }

  bool const_add(std::int64_t& value) {
    if (!const_mul(value)) return false;
    while (at_punct("+") || at_punct("-")) {
      bool plus = cur().text == "+";
      advance();
      std::int64_t rhs;
      if (!const_mul(rhs)) return false;
      value = plus ? value + rhs : value - rhs;
    }
    return true;
  }

  bool const_mul(std::int64_t& value) {
    if (!const_unary(value)) return false;
    while (at_punct("*") || at_punct("/")) {
      bool mul = cur().text == "*";
      advance();
      std::int64_t rhs;
      if (!const_unary(rhs)) return false;
      if (!mul && rhs == 0) return false;
      value = mul ? value * rhs : value / rhs;
    }
    return true;
  }

  bool const_unary(std::int64_t& value) {
    if (at_punct("-")) {
      advance();
      if (!const_unary(value)) return false;
      value = -value;
      return true;
    }
    if (at_punct("(")) {
      advance();
      if (!const_expr(value)) return false;
      if (!at_punct(")")) return false;
      advance();
      return true;
    }
    if (cur().kind == Tok::Number) {
      bool ok = parse_number(cur().text, value);
      advance();
      return ok;
    }
    if (cur().kind == Tok::Ident) {
      auto it = inv.parameters.find(cur().text);
      if (it == inv.parameters.end()) return false;
      value = it->second;
      advance();
      return true;
    }
    return false;
  }

  // `[msb:lsb]` or `[count]`; cursor on '['. On success the cursor sits past ']'.
  bool bracket_range(std::int64_t& a, std::int64_t& b, bool& had_colon) {
    const Tok& open = cur();
    advance();  // '['
    if (!const_expr(a)) {
      error("MalformedRange", "range bound is not a resolvable constant", open);
      return false;
    }
    had_colon = false;
    if (at_punct(":")) {
      had_colon = true;
      advance();
      if (!const_expr(b)) {
        error("MalformedRange", "range bound is not a resolvable constant", open);
        return false;
      }
    } else {
      b = a;
    }
    if (!at_punct("]")) {
      error("MalformedRange", "unterminated range", open);
      return false;
    }
    advance();
    return true;
  }

  static std::uint32_t span_width(std::int64_t a, std::int64_t b) {
    std::int64_t w = a > b ? a - b : b - a;
    return static_cast<std::uint32_t>(w + 1);
  }

  void skip_to_semi() {
    while (cur().kind != Tok::End && !at_punct(";") && !at_ident("endmodule")) advance();
    if (at_punct(";")) advance();
  }

  // Skips one procedural statement, tracking begin/end style nesting.
  // Semicolons inside parentheses (for-loop headers) do not end it.
  void skip_statement() {
    int depth = 0;
    int pdepth = 0;
    bool saw_block = false;
    while (cur().kind != Tok::End) {
      if (at_ident("endmodule")) return;  // left for the module loop to diagnose
      if (at_punct("(")) {
        ++pdepth;
        advance();
        continue;
      }
      if (at_punct(")")) {
        --pdepth;
        advance();
        continue;
      }
      if (cur().kind == Tok::Ident && is_in(cur().text, kOpeners, 5)) {
        ++depth;
        saw_block = true;
        advance();
        continue;
      }
      if (cur().kind == Tok::Ident && is_in(cur().text, kClosers, 5)) {
        --depth;
        advance();
        if (depth <= 0 && saw_block) {
          if (at_ident("else")) {
            advance();
            continue;  // `end else ...` keeps the statement open
          }
          return;
        }
        continue;
      }
      if (at_punct(";") && depth == 0 && pdepth == 0 && !saw_block) {
        advance();
        return;
      }
      advance();
    }
  }

  void skip_until_ident(const char* closing) {
    while (cur().kind != Tok::End && !at_ident(closing)) {
      if (at_ident("endmodule")) return;
      advance();
    }
    if (at_ident(closing)) advance();
  }

  void add_signal(SignalDecl decl, const Tok& at) {
    if (find_signal(decl.name)) {
      warn("DuplicateSignal", "duplicate declaration of '" + decl.name + "' ignored", at);
      return;
    }
    decl.role_hint = infer_role(decl.name, roles);
    inv.signals.push_back(std::move(decl));
  }

  // One parameter assignment inside `#(...)` or a body parameter statement.
  // Cursor sits after the `parameter`/`localparam` keyword.
  void parameter_assignment() {
    // Skip optional type tokens; the name is the last identifier before '='.
    std::string name;
    Tok name_tok = cur();
    while (cur().kind == Tok::Ident) {
      name = cur().text;
      name_tok = cur();
      advance();
      if (at_punct("[")) {  // packed type on the parameter, e.g. logic [3:0]
        std::int64_t a, b;
        bool colon;
        if (!bracket_range(a, b, colon)) return;
      }
    }
    if (name.empty() || !at_punct("=")) {
      error("MalformedRange", "malformed parameter declaration", name_tok);
      return;
    }
    advance();
    std::int64_t value;
    if (!const_expr(value)) {
      error("MalformedRange", "parameter value is not a resolvable integer constant", name_tok);
      return;
    }
    inv.parameters[name] = value;
  }

  // Port or net declaration entry: optional direction/type/range, then names.
  // `direction` carries over across comma-separated header entries.
  struct DeclHead {
    std::optional<Direction> direction;
    std::uint32_t width = 1;
    bool saw_type = false;
  };

  bool direction_keyword(std::optional<Direction>& dir) {
    if (at_ident("input")) dir = Direction::Input;
    else if (at_ident("output")) dir = Direction::Output;
    else if (at_ident("inout")) dir = Direction::Inout;
    else return false;
    advance();
    return true;
  }

  bool type_keyword() {
    if (at_ident("wire") || at_ident("reg") || at_ident("logic") || at_ident("bit") ||
        at_ident("var")) {
      advance();
      return true;
    }
    return false;
  }

  // Parses `name [unpacked]` and registers the signal. Returns false on error.
  bool declarator(const DeclHead& head) {
    if (cur().kind != Tok::Ident) {
      error("MalformedRange", "expected signal name", cur());
      return false;
    }
    SignalDecl decl;
    decl.name = cur().text;
    Tok name_tok = cur();
    advance();
    decl.direction = head.direction.value_or(Direction::Internal);
    decl.width = head.width;
    if (at_punct("[")) {
      std::int64_t a, b;
      bool colon;
      if (!bracket_range(a, b, colon)) return false;
      decl.is_array = true;
      decl.array_elems = colon ? span_width(a, b) : static_cast<std::uint32_t>(a);
      if (decl.array_elems < 1) {
        error("MalformedRange", "array element count must be positive", name_tok);
        return false;
      }
    }
    if (at_punct("=")) {  // initializer on a variable declaration
      while (cur().kind != Tok::End && !at_punct(",") && !at_punct(";") && !at_punct(")"))
        advance();
    }
    // A later `reg`/`logic`/direction declaration may complete a known port.
    if (SignalDecl* existing = find_signal(decl.name)) {
      bool completes_port =
          existing->direction != Direction::Internal || head.direction.has_value();
      if (!completes_port) {
        warn("DuplicateSignal", "duplicate declaration of '" + decl.name + "' ignored",
             name_tok);
        return true;
      }
      if (head.direction && existing->direction == Direction::Internal)
        existing->direction = *head.direction;
      if (head.width > 1) existing->width = head.width;
      if (decl.is_array) {
        existing->is_array = true;
        existing->array_elems = decl.array_elems;
      }
      return true;
    }
    add_signal(decl, name_tok);
    return true;
  }

  // `#(parameter ... , parameter ...)`; cursor on '#'.
  void parameter_ports() {
    advance();  // '#'
    if (!at_punct("(")) {
      error("MalformedRange", "expected '(' after '#'", cur());
      return;
    }
    advance();
    while (!fatal && cur().kind != Tok::End && !at_punct(")")) {
      if (at_ident("parameter") || at_ident("localparam")) {
        advance();
        parameter_assignment();
      } else if (at_punct(",")) {
        advance();
      } else {
        error("MalformedRange", "unexpected token in parameter port list", cur());
        return;
      }
    }
    if (at_punct(")")) advance();
  }

  // ANSI or plain port list; cursor on '('.
  void port_list() {
    advance();  // '('
    DeclHead head;
    while (!fatal && cur().kind != Tok::End && !at_punct(")")) {
      if (at_punct(",")) {
        advance();
        continue;
      }
      bool fresh = false;
      std::optional<Direction> dir;
      if (direction_keyword(dir)) {
        head.direction = dir;
        head.width = 1;
        fresh = true;
      }
      if (type_keyword()) {
        if (!fresh) head.width = 1;
        fresh = true;
      }
      if (at_ident("signed") || at_ident("unsigned")) advance();
      if (at_punct("[")) {
        std::int64_t a, b;
        bool colon;
        if (!bracket_range(a, b, colon)) return;
        head.width = span_width(a, b);
        fresh = true;
      }
      if (cur().kind != Tok::Ident) {
        error("MalformedRange", "expected port name", cur());
        return;
      }
      if (!head.direction && !fresh) {
        // 1995-style list of names; directions come from body declarations.
        SignalDecl decl;
        decl.name = cur().text;
        add_signal(decl, cur());
        advance();
        continue;
      }
      if (!declarator(head)) return;
    }
    if (at_punct(")"))
      advance();
    else
      error("UnbalancedBlock", "unterminated port list", cur());
  }

  // Non-ANSI direction or net declaration in the module body.
  void body_declaration() {
    DeclHead head;
    std::optional<Direction> dir;
    direction_keyword(dir);
    head.direction = dir;
    type_keyword();
    if (at_ident("signed") || at_ident("unsigned")) advance();
    if (at_punct("[")) {
      std::int64_t a, b;
      bool colon;
      if (!bracket_range(a, b, colon)) return;
      head.width = span_width(a, b);
    }
    while (!fatal && cur().kind != Tok::End) {
      if (!declarator(head)) return;
      if (at_punct(",")) {
        advance();
        continue;
      }
      break;
    }
    if (at_punct(";"))
      advance();
    else if (!fatal)
      error("MalformedRange", "expected ';' after declaration", cur());
  }

  void module_body() {
    while (!fatal && cur().kind != Tok::End) {
      if (at_ident("endmodule")) {
        advance();
        return;
      }
      if (at_ident("parameter") || at_ident("localparam")) {
        advance();
        parameter_assignment();
        if (at_punct(",")) {
          // `parameter A = 1, B = 2;`
          while (at_punct(",")) {
            advance();
            parameter_assignment();
            if (fatal) return;
          }
        }
        skip_to_semi();
        continue;
      }
      if (at_ident("input") || at_ident("output") || at_ident("inout") || at_ident("wire") ||
          at_ident("reg") || at_ident("logic") || at_ident("bit") || at_ident("var")) {
        body_declaration();
        continue;
      }
      if (at_ident("genvar") || at_ident("assign") || at_ident("typedef") ||
          at_ident("integer") || at_ident("int")) {
        skip_to_semi();
        continue;
      }
      if (at_ident("always") || at_ident("always_ff") || at_ident("always_comb") ||
          at_ident("always_latch") || at_ident("initial") || at_ident("final")) {
        advance();
        skip_statement();
        continue;
      }
      if (at_ident("function")) {
        skip_until_ident("endfunction");
        continue;
      }
      if (at_ident("task")) {
        skip_until_ident("endtask");
        continue;
      }
      if (at_ident("generate")) {
        skip_until_ident("endgenerate");
        continue;
      }
      if (at_ident("for") || at_ident("if") || at_ident("begin")) {
        skip_statement();
        continue;
      }
      // Instantiations and anything else declaration-free: skip the statement.
      skip_to_semi();
    }
    if (!fatal)
      diags.push_back(make_error("UnbalancedBlock", "module '" + inv.module_name +
                                                        "' has no matching endmodule",
                                 {toks.back().begin, toks.back().begin + 1}));
    fatal = true;
  }

  // Cursor on the `module` keyword.
  void module_decl() {
    advance();
    if (cur().kind != Tok::Ident) {
      error("NoModuleFound", "expected module name after 'module'", cur());
      return;
    }
    inv.module_name = cur().text;
    advance();
    if (at_punct("#")) parameter_ports();
    if (fatal) return;
    if (at_punct("(")) port_list();
    if (fatal) return;
    if (at_punct(";"))
      advance();
    else {
      error("MalformedRange", "expected ';' after module header", cur());
      return;
    }
    module_body();
  }
};

}  // namespace

const char* to_string(Direction d) {
  switch (d) {
    case Direction::Input: return "input";
    case Direction::Output: return "output";
    case Direction::Inout: return "inout";
    case Direction::Internal: return "internal";
  }
  return "internal";
}

const char* to_string(RoleHint r) {
  switch (r) {
    case RoleHint::Clock: return "clock";
    case RoleHint::Reset: return "reset";
    case RoleHint::Data: return "data";
    case RoleHint::Unknown: return "unknown";
  }
  return "unknown";
}

const SignalDecl* SignalInventory::find(const std::string& name) const {
  for (const auto& s : signals)
    if (s.name == name) return &s;
  return nullptr;
}

RoleHint infer_role(const std::string& name, const RoleConfig& config) {
  for (const auto& g : config.clock_globs)
    if (glob_match(g, name)) return RoleHint::Clock;
  for (const auto& g : config.reset_globs)
    if (glob_match(g, name)) return RoleHint::Reset;
  return RoleHint::Data;
}

ExtractResult extract_signals(const std::string& source, const ExtractOptions& options) {
  ExtractResult result;
  LexOutput lx = lex(source);
  if (!lx.diags.empty()) {
    result.diagnostics = std::move(lx.diags);
    return result;
  }
  // Locate the requested module keyword.
  std::size_t start = lx.toks.size();
  for (std::size_t i = 0; i + 1 < lx.toks.size(); ++i) {
    if (lx.toks[i].kind == Tok::Ident && lx.toks[i].text == "module") {
      if (!options.select_module) {
        start = i;
        break;
      }
      if (lx.toks[i + 1].kind == Tok::Ident && lx.toks[i + 1].text == *options.select_module) {
        start = i;
        break;
      }
      // Skip this module body so nested tokens are not misread.
      std::size_t j = i + 1;
      while (j < lx.toks.size() && !(lx.toks[j].kind == Tok::Ident &&
                                     lx.toks[j].text == "endmodule"))
        ++j;
      i = j;
    }
  }
  if (start >= lx.toks.size()) {
    std::string msg = options.select_module
                          ? "module '" + *options.select_module + "' not found"
                          : "no module declaration found";
    result.diagnostics.push_back(make_error("NoModuleFound", msg, {0, std::max<std::size_t>(
                                                                          source.size(), 1)}));
    return result;
  }
  Parser p(lx.toks, result.diagnostics, options.roles);
  p.pos = start;
  p.module_decl();
  if (!p.fatal) result.inventory = std::move(p.inv);
  return result;
}

std::string print_inventory(const SignalInventory& inv) {
  std::ostringstream out;
  out << "module " << inv.module_name;
  if (!inv.parameters.empty()) {
    out << " #(\n";
    std::size_t i = 0;
    for (const auto& [name, value] : inv.parameters) {
      out << "  parameter " << name << " = " << value;
      if (++i < inv.parameters.size()) out << ",";
      out << "\n";
    }
    out << ")";
  }
  std::vector<const SignalDecl*> ports, internals;
  for (const auto& s : inv.signals)
    (s.direction == Direction::Internal ? internals : ports).push_back(&s);
  out << " (";
  for (std::size_t i = 0; i < ports.size(); ++i) {
    const SignalDecl& s = *ports[i];
    out << "\n  " << to_string(s.direction) << " logic ";
    if (s.width > 1) out << "[" << s.width - 1 << ":0] ";
    out << s.name;
    if (s.is_array) out << " [0:" << s.array_elems - 1 << "]";
    if (i + 1 < ports.size()) out << ",";
  }
  if (!ports.empty()) out << "\n";
  out << ");\n";
  for (const SignalDecl* sp : internals) {
    const SignalDecl& s = *sp;
    out << "  logic ";
    if (s.width > 1) out << "[" << s.width - 1 << ":0] ";
    out << s.name;
    if (s.is_array) out << " [0:" << s.array_elems - 1 << "]";
    out << ";\n";
  }
  out << "endmodule\n";
  return out.str();
}

std::string inventory_to_json(const SignalInventory& inv) {
  nlohmann::ordered_json j;
  j["module"] = inv.module_name;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : inv.parameters) j["parameters"][name] = value;
  j["signals"] = nlohmann::ordered_json::array();
  for (const auto& s : inv.signals) {
    nlohmann::ordered_json js;
    js["name"] = s.name;
    js["direction"] = to_string(s.direction);
    js["width"] = s.width;
    if (s.is_array) js["array_elems"] = s.array_elems;
    js["role"] = to_string(s.role_hint);
    j["signals"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

}  // namespace svagen::rtl
