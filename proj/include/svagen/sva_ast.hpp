// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace svagen::sva {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class ExprKind {
  Ident,   // name, optional index
  IntLit,  // value
  SymLit,  // quoted state label, e.g. 'Checking'; evaluates to unknown
  Not,
  And,
  Or,
  Cmp,
  Arith,
  Past,  // $past(e, depth), depth always explicit
  Rose,
  Fell,
  Stable,
};

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };
enum class ArithOp { Add, Sub };

// Index is either a literal or a generate loop variable.
using Index = std::variant<std::int64_t, std::string>;

struct Expr {
  ExprKind kind = ExprKind::IntLit;
  std::string name;            // Ident, SymLit
  std::optional<Index> index;  // Ident only
  std::int64_t value = 0;      // IntLit
  CmpOp cmp = CmpOp::Eq;
  ArithOp arith = ArithOp::Add;
  int past_depth = 1;
  std::vector<ExprPtr> args;  // children, arity fixed by kind
};

ExprPtr make_ident(std::string name, std::optional<Index> index = std::nullopt);
ExprPtr make_int(std::int64_t value);
ExprPtr make_sym(std::string name);
ExprPtr make_not(ExprPtr e);
ExprPtr make_and(ExprPtr a, ExprPtr b);
ExprPtr make_or(ExprPtr a, ExprPtr b);
ExprPtr make_cmp(CmpOp op, ExprPtr a, ExprPtr b);
ExprPtr make_arith(ArithOp op, ExprPtr a, ExprPtr b);
ExprPtr make_past(ExprPtr e, int depth = 1);
ExprPtr make_unary(ExprKind kind, ExprPtr e);  // Rose/Fell/Stable

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

struct DelayRange {
  int lo = 0;
  int hi = 0;  // hi >= lo
  bool operator==(const DelayRange&) const = default;
};

// Elements separated by delays; delays.size() == elements.size() - 1.
// `lead` is a delay before the first element, used by consequents such
// as `##1 (tick_count == 0)` and by the |=> desugaring.
struct Sequence {
  DelayRange lead{0, 0};
  std::vector<ExprPtr> elements;
  std::vector<DelayRange> delays;
};

bool sequence_equal(const Sequence& a, const Sequence& b);

enum class ImplKind { Overlapping, NonOverlapping };

// Either a bare sequence or `antecedent |-> / |=> consequent`.
// Nested implications are rejected by the parser.
struct PropertyExpr {
  Sequence antecedent;
  std::optional<ImplKind> impl_kind;
  std::optional<Sequence> consequent;
};

bool property_equal(const PropertyExpr& a, const PropertyExpr& b);

enum class Origin { Llm, Reference, Manual };

// Upper bound is exclusive and may name a module parameter.
struct GenerateBinding {
  std::string loop_var;
  std::int64_t lower = 0;
  std::variant<std::int64_t, std::string> upper_exclusive;
  bool operator==(const GenerateBinding&) const = default;
};

struct AssertionAst {
  std::string name;
  std::string clock;
  ExprPtr disable_expr;  // null when absent
  PropertyExpr body;
  Origin origin = Origin::Manual;
  std::optional<GenerateBinding> binding;
};

// Structural equality over everything except origin.
bool ast_equal(const AssertionAst& a, const AssertionAst& b);

}  // namespace svagen::sva
