// SPDX-License-Identifier: Apache-2.0
#include "svagen/sva_ast.hpp"

namespace svagen::sva {

namespace {
ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }
}  // namespace

ExprPtr make_ident(std::string name, std::optional<Index> index) {
  Expr e;
  e.kind = ExprKind::Ident;
  e.name = std::move(name);
  e.index = std::move(index);
  return node(std::move(e));
}

ExprPtr make_int(std::int64_t value) {
  Expr e;
  e.kind = ExprKind::IntLit;
  e.value = value;
  return node(std::move(e));
}

ExprPtr make_sym(std::string name) {
  Expr e;
  e.kind = ExprKind::SymLit;
  e.name = std::move(name);
  return node(std::move(e));
}

ExprPtr make_not(ExprPtr a) {
  Expr e;
  e.kind = ExprKind::Not;
  e.args = {std::move(a)};
  return node(std::move(e));
}

ExprPtr make_and(ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = ExprKind::And;
  e.args = {std::move(a), std::move(b)};
  return node(std::move(e));
}

ExprPtr make_or(ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = ExprKind::Or;
  e.args = {std::move(a), std::move(b)};
  return node(std::move(e));
}

ExprPtr make_cmp(CmpOp op, ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = ExprKind::Cmp;
  e.cmp = op;
  e.args = {std::move(a), std::move(b)};
  return node(std::move(e));
}

ExprPtr make_arith(ArithOp op, ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = ExprKind::Arith;
  e.arith = op;
  e.args = {std::move(a), std::move(b)};
  return node(std::move(e));
}

ExprPtr make_past(ExprPtr a, int depth) {
  Expr e;
  e.kind = ExprKind::Past;
  e.past_depth = depth;
  e.args = {std::move(a)};
  return node(std::move(e));
}

ExprPtr make_unary(ExprKind kind, ExprPtr a) {
  Expr e;
  e.kind = kind;
  e.args = {std::move(a)};
  return node(std::move(e));
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::Ident:
      if (a->name != b->name || a->index != b->index) return false;
      break;
    case ExprKind::IntLit:
      if (a->value != b->value) return false;
      break;
    case ExprKind::SymLit:
      if (a->name != b->name) return false;
      break;
    case ExprKind::Cmp:
      if (a->cmp != b->cmp) return false;
      break;
    case ExprKind::Arith:
      if (a->arith != b->arith) return false;
      break;
    case ExprKind::Past:
      if (a->past_depth != b->past_depth) return false;
      break;
    default: break;
  }
  if (a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!expr_equal(a->args[i], b->args[i])) return false;
  return true;
}

bool sequence_equal(const Sequence& a, const Sequence& b) {
  if (!(a.lead == b.lead)) return false;
  if (a.elements.size() != b.elements.size()) return false;
  if (a.delays != b.delays) return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i)
    if (!expr_equal(a.elements[i], b.elements[i])) return false;
  return true;
}

bool property_equal(const PropertyExpr& a, const PropertyExpr& b) {
  if (!sequence_equal(a.antecedent, b.antecedent)) return false;
  if (a.impl_kind != b.impl_kind) return false;
  if (a.consequent.has_value() != b.consequent.has_value()) return false;
  if (a.consequent && !sequence_equal(*a.consequent, *b.consequent)) return false;
  return true;
}

bool ast_equal(const AssertionAst& a, const AssertionAst& b) {
  if (a.name != b.name || a.clock != b.clock) return false;
  if ((a.disable_expr == nullptr) != (b.disable_expr == nullptr)) return false;
  if (a.disable_expr && !expr_equal(a.disable_expr, b.disable_expr)) return false;
  if (!property_equal(a.body, b.body)) return false;
  if (a.binding != b.binding) return false;
  return true;
}

}  // namespace svagen::sva
