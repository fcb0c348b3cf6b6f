// SPDX-License-Identifier: Apache-2.0
#include "svagen/sva_normalize.hpp"

#include <algorithm>

#include "svagen/sva_printer.hpp"

namespace svagen::sva {

namespace {

void flatten(ExprKind kind, const ExprPtr& e, std::vector<ExprPtr>& out) {
  if (e->kind == kind) {
    flatten(kind, e->args[0], out);
    flatten(kind, e->args[1], out);
  } else {
    out.push_back(e);
  }
}

ExprPtr rebuild(ExprKind kind, std::vector<ExprPtr> ops) {
  ExprPtr acc = ops[0];
  for (std::size_t i = 1; i < ops.size(); ++i)
    acc = kind == ExprKind::And ? make_and(acc, ops[i]) : make_or(acc, ops[i]);
  return acc;
}

Sequence normalize_seq(const Sequence& s) {
  Sequence out = s;
  for (auto& e : out.elements) e = normalize_expr(e);
  return out;
}

}  // namespace

ExprPtr normalize_expr(const ExprPtr& e) {
  if (!e) return e;
  switch (e->kind) {
    case ExprKind::Ident:
    case ExprKind::IntLit:
    case ExprKind::SymLit: return e;
    case ExprKind::Not: {
      ExprPtr c = normalize_expr(e->args[0]);
      if (c->kind == ExprKind::Not) return c->args[0];
      return make_not(c);
    }
    case ExprKind::And:
    case ExprKind::Or: {
      std::vector<ExprPtr> ops;
      flatten(e->kind, e, ops);
      for (auto& op : ops) op = normalize_expr(op);
      // Normalizing an operand can expose another same-kind chain.
      std::vector<ExprPtr> flat;
      for (const auto& op : ops) flatten(e->kind, op, flat);
      std::stable_sort(flat.begin(), flat.end(), [](const ExprPtr& a, const ExprPtr& b) {
        return print_expr(a) < print_expr(b);
      });
      return rebuild(e->kind, std::move(flat));
    }
    case ExprKind::Cmp: {
      ExprPtr a = normalize_expr(e->args[0]);
      ExprPtr b = normalize_expr(e->args[1]);
      if ((e->cmp == CmpOp::Eq || e->cmp == CmpOp::Ne) && print_expr(b) < print_expr(a))
        std::swap(a, b);
      return make_cmp(e->cmp, a, b);
    }
    case ExprKind::Arith:
      return make_arith(e->arith, normalize_expr(e->args[0]), normalize_expr(e->args[1]));
    case ExprKind::Past: return make_past(normalize_expr(e->args[0]), e->past_depth);
    case ExprKind::Rose:
    case ExprKind::Fell:
    case ExprKind::Stable: return make_unary(e->kind, normalize_expr(e->args[0]));
  }
  return e;
}

AssertionAst normalize(const AssertionAst& ast) {
  AssertionAst out = ast;
  if (out.disable_expr) out.disable_expr = normalize_expr(out.disable_expr);
  out.body.antecedent = normalize_seq(out.body.antecedent);
  if (out.body.consequent) out.body.consequent = normalize_seq(*out.body.consequent);
  if (out.body.impl_kind == ImplKind::NonOverlapping) {
    out.body.impl_kind = ImplKind::Overlapping;
    out.body.consequent->lead.lo += 1;
    out.body.consequent->lead.hi += 1;
  }
  return out;
}

}  // namespace svagen::sva
