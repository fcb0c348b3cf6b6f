// SPDX-License-Identifier: Apache-2.0
#include "svagen/sva_json.hpp"

#include "json.hpp"

namespace svagen::sva {

namespace {

using nlohmann::ordered_json;

const char* kind_name(ExprKind k) {
  switch (k) {
    case ExprKind::Ident: return "ident";
    case ExprKind::IntLit: return "int";
    case ExprKind::SymLit: return "sym";
    case ExprKind::Not: return "not";
    case ExprKind::And: return "and";
    case ExprKind::Or: return "or";
    case ExprKind::Cmp: return "cmp";
    case ExprKind::Arith: return "arith";
    case ExprKind::Past: return "past";
    case ExprKind::Rose: return "rose";
    case ExprKind::Fell: return "fell";
    case ExprKind::Stable: return "stable";
  }
  return "int";
}

const char* cmp_name(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "==";
}

ordered_json expr_json(const ExprPtr& e) {
  if (!e) return nullptr;
  ordered_json j;
  j["kind"] = kind_name(e->kind);
  switch (e->kind) {
    case ExprKind::Ident:
      j["name"] = e->name;
      if (e->index) {
        if (std::holds_alternative<std::int64_t>(*e->index))
          j["index"] = std::get<std::int64_t>(*e->index);
        else
          j["index"] = std::get<std::string>(*e->index);
      }
      break;
    case ExprKind::IntLit: j["value"] = e->value; break;
    case ExprKind::SymLit: j["name"] = e->name; break;
    case ExprKind::Cmp: j["op"] = cmp_name(e->cmp); break;
    case ExprKind::Arith: j["op"] = e->arith == ArithOp::Add ? "+" : "-"; break;
    case ExprKind::Past: j["depth"] = e->past_depth; break;
    default: break;
  }
  if (!e->args.empty()) {
    j["args"] = ordered_json::array();
    for (const auto& a : e->args) j["args"].push_back(expr_json(a));
  }
  return j;
}

ordered_json delay_json(const DelayRange& d) {
  ordered_json j;
  j["lo"] = d.lo;
  j["hi"] = d.hi;
  return j;
}

ordered_json seq_json(const Sequence& s) {
  ordered_json j;
  j["lead"] = delay_json(s.lead);
  j["elements"] = ordered_json::array();
  for (const auto& e : s.elements) j["elements"].push_back(expr_json(e));
  j["delays"] = ordered_json::array();
  for (const auto& d : s.delays) j["delays"].push_back(delay_json(d));
  return j;
}

ordered_json ast_json(const AssertionAst& ast) {
  ordered_json j;
  j["schema"] = 1;
  j["name"] = ast.name;
  j["clock"] = ast.clock;
  j["disable"] = ast.disable_expr ? expr_json(ast.disable_expr) : ordered_json(nullptr);
  ordered_json body;
  body["antecedent"] = seq_json(ast.body.antecedent);
  body["impl"] = ast.body.impl_kind
                     ? ordered_json(*ast.body.impl_kind == ImplKind::Overlapping ? "|->"
                                                                                 : "|=>")
                     : ordered_json(nullptr);
  body["consequent"] =
      ast.body.consequent ? seq_json(*ast.body.consequent) : ordered_json(nullptr);
  j["body"] = std::move(body);
  switch (ast.origin) {
    case Origin::Llm: j["origin"] = "llm"; break;
    case Origin::Reference: j["origin"] = "reference"; break;
    case Origin::Manual: j["origin"] = "manual"; break;
  }
  if (ast.binding) {
    ordered_json b;
    b["loop_var"] = ast.binding->loop_var;
    b["lower"] = ast.binding->lower;
    if (std::holds_alternative<std::int64_t>(ast.binding->upper_exclusive))
      b["upper_exclusive"] = std::get<std::int64_t>(ast.binding->upper_exclusive);
    else
      b["upper_exclusive"] = std::get<std::string>(ast.binding->upper_exclusive);
    j["binding"] = std::move(b);
  } else {
    j["binding"] = nullptr;
  }
  return j;
}

}  // namespace

std::string ast_to_json(const AssertionAst& ast) { return ast_json(ast).dump(2); }

std::string asts_to_json(const std::vector<AssertionAst>& asts) {
  ordered_json arr = ordered_json::array();
  for (const auto& a : asts) arr.push_back(ast_json(a));
  return arr.dump(2);
}

}  // namespace svagen::sva
