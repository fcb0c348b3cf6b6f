// SPDX-License-Identifier: Apache-2.0
#include "svagen/sva_printer.hpp"

#include <sstream>

namespace svagen::sva {

namespace {

// Precedence for parenthesization: higher binds tighter.
int prec(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Or: return 1;
    case ExprKind::And: return 2;
    case ExprKind::Cmp: return 3;
    case ExprKind::Arith: return 4;
    case ExprKind::Not: return 5;
    default: return 6;
  }
}

const char* cmp_text(CmpOp op) {
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

void print_rec(std::ostringstream& out, const ExprPtr& e, int ctx) {
  if (!e) return;
  int p = prec(*e);
  bool parens = p < ctx;
  if (parens) out << "(";
  switch (e->kind) {
    case ExprKind::Ident:
      out << e->name;
      if (e->index) {
        out << "[";
        if (std::holds_alternative<std::int64_t>(*e->index))
          out << std::get<std::int64_t>(*e->index);
        else
          out << std::get<std::string>(*e->index);
        out << "]";
      }
      break;
    case ExprKind::IntLit: out << e->value; break;
    case ExprKind::SymLit: out << "'" << e->name << "'"; break;
    case ExprKind::Not:
      out << "!";
      print_rec(out, e->args[0], 5);
      break;
    case ExprKind::And:
      print_rec(out, e->args[0], 2);
      out << " && ";
      print_rec(out, e->args[1], 3);
      break;
    case ExprKind::Or:
      print_rec(out, e->args[0], 1);
      out << " || ";
      print_rec(out, e->args[1], 2);
      break;
    case ExprKind::Cmp:
      print_rec(out, e->args[0], 3);
      out << " " << cmp_text(e->cmp) << " ";
      print_rec(out, e->args[1], 4);
      break;
    case ExprKind::Arith:
      print_rec(out, e->args[0], 4);
      out << (e->arith == ArithOp::Add ? " + " : " - ");
      print_rec(out, e->args[1], 5);
      break;
    case ExprKind::Past:
      out << "$past(";
      print_rec(out, e->args[0], 0);
      if (e->past_depth != 1) out << ", " << e->past_depth;
      out << ")";
      break;
    case ExprKind::Rose:
      out << "$rose(";
      print_rec(out, e->args[0], 0);
      out << ")";
      break;
    case ExprKind::Fell:
      out << "$fell(";
      print_rec(out, e->args[0], 0);
      out << ")";
      break;
    case ExprKind::Stable:
      out << "$stable(";
      print_rec(out, e->args[0], 0);
      out << ")";
      break;
  }
  if (parens) out << ")";
}

void print_delay(std::ostringstream& out, const DelayRange& d) {
  if (d.lo == d.hi)
    out << "##" << d.lo;
  else
    out << "##[" << d.lo << ":" << d.hi << "]";
}

void print_seq(std::ostringstream& out, const Sequence& s) {
  if (!(s.lead == DelayRange{0, 0})) {
    print_delay(out, s.lead);
    out << " ";
  }
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    if (i > 0) {
      out << " ";
      print_delay(out, s.delays[i - 1]);
      out << " ";
    }
    print_rec(out, s.elements[i], 0);
  }
}

}  // namespace

std::string print_expr(const ExprPtr& e) {
  std::ostringstream out;
  print_rec(out, e, 0);
  return out.str();
}

std::string print_sequence(const Sequence& s) {
  std::ostringstream out;
  print_seq(out, s);
  return out.str();
}

std::string print_property(const PropertyExpr& p) {
  std::ostringstream out;
  print_seq(out, p.antecedent);
  if (p.impl_kind) {
    out << (p.impl_kind == ImplKind::Overlapping ? " |-> " : " |=> ");
    print_seq(out, *p.consequent);
  }
  return out.str();
}

std::string pretty_print(const AssertionAst& ast) {
  std::ostringstream out;
  std::string ind;
  if (ast.binding) {
    const auto& b = *ast.binding;
    out << "generate\n  for (genvar " << b.loop_var << " = " << b.lower << "; " << b.loop_var
        << " < ";
    if (std::holds_alternative<std::int64_t>(b.upper_exclusive))
      out << std::get<std::int64_t>(b.upper_exclusive);
    else
      out << std::get<std::string>(b.upper_exclusive);
    out << "; " << b.loop_var << "++) begin : gen_" << ast.name << "\n";
    ind = "    ";
  }
  out << ind << "property " << ast.name << ";\n";
  out << ind << "  @(posedge " << ast.clock << ")";
  if (ast.disable_expr) out << " disable iff (" << print_expr(ast.disable_expr) << ")";
  out << "\n" << ind << "  " << print_property(ast.body) << ";\n";
  out << ind << "endproperty\n";
  out << ind << "assert property (" << ast.name << ");\n";
  if (ast.binding) out << "  end\nendgenerate\n";
  return out.str();
}

std::string pretty_print_all(const std::vector<AssertionAst>& asts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < asts.size(); ++i) {
    if (i > 0) out << "\n";
    out << pretty_print(asts[i]);
  }
  return out.str();
}

}  // namespace svagen::sva
