// SPDX-License-Identifier: Apache-2.0
#include "svagen/sva_semantics.hpp"

#include <functional>

#include "svagen/sva_printer.hpp"

namespace svagen::sva {

namespace {

Span locate(const std::string& text, const std::string& needle) {
  auto at = text.find(needle);
  if (at == std::string::npos) return {0, std::max<std::size_t>(text.size(), 1)};
  return {at, at + needle.size()};
}

}  // namespace

std::vector<Diagnostic> check_semantics(const AssertionAst& ast,
                                        const rtl::SignalInventory& inventory) {
  std::vector<Diagnostic> diags;
  const std::string printed = pretty_print(ast);
  bool disable_has_reset = false;
  bool in_disable = false;

  std::function<void(const ExprPtr&)> walk = [&](const ExprPtr& e) {
    if (!e) return;
    if (e->kind == ExprKind::Ident) {
      const rtl::SignalDecl* sig = inventory.find(e->name);
      bool is_loop_var = ast.binding && e->name == ast.binding->loop_var;
      if (!sig && !is_loop_var) {
        diags.push_back(make_error(
            "UnknownSignal",
            "identifier '" + e->name + "' does not resolve in module '" +
                inventory.module_name + "'",
            locate(printed, e->name)));
      }
      if (sig && in_disable && sig->role_hint == rtl::RoleHint::Reset)
        disable_has_reset = true;
      if (e->index) {
        if (std::holds_alternative<std::string>(*e->index)) {
          const std::string& iv = std::get<std::string>(*e->index);
          bool loop_var = ast.binding && iv == ast.binding->loop_var;
          if (!loop_var && !inventory.find(iv)) {
            diags.push_back(make_error("UnknownSignal",
                                       "index identifier '" + iv +
                                           "' does not resolve in module '" +
                                           inventory.module_name + "'",
                                       locate(printed, iv)));
          }
        }
        if (sig && !sig->is_array && sig->width == 1) {
          diags.push_back(make_warning("IndexOnScalar",
                                       "'" + e->name + "' is a scalar but is indexed",
                                       locate(printed, e->name)));
        }
      }
      return;
    }
    for (const auto& a : e->args) walk(a);
  };

  if (!inventory.find(ast.clock)) {
    diags.push_back(make_error("UnknownSignal",
                               "clock '" + ast.clock + "' does not resolve in module '" +
                                   inventory.module_name + "'",
                               locate(printed, ast.clock)));
  }
  if (ast.disable_expr) {
    in_disable = true;
    walk(ast.disable_expr);
    in_disable = false;
    if (!disable_has_reset) {
      diags.push_back(make_warning(
          "SuspiciousReset", "disable iff condition references no reset-role signal",
          locate(printed, "disable iff")));
    }
  }
  auto walk_seq = [&](const Sequence& s) {
    for (const auto& e : s.elements) walk(e);
  };
  walk_seq(ast.body.antecedent);
  if (ast.body.consequent) walk_seq(*ast.body.consequent);
  return diags;
}

namespace {

ExprPtr substitute(const ExprPtr& e, const std::string& var, std::int64_t value) {
  if (!e) return e;
  if (e->kind == ExprKind::Ident) {
    if (e->name == var && !e->index) return make_int(value);
    if (e->index && std::holds_alternative<std::string>(*e->index) &&
        std::get<std::string>(*e->index) == var)
      return make_ident(e->name, Index{value});
    return e;
  }
  if (e->args.empty()) return e;
  Expr copy = *e;
  for (auto& a : copy.args) a = substitute(a, var, value);
  return std::make_shared<const Expr>(std::move(copy));
}

Sequence substitute_seq(const Sequence& s, const std::string& var, std::int64_t value) {
  Sequence out = s;
  for (auto& e : out.elements) e = substitute(e, var, value);
  return out;
}

}  // namespace

ExpandResult expand_generate(const AssertionAst& ast,
                             const std::map<std::string, std::int64_t>& parameters) {
  ExpandResult result;
  if (!ast.binding) {
    result.assertions.push_back(ast);
    return result;
  }
  const GenerateBinding& b = *ast.binding;
  std::int64_t upper;
  if (std::holds_alternative<std::int64_t>(b.upper_exclusive)) {
    upper = std::get<std::int64_t>(b.upper_exclusive);
  } else {
    const std::string& pname = std::get<std::string>(b.upper_exclusive);
    auto it = parameters.find(pname);
    if (it == parameters.end()) {
      result.diagnostics.push_back(make_error(
          "UnboundParameter",
          "generate bound '" + pname + "' is not a known module parameter",
          {0, std::max<std::size_t>(pname.size(), 1)}));
      return result;
    }
    upper = it->second;
  }
  for (std::int64_t i = b.lower; i < upper; ++i) {
    AssertionAst inst;
    inst.name = ast.name + "_" + std::to_string(i);
    inst.clock = ast.clock;
    inst.origin = ast.origin;
    inst.disable_expr = substitute(ast.disable_expr, b.loop_var, i);
    inst.body.antecedent = substitute_seq(ast.body.antecedent, b.loop_var, i);
    inst.body.impl_kind = ast.body.impl_kind;
    if (ast.body.consequent)
      inst.body.consequent = substitute_seq(*ast.body.consequent, b.loop_var, i);
    result.assertions.push_back(std::move(inst));
  }
  return result;
}

}  // namespace svagen::sva
