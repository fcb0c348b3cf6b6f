// SPDX-License-Identifier: Apache-2.0
#include "svagen/eval.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "svagen/sva_printer.hpp"

namespace svagen::trace {
namespace {

using sva::AssertionAst;
using sva::Expr;
using sva::ExprKind;
using sva::Sequence;

std::string ident_key(const Expr& e) {
  std::string key = e.name;
  if (e.index) {
    key += '[';
    if (std::holds_alternative<std::int64_t>(*e.index))
      key += std::to_string(std::get<std::int64_t>(*e.index));
    else
      key += std::get<std::string>(*e.index);
    key += ']';
  }
  return key;
}

void collect_keys(const sva::ExprPtr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == ExprKind::Ident) out.insert(ident_key(*e));
  for (const auto& a : e->args) collect_keys(a, out);
}

// Three-valued expression evaluation at cycle k; nullopt is unknown.
Value eval_expr(const Expr& e, const Trace& t, int k) {
  switch (e.kind) {
    case ExprKind::Ident:
      return t.signals.at(ident_key(e))[static_cast<std::size_t>(k)];
    case ExprKind::IntLit:
      return Value{static_cast<std::uint64_t>(e.value)};
    case ExprKind::SymLit:
      // Symbolic state labels have no trace encoding.
      return std::nullopt;
    case ExprKind::Not: {
      Value v = eval_expr(*e.args[0], t, k);
      if (!v) return std::nullopt;
      return Value{*v != 0 ? 0u : 1u};
    }
    case ExprKind::And: {
      Value a = eval_expr(*e.args[0], t, k);
      Value b = eval_expr(*e.args[1], t, k);
      if ((a && *a == 0) || (b && *b == 0)) return Value{0};
      if (a && b) return Value{1};
      return std::nullopt;
    }
    case ExprKind::Or: {
      Value a = eval_expr(*e.args[0], t, k);
      Value b = eval_expr(*e.args[1], t, k);
      if ((a && *a != 0) || (b && *b != 0)) return Value{1};
      if (a && b) return Value{0};
      return std::nullopt;
    }
    case ExprKind::Cmp: {
      Value a = eval_expr(*e.args[0], t, k);
      Value b = eval_expr(*e.args[1], t, k);
      if (!a || !b) return std::nullopt;
      bool r = false;
      switch (e.cmp) {
        case sva::CmpOp::Eq: r = *a == *b; break;
        case sva::CmpOp::Ne: r = *a != *b; break;
        case sva::CmpOp::Lt: r = *a < *b; break;
        case sva::CmpOp::Le: r = *a <= *b; break;
        case sva::CmpOp::Gt: r = *a > *b; break;
        case sva::CmpOp::Ge: r = *a >= *b; break;
      }
      return Value{r ? 1u : 0u};
    }
    case ExprKind::Arith: {
      Value a = eval_expr(*e.args[0], t, k);
      Value b = eval_expr(*e.args[1], t, k);
      if (!a || !b) return std::nullopt;
      return Value{e.arith == sva::ArithOp::Add ? *a + *b : *a - *b};
    }
    case ExprKind::Past: {
      int at = k - e.past_depth;
      if (at < 0) return std::nullopt;  // out of history
      return eval_expr(*e.args[0], t, at);
    }
    case ExprKind::Rose: {
      Value now = eval_expr(*e.args[0], t, k);
      Value prev = k >= 1 ? eval_expr(*e.args[0], t, k - 1) : std::nullopt;
      Value c1 = now ? Value{*now == 1 ? 1u : 0u} : std::nullopt;
      Value c2 = prev ? Value{*prev == 0 ? 1u : 0u} : std::nullopt;
      if ((c1 && *c1 == 0) || (c2 && *c2 == 0)) return Value{0};
      if (c1 && c2) return Value{1};
      return std::nullopt;
    }
    case ExprKind::Fell: {
      Value now = eval_expr(*e.args[0], t, k);
      Value prev = k >= 1 ? eval_expr(*e.args[0], t, k - 1) : std::nullopt;
      Value c1 = now ? Value{*now == 0 ? 1u : 0u} : std::nullopt;
      Value c2 = prev ? Value{*prev == 1 ? 1u : 0u} : std::nullopt;
      if ((c1 && *c1 == 0) || (c2 && *c2 == 0)) return Value{0};
      if (c1 && c2) return Value{1};
      return std::nullopt;
    }
    case ExprKind::Stable: {
      if (k < 1) return std::nullopt;
      Value now = eval_expr(*e.args[0], t, k);
      Value prev = eval_expr(*e.args[0], t, k - 1);
      if (!now || !prev) return std::nullopt;
      return Value{*now == *prev ? 1u : 0u};
    }
  }
  return std::nullopt;
}

bool holds(const Value& v) { return v.has_value() && *v != 0; }

struct SeqOutcome {
  std::vector<int> ends;  // complete match end cycles, ascending
  bool truncated = false;  // an unrefuted placement ran past the trace
  bool u_blocked = false;  // a reachable element evaluated unknown
};

// Frontier search over (element, cycle) states; equivalent to
// enumerating every delay placement but deduplicated.
class SeqMatcher {
 public:
  SeqMatcher(const Sequence& s, const Trace& t) : s_(s), t_(t) {}

  SeqOutcome run(int anchor) {
    for (int off = s_.lead.lo; off <= s_.lead.hi; ++off) place(0, anchor + off);
    std::sort(out_.ends.begin(), out_.ends.end());
    return std::move(out_);
  }

 private:
  void place(std::size_t i, int c) {
    if (c >= t_.cycles) {
      out_.truncated = true;
      return;
    }
    if (!seen_.insert({i, c}).second) return;
    Value v = eval_expr(*s_.elements[i], t_, c);
    if (!holds(v)) {
      if (!v) out_.u_blocked = true;
      return;
    }
    if (i + 1 == s_.elements.size()) {
      out_.ends.push_back(c);
      return;
    }
    for (int d = s_.delays[i].lo; d <= s_.delays[i].hi; ++d) place(i + 1, c + d);
  }

  const Sequence& s_;
  const Trace& t_;
  std::set<std::pair<std::size_t, int>> seen_;
  SeqOutcome out_;
};

int span_hi(const Sequence& s) {
  int v = s.lead.hi;
  for (const auto& d : s.delays) v += d.hi;
  return v;
}

}  // namespace

std::vector<std::string> referenced_keys(const AssertionAst& ast) {
  std::set<std::string> keys;
  collect_keys(ast.disable_expr, keys);
  for (const auto& e : ast.body.antecedent.elements) collect_keys(e, keys);
  if (ast.body.consequent)
    for (const auto& e : ast.body.consequent->elements) collect_keys(e, keys);
  return {keys.begin(), keys.end()};
}

EvalOutcome evaluate(const AssertionAst& ast, const Trace& trace) {
  EvalOutcome out;
  std::vector<std::string> need = referenced_keys(ast);
  need.insert(need.begin(), ast.clock);
  for (const auto& key : need)
    if (!trace.signals.count(key))
      out.diagnostics.push_back(make_error(
          "SignalMissingFromTrace",
          "signal '" + key + "' referenced by assertion '" + ast.name +
              "' is missing from the trace",
          {0, 0}));
  if (!out.diagnostics.empty()) return out;

  EvalReport r;
  r.assertion_name = ast.name;
  const int K = trace.cycles;
  const Sequence& ante = ast.body.antecedent;
  const bool has_impl = ast.body.impl_kind.has_value();
  const int shift = has_impl && *ast.body.impl_kind == sva::ImplKind::NonOverlapping ? 1 : 0;

  for (int k = 0; k < K; ++k) {
    ++r.attempts;
    SeqOutcome am = SeqMatcher(ante, trace).run(k);

    struct Obligation {
      int check_cycle;
      SeqOutcome cm;
    };
    std::vector<Obligation> obls;
    int resolution = std::max(k, k + span_hi(ante));
    if (has_impl) {
      for (int j : am.ends) {
        int at = j + shift;
        obls.push_back({at, SeqMatcher(*ast.body.consequent, trace).run(at)});
        resolution = std::max(resolution, at + span_hi(*ast.body.consequent));
      }
    }
    resolution = std::min(resolution, K - 1);

    bool is_disabled = false;
    if (ast.disable_expr)
      for (int c = k; c <= resolution && !is_disabled; ++c)
        is_disabled = holds(eval_expr(*ast.disable_expr, trace, c));
    if (is_disabled) {
      ++r.disabled;
      continue;
    }

    if (has_impl) {
      const Obligation* violated = nullptr;
      bool unresolved = false;
      for (const auto& o : obls) {
        if (!o.cm.ends.empty()) continue;  // satisfied
        if (o.cm.truncated)
          unresolved = true;
        else if (!violated)
          violated = &o;
      }
      if (violated) {
        ++r.fails;
        r.fail_cycles.push_back(k);
        if (violated->cm.u_blocked) ++r.unknown_fails;
        if (r.first_failure_message.empty())
          r.first_failure_message = format_failure_message(
              ast.name, sva::print_sequence(*ast.body.consequent), k,
              violated->check_cycle);
      } else if (unresolved || am.truncated) {
        ++r.incomplete;
      } else if (am.ends.empty()) {
        ++r.vacuous;
      } else {
        ++r.passes;
      }
    } else {
      if (!am.ends.empty()) {
        ++r.passes;
      } else if (am.truncated) {
        ++r.incomplete;
      } else {
        ++r.fails;
        r.fail_cycles.push_back(k);
        if (am.u_blocked) ++r.unknown_fails;
        if (r.first_failure_message.empty())
          r.first_failure_message =
              format_failure_message(ast.name, sva::print_sequence(ante), k, k);
      }
    }
  }
  out.report = std::move(r);
  return out;
}

}  // namespace svagen::trace
