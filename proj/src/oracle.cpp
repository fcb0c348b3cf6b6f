// SPDX-License-Identifier: Apache-2.0
#include "svagen/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "svagen/sva_printer.hpp"

namespace svagen::trace {
namespace {

using sva::AssertionAst;
using sva::Expr;
using sva::ExprKind;
using sva::Sequence;

// Known/value pair; known=false is the unknown value.
struct OVal {
  bool known = false;
  std::uint64_t v = 0;
};

OVal known(std::uint64_t v) { return {true, v}; }
OVal unknown() { return {}; }
OVal truth(bool b) { return known(b ? 1 : 0); }
bool is_true(const OVal& x) { return x.known && x.v != 0; }
bool is_false(const OVal& x) { return x.known && x.v == 0; }

std::string flat_name(const Expr& e) {
  if (!e.index) return e.name;
  if (std::holds_alternative<std::int64_t>(*e.index))
    return e.name + "[" + std::to_string(std::get<std::int64_t>(*e.index)) + "]";
  return e.name + "[" + std::get<std::string>(*e.index) + "]";
}

OVal sample(const Expr& e, const Trace& t, int k);

OVal combine_and(OVal a, OVal b) {
  if (is_false(a) || is_false(b)) return truth(false);
  if (is_true(a) && is_true(b)) return truth(true);
  return unknown();
}

OVal sample(const Expr& e, const Trace& t, int k) {
  switch (e.kind) {
    case ExprKind::Ident: {
      const Value& v = t.signals.at(flat_name(e))[static_cast<std::size_t>(k)];
      return v ? known(*v) : unknown();
    }
    case ExprKind::IntLit:
      return known(static_cast<std::uint64_t>(e.value));
    case ExprKind::SymLit:
      return unknown();
    case ExprKind::Not: {
      OVal a = sample(*e.args[0], t, k);
      if (!a.known) return unknown();
      return truth(a.v == 0);
    }
    case ExprKind::And:
      return combine_and(sample(*e.args[0], t, k), sample(*e.args[1], t, k));
    case ExprKind::Or: {
      OVal a = sample(*e.args[0], t, k);
      OVal b = sample(*e.args[1], t, k);
      if (is_true(a) || is_true(b)) return truth(true);
      if (is_false(a) && is_false(b)) return truth(false);
      return unknown();
    }
    case ExprKind::Cmp: {
      OVal a = sample(*e.args[0], t, k);
      OVal b = sample(*e.args[1], t, k);
      if (!a.known || !b.known) return unknown();
      switch (e.cmp) {
        case sva::CmpOp::Eq: return truth(a.v == b.v);
        case sva::CmpOp::Ne: return truth(a.v != b.v);
        case sva::CmpOp::Lt: return truth(a.v < b.v);
        case sva::CmpOp::Le: return truth(a.v <= b.v);
        case sva::CmpOp::Gt: return truth(a.v > b.v);
        case sva::CmpOp::Ge: return truth(a.v >= b.v);
      }
      return unknown();
    }
    case ExprKind::Arith: {
      OVal a = sample(*e.args[0], t, k);
      OVal b = sample(*e.args[1], t, k);
      if (!a.known || !b.known) return unknown();
      return known(e.arith == sva::ArithOp::Add ? a.v + b.v : a.v - b.v);
    }
    case ExprKind::Past:
      if (k - e.past_depth < 0) return unknown();
      return sample(*e.args[0], t, k - e.past_depth);
    case ExprKind::Rose: {
      OVal now = sample(*e.args[0], t, k);
      OVal was = k > 0 ? sample(*e.args[0], t, k - 1) : unknown();
      OVal c1 = now.known ? truth(now.v == 1) : unknown();
      OVal c2 = was.known ? truth(was.v == 0) : unknown();
      return combine_and(c1, c2);
    }
    case ExprKind::Fell: {
      OVal now = sample(*e.args[0], t, k);
      OVal was = k > 0 ? sample(*e.args[0], t, k - 1) : unknown();
      OVal c1 = now.known ? truth(now.v == 0) : unknown();
      OVal c2 = was.known ? truth(was.v == 1) : unknown();
      return combine_and(c1, c2);
    }
    case ExprKind::Stable: {
      if (k == 0) return unknown();
      OVal now = sample(*e.args[0], t, k);
      OVal was = sample(*e.args[0], t, k - 1);
      if (!now.known || !was.known) return unknown();
      return truth(now.v == was.v);
    }
  }
  return unknown();
}

// Aggregate over every placement of a sequence from one anchor.
struct Scan {
  std::vector<int> ends;  // complete matches
  bool open = false;      // a placement left the trace with its prefix holding
  bool xblock = false;    // a placement's leftmost blocker was unknown
};

Scan scan_sequence(const Sequence& s, const Trace& t, int anchor) {
  Scan scan;
  const std::size_t m = s.elements.size();
  // Offset i precedes element i: the lead, then the inter-element delays.
  std::vector<int> lo(m), hi(m), off(m);
  lo[0] = s.lead.lo;
  hi[0] = s.lead.hi;
  for (std::size_t i = 1; i < m; ++i) {
    lo[i] = s.delays[i - 1].lo;
    hi[i] = s.delays[i - 1].hi;
  }
  off = lo;
  for (;;) {
    int c = anchor;
    bool blocked = false;
    for (std::size_t i = 0; i < m; ++i) {
      c += off[i];
      if (c >= t.cycles) {
        scan.open = true;
        blocked = true;
        break;
      }
      OVal v = sample(*s.elements[i], t, c);
      if (!is_true(v)) {
        if (!v.known) scan.xblock = true;
        blocked = true;
        break;
      }
    }
    if (!blocked) scan.ends.push_back(c);

    std::size_t i = 0;
    while (i < m && off[i] == hi[i]) ++i;
    if (i == m) break;
    ++off[i];
    while (i > 0) {
      --i;
      off[i] = lo[i];
    }
  }
  std::sort(scan.ends.begin(), scan.ends.end());
  scan.ends.erase(std::unique(scan.ends.begin(), scan.ends.end()), scan.ends.end());
  return scan;
}

int reach_hi(const Sequence& s) {
  int v = s.lead.hi;
  for (const auto& d : s.delays) v += d.hi;
  return v;
}

void gather_names(const sva::ExprPtr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == ExprKind::Ident) out.insert(flat_name(*e));
  for (const auto& a : e->args) gather_names(a, out);
}

bool delays_bounded(const Sequence& s, int cap) {
  if (s.lead.hi > cap) return false;
  for (const auto& d : s.delays)
    if (d.hi > cap) return false;
  return true;
}

}  // namespace

EvalOutcome oracle_evaluate(const AssertionAst& ast, const Trace& trace) {
  EvalOutcome out;

  std::set<std::string> names;
  gather_names(ast.disable_expr, names);
  for (const auto& e : ast.body.antecedent.elements) gather_names(e, names);
  if (ast.body.consequent)
    for (const auto& e : ast.body.consequent->elements) gather_names(e, names);

  for (const auto& n : names)
    if (!trace.signals.count(n))
      out.diagnostics.push_back(make_error(
          "SignalMissingFromTrace",
          "signal '" + n + "' referenced by assertion '" + ast.name +
              "' is missing from the trace",
          {0, 0}));
  if (!trace.signals.count(ast.clock))
    out.diagnostics.insert(
        out.diagnostics.begin(),
        make_error("SignalMissingFromTrace",
                   "signal '" + ast.clock + "' referenced by assertion '" +
                       ast.name + "' is missing from the trace",
                   {0, 0}));
  if (!out.diagnostics.empty()) return out;

  bool small = trace.cycles <= 8 && names.size() <= 4 &&
               delays_bounded(ast.body.antecedent, 4) &&
               (!ast.body.consequent || delays_bounded(*ast.body.consequent, 4));
  if (!small) {
    out.diagnostics.push_back(make_error(
        "InstanceTooLarge",
        "oracle bounds exceeded (K <= 8, delays <= 4, <= 4 signals)", {0, 0}));
    return out;
  }

  EvalReport r;
  r.assertion_name = ast.name;
  const bool impl = ast.body.impl_kind.has_value();
  const int step = impl && *ast.body.impl_kind == sva::ImplKind::NonOverlapping ? 1 : 0;

  for (int k = 0; k < trace.cycles; ++k) {
    ++r.attempts;
    Scan ante = scan_sequence(ast.body.antecedent, trace, k);

    // Resolution window: the furthest in-window cycle any placement of
    // the attempt could examine.
    int window = k + reach_hi(ast.body.antecedent);
    std::vector<std::pair<int, Scan>> duties;
    if (impl)
      for (int j : ante.ends) {
        Scan cm = scan_sequence(*ast.body.consequent, trace, j + step);
        window = std::max(window, j + step + reach_hi(*ast.body.consequent));
        duties.emplace_back(j + step, std::move(cm));
      }
    window = std::min(window, trace.cycles - 1);

    bool off = false;
    if (ast.disable_expr)
      for (int c = k; c <= window; ++c)
        if (is_true(sample(*ast.disable_expr, trace, c))) {
          off = true;
          break;
        }
    if (off) {
      ++r.disabled;
      continue;
    }

    if (!impl) {
      if (!ante.ends.empty())
        ++r.passes;
      else if (ante.open)
        ++r.incomplete;
      else {
        ++r.fails;
        r.fail_cycles.push_back(k);
        if (ante.xblock) ++r.unknown_fails;
        if (r.first_failure_message.empty())
          r.first_failure_message = format_failure_message(
              ast.name, sva::print_sequence(ast.body.antecedent), k, k);
      }
      continue;
    }

    int broken_at = -1;
    bool broken_x = false;
    bool pending = ante.open;
    for (const auto& [at, cm] : duties) {
      if (!cm.ends.empty()) continue;
      if (cm.open) {
        pending = true;
        continue;
      }
      if (broken_at < 0) {
        broken_at = at;
        broken_x = cm.xblock;
      }
    }
    if (broken_at >= 0) {
      ++r.fails;
      r.fail_cycles.push_back(k);
      if (broken_x) ++r.unknown_fails;
      if (r.first_failure_message.empty())
        r.first_failure_message = format_failure_message(
            ast.name, sva::print_sequence(*ast.body.consequent), k, broken_at);
    } else if (pending) {
      ++r.incomplete;
    } else if (ante.ends.empty()) {
      ++r.vacuous;
    } else {
      ++r.passes;
    }
  }
  out.report = std::move(r);
  return out;
}

}  // namespace svagen::trace
