// SPDX-License-Identifier: Apache-2.0
//
// Dynamic assertion evaluation over a sampled trace.
//
// An attempt starts at every cycle k in 0..K-1. For EVERY antecedent
// match ending at cycle j (matches are anchored at k), the consequent
// must have SOME match starting at j (overlapping) or j+1
// (non-overlapping). No antecedent match makes the attempt vacuous. A
// property without an implication passes iff its sequence has some
// match anchored at k.
//
// Unknown values are conservative: a condition "holds" only when it is
// definitely 1, so unknown blocks antecedent matches (toward vacuity)
// and consequent matches (toward failure).
//
// The attempt's resolution cycle is min(K-1, the largest cycle any
// placement of the antecedent, or of the consequent for a matched
// antecedent end, could reach). `disable iff` discards the attempt when
// its expression is definitely 1 at any sampled cycle in
// [k, resolution]; aborts between samples are invisible at this level.
//
// An attempt is incomplete when a verdict would need cycles >= K: some
// unrefuted placement ran off the end of the trace. Verdict precedence:
// disabled > fail > incomplete > vacuous > pass.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svagen/diagnostics.hpp"
#include "svagen/sva_ast.hpp"
#include "svagen/trace.hpp"

namespace svagen::trace {

struct EvalOutcome {
  std::optional<EvalReport> report;  // absent when diagnostics carry an error
  std::vector<Diagnostic> diagnostics;
};

// pre: ast carries no generate binding (expand first); every referenced
// signal and the clock exist in the trace, else SignalMissingFromTrace.
// Pure; distinct assertions may share one immutable Trace across
// threads.
EvalOutcome evaluate(const sva::AssertionAst& ast, const Trace& trace);

// Trace keys (name or name[i]) referenced by the assertion, disable
// expression included, sorted and deduplicated.
std::vector<std::string> referenced_keys(const sva::AssertionAst& ast);

}  // namespace svagen::trace
