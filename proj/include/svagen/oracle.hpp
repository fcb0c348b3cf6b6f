// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference evaluator. Same contract as evaluate(), derived
// directly from the semantics definition by exhaustively enumerating
// every delay placement of the antecedent and consequent. Shares no
// evaluation code with eval.cpp; the only common pieces are the AST,
// Trace, and EvalReport types plus the failure-message formatter, which
// is report assembly rather than semantics.
#pragma once

#include "svagen/eval.hpp"

namespace svagen::trace {

// pre: trace.cycles <= 8, every delay bound <= 4, at most 4 distinct
// signals referenced — enforced, violation reports InstanceTooLarge.
EvalOutcome oracle_evaluate(const sva::AssertionAst& ast, const Trace& trace);

}  // namespace svagen::trace
