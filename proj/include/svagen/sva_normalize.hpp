// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "svagen/sva_ast.hpp"

namespace svagen::sva {

// Canonical form used by structural comparison: `|=>` desugared to `|->`
// with the consequent lead shifted by one, commutative &&/||/==/!= operands
// sorted by their canonical prints, double negation removed. Idempotent and
// trace-semantics preserving. Deliberately does NOT rewrite between
// `disable iff` guards and antecedent guards; those are different semantics
// and are compared behaviorally instead.
ExprPtr normalize_expr(const ExprPtr& e);
AssertionAst normalize(const AssertionAst& ast);

}  // namespace svagen::sva
