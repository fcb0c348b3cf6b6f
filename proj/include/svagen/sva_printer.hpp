// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "svagen/sva_ast.hpp"

namespace svagen::sva {

// Canonical subset text; parse_assertions(pretty_print(a)) round-trips to an
// equal AST. Also the total order used for commutative sorting.
std::string print_expr(const ExprPtr& e);

std::string print_sequence(const Sequence& s);
std::string print_property(const PropertyExpr& p);

// Full declaration: property block plus assert directive, wrapped in a
// generate block when the AST carries a binding.
std::string pretty_print(const AssertionAst& ast);

// All declarations separated by blank lines; empty list prints nothing.
std::string pretty_print_all(const std::vector<AssertionAst>& asts);

}  // namespace svagen::sva
