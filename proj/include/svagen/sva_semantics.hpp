// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "svagen/diagnostics.hpp"
#include "svagen/sva_ast.hpp"
#include "svagen/verilog_extract.hpp"

namespace svagen::sva {

// Checks identifier resolution against the module inventory. Spans point
// into pretty_print(ast) of the checked assertion. Emits error UnknownSignal
// for unresolved identifiers, warning IndexOnScalar for indexing a scalar,
// warning SuspiciousReset when disable iff references no reset-role signal.
std::vector<Diagnostic> check_semantics(const AssertionAst& ast,
                                        const rtl::SignalInventory& inventory);

struct ExpandResult {
  std::vector<AssertionAst> assertions;
  std::vector<Diagnostic> diagnostics;  // UnboundParameter
};

// Instantiates a generate binding: one AST per loop index, loop variable
// substituted, name suffixed `_<index>`. Identity for unbound ASTs.
ExpandResult expand_generate(const AssertionAst& ast,
                             const std::map<std::string, std::int64_t>& parameters);

}  // namespace svagen::sva
