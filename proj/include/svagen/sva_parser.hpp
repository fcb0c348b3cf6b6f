// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "svagen/diagnostics.hpp"
#include "svagen/sva_ast.hpp"

namespace svagen::sva {

struct ParseResult {
  std::vector<AssertionAst> assertions;  // declaration order
  std::vector<Diagnostic> diagnostics;
};

// Never throws and never aborts: any byte string yields a (possibly empty)
// assertion list plus diagnostics. Malformed regions are skipped; tolerated
// nonstandard decorations (parenthesized bodies, `end property`, stray or
// unclosed parens, bare `assert property name`, `===`/`!==`, action blocks)
// parse with warnings. A property whose region produced an error diagnostic
// is not returned.
ParseResult parse_assertions(const std::string& source);

}  // namespace svagen::sva
