// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "svagen/sva_ast.hpp"

namespace svagen::sva {

// Stable one-way serialization for session logs and reports; the schema is
// versioned with a top-level `schema: 1` field.
std::string ast_to_json(const AssertionAst& ast);
std::string asts_to_json(const std::vector<AssertionAst>& asts);

}  // namespace svagen::sva
