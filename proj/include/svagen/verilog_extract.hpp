// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svagen/diagnostics.hpp"

namespace svagen::rtl {

enum class Direction { Input, Output, Inout, Internal };
enum class RoleHint { Clock, Reset, Data, Unknown };

const char* to_string(Direction d);
const char* to_string(RoleHint r);

struct SignalDecl {
  std::string name;
  Direction direction = Direction::Internal;
  std::uint32_t width = 1;  // bits per element
  bool is_array = false;
  std::uint32_t array_elems = 1;  // meaningful only when is_array
  RoleHint role_hint = RoleHint::Data;

  bool operator==(const SignalDecl&) const = default;
};

struct SignalInventory {
  std::string module_name;
  std::vector<SignalDecl> signals;  // ports first, then internals, in source order
  std::map<std::string, std::int64_t> parameters;

  bool operator==(const SignalInventory&) const = default;
  const SignalDecl* find(const std::string& name) const;
};

struct RoleConfig {
  std::vector<std::string> clock_globs = {"clk*", "*_clk", "clk_i"};
  std::vector<std::string> reset_globs = {"rst*", "*rst_n*", "rst_ni"};
};

struct ExtractOptions {
  RoleConfig roles;
  std::optional<std::string> select_module;  // default: first module in the file
};

struct ExtractResult {
  std::optional<SignalInventory> inventory;  // absent on fatal parse error
  std::vector<Diagnostic> diagnostics;
};

// Clock globs are checked before reset globs; anything else is data.
RoleHint infer_role(const std::string& name, const RoleConfig& config);

// Declaration-level extraction: module header, ports, parameters, and
// net/variable declarations. Procedural bodies are skipped by token-level
// block matching.
ExtractResult extract_signals(const std::string& source, const ExtractOptions& options = {});

// Emits the inventory as a declaration skeleton; re-extracting the emitted
// text yields an equal inventory.
std::string print_inventory(const SignalInventory& inv);

// Stable field order, suitable for prompts and the CLI.
std::string inventory_to_json(const SignalInventory& inv);

}  // namespace svagen::rtl
