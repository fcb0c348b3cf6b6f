// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svagen/diagnostics.hpp"
#include "svagen/sva_ast.hpp"
#include "svagen/verilog_extract.hpp"

namespace svagen::flow {

enum class Stage { ContextSeed, Spec, BlockDiagram, VerilogSync, ErrorFeedback };

const char* to_string(Stage s);
std::optional<Stage> stage_from_string(const std::string& s);

struct PromptRecord {
  Stage stage = Stage::ContextSeed;
  std::string body;
  // 0 for every stage except error_feedback, whose iterations count from
  // 1 per repaired assertion.
  int iteration = 0;
  std::string timestamp;
};

struct LlmResponse {
  std::string raw;
  std::vector<std::string> extracted_blocks;  // contiguous substrings of raw
  std::string backend_id;
};

// raw -> {failing, passing}; failing -> {failing, passing, abandoned,
// suspected_design_bug}; passing and abandoned are terminal.
enum class AssertionStatus { Raw, Failing, Passing, Abandoned, SuspectedDesignBug };

const char* to_string(AssertionStatus s);
std::optional<AssertionStatus> status_from_string(const std::string& s);

struct AssertionState {
  std::string name;  // session key, fixed at registration
  std::string text;  // current candidate text, quoted in repair prompts
  std::optional<sva::AssertionAst> ast;  // absent while the text does not parse
  std::vector<Diagnostic> parse_diagnostics;  // from the last failed parse
  AssertionStatus status = AssertionStatus::Raw;
  int iterations_used = 0;
};

enum class BackendKind { Http, Replay };

struct SessionConfig {
  int max_iterations = 5;  // >= 1
  BackendKind backend = BackendKind::Replay;
  bool interactive_confirm = false;

  // http backend; the credential is read from the named environment
  // variable and checked before any network activity.
  std::string endpoint;
  std::string model = "gpt-4";
  std::string credential_env = "SVAGEN_API_KEY";
  long token_budget = 128000;  // approximate tokens (chars/4)

  // replay backend
  std::string fixture_dir;

  // Session log (JSON lines, append-only). Empty disables persistence.
  std::string log_path;

  // Module chosen from multi-module RTL; empty takes the file's first.
  std::string select_module;

  // Generate-loop parameter overrides; RTL parameters fill the rest.
  std::map<std::string, std::int64_t> parameters;

  // Stage payloads owned by configuration rather than the caller.
  std::string context_docs;   // context_seed body material
  std::string block_diagram;  // empty skips the optional stage

  // Fixed timestamp for reproducible logs; empty uses the wall clock.
  std::string fixed_timestamp;
};

struct RefinementSession {
  std::string design;
  rtl::SignalInventory inventory;
  std::vector<std::pair<PromptRecord, LlmResponse>> history;
  std::vector<AssertionState> assertions;  // registration order
  SessionConfig config;

  AssertionState* find_assertion(const std::string& name);
  const AssertionState* find_assertion(const std::string& name) const;
};

}  // namespace svagen::flow
