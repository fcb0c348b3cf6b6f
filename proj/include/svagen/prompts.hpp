// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "svagen/flow_types.hpp"
#include "svagen/trace.hpp"

namespace svagen::flow {

// Payload for error_feedback prompts: the tool-reported evidence is
// embedded verbatim so the model sees exactly what the checker saw.
struct ErrorFeedbackPayload {
  std::string assertion_name;
  std::string assertion_text;
  std::vector<Diagnostic> diagnostics;
  std::optional<trace::EvalReport> report;
  int iteration = 1;
};

// Text stages (context_seed, spec, block_diagram, verilog_sync) take a
// string; error_feedback takes the structured payload.
using PromptPayload = std::variant<std::string, ErrorFeedbackPayload>;

struct BuildResult {
  std::optional<PromptRecord> prompt;
  std::vector<Diagnostic> diagnostics;  // PayloadMismatch
};

// Deterministic template instantiation (templates v1). Rejected inputs:
// empty spec or verilog_sync text, an error_feedback payload without an
// assertion text, or one carrying neither diagnostics nor a usable
// report. context_seed accepts empty material.
BuildResult build_prompt(Stage stage, const RefinementSession& session,
                         const PromptPayload& payload);

}  // namespace svagen::flow
