// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svagen/flow_types.hpp"
#include "svagen/llm_backend.hpp"
#include "svagen/prompts.hpp"
#include "svagen/trace.hpp"

namespace svagen::flow {

struct QueryResult {
  std::optional<LlmResponse> response;
  std::vector<Diagnostic> diagnostics;  // backend errors, ContextOverflow
};

// Sends the prompt with the full conversation history. On success the
// (prompt, response) pair is appended to session.history. The history
// size estimate is checked against config.token_budget first; overflow
// is reported, never silently truncated.
QueryResult query_llm(RefinementSession& session, const PromptRecord& prompt,
                      LlmBackend& backend);

// Fenced code blocks first; otherwise property...endproperty spans
// (tolerant of `end property`). Possibly empty. Every block is a
// contiguous substring of response.raw.
std::vector<std::string> extract_sva(const LlmResponse& response);

enum class FailureClass { Syntax, UnknownSignal, SemanticFail, SuspectedDesignBug, Clean };
const char* to_string(FailureClass c);

// Precedence: non-UnknownSignal error -> Syntax; UnknownSignal ->
// UnknownSignal; fails>0 -> SemanticFail, or SuspectedDesignBug when a
// reference marks the same behavior expected-pass; else Clean.
FailureClass classify_failure(const std::vector<Diagnostic>& diags,
                              const trace::EvalReport* report,
                              bool reference_expects_pass = false);

// Semantic check + generate expansion + evaluation over every trace.
struct Assessment {
  std::vector<Diagnostic> diagnostics;
  std::vector<trace::EvalReport> reports;  // instance-major, trace-minor
  int instances = 0;

  const trace::EvalReport* first_failing() const;
  // fails==0 everywhere, no error diagnostics, and every instance saw
  // at least one non-vacuous pass on some trace. Vacuity-only is not a
  // pass.
  bool really_passes() const;
};

Assessment assess_assertion(const sva::AssertionAst& ast,
                            const rtl::SignalInventory& inventory,
                            const std::map<std::string, std::int64_t>& parameters,
                            const std::vector<trace::Trace>& traces);

// Streams for the interactive_confirm gate; null uses std::cin/cout.
struct SessionIo {
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
};

struct SessionResult {
  RefinementSession session;
  std::vector<Diagnostic> diagnostics;  // aborting errors, already persisted
};

// Runs the full pipeline: context_seed, spec, optional block_diagram,
// one-time verilog_sync (assertions are harvested from its response),
// then per-assertion repair rounds capped by config.max_iterations.
// The session is persisted to config.log_path after every stage.
SessionResult run_session(const std::string& spec_text, const std::string& rtl_text,
                          const std::vector<trace::Trace>& traces,
                          const SessionConfig& config, LlmBackend& backend,
                          const SessionIo& io = {});

// Continues from the last snapshot in config.log_path: completed stages
// are skipped and the backend cursor advances past consumed responses.
// Falls back to a fresh run when the log holds no snapshot.
SessionResult resume_session(const std::string& spec_text, const std::string& rtl_text,
                             const std::vector<trace::Trace>& traces,
                             const SessionConfig& config, LlmBackend& backend,
                             const SessionIo& io = {});

// One-line JSON snapshot of the session (schema 1), and its inverse.
// Loading recomputes extracted blocks and reparses assertion texts;
// inventory and config come from the caller, not the log.
std::string session_snapshot_json(const RefinementSession& session);
std::optional<RefinementSession> load_session_snapshot(const std::string& log_path,
                                                       std::vector<Diagnostic>& diags);

}  // namespace svagen::flow
