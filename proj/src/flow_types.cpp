// SPDX-License-Identifier: Apache-2.0
#include "svagen/flow_types.hpp"

namespace svagen::flow {

const char* to_string(Stage s) {
  switch (s) {
    case Stage::ContextSeed: return "context_seed";
    case Stage::Spec: return "spec";
    case Stage::BlockDiagram: return "block_diagram";
    case Stage::VerilogSync: return "verilog_sync";
    case Stage::ErrorFeedback: return "error_feedback";
  }
  return "spec";
}

std::optional<Stage> stage_from_string(const std::string& s) {
  if (s == "context_seed") return Stage::ContextSeed;
  if (s == "spec") return Stage::Spec;
  if (s == "block_diagram") return Stage::BlockDiagram;
  if (s == "verilog_sync") return Stage::VerilogSync;
  if (s == "error_feedback") return Stage::ErrorFeedback;
  return std::nullopt;
}

const char* to_string(AssertionStatus s) {
  switch (s) {
    case AssertionStatus::Raw: return "raw";
    case AssertionStatus::Failing: return "failing";
    case AssertionStatus::Passing: return "passing";
    case AssertionStatus::Abandoned: return "abandoned";
    case AssertionStatus::SuspectedDesignBug: return "suspected_design_bug";
  }
  return "raw";
}

std::optional<AssertionStatus> status_from_string(const std::string& s) {
  if (s == "raw") return AssertionStatus::Raw;
  if (s == "failing") return AssertionStatus::Failing;
  if (s == "passing") return AssertionStatus::Passing;
  if (s == "abandoned") return AssertionStatus::Abandoned;
  if (s == "suspected_design_bug") return AssertionStatus::SuspectedDesignBug;
  return std::nullopt;
}

AssertionState* RefinementSession::find_assertion(const std::string& name) {
  for (auto& a : assertions)
    if (a.name == name) return &a;
  return nullptr;
}

const AssertionState* RefinementSession::find_assertion(const std::string& name) const {
  for (const auto& a : assertions)
    if (a.name == name) return &a;
  return nullptr;
}

}  // namespace svagen::flow
