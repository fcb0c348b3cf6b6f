// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svagen/compare.hpp"
#include "svagen/flow_types.hpp"
#include "svagen/trace.hpp"

namespace svagen::report {

// One performance-table row per design. The trace span column is
// measured from the local traces and labeled as such; it is not a
// simulator timing claim.
struct DesignRow {
  std::string module_name;
  int reference_assert_count = 0;
  int generated_assert_count = 0;
  std::optional<int> alt_assert_count;
  std::optional<int> common_assert_count;  // generated vs alt, absent without alt
  std::int64_t trace_time_span = 0;        // max - min edge time, timescale units

  bool counts_sane() const {
    if (reference_assert_count < 0 || generated_assert_count < 0) return false;
    if (alt_assert_count && *alt_assert_count < 0) return false;
    if (!common_assert_count) return true;
    return *common_assert_count >= 0 && *common_assert_count <= generated_assert_count &&
           alt_assert_count && *common_assert_count <= *alt_assert_count;
  }
};

struct RowResult {
  std::optional<DesignRow> row;
  std::vector<Diagnostic> diagnostics;  // SessionIncomplete
};

// pre: every assertion in the session reached a terminal status.
// generated = passing assertions; common = match_sets(generated, alt)
// over the probe traces; the span comes from the verification traces
// the session ran against. alt_set may be null.
RowResult build_row(const flow::RefinementSession& session,
                    const std::vector<sva::AssertionAst>& reference_set,
                    const std::vector<sva::AssertionAst>* alt_set,
                    const std::vector<trace::Trace>& probes,
                    const std::vector<trace::Trace>& session_traces);

struct IterationRow {
  std::string design;
  std::string label;               // data series, e.g. "generated"
  int error_feedback_prompts = 0;  // sum of iterations_used
};

std::vector<IterationRow> iteration_totals(
    const std::vector<const flow::RefinementSession*>& sessions);

// Renderings are deterministic; markdown and CSV carry identical
// numeric cells. Absent alt columns render as an em dash placeholder in
// markdown and as empty CSV cells.
std::string render_markdown(const std::vector<DesignRow>& rows);
std::string render_csv(const std::vector<DesignRow>& rows);
std::string render_iterations_csv(const std::vector<IterationRow>& rows);

}  // namespace svagen::report
