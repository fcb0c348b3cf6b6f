// SPDX-License-Identifier: Apache-2.0
#include "svagen/report.hpp"

#include <algorithm>
#include <sstream>

namespace svagen::report {

namespace {

constexpr const char* kNoValue = "—";  // table placeholder for absent cells

std::string cell(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string(kNoValue);
}

std::string csv_cell(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

RowResult build_row(const flow::RefinementSession& session,
                    const std::vector<sva::AssertionAst>& reference_set,
                    const std::vector<sva::AssertionAst>* alt_set,
                    const std::vector<trace::Trace>& probes,
                    const std::vector<trace::Trace>& session_traces) {
  RowResult out;
  for (const auto& a : session.assertions) {
    if (a.status == flow::AssertionStatus::Raw || a.status == flow::AssertionStatus::Failing) {
      out.diagnostics.push_back(make_error(
          "SessionIncomplete",
          "assertion '" + a.name + "' has not reached a terminal status", {0, 1}));
      return out;
    }
  }

  DesignRow row;
  row.module_name = session.design;
  row.reference_assert_count = static_cast<int>(reference_set.size());

  std::vector<sva::AssertionAst> generated;
  for (const auto& a : session.assertions)
    if (a.status == flow::AssertionStatus::Passing && a.ast) generated.push_back(*a.ast);
  row.generated_assert_count = static_cast<int>(generated.size());

  if (alt_set) {
    row.alt_assert_count = static_cast<int>(alt_set->size());
    compare::MatchResult m = compare::match_sets(generated, *alt_set, probes);
    row.common_assert_count = m.count;
    for (const auto& d : m.diagnostics)
      if (d.severity == Severity::Warning) out.diagnostics.push_back(d);
  }

  std::int64_t lo = 0, hi = 0;
  bool first = true;
  for (const auto& t : session_traces) {
    for (std::int64_t e : t.edge_times) {
      if (first || e < lo) lo = e;
      if (first || e > hi) hi = e;
      first = false;
    }
  }
  row.trace_time_span = first ? 0 : hi - lo;

  out.row = std::move(row);
  return out;
}

std::vector<IterationRow> iteration_totals(
    const std::vector<const flow::RefinementSession*>& sessions) {
  std::vector<IterationRow> out;
  for (const flow::RefinementSession* s : sessions) {
    if (!s) continue;
    IterationRow r;
    r.design = s->design;
    r.label = "generated";
    for (const auto& a : s->assertions) r.error_feedback_prompts += a.iterations_used;
    out.push_back(std::move(r));
  }
  return out;
}

std::string render_markdown(const std::vector<DesignRow>& rows) {
  std::ostringstream os;
  os << "| design | reference asserts | generated asserts | alt asserts | "
        "common asserts | trace span[^1] |\n";
  os << "| --- | --- | --- | --- | --- | --- |\n";
  for (const auto& r : rows) {
    os << "| " << r.module_name << " | " << r.reference_assert_count << " | "
       << r.generated_assert_count << " | " << cell(r.alt_assert_count) << " | "
       << cell(r.common_assert_count) << " | " << r.trace_time_span << " |\n";
  }
  os << "\n[^1]: trace span is locally measured from the supplied traces, in "
        "timescale units; it is not a simulator timing figure.\n";
  return os.str();
}

std::string render_csv(const std::vector<DesignRow>& rows) {
  std::ostringstream os;
  os << "design,reference_asserts,generated_asserts,alt_asserts,common_asserts,"
        "trace_span\n";
  for (const auto& r : rows) {
    os << r.module_name << ',' << r.reference_assert_count << ','
       << r.generated_assert_count << ',' << csv_cell(r.alt_assert_count) << ','
       << csv_cell(r.common_assert_count) << ',' << r.trace_time_span << '\n';
  }
  return os.str();
}

std::string render_iterations_csv(const std::vector<IterationRow>& rows) {
  std::ostringstream os;
  os << "design,label,error_feedback_prompts,source\n";
  for (const auto& r : rows)
    os << r.design << ',' << r.label << ',' << r.error_feedback_prompts
       << ",locally measured\n";
  return os.str();
}

}  // namespace svagen::report
