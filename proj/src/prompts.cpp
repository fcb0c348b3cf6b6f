// SPDX-License-Identifier: Apache-2.0
#include "svagen/prompts.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace svagen::flow {

namespace {

std::string now_or_fixed(const RefinementSession& session) {
  if (!session.config.fixed_timestamp.empty()) return session.config.fixed_timestamp;
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

BuildResult mismatch(std::string what) {
  BuildResult r;
  r.diagnostics.push_back(make_error("PayloadMismatch", std::move(what), {}));
  return r;
}

std::string feedback_body(const ErrorFeedbackPayload& p) {
  std::ostringstream os;
  os << "Assertion '" << p.assertion_name << "' did not pass verification.\n\n";
  os << "Current assertion:\n" << p.assertion_text << "\n";
  os << "\nChecker output:\n";
  for (const auto& d : p.diagnostics) os << format_diagnostic(d) << "\n";
  if (p.report) {
    const auto& r = *p.report;
    if (r.fails > 0) {
      os << r.first_failure_message << "\n";
      os << "attempts=" << r.attempts << " passes=" << r.passes << " fails=" << r.fails
         << " vacuous=" << r.vacuous << "\n";
    } else if (r.passes == 0) {
      os << "the assertion never had a non-vacuous attempt on any trace "
            "(passes=0, fails=0); revise the antecedent so the property can "
            "be exercised\n";
    }
  }
  os << "\nAnalyze the cause of the failure, rectify it, and regenerate only "
        "this assertion. Reply with a single property/endproperty block and "
        "its assert statement.\n";
  return os.str();
}

}  // namespace

BuildResult build_prompt(Stage stage, const RefinementSession& session,
                         const PromptPayload& payload) {
  BuildResult out;
  PromptRecord rec;
  rec.stage = stage;
  rec.timestamp = now_or_fixed(session);

  if (stage == Stage::ErrorFeedback) {
    const auto* p = std::get_if<ErrorFeedbackPayload>(&payload);
    if (!p) return mismatch("error_feedback requires a structured payload");
    if (p->assertion_text.empty())
      return mismatch("error_feedback payload has no assertion text");
    bool usable_report =
        p->report && (p->report->fails > 0 || p->report->passes == 0);
    if (p->diagnostics.empty() && !usable_report)
      return mismatch("error_feedback payload carries nothing to repair");
    rec.iteration = p->iteration;
    rec.body = feedback_body(*p);
    out.prompt = std::move(rec);
    return out;
  }

  const auto* text = std::get_if<std::string>(&payload);
  if (!text) return mismatch("stage expects a text payload");

  std::ostringstream os;
  switch (stage) {
    case Stage::ContextSeed:
      os << "You are assisting with SystemVerilog assertion development for "
            "a hardware design.\n\nBackground documents:\n"
         << (text->empty() ? "(none provided)" : *text)
         << "\n\nTreat these documents as trusted context for every later "
            "request.\n";
      break;
    case Stage::Spec:
      if (text->empty()) return mismatch("spec stage requires specification text");
      os << "Design specification:\n\n"
         << *text
         << "\n\nGenerate SystemVerilog assertions (SVA) covering each "
            "behavior described above. Present every assertion as a "
            "property/endproperty block followed by its assert statement, "
            "each with a one-line English description.\n";
      break;
    case Stage::BlockDiagram:
      if (text->empty()) return mismatch("block_diagram stage requires text");
      os << "Block diagram description:\n\n"
         << *text
         << "\n\nUse this structural context when generating or revising "
            "assertions.\n";
      break;
    case Stage::VerilogSync:
      if (text->empty()) return mismatch("verilog_sync stage requires RTL source");
      os << "Here is the RTL implementation:\n\n```systemverilog\n"
         << *text
         << "```\n\nRewrite the assertions so that every signal name matches "
            "the RTL declarations exactly. Reply with the complete updated "
            "assertion list.\n";
      break;
    case Stage::ErrorFeedback:
      break;  // handled above
  }
  rec.body = os.str();
  out.prompt = std::move(rec);
  return out;
}

}  // namespace svagen::flow
