// SPDX-License-Identifier: Apache-2.0
//
// Refinement session driver. The stage to run next is always derived
// from the persisted history, never from an in-memory phase marker, so
// a session resumed from its log continues exactly where it stopped.
#include "svagen/session.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "svagen/eval.hpp"
#include "svagen/sva_parser.hpp"
#include "svagen/sva_printer.hpp"
#include "svagen/sva_semantics.hpp"
#include "svagen/util.hpp"

namespace svagen::flow {

namespace {

using nlohmann::ordered_json;

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

// Fenced blocks: body between a ```-prefixed line (tag ignored) and the
// next ``` fence.
std::vector<std::string> fenced_blocks(const std::string& raw) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t open = raw.find("```", pos);
    if (open == std::string::npos) break;
    std::size_t body = raw.find('\n', open);
    if (body == std::string::npos) break;
    ++body;
    std::size_t close = raw.find("```", body);
    if (close == std::string::npos) break;
    out.push_back(raw.substr(body, close - body));
    pos = raw.find('\n', close);
    if (pos == std::string::npos) break;
  }
  return out;
}

// property...endproperty spans, tolerant of the split `end property`
// form. Skips the keyword inside `assert property`.
std::vector<std::string> property_spans(const std::string& raw) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t start = raw.find("property", pos);
    if (start == std::string::npos) break;
    bool word_start = start == 0 || !is_word_char(raw[start - 1]);
    bool word_end = start + 8 >= raw.size() || !is_word_char(raw[start + 8]);
    if (!word_start || !word_end) {
      pos = start + 8;
      continue;
    }
    // `assert property (...)` is a directive, not a declaration.
    std::size_t before = start;
    while (before > 0 && std::isspace(static_cast<unsigned char>(raw[before - 1]))) --before;
    if (before >= 6 && raw.compare(before - 6, 6, "assert") == 0) {
      pos = start + 8;
      continue;
    }
    std::size_t joined = raw.find("endproperty", start);
    std::size_t split = std::string::npos;
    for (std::size_t e = raw.find("end", start); e != std::string::npos;
         e = raw.find("end", e + 3)) {
      if (e > 0 && is_word_char(raw[e - 1])) continue;
      std::size_t after = e + 3;
      while (after < raw.size() && std::isspace(static_cast<unsigned char>(raw[after])))
        ++after;
      if (raw.compare(after, 8, "property") == 0 && after > e + 3) {
        split = after + 8;
        break;
      }
    }
    std::size_t end;
    if (joined != std::string::npos && (split == std::string::npos || joined + 11 <= split))
      end = joined + 11;
    else if (split != std::string::npos)
      end = split;
    else
      break;
    out.push_back(raw.substr(start, end - start));
    pos = end;
  }
  return out;
}

std::vector<std::string> extract_blocks(const std::string& raw) {
  auto fenced = fenced_blocks(raw);
  if (!fenced.empty()) return fenced;
  return property_spans(raw);
}

std::string join_blocks(const std::vector<std::string>& blocks) {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += "\n";
    out += b;
    if (out.empty() || out.back() != '\n') out += "\n";
  }
  return out;
}

ordered_json config_json(const SessionConfig& c) {
  ordered_json j;
  j["max_iterations"] = c.max_iterations;
  j["backend"] = c.backend == BackendKind::Http ? "http" : "replay";
  j["interactive_confirm"] = c.interactive_confirm;
  if (!c.select_module.empty()) j["select_module"] = c.select_module;
  j["model"] = c.model;
  j["token_budget"] = c.token_budget;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : c.parameters) params[k] = v;
  j["parameters"] = params;
  return j;
}

// Applies a parsed LLM reply to an assertion slot. An unparseable reply
// is kept as raw text with its errors so the next round classifies it
// as a syntax failure and feeds the diagnostics back.
void apply_reply(AssertionState& st, const LlmResponse& resp) {
  std::string text = resp.extracted_blocks.empty() ? resp.raw
                                                   : join_blocks(resp.extracted_blocks);
  sva::ParseResult parsed = sva::parse_assertions(text);
  if (!parsed.assertions.empty()) {
    st.ast = parsed.assertions.front();
    st.text = sva::pretty_print(*st.ast);
    st.parse_diagnostics.clear();
    return;
  }
  st.ast.reset();
  st.text = text;
  st.parse_diagnostics.clear();
  for (const auto& d : parsed.diagnostics)
    if (d.severity == Severity::Error) st.parse_diagnostics.push_back(d);
  if (st.parse_diagnostics.empty())
    st.parse_diagnostics.push_back(
        make_error("SyntaxError", "reply contained no parseable assertion", {0, 1}));
}

class Runner {
 public:
  Runner(const std::vector<trace::Trace>& traces, LlmBackend& backend, const SessionIo& io)
      : traces_(traces), backend_(backend) {
    in_ = io.in ? io.in : &std::cin;
    out_ = io.out ? io.out : &std::cout;
  }

  SessionResult run(const std::string& spec_text, const std::string& rtl_text,
                    const SessionConfig& config, bool resume) {
    s_.config = config;
    rtl_text_ = rtl_text;
    spec_text_ = spec_text;

    rtl::ExtractOptions ex_opts;
    if (!config.select_module.empty()) ex_opts.select_module = config.select_module;
    auto extracted = rtl::extract_signals(rtl_text, ex_opts);
    if (!extracted.inventory) {
      for (const auto& d : extracted.diagnostics) fatal_.push_back(d);
      fatal_.push_back(make_error("ExtractFailed",
                                  "could not build a signal inventory from the RTL", {0, 1}));
      return finish();
    }
    s_.inventory = *extracted.inventory;
    s_.design = s_.inventory.module_name;
    if (traces_.empty()) {
      fatal_.push_back(make_error("EmptyTraceList",
                                  "at least one trace is required for verification", {0, 1}));
      return finish();
    }

    // RTL parameters seed generate expansion; explicit config overrides win.
    std::map<std::string, std::int64_t> merged = s_.inventory.parameters;
    for (const auto& [k, v] : config.parameters) merged[k] = v;
    s_.config.parameters = merged;

    if (resume) {
      std::vector<Diagnostic> load_diags;
      if (auto prior = load_session_snapshot(config.log_path, load_diags)) {
        s_.history = prior->history;
        s_.assertions = prior->assertions;
        backend_.skip(s_.history.size());
      }
      for (const auto& d : load_diags) fatal_.push_back(d);
      if (has_errors(fatal_)) return finish();
    }

    if (!s_.config.log_path.empty()) {
      log_.open(s_.config.log_path, std::ios::app);
      if (!log_) {
        fatal_.push_back(make_error("LogUnwritable",
                                    "cannot open log file '" + s_.config.log_path + "'",
                                    {0, 1}));
        return finish();
      }
    }

    while (!has_errors(fatal_)) {
      Stage next;
      if (!next_stage(next)) break;
      run_stage(next);
    }
    return finish();
  }

 private:
  // History is the single source of truth for pipeline position.
  bool next_stage(Stage& out) {
    if (s_.history.empty()) {
      out = Stage::ContextSeed;
      return true;
    }
    switch (s_.history.back().first.stage) {
      case Stage::ContextSeed:
        out = Stage::Spec;
        return true;
      case Stage::Spec:
        out = s_.config.block_diagram.empty() ? Stage::VerilogSync : Stage::BlockDiagram;
        return true;
      case Stage::BlockDiagram:
        out = Stage::VerilogSync;
        return true;
      case Stage::VerilogSync:
      case Stage::ErrorFeedback:
        out = Stage::ErrorFeedback;
        return repair_pending();
    }
    return false;
  }

  bool repair_pending() const {
    for (const auto& st : s_.assertions)
      if (st.status == AssertionStatus::Raw || st.status == AssertionStatus::Failing)
        return true;
    return false;
  }

  void run_stage(Stage stage) {
    switch (stage) {
      case Stage::ContextSeed:
        simple_stage(Stage::ContextSeed, s_.config.context_docs);
        break;
      case Stage::Spec:
        simple_stage(Stage::Spec, spec_text_);
        break;
      case Stage::BlockDiagram:
        simple_stage(Stage::BlockDiagram, s_.config.block_diagram);
        break;
      case Stage::VerilogSync:
        verilog_sync_stage();
        break;
      case Stage::ErrorFeedback:
        repair_round();
        break;
    }
  }

  void simple_stage(Stage stage, const std::string& payload) {
    auto built = build_prompt(stage, s_, payload);
    for (const auto& d : built.diagnostics) fatal_.push_back(d);
    if (!built.prompt) return;
    if (!send(*built.prompt)) return;
    snapshot();
  }

  void verilog_sync_stage() {
    auto built = build_prompt(Stage::VerilogSync, s_, rtl_text_);
    for (const auto& d : built.diagnostics) fatal_.push_back(d);
    if (!built.prompt) return;
    if (!send(*built.prompt)) return;

    const LlmResponse& resp = s_.history.back().second;
    std::string joined = join_blocks(resp.extracted_blocks);
    sva::ParseResult parsed = sva::parse_assertions(joined);
    for (const auto& ast : parsed.assertions) {
      if (s_.find_assertion(ast.name)) continue;  // first declaration wins
      AssertionState st;
      st.name = ast.name;
      st.ast = ast;
      st.text = sva::pretty_print(ast);
      st.status = AssertionStatus::Raw;
      s_.assertions.push_back(std::move(st));
      log_status(s_.assertions.back());
    }
    if (s_.assertions.empty())
      fatal_.push_back(make_error("NoAssertionsExtracted",
                                  "the sync reply contained no parseable assertions", {0, 1}));
    snapshot();
  }

  void repair_round() {
    for (auto& st : s_.assertions) {
      if (st.status == AssertionStatus::Passing || st.status == AssertionStatus::Abandoned ||
          st.status == AssertionStatus::SuspectedDesignBug)
        continue;
      repair_one(st);
      if (has_errors(fatal_)) return;
    }
  }

  void repair_one(AssertionState& st) {
    while (true) {
      Assessment a;
      if (st.ast) {
        a = assess_assertion(*st.ast, s_.inventory, s_.config.parameters, traces_);
      } else {
        a.diagnostics = st.parse_diagnostics;
      }
      FailureClass cls = classify_failure(a.diagnostics, a.first_failing());
      if (cls == FailureClass::Clean && a.really_passes()) {
        set_status(st, AssertionStatus::Passing);
        return;
      }
      if (cls == FailureClass::SuspectedDesignBug) {
        set_status(st, AssertionStatus::SuspectedDesignBug);
        return;
      }
      if (st.status == AssertionStatus::Raw) set_status(st, AssertionStatus::Failing);
      if (st.iterations_used >= s_.config.max_iterations) {
        set_status(st, AssertionStatus::Abandoned);
        return;
      }

      ErrorFeedbackPayload payload;
      payload.assertion_name = st.name;
      payload.assertion_text = st.text;
      payload.diagnostics = a.diagnostics;
      payload.iteration = st.iterations_used + 1;
      if (const trace::EvalReport* failing = a.first_failing()) {
        payload.report = *failing;
      } else {
        // Vacuity-only evidence: some instance never fired.
        for (const auto& r : a.reports)
          if (r.passes == 0) {
            payload.report = r;
            break;
          }
      }

      auto built = build_prompt(Stage::ErrorFeedback, s_, payload);
      for (const auto& d : built.diagnostics) fatal_.push_back(d);
      if (!built.prompt) return;
      if (s_.config.interactive_confirm && !confirm(*built.prompt)) {
        set_status(st, AssertionStatus::Abandoned);
        return;
      }
      if (!send(*built.prompt)) return;
      st.iterations_used = payload.iteration;
      apply_reply(st, s_.history.back().second);
      snapshot();
    }
  }

  // Returns false when the operator vetoed the prompt; any other reply
  // line replaces the prompt body before sending.
  bool confirm(PromptRecord& prompt) {
    (*out_) << "proposed repair prompt (iteration " << prompt.iteration << "):\n";
    (*out_) << "---\n" << prompt.body << "\n---\n";
    (*out_) << "send? [Y/n/replacement text]: " << std::flush;
    std::string line;
    if (!std::getline(*in_, line)) return true;
    if (line == "n" || line == "N") return false;
    if (!line.empty() && line != "y" && line != "Y") prompt.body = line;
    return true;
  }

  bool send(const PromptRecord& prompt) {
    QueryResult q = query_llm(s_, prompt, backend_);
    if (!q.response) {
      for (const auto& d : q.diagnostics) fatal_.push_back(d);
      return false;
    }
    log_prompt(s_.history.back().first);
    log_response(s_.history.back().second);
    return true;
  }

  void set_status(AssertionState& st, AssertionStatus next) {
    st.status = next;
    log_status(st);
  }

  void log_line(const ordered_json& j) {
    if (!log_.is_open()) return;
    log_ << j.dump() << "\n" << std::flush;
  }

  void log_prompt(const PromptRecord& p) {
    ordered_json j;
    j["schema"] = 1;
    j["type"] = "prompt";
    j["stage"] = to_string(p.stage);
    j["iteration"] = p.iteration;
    j["timestamp"] = p.timestamp;
    j["body"] = p.body;
    log_line(j);
  }

  void log_response(const LlmResponse& r) {
    ordered_json j;
    j["schema"] = 1;
    j["type"] = "response";
    j["backend"] = r.backend_id;
    j["blocks"] = r.extracted_blocks.size();
    j["raw"] = r.raw;
    log_line(j);
  }

  void log_status(const AssertionState& st) {
    ordered_json j;
    j["schema"] = 1;
    j["type"] = "status";
    j["assertion"] = st.name;
    j["status"] = to_string(st.status);
    j["iterations_used"] = st.iterations_used;
    log_line(j);
  }

  void snapshot() {
    if (!log_.is_open()) return;
    log_ << session_snapshot_json(s_) << "\n" << std::flush;
  }

  SessionResult finish() {
    snapshot();
    SessionResult out;
    out.session = std::move(s_);
    out.diagnostics = std::move(fatal_);
    return out;
  }

  const std::vector<trace::Trace>& traces_;
  LlmBackend& backend_;
  std::istream* in_ = nullptr;
  std::ostream* out_ = nullptr;
  RefinementSession s_;
  std::vector<Diagnostic> fatal_;
  std::ofstream log_;
  std::string rtl_text_;
  std::string spec_text_;
};

}  // namespace

QueryResult query_llm(RefinementSession& session, const PromptRecord& prompt,
                      LlmBackend& backend) {
  QueryResult out;
  std::size_t chars = prompt.body.size();
  for (const auto& [p, r] : session.history) chars += p.body.size() + r.raw.size();
  // Rough 4-chars-per-token estimate; overflow is an error, the
  // conversation is never silently truncated.
  if (chars / 4 > static_cast<std::size_t>(session.config.token_budget)) {
    out.diagnostics.push_back(make_error(
        "ContextOverflow",
        "conversation estimate " + std::to_string(chars / 4) + " tokens exceeds budget " +
            std::to_string(session.config.token_budget),
        {0, 1}));
    return out;
  }
  LlmBackend::Result r = backend.complete(session, prompt);
  if (!r.text) {
    if (r.error) out.diagnostics.push_back(*r.error);
    return out;
  }
  LlmResponse resp;
  resp.raw = *r.text;
  resp.extracted_blocks = extract_blocks(resp.raw);
  resp.backend_id = backend.id();
  session.history.emplace_back(prompt, resp);
  out.response = std::move(resp);
  return out;
}

std::vector<std::string> extract_sva(const LlmResponse& response) {
  return extract_blocks(response.raw);
}

const char* to_string(FailureClass c) {
  switch (c) {
    case FailureClass::Syntax: return "syntax";
    case FailureClass::UnknownSignal: return "unknown_signal";
    case FailureClass::SemanticFail: return "semantic_fail";
    case FailureClass::SuspectedDesignBug: return "suspected_design_bug";
    case FailureClass::Clean: return "clean";
  }
  return "clean";
}

FailureClass classify_failure(const std::vector<Diagnostic>& diags,
                              const trace::EvalReport* report,
                              bool reference_expects_pass) {
  bool unknown_signal = false;
  for (const auto& d : diags) {
    if (d.severity != Severity::Error) continue;
    if (d.code == "UnknownSignal")
      unknown_signal = true;
    else
      return FailureClass::Syntax;
  }
  if (unknown_signal) return FailureClass::UnknownSignal;
  if (report && report->fails > 0)
    return reference_expects_pass ? FailureClass::SuspectedDesignBug
                                  : FailureClass::SemanticFail;
  return FailureClass::Clean;
}

const trace::EvalReport* Assessment::first_failing() const {
  for (const auto& r : reports)
    if (r.fails > 0) return &r;
  return nullptr;
}

bool Assessment::really_passes() const {
  if (has_errors(diagnostics) || instances == 0 || reports.empty()) return false;
  int per_instance = static_cast<int>(reports.size()) / instances;
  for (int i = 0; i < instances; ++i) {
    int passes = 0;
    for (int t = 0; t < per_instance; ++t) {
      const trace::EvalReport& r = reports[static_cast<std::size_t>(i * per_instance + t)];
      if (r.fails > 0) return false;
      passes += r.passes;
    }
    if (passes == 0) return false;  // vacuity-only is not a pass
  }
  return true;
}

Assessment assess_assertion(const sva::AssertionAst& ast,
                            const rtl::SignalInventory& inventory,
                            const std::map<std::string, std::int64_t>& parameters,
                            const std::vector<trace::Trace>& traces) {
  Assessment out;
  auto sem = sva::check_semantics(ast, inventory);
  for (const auto& d : sem) out.diagnostics.push_back(d);
  if (has_errors(out.diagnostics)) return out;

  sva::ExpandResult expanded = sva::expand_generate(ast, parameters);
  for (const auto& d : expanded.diagnostics) out.diagnostics.push_back(d);
  if (has_errors(out.diagnostics)) return out;

  out.instances = static_cast<int>(expanded.assertions.size());
  for (const auto& inst : expanded.assertions) {
    for (const auto& tr : traces) {
      trace::EvalOutcome o = trace::evaluate(inst, tr);
      for (const auto& d : o.diagnostics) out.diagnostics.push_back(d);
      if (o.report) out.reports.push_back(*o.report);
    }
  }
  return out;
}

std::string session_snapshot_json(const RefinementSession& session) {
  ordered_json j;
  j["schema"] = 1;
  j["type"] = "snapshot";
  j["design"] = session.design;
  j["config"] = config_json(session.config);
  ordered_json hist = ordered_json::array();
  for (const auto& [p, r] : session.history) {
    ordered_json e;
    e["stage"] = to_string(p.stage);
    e["iteration"] = p.iteration;
    e["timestamp"] = p.timestamp;
    e["body"] = p.body;
    e["backend"] = r.backend_id;
    e["raw"] = r.raw;
    hist.push_back(e);
  }
  j["history"] = hist;
  ordered_json asserts = ordered_json::array();
  for (const auto& st : session.assertions) {
    ordered_json e;
    e["name"] = st.name;
    e["status"] = to_string(st.status);
    e["iterations_used"] = st.iterations_used;
    e["text"] = st.text;
    asserts.push_back(e);
  }
  j["assertions"] = asserts;
  return j.dump();
}

std::optional<RefinementSession> load_session_snapshot(const std::string& log_path,
                                                       std::vector<Diagnostic>& diags) {
  std::ifstream in(log_path);
  if (!in) return std::nullopt;
  std::string line, last;
  while (std::getline(in, line)) {
    if (line.find("\"type\":\"snapshot\"") != std::string::npos) last = line;
  }
  if (last.empty()) return std::nullopt;
  nlohmann::json j = nlohmann::json::parse(last, nullptr, false);
  if (j.is_discarded() || j.value("schema", 0) != 1) {
    diags.push_back(make_error("LogCorrupt",
                               "last snapshot in '" + log_path + "' is not readable", {0, 1}));
    return std::nullopt;
  }
  RefinementSession s;
  s.design = j.value("design", "");
  for (const auto& e : j.value("history", nlohmann::json::array())) {
    PromptRecord p;
    if (auto st = stage_from_string(e.value("stage", ""))) p.stage = *st;
    p.iteration = e.value("iteration", 0);
    p.timestamp = e.value("timestamp", "");
    p.body = e.value("body", "");
    LlmResponse r;
    r.raw = e.value("raw", "");
    r.backend_id = e.value("backend", "");
    r.extracted_blocks = extract_blocks(r.raw);
    s.history.emplace_back(std::move(p), std::move(r));
  }
  for (const auto& e : j.value("assertions", nlohmann::json::array())) {
    AssertionState st;
    st.name = e.value("name", "");
    st.text = e.value("text", "");
    st.iterations_used = e.value("iterations_used", 0);
    if (auto status = status_from_string(e.value("status", ""))) st.status = *status;
    sva::ParseResult parsed = sva::parse_assertions(st.text);
    if (!parsed.assertions.empty()) {
      st.ast = parsed.assertions.front();
    } else {
      for (const auto& d : parsed.diagnostics)
        if (d.severity == Severity::Error) st.parse_diagnostics.push_back(d);
    }
    s.assertions.push_back(std::move(st));
  }
  return s;
}

SessionResult run_session(const std::string& spec_text, const std::string& rtl_text,
                          const std::vector<trace::Trace>& traces,
                          const SessionConfig& config, LlmBackend& backend,
                          const SessionIo& io) {
  Runner runner(traces, backend, io);
  return runner.run(spec_text, rtl_text, config, /*resume=*/false);
}

SessionResult resume_session(const std::string& spec_text, const std::string& rtl_text,
                             const std::vector<trace::Trace>& traces,
                             const SessionConfig& config, LlmBackend& backend,
                             const SessionIo& io) {
  Runner runner(traces, backend, io);
  return runner.run(spec_text, rtl_text, config, /*resume=*/true);
}

}  // namespace svagen::flow
