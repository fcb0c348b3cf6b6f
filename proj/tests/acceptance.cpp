// SPDX-License-Identifier: Apache-2.0
//
// Release gate. One check per shipping criterion, one pass/fail line
// per check, nonzero exit when any line fails. Checks are written
// against the public headers only, so a red line names a broken
// behavior rather than a broken test double.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "svagen/compare.hpp"
#include "svagen/eval.hpp"
#include "svagen/llm_backend.hpp"
#include "svagen/oracle.hpp"
#include "svagen/probes.hpp"
#include "svagen/prompts.hpp"
#include "svagen/report.hpp"
#include "svagen/session.hpp"
#include "svagen/sva_normalize.hpp"
#include "svagen/sva_parser.hpp"
#include "svagen/sva_printer.hpp"
#include "svagen/sva_semantics.hpp"
#include "svagen/util.hpp"
#include "svagen/vcd.hpp"
#include "svagen/verilog_extract.hpp"
#include "test_helpers.hpp"

namespace {

using namespace svagen;

const std::string kFixtures = FIXTURES_DIR;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string fixture(const std::string& rel) { return read_file(kFixtures + "/" + rel); }

std::vector<sva::AssertionAst> parse_set(const std::string& rel) {
  auto r = sva::parse_assertions(fixture(rel));
  expect(!has_errors(r.diagnostics), rel + " has parse errors");
  return r.assertions;
}

trace::Trace session_trace() {
  auto r = trace::ingest_vcd(fixture("traces/rv_timer_session.vcd"), "clk_i");
  expect(r.trace.has_value(), "session VCD failed to ingest");
  return *r.trace;
}

std::vector<trace::Trace> aligned_probes() {
  trace::ProbeConfig cfg;
  cfg.hold = {{"rst_ni", 1}, {"active", 1}};
  return trace::generate_probes(session_trace().widths, cfg);
}

std::string temp_path(const std::string& tag) {
  auto p = std::filesystem::temp_directory_path() / ("svagen_accept_" + tag + ".jsonl");
  std::filesystem::remove(p);
  return p.string();
}

flow::SessionResult replay_run(const std::string& tag, const std::string& stamp) {
  flow::SessionConfig cfg;
  cfg.backend = flow::BackendKind::Replay;
  cfg.fixture_dir = kFixtures + "/replay/rv_timer";
  cfg.log_path = temp_path(tag);
  cfg.fixed_timestamp = stamp;
  cfg.context_docs = fixture("docs/rv_timer_context.txt");
  flow::ReplayBackend backend(cfg.fixture_dir);
  std::vector<trace::Trace> traces{session_trace()};
  auto r = flow::run_session(fixture("docs/rv_timer_spec.txt"), fixture("rtl/rv_timer.sv"),
                             traces, cfg, backend);
  expect(r.diagnostics.empty(), "replay session reported errors");
  return r;
}

int iterations_of(const flow::RefinementSession& s, const std::string& name) {
  const flow::AssertionState* a = s.find_assertion(name);
  expect(a != nullptr, "assertion " + name + " missing from session");
  return a->iterations_used;
}

// ---- criterion bodies ----------------------------------------------------

void check_corpus_roundtrip() {
  const char* listings[] = {
      "corpus/intro_correctness.sva",    "corpus/intro_consistency.sva",
      "corpus/rv_timer_assertion1.sva",  "corpus/rv_timer_assertion2.sva",
      "corpus/rv_timer_assertion3.sva",  "corpus/rv_timer_assertions4_7.sva",
      "corpus/rv_timer_modified1.sva",   "corpus/rv_timer_modified2.sva",
      "corpus/hmac_process_start.sva",   "corpus/rom_ctrl_assertions8_10.sva",
      "corpus/compare_assertion11.sva",  "corpus/compare_assertion12.sva",
  };
  int files = 0, asts = 0;
  for (const char* rel : listings) {
    auto set = parse_set(rel);
    expect(!set.empty(), std::string(rel) + " parsed to nothing");
    for (const auto& ast : set) {
      auto again = sva::parse_assertions(sva::pretty_print(ast));
      expect(!has_errors(again.diagnostics),
             std::string(rel) + ": printed form of " + ast.name + " does not reparse");
      expect(again.assertions.size() == 1,
             std::string(rel) + ": printed form of " + ast.name + " split apart");
      expect(sva::ast_equal(ast, again.assertions[0]),
             std::string(rel) + ": " + ast.name + " changed across a print round-trip");
      ++asts;
    }
    ++files;
  }
  expect(files == 12, "expected 12 corpus listings");
  expect(asts >= 17, "corpus thinner than expected");
}

void check_evaluator_oracle_agreement() {
  std::mt19937_64 rng(0xACCE55u);
  for (int i = 0; i < 10000; ++i) {
    sva::AssertionAst ast = testgen::rand_small_assertion(rng, i);
    trace::Trace t = testgen::rand_small_trace(rng);
    auto fast = trace::evaluate(ast, t);
    auto slow = trace::oracle_evaluate(ast, t);
    expect(fast.report.has_value() && slow.report.has_value(),
           "instance " + std::to_string(i) + " refused:\n" + sva::pretty_print(ast));
    expect(*fast.report == *slow.report,
           "disagreement on instance " + std::to_string(i) + ":\n" +
               sva::pretty_print(ast));
  }
}

void check_repair_trajectory() {
  auto r = replay_run("trajectory", "2026-02-03T04:05:06Z");
  const flow::RefinementSession& s = r.session;
  expect(iterations_of(s, "tick_count_reset") == 1, "first assertion needed " +
             std::to_string(iterations_of(s, "tick_count_reset")) + " iterations, not 1");
  expect(iterations_of(s, "tick_generate") == 3, "second assertion needed " +
             std::to_string(iterations_of(s, "tick_generate")) + " iterations, not 3");
  expect(iterations_of(s, "tick_count_increment") == 0,
         "third assertion should pass raw");
  int passing = 0;
  for (const auto& a : s.assertions)
    if (a.status == flow::AssertionStatus::Passing) ++passing;
  expect(passing == 7, "expected 7 passing assertions, saw " + std::to_string(passing));
  expect(s.assertions.size() == 7, "expected exactly 7 registered assertions");
}

void check_failure_mode_fidelity() {
  trace::Trace t = session_trace();
  auto raw1 = parse_set("corpus/rv_timer_assertion1.sva")[0];
  auto mod1 = parse_set("corpus/rv_timer_modified1.sva")[0];
  auto raw1_report = trace::evaluate(raw1, t);
  auto mod1_report = trace::evaluate(mod1, t);
  expect(raw1_report.report.has_value() && mod1_report.report.has_value(),
         "timer assertion 1 failed to evaluate");
  expect(raw1_report.report->fails > 0, "raw form should fail on the delayed reset");
  expect(mod1_report.report->fails == 0 && mod1_report.report->passes > 0,
         "repaired form should pass the same trace");

  auto raw2 = parse_set("corpus/rv_timer_assertion2.sva")[0];
  auto mod2 = parse_set("corpus/rv_timer_modified2.sva")[0];
  auto raw2_report = trace::evaluate(raw2, t);
  auto mod2_report = trace::evaluate(mod2, t);
  expect(raw2_report.report.has_value() && mod2_report.report.has_value(),
         "timer assertion 2 failed to evaluate");
  expect(!(*raw2_report.report == *mod2_report.report),
         "overlapping and non-overlapping forms should part ways on this trace");
  expect(raw2_report.report->fails > 0 && mod2_report.report->fails == 0,
         "the raw next-cycle check should fail where the overlapping form holds");
}

void check_commonality_mechanism() {
  auto probes = aligned_probes();
  auto left = parse_set("corpus/compare_assertion11.sva");
  auto right = parse_set("corpus/compare_assertion12.sva");
  auto pair = compare::match_sets(left, right, probes);
  expect(pair.count == 1, "guard-style pair should match exactly once");
  expect(pair.pairs.size() == 1 &&
             pair.pairs[0].kind == compare::MatchKind::Behavioral,
         "guard-style pair must match behaviorally");
  expect(compare::render_match_table(pair).find("probe-consistent") != std::string::npos,
         "behavioral match must be labeled probe-consistent");
  for (const auto& p : pair.pairs)
    expect(p.kind != compare::MatchKind::Structural,
           "guard-style pair must not match structurally");

  std::vector<sva::AssertionAst> generated;
  for (const char* f : {"corpus/rv_timer_modified1.sva", "corpus/rv_timer_modified2.sva",
                        "corpus/rv_timer_assertion3.sva"})
    generated.push_back(parse_set(f)[0]);
  for (auto& a : parse_set("corpus/rv_timer_assertions4_7.sva")) generated.push_back(a);
  expect(generated.size() == 7, "curated generated set should hold 7 assertions");
  auto alt = parse_set("altset/rv_timer_alt.sva");
  expect(alt.size() == 11, "curated alternate set should hold 11 assertions");
  auto m = compare::match_sets(generated, alt, probes);
  expect(m.count == 5,
         "curated sets share " + std::to_string(m.count) + " assertions, not 5");
}

void check_signal_synchronization() {
  auto ext = rtl::extract_signals(fixture("rtl/rv_timer.sv"));
  expect(ext.inventory.has_value(), "timer RTL failed to extract");
  auto bad = parse_set("cli/bad_signal.sva");
  expect(bad.size() == 1, "bad-signal fixture should hold one assertion");
  auto diags = sva::check_semantics(bad[0], *ext.inventory);
  std::vector<Diagnostic> unknown;
  for (const auto& d : diags)
    if (d.code == "UnknownSignal") unknown.push_back(d);
  expect(unknown.size() >= 2, "both foreign identifiers should be flagged");

  flow::RefinementSession s;
  s.design = "rv_timer";
  s.inventory = *ext.inventory;
  s.config.fixed_timestamp = "2026-02-03T04:05:06Z";
  flow::ErrorFeedbackPayload payload;
  payload.assertion_name = bad[0].name;
  payload.assertion_text = sva::pretty_print(bad[0]);
  payload.diagnostics = diags;
  auto built = flow::build_prompt(flow::Stage::ErrorFeedback, s, payload);
  expect(built.prompt.has_value(), "error feedback prompt failed to build");
  for (const auto& d : unknown)
    expect(built.prompt->body.find(format_diagnostic(d)) != std::string::npos,
           "diagnostic not embedded verbatim: " + format_diagnostic(d));
}

void check_determinism() {
  // Wall-clock timestamps on purpose; stripping them must be the only
  // normalization the comparison needs.
  auto a = replay_run("det_a", "");
  auto b = replay_run("det_b", "");
  std::regex stamp("\"timestamp\":\"[^\"]*\"");
  std::string log_a = std::regex_replace(read_file(a.session.config.log_path), stamp,
                                         "\"timestamp\":\"\"");
  std::string log_b = std::regex_replace(read_file(b.session.config.log_path), stamp,
                                         "\"timestamp\":\"\"");
  expect(!log_a.empty(), "first session log is empty");
  expect(log_a == log_b, "timestamp-stripped session logs differ");

  auto alt = parse_set("altset/rv_timer_alt.sva");
  auto probes = aligned_probes();
  std::vector<trace::Trace> traces{session_trace()};
  auto row_a = report::build_row(a.session, alt, &alt, probes, traces);
  auto row_b = report::build_row(b.session, alt, &alt, probes, traces);
  expect(row_a.row.has_value() && row_b.row.has_value(), "report row failed to build");
  expect(report::render_markdown({*row_a.row}) == report::render_markdown({*row_b.row}),
         "report.md bytes differ between runs");
  auto iters_a = report::iteration_totals({&a.session});
  auto iters_b = report::iteration_totals({&b.session});
  expect(report::render_iterations_csv(iters_a) == report::render_iterations_csv(iters_b),
         "iterations.csv bytes differ between runs");
}

void check_semantic_invariants() {
  struct Counts {
    int passes, fails, vacuous, disabled, incomplete, unknown_fails;
    bool operator==(const Counts&) const = default;
  };
  auto counts_of = [](const trace::EvalReport& r) {
    return Counts{r.passes, r.fails, r.vacuous, r.disabled, r.incomplete,
                  r.unknown_fails};
  };

  std::mt19937_64 rng(0x1A4A6u);
  for (int i = 0; i < 500; ++i) {  // normalization is idempotent
    auto once = sva::normalize(testgen::rand_small_assertion(rng, i));
    expect(sva::ast_equal(once, sva::normalize(once)),
           "normalize not idempotent on instance " + std::to_string(i));
  }
  for (int i = 0; i < 1000; ++i) {  // and preserves verdict counts
    auto ast = testgen::rand_small_assertion(rng, i);
    auto t = testgen::rand_small_trace(rng);
    auto plain = trace::evaluate(ast, t);
    auto normed = trace::evaluate(sva::normalize(ast), t);
    expect(plain.report.has_value() && normed.report.has_value(),
           "normalization instance refused to evaluate");
    expect(counts_of(*plain.report) == counts_of(*normed.report) &&
               plain.report->fail_cycles == normed.report->fail_cycles,
           "normalization changed verdicts on instance " + std::to_string(i) + ":\n" +
               sva::pretty_print(ast));
  }
  for (int i = 0; i < 500; ++i) {  // every anchor lands in exactly one bucket
    auto ast = testgen::rand_small_assertion(rng, i);
    auto t = testgen::rand_small_trace(rng);
    auto out = trace::evaluate(ast, t);
    expect(out.report.has_value(), "conservation instance refused to evaluate");
    const auto& r = *out.report;
    expect(r.attempts == t.cycles &&
               r.passes + r.fails + r.vacuous + r.disabled + r.incomplete == r.attempts,
           "attempt counts leak on instance " + std::to_string(i));
  }
  for (int i = 0; i < 300; ++i) {  // widening disable only moves mass into disabled
    auto ast = testgen::rand_small_assertion(rng, i);
    auto t = testgen::rand_small_trace(rng);
    sva::AssertionAst wider = ast;
    sva::ExprPtr extra = sva::make_ident("b");
    wider.disable_expr =
        wider.disable_expr ? sva::make_or(wider.disable_expr, extra) : extra;
    auto base = trace::evaluate(ast, t);
    auto wide = trace::evaluate(wider, t);
    expect(base.report.has_value() && wide.report.has_value(),
           "monotonicity instance refused to evaluate");
    expect(wide.report->disabled >= base.report->disabled &&
               wide.report->passes <= base.report->passes &&
               wide.report->fails <= base.report->fails,
           "disable widening added verdicts on instance " + std::to_string(i));
  }
  trace::ProbeConfig cfg;
  cfg.count = 6;
  cfg.cycles = 5;
  cfg.clock = "clk";
  auto probes =
      trace::generate_probes({{"a", 1}, {"b", 1}, {"c", 1}, {"v", 2}}, cfg);
  for (int round = 0; round < 40; ++round) {  // match count is symmetric
    std::vector<sva::AssertionAst> l, r;
    int nl = 1 + static_cast<int>(rng() % 3), nr = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nl; ++i) l.push_back(testgen::rand_small_assertion(rng, i));
    for (int i = 0; i < nr; ++i)
      r.push_back(testgen::rand_small_assertion(rng, 100 + i));
    expect(compare::match_sets(l, r, probes).count ==
               compare::match_sets(r, l, probes).count,
           "match count asymmetric on round " + std::to_string(round));
  }
}

}  // namespace

int main() {
  struct Check {
    int id;
    const char* name;
    double budget_s;  // 0 means untimed
    std::function<void()> run;
  };
  const std::vector<Check> checks = {
      {1, "assertion corpus parses cleanly and survives print round-trips", 1.0,
       check_corpus_roundtrip},
      {2, "evaluator and oracle agree on 10000 random instances", 60.0,
       check_evaluator_oracle_agreement},
      {3, "replay session reproduces the recorded repair trajectory", 10.0,
       check_repair_trajectory},
      {4, "raw and repaired timer assertions separate on the session trace", 0,
       check_failure_mode_fidelity},
      {5, "set comparison finds the behavioral pair and the curated overlap", 0,
       check_commonality_mechanism},
      {6, "unknown signals are flagged and quoted verbatim in repair prompts", 0,
       check_signal_synchronization},
      {7, "replay runs are deterministic end to end", 0, check_determinism},
      {8, "semantic invariants hold under randomized instances", 0,
       check_semantic_invariants},
  };

  int failed = 0;
  for (const auto& c : checks) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
      c.run();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (detail.empty() && c.budget_s > 0 && secs > c.budget_s) {
      std::ostringstream os;
      os << "over time budget (" << secs << "s > " << c.budget_s << "s)";
      detail = os.str();
    }
    if (detail.empty()) {
      std::printf("[PASS] %d %s (%.2fs)\n", c.id, c.name, secs);
    } else {
      std::printf("[FAIL] %d %s: %s (%.2fs)\n", c.id, c.name, detail.c_str(), secs);
      ++failed;
    }
  }
  if (failed > 0) {
    std::printf("%d of %zu checks failed\n", failed, checks.size());
    return 1;
  }
  std::printf("all %zu checks passed\n", checks.size());
  return 0;
}
