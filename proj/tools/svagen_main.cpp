// SPDX-License-Identifier: Apache-2.0
//
// Command line entry point. Exit codes: 0 success, 1 assertion failures
// present, 2 usage or input error, 3 backend error. stdout carries
// machine-readable output only under --json (extract always emits JSON,
// its one output format); diagnostics go to stderr.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "svagen/compare.hpp"
#include "svagen/eval.hpp"
#include "svagen/llm_backend.hpp"
#include "svagen/probes.hpp"
#include "svagen/report.hpp"
#include "svagen/session.hpp"
#include "svagen/sva_parser.hpp"
#include "svagen/sva_printer.hpp"
#include "svagen/sva_semantics.hpp"
#include "svagen/util.hpp"
#include "svagen/vcd.hpp"
#include "svagen/verilog_extract.hpp"

namespace {

using namespace svagen;

void print_diags(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) std::cerr << format_diagnostic(d) << "\n";
}

std::optional<std::string> slurp(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::exception& e) {
    std::cerr << "svagen: " << e.what() << "\n";
    return std::nullopt;
  }
}

// "name=value" pairs from repeatable flags.
template <typename Int>
bool parse_kv(const std::vector<std::string>& raw, std::map<std::string, Int>& out) {
  for (const auto& kv : raw) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "svagen: expected name=value, got '" << kv << "'\n";
      return false;
    }
    try {
      out[kv.substr(0, eq)] = static_cast<Int>(std::stoll(kv.substr(eq + 1)));
    } catch (const std::exception&) {
      std::cerr << "svagen: bad numeric value in '" << kv << "'\n";
      return false;
    }
  }
  return true;
}

// Flat key=value config files; keys mirror the subcommand's long option
// names. Values reach an option only when the command line left it unset.
void apply_config_file(CLI::App* sub, const std::string& path) {
  std::map<CLI::Option*, std::vector<std::string>> pending;
  int lineno = 0;
  for (const auto& raw_line : split(read_file(path), '\n')) {
    ++lineno;
    std::string line = trim(raw_line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    std::string where = path + ":" + std::to_string(lineno);
    auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::runtime_error(where + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    CLI::Option* op = sub->get_option_no_throw("--" + key);
    if (op == nullptr)
      throw std::runtime_error(where + ": unknown config key '" + key + "'");
    pending[op].push_back(trim(line.substr(eq + 1)));
  }
  for (auto& [op, values] : pending) {
    if (op->count() > 0) continue;  // command line wins
    for (auto& v : values) op->add_result(v);
    op->run_callback();
  }
}

bool load_traces(const std::vector<std::string>& paths, const std::string& clock,
                 std::vector<trace::Trace>& out) {
  for (const auto& p : paths) {
    auto text = slurp(p);
    if (!text) return false;
    auto r = trace::ingest_vcd(*text, clock);
    if (!r.trace) {
      std::cerr << p << ":\n";
      print_diags(r.diagnostics);
      return false;
    }
    out.push_back(std::move(*r.trace));
  }
  return true;
}

std::optional<rtl::SignalInventory> load_inventory(const std::string& path,
                                                   const std::string& module = {}) {
  auto text = slurp(path);
  if (!text) return std::nullopt;
  rtl::ExtractOptions opts;
  if (!module.empty()) opts.select_module = module;
  auto r = rtl::extract_signals(*text, opts);
  if (!r.inventory) {
    print_diags(r.diagnostics);
    return std::nullopt;
  }
  return r.inventory;
}

// Probe trace keys: scalars by name, array elements as name[i].
std::map<std::string, int> probe_widths(const rtl::SignalInventory& inv) {
  std::map<std::string, int> out;
  for (const auto& s : inv.signals) {
    if (s.is_array) {
      for (std::uint32_t i = 0; i < s.array_elems; ++i)
        out[s.name + "[" + std::to_string(i) + "]"] = static_cast<int>(s.width);
    } else {
      out[s.name] = static_cast<int>(s.width);
    }
  }
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Shared probe generator flags for compare and report.
struct ProbeFlags {
  std::string clock = "clk_i";
  int cycles = 12;
  int count = 20;
  std::uint64_t seed = 0x50B5;
  double toggle = 0.5;
  std::vector<std::string> hold_raw;
  std::string reset;
};

void add_probe_flags(CLI::App* cmd, ProbeFlags& f) {
  cmd->add_option("--clock", f.clock, "Clock signal name");
  cmd->add_option("--probe-cycles", f.cycles, "Cycles per probe trace");
  cmd->add_option("--probe-count", f.count, "Number of random probes");
  cmd->add_option("--probe-seed", f.seed, "Probe generator seed");
  cmd->add_option("--probe-toggle", f.toggle, "Per-cycle toggle probability");
  cmd->add_option("--hold", f.hold_raw, "Hold signal constant, name=value (repeatable)");
  cmd->add_option("--reset", f.reset, "Reset signal for directed probes");
}

bool make_probes(const ProbeFlags& f, const rtl::SignalInventory& inv,
                 std::vector<trace::Trace>& out) {
  trace::ProbeConfig cfg;
  cfg.clock = f.clock;
  cfg.cycles = f.cycles;
  cfg.count = f.count;
  cfg.seed = f.seed;
  cfg.toggle_prob = f.toggle;
  if (!f.reset.empty()) cfg.reset_signal = f.reset;
  if (!parse_kv<std::uint64_t>(f.hold_raw, cfg.hold)) return false;
  out = trace::generate_probes(probe_widths(inv), cfg);
  return true;
}

bool parse_set(const std::string& path, std::vector<sva::AssertionAst>& out) {
  auto text = slurp(path);
  if (!text) return false;
  auto r = sva::parse_assertions(*text);
  if (has_errors(r.diagnostics)) {
    std::cerr << path << ":\n";
    print_diags(r.diagnostics);
    return false;
  }
  out = std::move(r.assertions);
  return true;
}

int cmd_extract(const std::string& rtl_path, const std::string& module) {
  auto text = slurp(rtl_path);
  if (!text) return 2;
  rtl::ExtractOptions opts;
  if (!module.empty()) opts.select_module = module;
  auto r = rtl::extract_signals(*text, opts);
  print_diags(r.diagnostics);
  if (!r.inventory) return 2;
  std::cout << rtl::inventory_to_json(*r.inventory) << "\n";
  return 0;
}

int cmd_lint(const std::vector<std::string>& sva_paths, const std::string& rtl_path,
             const std::string& module, bool json) {
  std::optional<rtl::SignalInventory> inv;
  if (!rtl_path.empty()) {
    inv = load_inventory(rtl_path, module);
    if (!inv) return 2;
  }
  bool bad = false;
  nlohmann::ordered_json jfiles = nlohmann::ordered_json::array();
  for (const auto& path : sva_paths) {
    auto text = slurp(path);
    if (!text) return 2;
    auto r = sva::parse_assertions(*text);
    std::vector<Diagnostic> all = r.diagnostics;
    if (inv)
      for (const auto& ast : r.assertions)
        for (auto& d : sva::check_semantics(ast, *inv)) all.push_back(std::move(d));
    bad |= has_errors(all);
    if (json) {
      nlohmann::ordered_json jf;
      jf["path"] = path;
      jf["assertions"] = r.assertions.size();
      nlohmann::ordered_json jd = nlohmann::ordered_json::array();
      for (const auto& d : all) jd.push_back(format_diagnostic(d));
      jf["diagnostics"] = jd;
      jfiles.push_back(jf);
    } else {
      std::cerr << path << ": " << r.assertions.size() << " assertion(s)\n";
      print_diags(all);
    }
  }
  if (json) std::cout << jfiles.dump(2) << "\n";
  return bad ? 2 : 0;
}

struct CheckRow {
  std::string name;
  std::size_t trace_idx;
  trace::EvalReport report;
};

int cmd_check(const std::string& sva_path, const std::vector<std::string>& vcd_paths,
              const std::string& rtl_path, const std::string& module,
              const std::vector<std::string>& params_raw, const std::string& clock,
              bool json, const std::string& junit_path) {
  std::vector<sva::AssertionAst> asts;
  if (!parse_set(sva_path, asts)) return 2;

  std::map<std::string, std::int64_t> params;
  std::optional<rtl::SignalInventory> inv;
  if (!rtl_path.empty()) {
    inv = load_inventory(rtl_path, module);
    if (!inv) return 2;
    params = inv->parameters;
    bool sem_bad = false;
    for (const auto& ast : asts) {
      auto diags = sva::check_semantics(ast, *inv);
      sem_bad |= has_errors(diags);
      print_diags(diags);
    }
    if (sem_bad) return 2;
  }
  if (!parse_kv<std::int64_t>(params_raw, params)) return 2;

  std::vector<trace::Trace> traces;
  if (!load_traces(vcd_paths, clock, traces)) return 2;

  std::vector<sva::AssertionAst> instances;
  for (const auto& ast : asts) {
    auto ex = sva::expand_generate(ast, params);
    if (has_errors(ex.diagnostics)) {
      print_diags(ex.diagnostics);
      return 2;
    }
    for (auto& inst : ex.assertions) instances.push_back(std::move(inst));
  }

  std::vector<CheckRow> rows;
  for (const auto& inst : instances) {
    for (std::size_t t = 0; t < traces.size(); ++t) {
      auto r = trace::evaluate(inst, traces[t]);
      if (!r.report) {
        print_diags(r.diagnostics);
        return 2;
      }
      rows.push_back({inst.name, t, std::move(*r.report)});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const CheckRow& a, const CheckRow& b) {
    return a.name != b.name ? a.name < b.name : a.trace_idx < b.trace_idx;
  });

  int failing = 0;
  for (const auto& row : rows) failing += row.report.fails > 0 ? 1 : 0;

  if (json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json e;
      e["assertion"] = row.name;
      e["trace"] = row.trace_idx;
      e["report"] = nlohmann::ordered_json::parse(trace::report_to_json(row.report));
      out.push_back(e);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "assertion trace attempts passes fails vacuous disabled incomplete\n";
    for (const auto& row : rows) {
      const auto& r = row.report;
      std::cout << row.name << " " << row.trace_idx << " " << r.attempts << " " << r.passes
                << " " << r.fails << " " << r.vacuous << " " << r.disabled << " "
                << r.incomplete << "\n";
      if (r.fails > 0) std::cout << "  " << r.first_failure_message << "\n";
    }
    std::cout << (failing ? "FAIL" : "OK") << ": " << rows.size() << " report(s), "
              << failing << " with failures\n";
  }

  if (!junit_path.empty()) {
    std::string xml = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    xml += "<testsuite name=\"svagen-check\" tests=\"" + std::to_string(rows.size()) +
           "\" failures=\"" + std::to_string(failing) + "\">\n";
    for (const auto& row : rows) {
      xml += "  <testcase classname=\"svagen.check\" name=\"" + xml_escape(row.name) + "@" +
             std::to_string(row.trace_idx) + "\"";
      if (row.report.fails > 0) {
        xml += ">\n    <failure message=\"" + xml_escape(row.report.first_failure_message) +
               "\"/>\n  </testcase>\n";
      } else {
        xml += "/>\n";
      }
    }
    xml += "</testsuite>\n";
    write_file(junit_path, xml);
  }
  return failing ? 1 : 0;
}

int gen_exit_code(const std::vector<Diagnostic>& diags, const flow::RefinementSession& s) {
  for (const auto& d : diags) {
    if (d.severity != Severity::Error) continue;
    if (d.code == "BackendUnavailable" || d.code == "FixturesExhausted" ||
        d.code == "ContextOverflow")
      return 3;
  }
  if (has_errors(diags)) return 2;
  for (const auto& a : s.assertions)
    if (a.status != flow::AssertionStatus::Passing) return 1;
  return 0;
}

int cmd_gen(const std::string& spec_path, const std::string& rtl_path,
            const std::vector<std::string>& vcd_paths, flow::SessionConfig config,
            const std::vector<std::string>& params_raw,
            const std::vector<std::string>& context_paths, const std::string& diagram_path,
            const std::string& out_dir, const std::string& clock,
            const std::string& rtl_scope, bool resume, bool json) {
  auto spec_text = slurp(spec_path);
  auto rtl_text = slurp(rtl_path);
  if (!spec_text || !rtl_text) return 2;
  if (rtl_scope == "header") {
    // Sync the prompt on the declaration skeleton instead of the full
    // source; the inventory survives the round-trip unchanged.
    auto inv = load_inventory(rtl_path, config.select_module);
    if (!inv) return 2;
    rtl_text = rtl::print_inventory(*inv);
  }
  if (!parse_kv<std::int64_t>(params_raw, config.parameters)) return 2;
  for (const auto& p : context_paths) {
    auto doc = slurp(p);
    if (!doc) return 2;
    if (!config.context_docs.empty()) config.context_docs += "\n\n";
    config.context_docs += *doc;
  }
  if (!diagram_path.empty()) {
    auto doc = slurp(diagram_path);
    if (!doc) return 2;
    config.block_diagram = *doc;
  }
  std::vector<trace::Trace> traces;
  if (!load_traces(vcd_paths, clock, traces)) return 2;

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (config.log_path.empty()) config.log_path = out_dir + "/session.jsonl";

  auto backend = flow::make_backend(config);
  flow::SessionResult result =
      resume ? flow::resume_session(*spec_text, *rtl_text, traces, config, *backend)
             : flow::run_session(*spec_text, *rtl_text, traces, config, *backend);
  print_diags(result.diagnostics);
  const flow::RefinementSession& s = result.session;

  std::string passing_text;
  int passing = 0;
  for (const auto& a : s.assertions) {
    if (a.status != flow::AssertionStatus::Passing) continue;
    if (!passing_text.empty()) passing_text += "\n";
    passing_text += a.text;
    ++passing;
  }
  std::string out_path;
  if (passing > 0) {
    out_path = out_dir + "/" + (s.design.empty() ? "design" : s.design) + "_assertions.sva";
    write_file(out_path, passing_text);
  }

  if (json) {
    nlohmann::ordered_json j;
    j["design"] = s.design;
    j["queries"] = s.history.size();
    j["log"] = config.log_path;
    if (!out_path.empty()) j["assertions_file"] = out_path;
    nlohmann::ordered_json ja = nlohmann::ordered_json::array();
    for (const auto& a : s.assertions) {
      nlohmann::ordered_json e;
      e["name"] = a.name;
      e["status"] = flow::to_string(a.status);
      e["iterations_used"] = a.iterations_used;
      ja.push_back(e);
    }
    j["assertions"] = ja;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "session " << s.design << ": " << s.assertions.size() << " assertion(s), "
              << passing << " passing, " << s.history.size() << " queries\n";
    for (const auto& a : s.assertions)
      std::cout << "  " << a.name << " " << flow::to_string(a.status)
                << " iterations=" << a.iterations_used << "\n";
    if (!out_path.empty()) std::cout << "wrote " << out_path << "\n";
  }
  return gen_exit_code(result.diagnostics, s);
}

int cmd_compare(const std::string& left_path, const std::string& right_path,
                const std::string& rtl_path, const std::string& module,
                const ProbeFlags& pf, bool json) {
  std::vector<sva::AssertionAst> left, right;
  if (!parse_set(left_path, left) || !parse_set(right_path, right)) return 2;
  auto inv = load_inventory(rtl_path, module);
  if (!inv) return 2;
  std::vector<trace::Trace> probes;
  if (!make_probes(pf, *inv, probes)) return 2;

  auto m = compare::match_sets(left, right, probes);
  print_diags(m.diagnostics);
  if (json)
    std::cout << compare::match_result_to_json(m) << "\n";
  else
    std::cout << compare::render_match_table(m);
  return 0;
}

int cmd_report(const std::vector<std::string>& session_logs, const std::string& ref_path,
               const std::string& alt_path, const std::string& rtl_path,
               const std::vector<std::string>& vcd_paths, const ProbeFlags& pf,
               const std::string& out_dir, bool json) {
  auto inv = load_inventory(rtl_path);
  if (!inv) return 2;
  std::vector<trace::Trace> probes;
  if (!make_probes(pf, *inv, probes)) return 2;

  std::vector<sva::AssertionAst> ref_set, alt_set;
  if (!ref_path.empty() && !parse_set(ref_path, ref_set)) return 2;
  bool have_alt = !alt_path.empty();
  if (have_alt && !parse_set(alt_path, alt_set)) return 2;

  std::vector<trace::Trace> traces;
  if (!load_traces(vcd_paths, pf.clock, traces)) return 2;

  std::vector<flow::RefinementSession> sessions;
  for (const auto& log : session_logs) {
    std::vector<Diagnostic> diags;
    auto s = flow::load_session_snapshot(log, diags);
    print_diags(diags);
    if (!s) {
      std::cerr << "svagen: no loadable session snapshot in '" << log << "'\n";
      return 2;
    }
    sessions.push_back(std::move(*s));
  }

  std::vector<report::DesignRow> rows;
  std::vector<const flow::RefinementSession*> session_ptrs;
  for (const auto& s : sessions) {
    auto r = report::build_row(s, ref_set, have_alt ? &alt_set : nullptr, probes, traces);
    print_diags(r.diagnostics);
    if (!r.row) return 2;
    rows.push_back(*r.row);
    session_ptrs.push_back(&s);
  }
  auto iterations = report::iteration_totals(session_ptrs);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  write_file(out_dir + "/report.md", report::render_markdown(rows));
  write_file(out_dir + "/report.csv", report::render_csv(rows));
  write_file(out_dir + "/iterations.csv", report::render_iterations_csv(iterations));

  if (json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json e;
      e["design"] = row.module_name;
      e["reference_asserts"] = row.reference_assert_count;
      e["generated_asserts"] = row.generated_assert_count;
      if (row.alt_assert_count) e["alt_asserts"] = *row.alt_assert_count;
      if (row.common_assert_count) e["common_asserts"] = *row.common_assert_count;
      e["trace_span"] = row.trace_time_span;
      j.push_back(e);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "wrote " << out_dir << "/report.md, report.csv, iterations.csv ("
              << rows.size() << " design(s))\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SVA generation and verification toolkit"};
  app.require_subcommand(1);

  // extract
  auto* extract = app.add_subcommand("extract", "Extract the signal inventory from RTL");
  std::string ex_rtl;
  extract->add_option("rtl", ex_rtl, "Verilog source file")->required();

  // lint
  auto* lint = app.add_subcommand("lint", "Parse assertions and check signal usage");
  std::vector<std::string> li_files;
  std::string li_rtl;
  bool li_json = false;
  lint->add_option("sva", li_files, "Assertion files")->required();
  lint->add_option("--rtl", li_rtl, "RTL for semantic checks");
  lint->add_flag("--json", li_json, "Machine-readable stdout");

  // check
  auto* check = app.add_subcommand("check", "Evaluate assertions against VCD traces");
  std::string ck_sva, ck_rtl, ck_clock = "clk_i", ck_junit;
  std::vector<std::string> ck_vcds, ck_params;
  bool ck_json = false;
  check->add_option("sva", ck_sva, "Assertion file")->required();
  check->add_option("--trace", ck_vcds, "VCD trace file (repeatable)")->required();
  check->add_option("--rtl", ck_rtl, "RTL for semantic checks and parameters");
  check->add_option("--param", ck_params, "Parameter override name=value (repeatable)");
  check->add_option("--clock", ck_clock, "Clock signal name");
  check->add_flag("--json", ck_json, "Machine-readable stdout");
  check->add_option("--junit", ck_junit, "Write a JUnit XML report to this path");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate and refine assertions with an LLM");
  std::string g_spec, g_rtl, g_backend = "replay", g_out = ".", g_clock = "clk_i";
  std::string g_diagram;
  std::vector<std::string> g_vcds, g_params, g_context;
  flow::SessionConfig g_config;
  bool g_resume = false, g_json = false;
  gen->add_option("spec", g_spec, "Natural language specification file")->required();
  gen->add_option("rtl", g_rtl, "Verilog source file")->required();
  gen->add_option("--trace", g_vcds, "VCD trace file (repeatable)")->required();
  gen->add_option("--backend", g_backend, "Backend: replay or http")
      ->check(CLI::IsMember({"replay", "http"}));
  gen->add_option("--fixtures", g_config.fixture_dir, "Replay fixture directory");
  gen->add_option("--endpoint", g_config.endpoint, "HTTP completion endpoint");
  gen->add_option("--model", g_config.model, "Model identifier");
  gen->add_option("--credential-env", g_config.credential_env,
                  "Environment variable holding the API credential");
  gen->add_option("--token-budget", g_config.token_budget, "Approximate context budget");
  gen->add_option("--max-iter", g_config.max_iterations, "Repair iterations per assertion")
      ->check(CLI::PositiveNumber);
  gen->add_flag("--interactive", g_config.interactive_confirm,
                "Confirm every repair prompt on the terminal");
  gen->add_option("--log", g_config.log_path, "Session log path (JSON lines)");
  gen->add_option("--out", g_out, "Output directory");
  gen->add_option("--param", g_params, "Parameter override name=value (repeatable)");
  gen->add_option("--context", g_context, "Context document (repeatable)");
  gen->add_option("--block-diagram", g_diagram, "Block diagram description file");
  gen->add_option("--clock", g_clock, "Clock signal name for VCD ingest");
  gen->add_option("--fixed-timestamp", g_config.fixed_timestamp,
                  "Stamp prompts with this fixed timestamp");
  gen->add_flag("--resume", g_resume, "Continue from the session log's last snapshot");
  gen->add_flag("--json", g_json, "Machine-readable stdout");

  // compare
  auto* cmp = app.add_subcommand("compare", "Match two assertion sets");
  std::string cp_left, cp_right, cp_rtl;
  ProbeFlags cp_probes;
  bool cp_json = false;
  cmp->add_option("left", cp_left, "Left assertion file")->required();
  cmp->add_option("right", cp_right, "Right assertion file")->required();
  cmp->add_option("--rtl", cp_rtl, "RTL providing signal widths")->required();
  add_probe_flags(cmp, cp_probes);
  cmp->add_flag("--json", cp_json, "Machine-readable stdout");

  // report
  auto* rep = app.add_subcommand("report", "Render session results as tables");
  std::vector<std::string> rp_logs, rp_vcds;
  std::string rp_ref, rp_alt, rp_rtl, rp_out = ".";
  ProbeFlags rp_probes;
  bool rp_json = false;
  rep->add_option("--session", rp_logs, "Session log (repeatable)")->required();
  rep->add_option("--ref", rp_ref, "Reference assertion set");
  rep->add_option("--alt", rp_alt, "Alternate assertion set");
  rep->add_option("--rtl", rp_rtl, "RTL providing signal widths")->required();
  rep->add_option("--trace", rp_vcds, "Verification trace for the span column (repeatable)");
  add_probe_flags(rep, rp_probes);
  rep->add_option("--out", rp_out, "Output directory");
  rep->add_flag("--json", rp_json, "Machine-readable stdout");

  std::string cfg_path;
  for (CLI::App* sub : {extract, lint, check, gen, cmp, rep})
    sub->add_option("--config", cfg_path, "Flat key=value config file; flags override it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!cfg_path.empty()) {
    try {
      for (CLI::App* sub : {extract, lint, check, gen, cmp, rep})
        if (sub->parsed()) apply_config_file(sub, cfg_path);
    } catch (const std::exception& e) {
      std::cerr << "svagen: " << e.what() << "\n";
      return 2;
    }
  }

  try {
    if (extract->parsed()) return cmd_extract(ex_rtl);
    if (lint->parsed()) return cmd_lint(li_files, li_rtl, li_json);
    if (check->parsed())
      return cmd_check(ck_sva, ck_vcds, ck_rtl, ck_params, ck_clock, ck_json, ck_junit);
    if (gen->parsed()) {
      g_config.backend = g_backend == "http" ? flow::BackendKind::Http
                                             : flow::BackendKind::Replay;
      return cmd_gen(g_spec, g_rtl, g_vcds, g_config, g_params, g_context, g_diagram,
                     g_out, g_clock, g_resume, g_json);
    }
    if (cmp->parsed()) return cmd_compare(cp_left, cp_right, cp_rtl, cp_probes, cp_json);
    if (rep->parsed())
      return cmd_report(rp_logs, rp_ref, rp_alt, rp_rtl, rp_vcds, rp_probes, rp_out,
                        rp_json);
  } catch (const std::exception& e) {
    std::cerr << "svagen: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
