// SPDX-License-Identifier: Apache-2.0
//
// Drives the installed binary as a subprocess; covers exit codes and
// output surface, not library logic.
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "svagen/util.hpp"

namespace {

namespace fs = std::filesystem;

const std::string kBin = SVAGEN_BIN;
const std::string kFixtures = FIXTURES_DIR;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp_or_empty(const fs::path& p) {
  try {
    return svagen::read_file(p.string());
  } catch (const std::exception&) {
    return {};
  }
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
  static int serial = 0;
  fs::path base = fs::temp_directory_path() / ("svagen_cli_" + std::to_string(++serial));
  fs::path out = base.string() + ".out", err = base.string() + ".err";
  std::string cmd = env_prefix + kBin + " " + args + " >" + out.string() + " 2>" +
                    err.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp_or_empty(out);
  r.err = slurp_or_empty(err);
  fs::remove(out);
  fs::remove(err);
  return r;
}

std::string fresh_dir(const std::string& tag) {
  fs::path d = fs::temp_directory_path() / ("svagen_cli_dir_" + tag);
  fs::remove_all(d);
  fs::create_directories(d);
  return d.string();
}

std::string fx(const std::string& rel) { return kFixtures + "/" + rel; }

std::string gen_args(const std::string& out_dir) {
  return "gen " + fx("docs/rv_timer_spec.txt") + " " + fx("rtl/rv_timer.sv") +
         " --trace " + fx("traces/rv_timer_session.vcd") + " --backend replay --fixtures " +
         fx("replay/rv_timer") + " --context " + fx("docs/rv_timer_context.txt") +
         " --fixed-timestamp 2026-01-01T00:00:00Z --out " + out_dir;
}

}  // namespace

TEST_CASE("cli: extract") {
  SUBCASE("timer module inventory as JSON") {
    auto r = run_cli("extract " + fx("rtl/rv_timer.sv"));
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    CHECK(j["module"] == "rv_timer");
    bool saw_clk = false, saw_intr = false;
    for (const auto& s : j["signals"]) {
      saw_clk |= s["name"] == "clk_i";
      saw_intr |= s["name"] == "intr";
    }
    CHECK(saw_clk);
    CHECK(saw_intr);
  }

  SUBCASE("missing file is a usage error") {
    auto r = run_cli("extract " + fx("rtl/no_such_file.sv"));
    CHECK(r.exit_code == 2);
    CHECK_FALSE(r.err.empty());
  }

  SUBCASE("empty module still yields JSON") {
    auto r = run_cli("extract " + fx("rtl/empty_module.sv"));
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    CHECK(j["module"] == "empty_module");
    CHECK(j["signals"].empty());
  }
}

TEST_CASE("cli: lint") {
  SUBCASE("clean file against the RTL") {
    auto r = run_cli("lint " + fx("corpus/rv_timer_modified1.sva") + " --rtl " +
                     fx("rtl/rv_timer.sv"));
    CHECK(r.exit_code == 0);
  }

  SUBCASE("unknown signals surface as errors") {
    auto r = run_cli("lint " + fx("cli/bad_signal.sva") + " --rtl " + fx("rtl/rv_timer.sv"));
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("UnknownSignal") != std::string::npos);
  }
}

TEST_CASE("cli: check") {
  const std::string vcd = fx("traces/rv_timer_session.vcd");

  SUBCASE("passing assertion exits zero") {
    auto r = run_cli("check " + fx("corpus/rv_timer_modified1.sva") + " --trace " + vcd);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("OK") != std::string::npos);
  }

  SUBCASE("failing assertion exits one and names the cycle") {
    auto r = run_cli("check " + fx("corpus/rv_timer_assertion1.sva") + " --trace " + vcd);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("cycle 10") != std::string::npos);
  }

  SUBCASE("unknown signal with RTL context is a usage error") {
    auto r = run_cli("check " + fx("cli/bad_signal.sva") + " --trace " + vcd + " --rtl " +
                     fx("rtl/rv_timer.sv"));
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("UnknownSignal") != std::string::npos);
  }

  SUBCASE("generate expansion through --rtl parameters") {
    auto r = run_cli("check " + fx("corpus/rv_timer_assertions4_7.sva") + " --trace " + vcd +
                     " --rtl " + fx("rtl/rv_timer.sv") + " --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    // 2 plain assertions + two generate loops of N=2 instances, one trace.
    CHECK(j.size() == 6);
    bool saw_instance = false;
    for (const auto& e : j) saw_instance |= e["assertion"] == "mtime_exceed_0";
    CHECK(saw_instance);
  }

  SUBCASE("junit output lists the failure") {
    auto dir = fresh_dir("junit");
    auto r = run_cli("check " + fx("corpus/rv_timer_assertion1.sva") + " --trace " + vcd +
                     " --junit " + dir + "/check.xml");
    CHECK(r.exit_code == 1);
    std::string xml = slurp_or_empty(dir + "/check.xml");
    CHECK(xml.find("<testsuite name=\"svagen-check\" tests=\"1\" failures=\"1\">") !=
          std::string::npos);
    CHECK(xml.find("tick_count_reset@0") != std::string::npos);
    CHECK(xml.find("<failure message=") != std::string::npos);
  }
}

TEST_CASE("cli: gen with the replay backend") {
  SUBCASE("full fixture run emits seven passing assertions") {
    auto dir = fresh_dir("gen_full");
    auto r = run_cli(gen_args(dir) + " --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    CHECK(j["design"] == "rv_timer");
    CHECK(j["queries"] == 7);
    REQUIRE(j["assertions"].size() == 7);
    for (const auto& a : j["assertions"]) CHECK(a["status"] == "passing");
    std::string sva = slurp_or_empty(dir + "/rv_timer_assertions.sva");
    CHECK_FALSE(sva.empty());
    CHECK(slurp_or_empty(dir + "/session.jsonl").find("\"type\":\"snapshot\"") !=
          std::string::npos);

    SUBCASE("resume on a finished log replays nothing and still succeeds") {
      auto r2 = run_cli(gen_args(dir) + " --resume");
      CHECK(r2.exit_code == 0);
      CHECK(r2.out.find("7 passing") != std::string::npos);
    }
  }

  SUBCASE("iteration cap turns the session into exit one") {
    auto dir = fresh_dir("gen_cap");
    auto r = run_cli(gen_args(dir) + " --max-iter 1");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("abandoned") != std::string::npos);
  }

  SUBCASE("config file values are overridden by flags") {
    auto dir = fresh_dir("gen_cfg");
    svagen::write_file(dir + "/svagen.ini", "max-iter=1\n");
    auto with_cfg = run_cli(gen_args(dir) + " --config " + dir + "/svagen.ini");
    CHECK(with_cfg.exit_code == 1);  // config cap applies
    auto dir2 = fresh_dir("gen_cfg2");
    svagen::write_file(dir2 + "/svagen.ini", "max-iter=1\n");
    auto overridden = run_cli(gen_args(dir2) + " --config " + dir2 + "/svagen.ini" +
                              " --max-iter 5");
    CHECK(overridden.exit_code == 0);  // flag wins
  }

  SUBCASE("http backend without a credential exits three") {
    auto dir = fresh_dir("gen_http");
    auto r = run_cli("gen " + fx("docs/rv_timer_spec.txt") + " " + fx("rtl/rv_timer.sv") +
                         " --trace " + fx("traces/rv_timer_session.vcd") +
                         " --backend http --endpoint http://127.0.0.1:1/v1 --out " + dir,
                     "env -u SVAGEN_API_KEY ");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("SVAGEN_API_KEY") != std::string::npos);
  }
}

TEST_CASE("cli: compare and report close the loop") {
  auto dir = fresh_dir("loop");
  auto gen = run_cli(gen_args(dir));
  REQUIRE(gen.exit_code == 0);
  const std::string hold = " --hold rst_ni=1 --hold active=1";

  SUBCASE("compare finds the curated commonality") {
    auto r = run_cli("compare " + dir + "/rv_timer_assertions.sva " +
                     fx("altset/rv_timer_alt.sva") + " --rtl " + fx("rtl/rv_timer.sv") +
                     hold);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("common: 5") != std::string::npos);
    CHECK(r.out.find("probe-consistent") != std::string::npos);

    auto j = run_cli("compare " + dir + "/rv_timer_assertions.sva " +
                     fx("altset/rv_timer_alt.sva") + " --rtl " + fx("rtl/rv_timer.sv") +
                     hold + " --json");
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out, nullptr, false);
    REQUIRE_FALSE(parsed.is_discarded());
    CHECK(parsed["common"] == 5);
  }

  SUBCASE("report renders the session into the three artifacts") {
    auto r = run_cli("report --session " + dir + "/session.jsonl --ref " +
                     fx("altset/rv_timer_alt.sva") + " --alt " +
                     fx("altset/rv_timer_alt.sva") + " --rtl " + fx("rtl/rv_timer.sv") +
                     " --trace " + fx("traces/rv_timer_session.vcd") + hold + " --out " +
                     dir + "/rep");
    CHECK(r.exit_code == 0);
    std::string md = slurp_or_empty(dir + "/rep/report.md");
    CHECK(md.find("| rv_timer | 11 | 7 | 11 | 5 | 230 |") != std::string::npos);
    CHECK(md.find("locally measured") != std::string::npos);
    CHECK(slurp_or_empty(dir + "/rep/report.csv").find("rv_timer,11,7,11,5,230") !=
          std::string::npos);
    CHECK(slurp_or_empty(dir + "/rep/iterations.csv")
              .find("rv_timer,generated,4,locally measured") != std::string::npos);
  }

  SUBCASE("missing session log is a usage error") {
    auto r = run_cli("report --session " + dir + "/absent.jsonl --rtl " +
                     fx("rtl/rv_timer.sv"));
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("cli: usage errors") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("check --trace x.vcd").exit_code == 2);  // missing positional
  auto help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("extract") != std::string::npos);
}
