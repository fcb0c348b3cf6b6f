// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "svagen/sva_parser.hpp"
#include "svagen/sva_printer.hpp"
#include "svagen/util.hpp"
#include "test_helpers.hpp"

using namespace svagen;
using namespace svagen::sva;

namespace {

std::string corpus_file(const std::string& name) {
  return read_file(std::string(FIXTURES_DIR) + "/corpus/" + name);
}

const std::vector<std::pair<std::string, std::size_t>>& corpus_expected() {
  static const std::vector<std::pair<std::string, std::size_t>> files = {
      {"intro_correctness.sva", 1}, {"intro_consistency.sva", 2},
      {"rv_timer_assertion1.sva", 1}, {"rv_timer_assertion2.sva", 1},
      {"rv_timer_assertion3.sva", 1}, {"rv_timer_modified1.sva", 1},
      {"rv_timer_modified2.sva", 1}, {"rv_timer_assertions4_7.sva", 4},
      {"hmac_process_start.sva", 1}, {"rom_ctrl_assertions8_10.sva", 3},
      {"compare_assertion11.sva", 1}, {"compare_assertion12.sva", 1}};
  return files;
}

}  // namespace

TEST_CASE("empty input parses to nothing") {
  auto r = parse_assertions("");
  CHECK(r.assertions.empty());
  CHECK(r.diagnostics.empty());
}

TEST_CASE("corpus parses with zero errors and expected counts") {
  for (const auto& [name, count] : corpus_expected()) {
    CAPTURE(name);
    auto r = parse_assertions(corpus_file(name));
    for (const auto& d : r.diagnostics) {
      CAPTURE(format_diagnostic(d));
      CHECK(d.severity == Severity::Warning);
    }
    CHECK(r.assertions.size() == count);
  }
}

TEST_CASE("modified assertion 1 has the documented shape") {
  auto r = parse_assertions(corpus_file("rv_timer_modified1.sva"));
  REQUIRE(r.assertions.size() == 1);
  const AssertionAst& a = r.assertions[0];
  CHECK(a.name == "tick_count_reset");
  CHECK(a.clock == "clk_i");
  REQUIRE(a.disable_expr != nullptr);
  CHECK(expr_equal(a.disable_expr, make_not(make_ident("rst_ni"))));
  REQUIRE(a.body.impl_kind.has_value());
  CHECK(*a.body.impl_kind == ImplKind::Overlapping);
  REQUIRE(a.body.antecedent.elements.size() == 1);
  CHECK(expr_equal(a.body.antecedent.elements[0], make_not(make_ident("active"))));
  REQUIRE(a.body.consequent.has_value());
  CHECK(a.body.consequent->lead == DelayRange{1, 1});
  REQUIRE(a.body.consequent->elements.size() == 1);
  CHECK(expr_equal(a.body.consequent->elements[0],
                   make_cmp(CmpOp::Eq, make_ident("tick_count"), make_int(0))));
}

TEST_CASE("raw assertion 2 is non-overlapping") {
  auto r = parse_assertions(corpus_file("rv_timer_assertion2.sva"));
  REQUIRE(r.assertions.size() == 1);
  REQUIRE(r.assertions[0].body.impl_kind.has_value());
  CHECK(*r.assertions[0].body.impl_kind == ImplKind::NonOverlapping);
}

TEST_CASE("intro consistency delay range parses") {
  auto r = parse_assertions(corpus_file("intro_consistency.sva"));
  REQUIRE(r.assertions.size() == 2);
  const AssertionAst& a = r.assertions[0];
  REQUIRE(a.body.consequent.has_value());
  CHECK(a.body.consequent->lead == DelayRange{1, 2});
  CHECK(expr_equal(a.body.consequent->elements[0],
                   make_cmp(CmpOp::Eq, make_ident("ack"), make_int(1))));
}

TEST_CASE("generate blocks capture bindings") {
  auto r = parse_assertions(corpus_file("rv_timer_assertions4_7.sva"));
  REQUIRE(r.assertions.size() == 4);
  CHECK(r.assertions[0].name == "tick_count_prescaler");
  CHECK(r.assertions[1].name == "update_mtime_d");
  CHECK_FALSE(r.assertions[1].body.impl_kind.has_value());
  const AssertionAst& a6 = r.assertions[2];
  CHECK(a6.name == "mtime_exceed");
  REQUIRE(a6.binding.has_value());
  CHECK(a6.binding->loop_var == "t");
  CHECK(a6.binding->lower == 0);
  REQUIRE(std::holds_alternative<std::string>(a6.binding->upper_exclusive));
  CHECK(std::get<std::string>(a6.binding->upper_exclusive) == "N");
  const AssertionAst& a7 = r.assertions[3];
  CHECK(a7.name == "interrupt_assert");
  REQUIRE(a7.binding.has_value());
  CHECK(a7.binding->loop_var == "t");
  // Both assertions index through the loop variable.
  REQUIRE(a6.body.consequent.has_value());
  const ExprPtr& c6 = a6.body.consequent->elements[0];
  REQUIRE(c6->kind == ExprKind::Ident);
  CHECK(c6->name == "intr");
  REQUIRE(c6->index.has_value());
  CHECK(std::get<std::string>(*c6->index) == "t");
}

TEST_CASE("hmac listing tolerances produce warnings only") {
  auto r = parse_assertions(corpus_file("hmac_process_start.sva"));
  REQUIRE(r.assertions.size() == 1);
  CHECK_FALSE(has_errors(r.diagnostics));
  const AssertionAst& a = r.assertions[0];
  CHECK(a.name == "HMAC_process_start");
  CHECK(a.clock == "clk");
  REQUIRE(a.disable_expr != nullptr);
  CHECK(expr_equal(a.disable_expr, make_ident("rstt_n")));
  auto has_warning = [&](const char* code) {
    for (const auto& d : r.diagnostics)
      if (d.code == code) return true;
    return false;
  };
  CHECK(has_warning("StrayParen"));
  CHECK(has_warning("ActionBlock"));
  CHECK(has_warning("BareAssert"));
  CHECK(has_warning("SpacedEndProperty"));
}

TEST_CASE("rom ctrl listing recovers from missing endproperty and typo'd assert") {
  auto r = parse_assertions(corpus_file("rom_ctrl_assertions8_10.sva"));
  REQUIRE(r.assertions.size() == 3);
  CHECK_FALSE(has_errors(r.diagnostics));
  CHECK(r.assertions[0].name == "Checker_done");
  CHECK(r.assertions[1].name == "Counter_done");
  CHECK(r.assertions[2].name == "Current_state");
  // The quoted state labels survive as symbolic literals.
  const ExprPtr& ante8 = r.assertions[0].body.antecedent.elements[0];
  std::string printed = print_expr(ante8);
  CHECK(printed.find("'Checking'") != std::string::npos);
  CHECK(printed.find("'Done'") != std::string::npos);
  const ExprPtr& cons9 = r.assertions[1].body.consequent->elements[0];
  CHECK(print_expr(cons9).find("'Reading Low'") != std::string::npos);
  auto count_warning = [&](const char* code) {
    int n = 0;
    for (const auto& d : r.diagnostics)
      if (d.code == code) ++n;
    return n;
  };
  CHECK(count_warning("MissingEndproperty") == 3);
  CHECK(count_warning("CaseEquality") >= 4);
  CHECK(count_warning("AssertNameMismatch") == 1);
  CHECK(count_warning("UnclosedParen") >= 1);
}

TEST_CASE("nested implication is rejected with a diagnostic") {
  auto r = parse_assertions(
      "property p;\n@(posedge clk) a |-> b |=> c;\nendproperty\nassert property(p);\n");
  CHECK(r.assertions.empty());
  bool found = false;
  for (const auto& d : r.diagnostics)
    if (d.code == "NestedImplication" && d.severity == Severity::Error) found = true;
  CHECK(found);
}

TEST_CASE("malformed property is skipped without aborting the rest") {
  std::string src =
      "property broken;\n@(posedge clk_i) (tick_count >= prescaler && ) |=> tick;\n"
      "endproperty\nassert property(broken);\n"
      "property good;\n@(posedge clk_i) active |-> tick;\nendproperty\n"
      "assert property(good);\n";
  auto r = parse_assertions(src);
  REQUIRE(r.assertions.size() == 1);
  CHECK(r.assertions[0].name == "good");
  CHECK(has_errors(r.diagnostics));
  for (const auto& d : r.diagnostics)
    if (d.severity == Severity::Error) CHECK(d.span.end > d.span.begin);
}

TEST_CASE("unknown system function in expression position is an error") {
  auto r = parse_assertions(
      "property p;\n@(posedge clk) $countones(x) == 1 |-> y;\nendproperty\n");
  CHECK(r.assertions.empty());
  bool found = false;
  for (const auto& d : r.diagnostics)
    if (d.code == "UnknownSystemFunction" && d.severity == Severity::Error) found = true;
  CHECK(found);
}

TEST_CASE("parser never aborts on arbitrary bytes") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t len = rng() % 300;
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<char>(rng() % 256));
    auto r = parse_assertions(s);  // must not crash or hang
    (void)r;
  }
  // Token soup biased toward the grammar's own vocabulary.
  const char* words[] = {"property", "endproperty", "assert",  "generate", "##1",
                         "|->",      "|=>",         "(",       ")",        "disable",
                         "iff",      "!",           "&&",      "tick",     "==",
                         "$past",    "0",           ";",       "@",        "posedge",
                         "for",      "begin",       "end",     "'Bad'",    "[",
                         "]",        "t",           "endgenerate"};
  for (int iter = 0; iter < 300; ++iter) {
    std::string s;
    int n = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) {
      s += words[rng() % (sizeof(words) / sizeof(words[0]))];
      s += ' ';
    }
    auto r = parse_assertions(s);
    (void)r;
  }
}

TEST_CASE("parse-print round trip over the corpus") {
  for (const auto& [name, count] : corpus_expected()) {
    CAPTURE(name);
    auto r = parse_assertions(corpus_file(name));
    REQUIRE(r.assertions.size() == count);
    for (const AssertionAst& a : r.assertions) {
      std::string printed = pretty_print(a);
      CAPTURE(printed);
      auto r2 = parse_assertions(printed);
      REQUIRE(r2.assertions.size() == 1);
      CHECK(ast_equal(r2.assertions[0], a));
      CHECK_FALSE(has_errors(r2.diagnostics));
    }
  }
}

TEST_CASE("parse-print round trip over fuzzed asts") {
  std::mt19937_64 rng(0x5EED01);
  testgen::Vocab vocab;
  for (int i = 0; i < 300; ++i) {
    AssertionAst a = testgen::rand_assertion(rng, vocab, i);
    std::string printed = pretty_print(a);
    CAPTURE(printed);
    auto r = parse_assertions(printed);
    REQUIRE(r.assertions.size() == 1);
    CHECK(ast_equal(r.assertions[0], a));
  }
}
