// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "svagen/sva_json.hpp"
#include "svagen/sva_normalize.hpp"
#include "svagen/sva_parser.hpp"
#include "svagen/sva_printer.hpp"
#include "svagen/sva_semantics.hpp"
#include "svagen/util.hpp"
#include "svagen/verilog_extract.hpp"
#include "test_helpers.hpp"

using namespace svagen;
using namespace svagen::sva;

namespace {
AssertionAst parse_one(const std::string& src) {
  auto r = parse_assertions(src);
  REQUIRE(r.assertions.size() == 1);
  return r.assertions[0];
}
}  // namespace

TEST_CASE("non-overlapping implication desugars to overlapping with lead shift") {
  AssertionAst a = parse_one(
      "property p;\n@(posedge clk_i) (tick_count >= prescaler && active) |=> tick;\n"
      "endproperty\nassert property(p);\n");
  AssertionAst n = normalize(a);
  REQUIRE(n.body.impl_kind.has_value());
  CHECK(*n.body.impl_kind == ImplKind::Overlapping);
  CHECK(n.body.consequent->lead == DelayRange{1, 1});
  // A |=> with an existing lead shifts further.
  AssertionAst b = parse_one(
      "property p;\n@(posedge clk_i) active |=> ##[1:2] tick;\nendproperty\n");
  AssertionAst nb = normalize(b);
  CHECK(nb.body.consequent->lead == DelayRange{2, 3});
}

TEST_CASE("commutative operands are sorted deterministically") {
  AssertionAst a = parse_one(
      "property p;\n@(posedge clk_i) (tick && active && req) |-> tick;\nendproperty\n");
  AssertionAst b = parse_one(
      "property p;\n@(posedge clk_i) (req && tick && active) |-> tick;\nendproperty\n");
  AssertionAst na = normalize(a);
  AssertionAst nb = normalize(b);
  CHECK(expr_equal(na.body.antecedent.elements[0], nb.body.antecedent.elements[0]));
  CHECK(print_expr(na.body.antecedent.elements[0]) == "active && req && tick");
}

TEST_CASE("equality operands are ordered by canonical print") {
  AssertionAst a = parse_one(
      "property p;\n@(posedge clk_i) (prescaler == tick_count) |-> tick;\nendproperty\n");
  AssertionAst b = parse_one(
      "property p;\n@(posedge clk_i) (tick_count == prescaler) |-> tick;\nendproperty\n");
  CHECK(expr_equal(normalize(a).body.antecedent.elements[0],
                   normalize(b).body.antecedent.elements[0]));
}

TEST_CASE("double negation is removed") {
  ExprPtr e = make_not(make_not(make_ident("tick")));
  CHECK(expr_equal(normalize_expr(e), make_ident("tick")));
  ExprPtr deep = make_not(make_not(make_not(make_ident("tick"))));
  CHECK(expr_equal(normalize_expr(deep), make_not(make_ident("tick"))));
}

TEST_CASE("normalize keeps disable-iff and antecedent guard forms distinct") {
  AssertionAst guard_form = parse_one(read_file(
      std::string(FIXTURES_DIR) + "/corpus/compare_assertion12.sva"));
  AssertionAst disable_form = parse_one(read_file(
      std::string(FIXTURES_DIR) + "/corpus/compare_assertion11.sva"));
  AssertionAst ng = normalize(guard_form);
  AssertionAst nd = normalize(disable_form);
  CHECK(nd.disable_expr != nullptr);
  CHECK(ng.disable_expr == nullptr);
  // The guard stays in the antecedent; no cross-form rewriting.
  CHECK(ng.body.antecedent.elements.size() == 1);
  CHECK(print_expr(ng.body.antecedent.elements[0]).find("rst_ni") != std::string::npos);
}

TEST_CASE("normalize is idempotent over corpus and fuzzed asts") {
  std::mt19937_64 rng(0x1D3A);
  testgen::Vocab vocab;
  for (int i = 0; i < 200; ++i) {
    AssertionAst a = testgen::rand_assertion(rng, vocab, i);
    AssertionAst n1 = normalize(a);
    AssertionAst n2 = normalize(n1);
    CHECK(ast_equal(n1, n2));
  }
}

TEST_CASE("expand_generate substitutes the loop variable") {
  auto r = parse_assertions(
      read_file(std::string(FIXTURES_DIR) + "/corpus/rv_timer_assertions4_7.sva"));
  REQUIRE(r.assertions.size() == 4);
  const AssertionAst& a6 = r.assertions[2];
  std::map<std::string, std::int64_t> params{{"N", 2}};
  auto ex = expand_generate(a6, params);
  CHECK(ex.diagnostics.empty());
  REQUIRE(ex.assertions.size() == 2);
  CHECK(ex.assertions[0].name == "mtime_exceed_0");
  CHECK(ex.assertions[1].name == "mtime_exceed_1");
  CHECK_FALSE(ex.assertions[0].binding.has_value());
  std::string p0 = pretty_print(ex.assertions[0]);
  std::string p1 = pretty_print(ex.assertions[1]);
  CHECK(p0.find("mtimecmp[0]") != std::string::npos);
  CHECK(p0.find("intr[0]") != std::string::npos);
  CHECK(p1.find("mtimecmp[1]") != std::string::npos);
  CHECK(p1.find("intr[1]") != std::string::npos);

  // Identity on unbound ASTs.
  auto id = expand_generate(r.assertions[0], {});
  REQUIRE(id.assertions.size() == 1);
  CHECK(ast_equal(id.assertions[0], r.assertions[0]));

  // N=1 instantiates a single assertion.
  const AssertionAst& a7 = r.assertions[3];
  auto one = expand_generate(a7, {{"N", 1}});
  REQUIRE(one.assertions.size() == 1);
  CHECK(one.assertions[0].name == "interrupt_assert_0");

  // Unknown bound parameter is diagnosed.
  auto bad = expand_generate(a6, {});
  CHECK(bad.assertions.empty());
  REQUIRE(bad.diagnostics.size() == 1);
  CHECK(bad.diagnostics[0].code == "UnboundParameter");
}

TEST_CASE("check_semantics flags unknown signals") {
  auto inv_r = rtl::extract_signals(
      "module hmac(input clk, input rstt_n, input msg_fifo_req, input hmac_ena,"
      " output logic reg_hash_start); endmodule");
  REQUIRE(inv_r.inventory.has_value());
  AssertionAst a = parse_one(
      read_file(std::string(FIXTURES_DIR) + "/corpus/hmac_process_start.sva"));
  auto diags = check_semantics(a, *inv_r.inventory);
  int unknown = 0;
  bool saw_reqq = false, saw_startt = false;
  for (const auto& d : diags) {
    if (d.code == "UnknownSignal") {
      ++unknown;
      CHECK(d.severity == Severity::Error);
      CHECK(d.span.end > d.span.begin);
      if (d.message.find("msg_fifo_reqq") != std::string::npos) saw_reqq = true;
      if (d.message.find("reg_hash_startt") != std::string::npos) saw_startt = true;
    }
  }
  CHECK(unknown == 2);
  CHECK(saw_reqq);
  CHECK(saw_startt);
}

TEST_CASE("check_semantics passes a fully resolved assertion") {
  std::string rtl_src = read_file(std::string(FIXTURES_DIR) + "/rtl/rv_timer.sv");
  auto inv = rtl::extract_signals(rtl_src);
  REQUIRE(inv.inventory.has_value());
  AssertionAst a = parse_one(
      read_file(std::string(FIXTURES_DIR) + "/corpus/rv_timer_modified1.sva"));
  CHECK(check_semantics(a, *inv.inventory).empty());
}

TEST_CASE("check_semantics accepts array indexing through the loop variable") {
  std::string rtl_src = read_file(std::string(FIXTURES_DIR) + "/rtl/rv_timer.sv");
  auto inv = rtl::extract_signals(rtl_src);
  REQUIRE(inv.inventory.has_value());
  auto r = parse_assertions(
      read_file(std::string(FIXTURES_DIR) + "/corpus/rv_timer_assertions4_7.sva"));
  const AssertionAst& a6 = r.assertions[2];
  auto diags = check_semantics(a6, *inv.inventory);
  for (const auto& d : diags) CHECK(d.code != "IndexOnScalar");
  CHECK_FALSE(has_errors(diags));
}

TEST_CASE("check_semantics warns on scalar indexing and reset-free disable") {
  auto inv = rtl::extract_signals(
      "module m(input clk_i, input rst_ni, input tick, input mode); endmodule");
  REQUIRE(inv.inventory.has_value());
  AssertionAst a = parse_one(
      "property p;\n@(posedge clk_i) disable iff (!mode) tick[0] |-> tick;\n"
      "endproperty\nassert property(p);\n");
  auto diags = check_semantics(a, *inv.inventory);
  bool scalar = false, reset = false;
  for (const auto& d : diags) {
    if (d.code == "IndexOnScalar") scalar = true;
    if (d.code == "SuspiciousReset") reset = true;
  }
  CHECK(scalar);
  CHECK(reset);
}

TEST_CASE("ast json carries a schema version and stable fields") {
  AssertionAst a = parse_one(
      read_file(std::string(FIXTURES_DIR) + "/corpus/rv_timer_modified1.sva"));
  std::string j = ast_to_json(a);
  CHECK(j.find("\"schema\": 1") != std::string::npos);
  CHECK(j.find("\"name\": \"tick_count_reset\"") != std::string::npos);
  CHECK(j.find("\"clock\": \"clk_i\"") != std::string::npos);
  CHECK(j.find("\"impl\": \"|->\"") != std::string::npos);
  CHECK(ast_to_json(a) == j);
}
