// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "svagen/diagnostics.hpp"
#include "svagen/sva_ast.hpp"
#include "svagen/trace.hpp"

namespace svagen::compare {

// How two assertions were judged common. Behavioral agreement over
// probe traces under-approximates semantic equivalence, so user-facing
// output labels it "probe-consistent", never "equivalent".
enum class MatchKind { Structural, Behavioral, None };

struct MatchVerdict {
  std::string left;   // empty for an unmatched right-side assertion
  std::string right;  // empty for an unmatched left-side assertion
  MatchKind kind = MatchKind::None;
  double probe_agreement = 0.0;  // fraction of probes with equal triples
  bool operator==(const MatchVerdict&) const = default;
};

struct VerdictTriple {
  int passes = 0;
  int fails = 0;
  int vacuous = 0;
  bool operator==(const VerdictTriple&) const = default;
};

struct VectorResult {
  std::vector<VerdictTriple> triples;  // empty when diagnostics carry an error
  std::vector<Diagnostic> diagnostics;
};

// One (passes, fails, vacuous) triple per probe, via the evaluator.
// pre: probes nonempty; ast unbound and evaluable on every probe.
// errors: EmptyProbeSet, UnexpandedGenerate, SignalMissingFromTrace.
VectorResult verdict_vector(const sva::AssertionAst& ast,
                            const std::vector<trace::Trace>& probes);

struct MatchResult {
  int count = 0;  // matched pairs
  std::vector<MatchVerdict> pairs;
  std::vector<Diagnostic> diagnostics;
};

// Greedy maximum matching, structural first: pairs whose normalized
// ASTs are equal (names and origin ignored), then remaining assertions
// whose verdict vectors agree on every probe (threshold exactly 1.0).
// Each assertion matches at most once; declaration order decides ties.
// Assertions a probe set cannot evaluate (missing signals, unexpanded
// generate loops) are excluded from behavioral matching with a warning
// and can still match structurally. Swapping left and right preserves
// count.
MatchResult match_sets(const std::vector<sva::AssertionAst>& left,
                       const std::vector<sva::AssertionAst>& right,
                       const std::vector<trace::Trace>& probes);

// JSON object with count, pairs, and diagnostics; stable field order.
std::string match_result_to_json(const MatchResult& result);

// Fixed-width table; behavioral rows read "probe-consistent".
std::string render_match_table(const MatchResult& result);

}  // namespace svagen::compare
