// SPDX-License-Identifier: Apache-2.0
#include "svagen/compare.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "svagen/eval.hpp"
#include "svagen/sva_normalize.hpp"

namespace svagen::compare {

namespace {

// Structural identity for matching: everything but name and origin.
bool unnamed_equal(const sva::AssertionAst& a, const sva::AssertionAst& b) {
  if (a.clock != b.clock) return false;
  if ((a.disable_expr == nullptr) != (b.disable_expr == nullptr)) return false;
  if (a.disable_expr && !sva::expr_equal(a.disable_expr, b.disable_expr)) return false;
  if (!sva::property_equal(a.body, b.body)) return false;
  return a.binding == b.binding;
}

const char* kind_name(MatchKind k) {
  switch (k) {
    case MatchKind::Structural: return "structural";
    case MatchKind::Behavioral: return "behavioral";
    case MatchKind::None: return "none";
  }
  return "none";
}

// Per-set matching state: normalized form, verdict vector when the
// probes can evaluate the assertion, and whether it is already paired.
struct Entry {
  const sva::AssertionAst* ast;
  sva::AssertionAst norm;
  std::optional<std::vector<VerdictTriple>> vec;
  bool matched = false;
};

std::vector<Entry> prepare(const std::vector<sva::AssertionAst>& set,
                           const std::vector<trace::Trace>& probes,
                           std::vector<Diagnostic>& diags) {
  std::vector<Entry> out;
  for (const auto& ast : set) {
    Entry e{&ast, sva::normalize(ast), std::nullopt, false};
    if (!probes.empty()) {
      VectorResult v = verdict_vector(ast, probes);
      if (v.diagnostics.empty()) {
        e.vec = std::move(v.triples);
      } else {
        diags.push_back(make_warning(
            "ProbeCoverage",
            "assertion '" + ast.name + "' excluded from behavioral matching: " +
                v.diagnostics.front().message,
            {}));
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

double agreement(const std::vector<VerdictTriple>& a,
                 const std::vector<VerdictTriple>& b) {
  std::size_t n = std::min(a.size(), b.size());
  if (n == 0) return 0.0;
  std::size_t same = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] == b[i]) ++same;
  return static_cast<double>(same) / static_cast<double>(n);
}

}  // namespace

VectorResult verdict_vector(const sva::AssertionAst& ast,
                            const std::vector<trace::Trace>& probes) {
  VectorResult out;
  if (probes.empty()) {
    out.diagnostics.push_back(make_error("EmptyProbeSet", "no probe traces supplied", {}));
    return out;
  }
  if (ast.binding) {
    out.diagnostics.push_back(make_error(
        "UnexpandedGenerate",
        "assertion '" + ast.name + "' carries a generate loop; expand it first",
        {}));
    return out;
  }
  for (const auto& probe : probes) {
    trace::EvalOutcome r = trace::evaluate(ast, probe);
    if (!r.report) {
      out.triples.clear();
      out.diagnostics = std::move(r.diagnostics);
      return out;
    }
    out.triples.push_back({r.report->passes, r.report->fails, r.report->vacuous});
  }
  return out;
}

MatchResult match_sets(const std::vector<sva::AssertionAst>& left,
                       const std::vector<sva::AssertionAst>& right,
                       const std::vector<trace::Trace>& probes) {
  MatchResult result;
  std::vector<Entry> ls = prepare(left, probes, result.diagnostics);
  std::vector<Entry> rs = prepare(right, probes, result.diagnostics);

  // Pass 1: structural pairs in declaration order. Normalized equality
  // guarantees identical evaluation, so agreement is 1.0 by identity;
  // when both sides evaluated we record the measured value instead.
  for (auto& l : ls) {
    for (auto& r : rs) {
      if (r.matched || !unnamed_equal(l.norm, r.norm)) continue;
      double agree = (l.vec && r.vec) ? agreement(*l.vec, *r.vec) : 1.0;
      result.pairs.push_back({l.ast->name, r.ast->name, MatchKind::Structural, agree});
      l.matched = r.matched = true;
      break;
    }
  }

  // Pass 2: behavioral pairs among the rest, full agreement only.
  for (auto& l : ls) {
    if (l.matched || !l.vec) continue;
    for (auto& r : rs) {
      if (r.matched || !r.vec) continue;
      double agree = agreement(*l.vec, *r.vec);
      if (agree == 1.0) {
        result.pairs.push_back({l.ast->name, r.ast->name, MatchKind::Behavioral, agree});
        l.matched = r.matched = true;
        break;
      }
    }
  }

  result.count = static_cast<int>(result.pairs.size());
  for (const auto& l : ls)
    if (!l.matched) result.pairs.push_back({l.ast->name, "", MatchKind::None, 0.0});
  for (const auto& r : rs)
    if (!r.matched) result.pairs.push_back({"", r.ast->name, MatchKind::None, 0.0});
  return result;
}

std::string match_result_to_json(const MatchResult& result) {
  nlohmann::ordered_json j;
  j["common"] = result.count;
  j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : result.pairs) {
    nlohmann::ordered_json e;
    e["left"] = p.left;
    e["right"] = p.right;
    e["kind"] = kind_name(p.kind);
    e["probe_agreement"] = p.probe_agreement;
    j["pairs"].push_back(std::move(e));
  }
  j["diagnostics"] = nlohmann::ordered_json::array();
  for (const auto& d : result.diagnostics)
    j["diagnostics"].push_back(d.code + ": " + d.message);
  return j.dump(2);
}

std::string render_match_table(const MatchResult& result) {
  std::size_t lw = 4, rw = 5;
  for (const auto& p : result.pairs) {
    lw = std::max(lw, p.left.size());
    rw = std::max(rw, p.right.size());
  }
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  os << pad("left", lw) << "  " << pad("right", rw) << "  match\n";
  for (const auto& p : result.pairs) {
    std::string label;
    switch (p.kind) {
      case MatchKind::Structural: label = "structural"; break;
      case MatchKind::Behavioral: label = "probe-consistent"; break;
      case MatchKind::None: label = "-"; break;
    }
    os << pad(p.left.empty() ? "-" : p.left, lw) << "  "
       << pad(p.right.empty() ? "-" : p.right, rw) << "  " << label << "\n";
  }
  os << "common: " << result.count << "\n";
  return os.str();
}

}  // namespace svagen::compare
