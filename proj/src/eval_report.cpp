// SPDX-License-Identifier: Apache-2.0
#include <json.hpp>

#include "svagen/trace.hpp"

namespace svagen::trace {

bool Trace::well_formed() const {
  if (static_cast<int>(edge_times.size()) != cycles) return false;
  for (std::size_t i = 1; i < edge_times.size(); ++i)
    if (edge_times[i] <= edge_times[i - 1]) return false;
  for (const auto& [name, series] : signals)
    if (static_cast<int>(series.size()) != cycles) return false;
  return true;
}

std::string format_failure_message(const std::string& assertion_name,
                                   const std::string& expectation_text,
                                   int anchor_cycle, int check_cycle) {
  std::string m = "assertion '" + assertion_name + "': '" + expectation_text +
                  "' expected to hold from cycle " + std::to_string(check_cycle);
  m += " (attempt started at cycle " + std::to_string(anchor_cycle) + ")";
  return m;
}

std::string report_to_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["assertion"] = r.assertion_name;
  j["attempts"] = r.attempts;
  j["passes"] = r.passes;
  j["fails"] = r.fails;
  j["vacuous"] = r.vacuous;
  j["disabled"] = r.disabled;
  j["incomplete"] = r.incomplete;
  j["unknown_fails"] = r.unknown_fails;
  j["fail_cycles"] = r.fail_cycles;
  if (r.fails > 0) j["first_failure"] = r.first_failure_message;
  return j.dump(2);
}

}  // namespace svagen::trace
