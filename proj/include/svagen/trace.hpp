// SPDX-License-Identifier: Apache-2.0
//
// Sampled-trace model shared by the evaluator and the oracle.
//
// A Trace holds, per signal, one sampled value per clock rising edge.
// Sampling is preponed: the value at edge k is the signal's value
// immediately BEFORE edge_times[k] (last change at a strictly earlier
// timestamp). Scalars sample to {0, 1, unknown}; vectors to a 64-bit
// integer or unknown. x/z collapse to unknown.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace svagen::trace {

// nullopt is the unknown value.
using Value = std::optional<std::uint64_t>;

struct Trace {
  int cycles = 0;                        // K, number of clock rising edges
  std::vector<std::int64_t> edge_times;  // strictly increasing, size K
  std::string timescale;                 // as declared, e.g. "1ns"

  // Keyed by signal name; array elements use the flat key "name[i]".
  // Every series has exactly K entries.
  std::map<std::string, std::vector<Value>> signals;
  std::map<std::string, int> widths;  // declared bit widths, 1..64

  bool well_formed() const;
};

struct EvalReport {
  std::string assertion_name;
  int attempts = 0;
  int passes = 0;
  int fails = 0;
  int vacuous = 0;
  int disabled = 0;
  int incomplete = 0;
  // Fails whose refutation crossed an unknown sample; distinguishes
  // x/z-driven failures from definite ones.
  int unknown_fails = 0;
  std::vector<int> fail_cycles;  // attempt anchor cycles, size == fails
  std::string first_failure_message;

  bool operator==(const EvalReport&) const = default;
  bool counts_consistent() const {
    return attempts == passes + fails + vacuous + disabled + incomplete &&
           static_cast<int>(fail_cycles.size()) == fails;
  }
};

// Report assembly shared by evaluate and oracle_evaluate so their outputs
// are byte-comparable. This formats text only; it encodes no evaluation
// semantics.
std::string format_failure_message(const std::string& assertion_name,
                                   const std::string& expectation_text,
                                   int anchor_cycle, int check_cycle);

// Stable-field-order JSON rendering of a report.
std::string report_to_json(const EvalReport& r);

}  // namespace svagen::trace
