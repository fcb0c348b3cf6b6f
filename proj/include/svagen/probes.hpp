// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svagen/trace.hpp"

namespace svagen::trace {

// Knobs for the randomized probe traces behavioral comparison runs on.
// The seed is part of the reproducibility contract: reports record it,
// and equal configs produce byte-equal probe sets.
struct ProbeConfig {
  int cycles = 12;
  int count = 20;
  std::uint64_t seed = 0x50B5ull;
  double toggle_prob = 0.5;  // chance a signal takes a fresh value each cycle
  std::string clock = "clk_i";
  // Signals pinned to a constant sampled value, e.g. holding reset off
  // so a disable-iff form and an antecedent-guard form see the same
  // attempts.
  std::map<std::string, std::uint64_t> hold;
  // When set, two directed probes are appended: reset asserted for the
  // first three cycles, and reset dropped mid-trace. Active-low.
  std::optional<std::string> reset_signal;
};

// One Trace per probe. Signals and widths come from `widths`; the clock
// is added (and samples 0) if absent. Scalar signals draw from {0,1},
// wider ones uniformly from 0..min(2^width-1, 7) so arithmetic
// relations stay reachable.
std::vector<Trace> generate_probes(const std::map<std::string, int>& widths,
                                   const ProbeConfig& config);

}  // namespace svagen::trace
