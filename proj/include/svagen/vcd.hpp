// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svagen/diagnostics.hpp"
#include "svagen/trace.hpp"

namespace svagen::trace {

struct IngestResult {
  std::optional<Trace> trace;  // absent when diagnostics carry an error
  std::vector<Diagnostic> diagnostics;
};

// Parses the VCD subset ($timescale, $scope/$var/$upscope,
// $enddefinitions, $dumpvars, #time sections with scalar and `b` vector
// changes) and samples every declared signal at each rising edge
// (0 -> 1) of `clock` under the preponed convention: the sample at an
// edge is the value from the last change at a strictly earlier
// timestamp. x/z collapse to unknown; a vector change containing any
// x/z bit samples as wholly unknown.
//
// An array element variable declared as `$var wire 1 ! intr [0] $end`
// is keyed "intr[0]"; a vector bit-range suffix like [11:0] is part of
// the width declaration and is dropped from the key.
//
// Errors: ClockNotFound, MalformedVcd (message carries the line
// number), NoEdges (the clock never rises; an empty trace would make
// every assertion vacuously clean, so this is refused).
IngestResult ingest_vcd(const std::string& source, const std::string& clock);

}  // namespace svagen::trace
