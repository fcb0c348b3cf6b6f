// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace svagen {

enum class Severity { Error, Warning };

// Byte range into the source text, half-open. Error diagnostics always
// carry a nonempty span.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;  // short stable identifier, e.g. "UnknownSignal"
  std::string message;
  Span span;
};

inline Diagnostic make_error(std::string code, std::string message, Span span) {
  return Diagnostic{Severity::Error, std::move(code), std::move(message), span};
}

inline Diagnostic make_warning(std::string code, std::string message, Span span) {
  return Diagnostic{Severity::Warning, std::move(code), std::move(message), span};
}

inline bool has_errors(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags)
    if (d.severity == Severity::Error) return true;
  return false;
}

std::string format_diagnostic(const Diagnostic& d);
std::string format_diagnostics(const std::vector<Diagnostic>& diags);

}  // namespace svagen
