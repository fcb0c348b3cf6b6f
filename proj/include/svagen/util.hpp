// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace svagen {

// Shell-style glob match supporting '*' and '?' only.
bool glob_match(std::string_view pattern, std::string_view name);

std::string read_file(const std::string& path);          // throws std::runtime_error
void write_file(const std::string& path, std::string_view content);

std::string iso_utc_now();

std::vector<std::string> split(std::string_view s, char sep);
std::string trim(std::string_view s);

}  // namespace svagen
