// SPDX-License-Identifier: Apache-2.0
#include "svagen/llm_backend.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <regex>

#include "httplib.h"
#include "json.hpp"
#include "svagen/util.hpp"

namespace svagen::flow {

namespace {

Diagnostic backend_unavailable(std::string detail) {
  return make_error("BackendUnavailable", std::move(detail), {});
}

}  // namespace

ReplayBackend::ReplayBackend(std::string dir) : dir_(std::move(dir)) {
  std::regex name_re("^[0-9]+_response\\.txt$");
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
    std::string base = entry.path().filename().string();
    if (std::regex_match(base, name_re)) files_.push_back(base);
  }
  std::sort(files_.begin(), files_.end());
}

LlmBackend::Result ReplayBackend::complete(const RefinementSession&,
                                           const PromptRecord&) {
  Result r;
  if (next_ >= files_.size()) {
    r.error = make_error("FixturesExhausted",
                         "replay directory '" + dir_ + "' has no response left after " +
                             std::to_string(files_.size()) + " files",
                         {});
    return r;
  }
  std::string base = files_[next_++];
  r.text = read_file(dir_ + "/" + base);
  return r;
}

void ReplayBackend::skip(std::size_t n) { next_ = std::min(next_ + n, files_.size()); }

HttpBackend::HttpBackend(const SessionConfig& config)
    : endpoint_(config.endpoint),
      model_(config.model),
      credential_env_(config.credential_env) {}

LlmBackend::Result HttpBackend::complete(const RefinementSession& session,
                                         const PromptRecord& prompt) {
  Result r;
  const char* cred = credential_env_.empty() ? nullptr : std::getenv(credential_env_.c_str());
  if (!cred || !*cred) {
    r.error = backend_unavailable("credential environment variable '" +
                                  credential_env_ + "' is not set");
    return r;
  }
  if (endpoint_.empty()) {
    r.error = backend_unavailable("no endpoint configured");
    return r;
  }
  auto scheme_end = endpoint_.find("://");
  if (scheme_end == std::string::npos) {
    r.error = backend_unavailable("endpoint '" + endpoint_ + "' has no scheme");
    return r;
  }
  auto path_start = endpoint_.find('/', scheme_end + 3);
  std::string base = path_start == std::string::npos ? endpoint_
                                                     : endpoint_.substr(0, path_start);
  std::string path = path_start == std::string::npos ? "/"
                                                     : endpoint_.substr(path_start);

  nlohmann::ordered_json body;
  body["model"] = model_;
  body["messages"] = nlohmann::ordered_json::array();
  auto push_msg = [&](const std::string& role, const std::string& content) {
    body["messages"].push_back({{"role", role}, {"content", content}});
  };
  for (const auto& [p, resp] : session.history) {
    push_msg(p.stage == Stage::ContextSeed ? "system" : "user", p.body);
    push_msg("assistant", resp.raw);
  }
  push_msg(prompt.stage == Stage::ContextSeed ? "system" : "user", prompt.body);

  httplib::Client client(base);
  client.set_connection_timeout(10);
  client.set_read_timeout(60);
  httplib::Headers headers{{"Authorization", std::string("Bearer ") + cred}};
  auto res = client.Post(path, headers, body.dump(), "application/json");
  if (!res) {
    r.error = backend_unavailable("request to " + base + " failed: " +
                                  httplib::to_string(res.error()));
    return r;
  }
  if (res->status != 200) {
    r.error = backend_unavailable("endpoint returned status " +
                                  std::to_string(res->status));
    return r;
  }
  auto parsed = nlohmann::json::parse(res->body, nullptr, false);
  if (parsed.is_discarded() || !parsed.contains("choices") ||
      parsed["choices"].empty() ||
      !parsed["choices"][0].contains("message")) {
    r.error = backend_unavailable("malformed completion response");
    return r;
  }
  r.text = parsed["choices"][0]["message"].value("content", "");
  return r;
}

std::unique_ptr<LlmBackend> make_backend(const SessionConfig& config) {
  if (config.backend == BackendKind::Replay)
    return std::make_unique<ReplayBackend>(config.fixture_dir);
  return std::make_unique<HttpBackend>(config);
}

}  // namespace svagen::flow
