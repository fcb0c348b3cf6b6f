// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "svagen/flow_types.hpp"

namespace svagen::flow {

// One in-flight request per session; implementations are stateful only
// in their own cursor (replay position).
class LlmBackend {
 public:
  struct Result {
    std::optional<std::string> text;
    std::optional<Diagnostic> error;  // BackendUnavailable, FixturesExhausted
  };

  virtual ~LlmBackend() = default;
  virtual std::string id() const = 0;
  // The prompt plus the full session history form the conversation.
  virtual Result complete(const RefinementSession& session,
                          const PromptRecord& prompt) = 0;
  // Advance past already-consumed responses when resuming a session.
  virtual void skip(std::size_t n) { (void)n; }
};

// Serves `NNN_response.txt` files from a directory in lexicographic
// order; errors FixturesExhausted when the directory runs dry.
class ReplayBackend final : public LlmBackend {
 public:
  explicit ReplayBackend(std::string dir);
  std::string id() const override { return "replay"; }
  Result complete(const RefinementSession& session,
                  const PromptRecord& prompt) override;
  void skip(std::size_t n) override;
  std::size_t remaining() const { return files_.size() - next_; }

 private:
  std::string dir_;
  std::vector<std::string> files_;  // sorted basenames
  std::size_t next_ = 0;
};

// Chat-completions-style HTTP backend. The credential is read from the
// environment variable named by the config and verified before any
// network activity; endpoint and model come from the config too.
class HttpBackend final : public LlmBackend {
 public:
  explicit HttpBackend(const SessionConfig& config);
  std::string id() const override { return "http"; }
  Result complete(const RefinementSession& session,
                  const PromptRecord& prompt) override;

 private:
  std::string endpoint_;
  std::string model_;
  std::string credential_env_;
};

// Factory keyed on config.backend; replay needs fixture_dir, http needs
// endpoint.
std::unique_ptr<LlmBackend> make_backend(const SessionConfig& config);

}  // namespace svagen::flow
