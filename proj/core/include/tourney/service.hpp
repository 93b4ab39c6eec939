#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "tourney/engine.hpp"

namespace tourney {

struct HttpReply {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// POST /v1/rewards handler without the transport: body is a JSON array of
// rollout-group lines. 400 on schema or invariant violations, 422 for an
// unsupported target language, 503 when the judge cannot be reached.
HttpReply handle_rewards(RewardEngine& engine, std::string_view body, bool with_matrices);

// POST /v1/rewards (?matrix=1 adds matrices) and GET /healthz.
class RewardService {
 public:
  explicit RewardService(RewardEngine& engine);
  ~RewardService();
  RewardService(const RewardService&) = delete;
  RewardService& operator=(const RewardService&) = delete;

  // Port 0 picks a free port. Returns the bound port; throws Error on failure.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tourney
