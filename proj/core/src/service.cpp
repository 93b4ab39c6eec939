#include "tourney/service.hpp"

#include <spdlog/spdlog.h>

#include "httplib.h"
#include "tourney/errors.hpp"

namespace tourney {

using nlohmann::json;

namespace {

HttpReply error_reply(int status, const std::string& message, std::vector<std::string> violations = {}) {
  json j{{"error", message}};
  if (!violations.empty()) j["violations"] = std::move(violations);
  return {status, j.dump()};
}

}  // namespace

HttpReply handle_rewards(RewardEngine& engine, std::string_view body, bool with_matrices) {
  std::vector<RolloutGroup> groups;
  try {
    const auto j = json::parse(body);
    if (!j.is_array()) return error_reply(400, "request body must be a JSON array of rollout groups");
    groups.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) groups.push_back(group_from_line(j[i], i + 1));
  } catch (const json::exception& e) {
    return error_reply(400, "malformed request body", {e.what()});
  } catch (const ParseError& e) {
    return error_reply(400, "malformed rollout group", {e.what()});
  }

  try {
    return {200, engine.rewards_body(groups, with_matrices).dump()};
  } catch (const ValidationError& e) {
    return error_reply(400, e.what(), e.violations());
  } catch (const UnsupportedLanguage& e) {
    return error_reply(422, e.what());
  } catch (const MissingSideInfo& e) {
    return error_reply(400, e.what());
  } catch (const JudgeUnavailable& e) {
    return error_reply(503, e.what());
  } catch (const MalformedResponse& e) {
    return error_reply(503, e.what());
  } catch (const Error& e) {
    spdlog::error("rewards request failed: {}", e.what());
    return error_reply(500, e.what());
  }
}

struct RewardService::Impl {
  explicit Impl(RewardEngine& e) : engine(e) {}
  RewardEngine& engine;
  httplib::Server server;
};

RewardService::RewardService(RewardEngine& engine) : impl_(std::make_unique<Impl>(engine)) {
  auto& s = impl_->server;
  s.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok", "text/plain");
  });
  s.Post("/v1/rewards", [this](const httplib::Request& req, httplib::Response& res) {
    const auto flag = req.get_param_value("matrix");
    const bool matrices = flag == "1" || flag == "true";
    const auto reply = handle_rewards(impl_->engine, req.body, matrices);
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  });
}

RewardService::~RewardService() { stop(); }

int RewardService::bind(const std::string& host, int port) {
  auto& s = impl_->server;
  if (port == 0) {
    const int p = s.bind_to_any_port(host);
    if (p < 0) throw Error("cannot bind " + host);
    return p;
  }
  if (!s.bind_to_port(host, port)) throw Error("cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void RewardService::listen() { impl_->server.listen_after_bind(); }

void RewardService::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace tourney
