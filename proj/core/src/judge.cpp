#include "tourney/judge.hpp"

#include <spdlog/spdlog.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "tourney/errors.hpp"
#include "tourney/sha256.hpp"

#include "httplib.h"

namespace tourney {

namespace {

// Uniform draw in [0,1) from the seed and a list of key strings.
double keyed_uniform(std::uint64_t seed, std::initializer_list<std::string_view> parts) {
  std::string material = std::to_string(seed);
  for (auto p : parts) {
    material += '\x1f';
    material += std::to_string(p.size());
    material += ':';
    material += p;
  }
  const auto d = sha256(material);
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits = (bits << 8) | d[static_cast<std::size_t>(i)];
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

Verdict make_verdict(JudgeKind kind, Choice c, std::string_view why) {
  std::string raw = "[simulated ";
  raw += to_string(kind);
  raw += " judge] ";
  raw += why;
  raw += c == Choice::A ? "\n\\boxed{A}" : "\n\\boxed{B}";
  return {c, std::move(raw)};
}

// Position picked for an indifferent comparison; both orderings of the same
// two texts land on the same slot.
Choice tie_position(const JudgeSpec& spec, std::string_view query, const Response& a,
                    const Response& b) {
  std::string_view lo = a.text, hi = b.text;
  if (hi < lo) std::swap(lo, hi);
  return keyed_uniform(spec.seed.value_or(0), {"tie", query, lo, hi}) < 0.5 ? Choice::A
                                                                             : Choice::B;
}

template <typename T>
const T& require(const std::optional<T>& v, const char* what, const Response& r) {
  if (!v)
    throw MissingSideInfo(std::string("response ") + std::to_string(r.rollout_index) +
                          " lacks side_info." + what);
  return *v;
}

std::string describe(const SideInfo& s) {
  std::ostringstream os;
  os.precision(17);
  if (s.latent_score) os << "s=" << *s.latent_score;
  if (s.cls) os << ";c=" << *s.cls;
  if (s.answer_correct) os << ";a=" << *s.answer_correct;
  if (s.cot_correct) os << ";z=" << *s.cot_correct;
  return os.str();
}

}  // namespace

Verdict simulated_verdict(const JudgeSpec& spec, std::string_view query, const Response& a,
                          const Response& b) {
  const auto seed = spec.seed.value_or(0);
  switch (spec.kind) {
    case JudgeKind::BradleyTerry: {
      const double sa = require(a.side_info.latent_score, "latent_score", a);
      const double sb = require(b.side_info.latent_score, "latent_score", b);
      if (spec.temperature > 0.0) {
        const double p = 1.0 / (1.0 + std::exp(-(sa - sb) / spec.temperature));
        const double u = keyed_uniform(seed, {"bt", query, a.text, b.text});
        return make_verdict(spec.kind, u < p ? Choice::A : Choice::B, "sampled latent preference");
      }
      if (sa > sb) return make_verdict(spec.kind, Choice::A, "higher latent score");
      if (sb > sa) return make_verdict(spec.kind, Choice::B, "higher latent score");
      return make_verdict(spec.kind, tie_position(spec, query, a, b), "equal latent scores");
    }
    case JudgeKind::Cyclic: {
      const int ca = require(a.side_info.cls, "cls", a);
      const int cb = require(b.side_info.cls, "cls", b);
      if (ca == cb) return make_verdict(spec.kind, tie_position(spec, query, a, b), "same class");
      if ((ca + 1) % 3 == cb) return make_verdict(spec.kind, Choice::A, "class beats successor");
      return make_verdict(spec.kind, Choice::B, "class beats successor");
    }
    case JudgeKind::Positional: {
      if (spec.position_bias >= 1.0) return make_verdict(spec.kind, Choice::A, "position A");
      if (spec.position_bias <= 0.0) return make_verdict(spec.kind, Choice::B, "position B");
      const double u = keyed_uniform(seed, {"pos", query, a.text, b.text});
      return make_verdict(spec.kind, u < spec.position_bias ? Choice::A : Choice::B, "position coin");
    }
    case JudgeKind::Oracle: {
      const bool aa = require(a.side_info.answer_correct, "answer_correct", a);
      const bool ab = require(b.side_info.answer_correct, "answer_correct", b);
      if (aa != ab) return make_verdict(spec.kind, aa ? Choice::A : Choice::B, "correct answer");
      if (a.side_info.cot_correct && b.side_info.cot_correct &&
          *a.side_info.cot_correct != *b.side_info.cot_correct)
        return make_verdict(spec.kind, *a.side_info.cot_correct ? Choice::A : Choice::B,
                            "correct reasoning");
      return make_verdict(spec.kind, tie_position(spec, query, a, b), "equally correct");
    }
    case JudgeKind::Remote:
      break;
  }
  throw DomainError("simulated_verdict called with a remote judge spec");
}

SimulatedJudge::SimulatedJudge(JudgeSpec spec) : spec_(std::move(spec)) {
  if (spec_.kind == JudgeKind::Remote) throw DomainError("SimulatedJudge cannot be remote");
}

std::string SimulatedJudge::identity() const {
  std::ostringstream os;
  os.precision(17);
  os << "simulated:" << to_string(spec_.kind) << ";seed=" << spec_.seed.value_or(0)
     << ";t=" << spec_.temperature << ";p=" << spec_.position_bias;
  return os.str();
}

Verdict SimulatedJudge::judge(const JudgeCall& call) {
  return simulated_verdict(spec_, call.query, call.a, call.b);
}

std::string SimulatedJudge::cache_salt(const JudgeCall& call) const {
  return describe(call.a.side_info) + "|" + describe(call.b.side_info);
}

RemoteJudge::RemoteJudge(JudgeSpec spec, std::string api_key)
    : spec_(std::move(spec)),
      api_key_(std::move(api_key)),
      slots_(std::max(1, spec_.max_concurrency)) {
  if (auto v = spec_.violations(); !v.empty()) throw DomainError("invalid judge spec: " + v.front());
  if (api_key_.empty()) {
    if (const char* env = std::getenv("TOURNEY_JUDGE_API_KEY")) api_key_ = env;
  }
  const std::string& url = *spec_.endpoint_url;
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw DomainError("judge.endpoint_url needs a scheme: " + url);
  const auto path_begin = url.find('/', scheme_end + 3);
  base_url_ = url.substr(0, path_begin);
  path_ = path_begin == std::string::npos ? "/v1/chat/completions" : url.substr(path_begin);
}

std::string RemoteJudge::identity() const {
  std::ostringstream os;
  os.precision(17);
  os << "remote:" << *spec_.model_id << "@" << *spec_.endpoint_url << ";t=" << spec_.temperature;
  return os.str();
}

RemoteJudge::Stats RemoteJudge::stats() const {
  return {calls_.load(), attempts_.load(), failures_.load(), peak_.load()};
}

Verdict RemoteJudge::judge(const JudgeCall& call) {
  const nlohmann::json body = {
      {"model", *spec_.model_id},
      {"temperature", spec_.temperature},
      {"messages",
       nlohmann::json::array({{{"role", "system"}, {"content", call.request.system_message}},
                              {{"role", "user"}, {"content", call.request.user_message}}})},
  };
  const std::string payload = body.dump();

  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

  ++calls_;
  std::string last_error;
  for (int attempt = 1; attempt <= spec_.retry.max_attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(std::chrono::milliseconds(spec_.retry.delay_ms(attempt - 1)));
    }
    ++attempts_;

    httplib::Result res{nullptr, httplib::Error::Unknown};
    {
      slots_.acquire();
      const auto now = ++in_flight_;
      auto peak = peak_.load();
      while (now > peak && !peak_.compare_exchange_weak(peak, now)) {
      }
      httplib::Client cli(base_url_);
      const auto timeout = std::chrono::duration<double>(spec_.timeout_s);
      cli.set_connection_timeout(std::chrono::duration_cast<std::chrono::microseconds>(timeout));
      cli.set_read_timeout(std::chrono::duration_cast<std::chrono::microseconds>(timeout));
      res = cli.Post(path_, headers, payload, "application/json");
      --in_flight_;
      slots_.release();
    }

    if (!res) {
      last_error = "transport error: " + httplib::to_string(res.error());
    } else if (res->status == 429 || res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
    } else if (res->status < 200 || res->status >= 300) {
      ++failures_;
      throw JudgeUnavailable("judge endpoint rejected request: HTTP " + std::to_string(res->status));
    } else {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(res->body);
      } catch (const nlohmann::json::parse_error& e) {
        throw MalformedResponse(std::string("judge response is not JSON: ") + e.what());
      }
      if (!doc.is_object() || !doc.contains("choices") || !doc["choices"].is_array() ||
          doc["choices"].empty() || !doc["choices"][0].is_object() ||
          !doc["choices"][0].contains("message") || !doc["choices"][0]["message"].is_object())
        throw MalformedResponse("judge response lacks choices[0].message");
      const auto& content = doc["choices"][0]["message"]["content"];
      if (content.is_null()) return parse_verdict("");
      if (!content.is_string()) throw MalformedResponse("choices[0].message.content is not a string");
      spdlog::debug("judge call {} succeeded after {} attempt(s)", call.request.metadata.task_id,
                    attempt);
      return parse_verdict(content.get<std::string>());
    }
    spdlog::warn("judge attempt {}/{} failed: {}", attempt, spec_.retry.max_attempts, last_error);
  }
  ++failures_;
  throw JudgeUnavailable("judge unavailable after " + std::to_string(spec_.retry.max_attempts) +
                         " attempt(s): " + last_error);
}

std::unique_ptr<Judge> make_judge(const JudgeSpec& spec) {
  if (spec.kind == JudgeKind::Remote) return std::make_unique<RemoteJudge>(spec);
  return std::make_unique<SimulatedJudge>(spec);
}

}  // namespace tourney
