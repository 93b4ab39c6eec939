#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <semaphore>
#include <string>
#include <string_view>
#include <utility>

#include "tourney/types.hpp"

namespace tourney {

struct JudgeRequest {
  std::string system_message;
  std::string user_message;

  struct Metadata {
    std::string task_id;
    std::pair<std::size_t, std::size_t> pair{0, 0};
    bool forward = true;  // pair.first shown as Response A
    bool privileged = true;
  } metadata;
};

// Fills the pairwise judge templates. The privileged variant carries the
// English reference in a <Correct Solution> block.
JudgeRequest render_prompt(bool privileged, std::string_view query,
                           std::string_view reference_response, std::string_view resp_a,
                           std::string_view resp_b);

// Last \boxed{A} / \boxed{B} (content trimmed, case-sensitive) wins.
Verdict parse_verdict(std::string_view raw);

// Everything a judge may look at for one ordered comparison.
struct JudgeCall {
  const JudgeRequest& request;
  std::string_view query;
  const Response& a;
  const Response& b;
};

// A pairwise judge. judge() is called concurrently from tournament workers.
class Judge {
 public:
  virtual ~Judge() = default;
  virtual const JudgeSpec& spec() const = 0;
  // Stable identity used in cache keys: kind, model and every knob that can
  // change a verdict.
  virtual std::string identity() const = 0;
  virtual Verdict judge(const JudgeCall& call) = 0;
  // Extra key material for verdicts that depend on more than the prompt
  // (simulated judges read side annotations).
  virtual std::string cache_salt(const JudgeCall&) const { return {}; }
};

// Deterministic verdict of a simulated judge; randomness is derived from
// spec.seed and the compared texts, never from call order. Ties (equal
// class, equal score, equal correctness flags) pick a position from a coin
// keyed on the unordered pair, so both orderings agree on the position and
// the debiased preference is exactly 0.5.
// Throws MissingSideInfo when a required annotation is absent.
Verdict simulated_verdict(const JudgeSpec& spec, std::string_view query, const Response& a,
                          const Response& b);

class SimulatedJudge final : public Judge {
 public:
  explicit SimulatedJudge(JudgeSpec spec);
  const JudgeSpec& spec() const override { return spec_; }
  std::string identity() const override;
  Verdict judge(const JudgeCall& call) override;
  std::string cache_salt(const JudgeCall& call) const override;

 private:
  JudgeSpec spec_;
};

// Chat-completions client. Enforces spec.max_concurrency across every
// thread using this instance and retries transport errors, HTTP 429 and
// 5xx with the retry policy's backoff schedule.
class RemoteJudge final : public Judge {
 public:
  // api_key empty means: read TOURNEY_JUDGE_API_KEY from the environment.
  explicit RemoteJudge(JudgeSpec spec, std::string api_key = {});
  const JudgeSpec& spec() const override { return spec_; }
  std::string identity() const override;
  Verdict judge(const JudgeCall& call) override;

  struct Stats {
    std::size_t calls = 0;
    std::size_t attempts = 0;
    std::size_t failures = 0;
    std::size_t peak_in_flight = 0;
  };
  Stats stats() const;

 private:
  JudgeSpec spec_;
  std::string api_key_;
  std::string base_url_;
  std::string path_;
  std::counting_semaphore<> slots_;
  std::atomic<std::size_t> calls_{0}, attempts_{0}, failures_{0}, in_flight_{0}, peak_{0};
};

// Remote judges need endpoint_url and model_id; everything else is simulated.
std::unique_ptr<Judge> make_judge(const JudgeSpec& spec);

}  // namespace tourney
