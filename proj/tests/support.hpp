#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "tourney/errors.hpp"
#include "tourney/judge.hpp"
#include "tourney/types.hpp"

namespace tourney::testing {

inline TaskInstance task(std::string id = "t0", std::string lang = "en") {
  TaskInstance t;
  t.task_id = std::move(id);
  t.query = "What is 6 times 7?";
  t.target_lang = std::move(lang);
  t.gold_answer = "42";
  t.reference_response = "Six sevens are forty-two. \\boxed{42}";
  t.reference_answer = "42";
  return t;
}

// Group of n distinct texts; side_info filled by `side(i)`.
inline RolloutGroup group(std::size_t n, const std::function<SideInfo(std::size_t)>& side = {},
                          std::string id = "t0") {
  std::vector<std::string> texts;
  std::vector<SideInfo> infos;
  for (std::size_t i = 0; i < n; ++i) {
    texts.push_back("Response number " + std::to_string(i) + " says \\boxed{" + std::to_string(40 + i) + "}");
    if (side) infos.push_back(side(i));
  }
  return make_group(task(std::move(id)), texts, infos);
}

inline SideInfo score(double s) {
  SideInfo i;
  i.latent_score = s;
  return i;
}

inline SideInfo cls(int c) {
  SideInfo i;
  i.cls = c;
  return i;
}

// Wraps a simulated judge and counts calls; optional hook to fail.
class CountingJudge final : public Judge {
 public:
  explicit CountingJudge(JudgeSpec spec) : inner_(std::move(spec)) {}
  const JudgeSpec& spec() const override { return inner_.spec(); }
  std::string identity() const override { return "counting+" + inner_.identity(); }
  std::string cache_salt(const JudgeCall& c) const override { return inner_.cache_salt(c); }
  Verdict judge(const JudgeCall& call) override {
    const auto n = ++calls;
    if (fail_from && n >= fail_from) throw JudgeUnavailable("stub failure");
    return inner_.judge(call);
  }
  std::atomic<std::size_t> calls{0};
  std::size_t fail_from = 0;

 private:
  SimulatedJudge inner_;
};

// Verdicts looked up from a table keyed by (rollout index of A, of B).
class ScriptedJudge final : public Judge {
 public:
  using Script = std::function<Choice(std::size_t a, std::size_t b, const JudgeCall&)>;
  explicit ScriptedJudge(Script s, int concurrency = 1) : script_(std::move(s)) {
    spec_.kind = JudgeKind::Remote;
    spec_.endpoint_url = "http://scripted";
    spec_.model_id = "scripted";
    spec_.max_concurrency = concurrency;
  }
  const JudgeSpec& spec() const override { return spec_; }
  std::string identity() const override { return "scripted#" + std::to_string(id_); }
  std::string cache_salt(const JudgeCall& c) const override {
    return std::to_string(c.a.rollout_index) + "/" + std::to_string(c.b.rollout_index);
  }
  Verdict judge(const JudgeCall& call) override {
    ++calls;
    const auto c = script_(call.a.rollout_index, call.b.rollout_index, call);
    std::string raw = c == Choice::A ? "\\boxed{A}" : c == Choice::B ? "\\boxed{B}" : "no verdict";
    return {c, raw};
  }
  std::atomic<std::size_t> calls{0};

 private:
  inline static std::atomic<int> next_id_{0};
  int id_ = next_id_++;
  JudgeSpec spec_;
  Script script_;
};

inline JudgeSpec simulated(JudgeKind kind, std::uint64_t seed = 7) {
  JudgeSpec s;
  s.kind = kind;
  s.seed = seed;
  s.max_concurrency = 4;
  return s;
}

}  // namespace tourney::testing
