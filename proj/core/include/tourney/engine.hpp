#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "tourney/config.hpp"
#include "tourney/judge.hpp"
#include "tourney/language.hpp"
#include "tourney/serialization.hpp"
#include "tourney/tournament.hpp"
#include "tourney/verdict_cache.hpp"

namespace tourney {

struct VerifiableScores {
  std::string task_id;
  std::size_t rollout_index = 0;
  int acc = 0;
  int fmt = 0;
  int lang = 0;
  double lang_fraction = 0.0;
};

nlohmann::json to_json_line(const VerifiableScores& s);

struct GroupRewards {
  std::vector<RewardLine> lines;
  TournamentResult tournament;
};

// The full reward pipeline. One instance owns the judge, the classifier and
// the verdict cache; the CLI and the HTTP service both go through it, so a
// file run and a service call over the same inputs agree.
class RewardEngine {
 public:
  explicit RewardEngine(EngineConfig config, std::shared_ptr<Judge> judge = nullptr,
                        std::shared_ptr<const LanguageClassifier> classifier = nullptr);

  const EngineConfig& config() const noexcept { return config_; }
  Judge& judge() noexcept { return *judge_; }
  VerdictCache& cache() noexcept { return *cache_; }
  const LanguageClassifier& classifier() const noexcept { return *classifier_; }

  // Throws ValidationError listing every broken invariant, or
  // UnsupportedLanguage when a target language is unknown to the classifier.
  void validate(std::span<const RolloutGroup> groups, bool tournament) const;

  std::vector<VerifiableScores> score(const RolloutGroup& group) const;
  TournamentResult tournament(const RolloutGroup& group);
  GroupRewards rewards(const RolloutGroup& group);

  // Validates the whole batch before any judge call.
  std::vector<GroupRewards> rewards(std::span<const RolloutGroup> groups);

  // Service body: an array of reward lines, or {"rewards", "matrices"} when
  // matrices are requested.
  nlohmann::json rewards_body(std::span<const RolloutGroup> groups, bool with_matrices);

 private:
  // Oracle judges need answer correctness; fill it from r_acc when absent.
  RolloutGroup prepare(const RolloutGroup& group) const;

  EngineConfig config_;
  std::shared_ptr<Judge> judge_;
  std::shared_ptr<const LanguageClassifier> classifier_;
  std::unique_ptr<VerdictCache> cache_;
};

}  // namespace tourney
