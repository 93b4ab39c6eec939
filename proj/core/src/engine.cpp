#include "tourney/engine.hpp"

#include "tourney/errors.hpp"
#include "tourney/rl.hpp"
#include "tourney/verifiable.hpp"

namespace tourney {

using nlohmann::json;

json to_json_line(const VerifiableScores& s) {
  return json{{"task_id", s.task_id}, {"rollout_index", s.rollout_index},
              {"acc", s.acc},         {"fmt", s.fmt},
              {"lang", s.lang},       {"lang_fraction", s.lang_fraction}};
}

RewardEngine::RewardEngine(EngineConfig config, std::shared_ptr<Judge> judge,
                           std::shared_ptr<const LanguageClassifier> classifier)
    : config_(std::move(config)),
      judge_(std::move(judge)),
      classifier_(std::move(classifier)) {
  config_.validate();
  if (!judge_) judge_ = make_judge(config_.judge);
  if (!classifier_) classifier_ = ScriptNgramClassifier::instance();
  cache_ = config_.cache_path ? std::make_unique<VerdictCache>(*config_.cache_path)
                              : std::make_unique<VerdictCache>();
}

void RewardEngine::validate(std::span<const RolloutGroup> groups, bool tournament) const {
  std::vector<std::string> violations;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (auto& v : validate_group(groups[g], tournament))
      violations.push_back("group " + std::to_string(g) + " (" + groups[g].task.task_id + "): " + v);
  }
  if (!violations.empty())
    throw ValidationError(std::to_string(violations.size()) + " invariant violation(s)",
                          std::move(violations));
  for (const auto& g : groups)
    if (!classifier_->supports(g.task.target_lang)) throw UnsupportedLanguage(g.task.target_lang);
}

std::vector<VerifiableScores> RewardEngine::score(const RolloutGroup& group) const {
  std::vector<VerifiableScores> out;
  out.reserve(group.size());
  for (const auto& r : group.responses) {
    const auto report = language_fraction(r.text, group.task.target_lang, *classifier_);
    out.push_back({group.task.task_id, r.rollout_index,
                   score_accuracy(r, group.task.gold_answer), score_format(r),
                   fidelity_passes(report.fraction, config_.language_threshold), report.fraction});
  }
  return out;
}

RolloutGroup RewardEngine::prepare(const RolloutGroup& group) const {
  if (config_.judge.kind != JudgeKind::Oracle) return group;
  RolloutGroup g = group;
  for (auto& r : g.responses)
    if (!r.side_info.answer_correct)
      r.side_info.answer_correct = score_accuracy(r, g.task.gold_answer) == 1;
  return g;
}

TournamentResult RewardEngine::tournament(const RolloutGroup& group) {
  return run_tournament(prepare(group), *judge_, cache_.get());
}

GroupRewards RewardEngine::rewards(const RolloutGroup& group) {
  GroupRewards out;
  const auto scores = score(group);
  out.tournament = tournament(group);
  const auto win = win_rate_rewards(out.tournament.matrix);

  std::vector<double> totals;
  totals.reserve(group.size());
  out.lines.reserve(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto& s = scores[i];
    const auto b = composite_reward(s.acc, s.fmt, s.lang, win[i], config_.weights);
    totals.push_back(b.total);
    out.lines.push_back({group.task.task_id, group.responses[i].rollout_index, b, 0.0});
  }
  const auto adv = group_advantages(totals, config_.rl);
  for (std::size_t i = 0; i < out.lines.size(); ++i) out.lines[i].advantage = adv.values[i];
  return out;
}

std::vector<GroupRewards> RewardEngine::rewards(std::span<const RolloutGroup> groups) {
  validate(groups, true);
  std::vector<GroupRewards> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(rewards(g));
  return out;
}

json RewardEngine::rewards_body(std::span<const RolloutGroup> groups, bool with_matrices) {
  const auto results = rewards(groups);
  json lines = json::array();
  json matrices = json::array();
  for (std::size_t g = 0; g < results.size(); ++g) {
    for (const auto& l : results[g].lines) lines.push_back(l);
    if (with_matrices) matrices.push_back(matrix_to_line(groups[g].task.task_id, results[g].tournament.matrix));
  }
  if (!with_matrices) return lines;
  return json{{"rewards", std::move(lines)}, {"matrices", std::move(matrices)}};
}

}  // namespace tourney
