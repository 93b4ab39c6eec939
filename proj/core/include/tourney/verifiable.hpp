#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tourney/language.hpp"
#include "tourney/types.hpp"

namespace tourney {

inline constexpr double kDefaultLanguageThreshold = 0.7;

// 1 iff the normalized boxed answer equals gold_answer (already canonical).
int score_accuracy(const Response& response, std::string_view gold_answer);

// 1 iff the text contains a balanced \boxed{...}.
int score_format(std::string_view text);
inline int score_format(const Response& response) { return score_format(response.text); }

// Inclusive threshold test on an already computed fraction.
// Throws DomainError unless threshold lies in (0, 1].
int fidelity_passes(double fraction, double threshold = kDefaultLanguageThreshold);

int score_language(std::string_view text, std::string_view target_lang,
                   const LanguageClassifier& classifier,
                   double threshold = kDefaultLanguageThreshold);

struct EvalMetrics {
  double accuracy_pct = 0.0;
  double fidelity_pct = 0.0;
  std::size_t tasks = 0;
  std::size_t responses = 0;
};

// Per-task means of r_acc and r_lang, averaged uniformly over tasks. Gold
// answers and target languages come from `dataset`; groups sharing a
// task_id are pooled. Throws MissingTask for unknown task ids.
EvalMetrics eval_metrics(std::span<const RolloutGroup> groups,
                         std::span<const TaskInstance> dataset,
                         const LanguageClassifier& classifier,
                         double threshold = kDefaultLanguageThreshold);

}  // namespace tourney
