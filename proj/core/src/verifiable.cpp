#include "tourney/verifiable.hpp"

#include <map>
#include <unordered_map>

#include "tourney/answer.hpp"
#include "tourney/errors.hpp"

namespace tourney {

int score_accuracy(const Response& response, std::string_view gold_answer) {
  if (!response.boxed_answer) return 0;
  return normalize_answer(*response.boxed_answer) == gold_answer ? 1 : 0;
}

int score_format(std::string_view text) { return find_boxed(text).empty() ? 0 : 1; }

int fidelity_passes(double fraction, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw DomainError("language threshold must lie in (0, 1]");
  return fraction >= threshold ? 1 : 0;
}

int score_language(std::string_view text, std::string_view target_lang,
                   const LanguageClassifier& classifier, double threshold) {
  fidelity_passes(0.0, threshold);  // validate before the expensive part
  return fidelity_passes(language_fraction(text, target_lang, classifier).fraction, threshold);
}

EvalMetrics eval_metrics(std::span<const RolloutGroup> groups,
                         std::span<const TaskInstance> dataset,
                         const LanguageClassifier& classifier, double threshold) {
  std::unordered_map<std::string, const TaskInstance*> by_id;
  for (const auto& t : dataset) by_id.emplace(t.task_id, &t);

  struct Tally {
    double acc = 0, lang = 0;
    std::size_t n = 0;
  };
  std::map<std::string, Tally> per_task;  // ordered so the sum is reproducible
  EvalMetrics out;
  for (const auto& g : groups) {
    const auto it = by_id.find(g.task.task_id);
    if (it == by_id.end()) throw MissingTask(g.task.task_id);
    const auto& task = *it->second;
    auto& tally = per_task[task.task_id];
    for (const auto& r : g.responses) {
      tally.acc += score_accuracy(r, task.gold_answer);
      tally.lang += score_language(r.text, task.target_lang, classifier, threshold);
      ++tally.n;
      ++out.responses;
    }
  }

  std::size_t counted = 0;
  for (const auto& [id, t] : per_task) {
    if (t.n == 0) continue;
    out.accuracy_pct += t.acc / static_cast<double>(t.n);
    out.fidelity_pct += t.lang / static_cast<double>(t.n);
    ++counted;
  }
  out.tasks = counted;
  if (counted > 0) {
    out.accuracy_pct = out.accuracy_pct / static_cast<double>(counted) * 100.0;
    out.fidelity_pct = out.fidelity_pct / static_cast<double>(counted) * 100.0;
  }
  return out;
}

}  // namespace tourney
