#include "tourney/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "tourney/answer.hpp"
#include "tourney/errors.hpp"
#include "tourney/iso639.hpp"

namespace tourney {

Response make_response(std::string task_id, std::size_t rollout_index, std::string text,
                       SideInfo side_info) {
  Response r;
  r.rollout_index = rollout_index;
  r.task_id = std::move(task_id);
  auto split = split_response(text);
  r.cot = std::move(split.cot);
  if (split.answer) r.boxed_answer = normalize_answer(*split.answer);
  r.text = std::move(text);
  r.side_info = side_info;
  return r;
}

RolloutGroup make_group(TaskInstance task, const std::vector<std::string>& texts,
                        const std::vector<SideInfo>& side_info) {
  RolloutGroup g;
  g.responses.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    g.responses.push_back(
        make_response(task.task_id, i, texts[i], i < side_info.size() ? side_info[i] : SideInfo{}));
  }
  g.task = std::move(task);
  return g;
}

const char* to_string(Choice c) noexcept {
  switch (c) {
    case Choice::A:
      return "A";
    case Choice::B:
      return "B";
    case Choice::Invalid:
      break;
  }
  return "Invalid";
}

Choice choice_from_string(const std::string& s) {
  if (s == "A") return Choice::A;
  if (s == "B") return Choice::B;
  if (s == "Invalid") return Choice::Invalid;
  throw DomainError("unknown verdict: " + s);
}

PreferenceMatrix::PreferenceMatrix(std::size_t n) : n_(n), entries_(n * n, 0.5) {}

PreferenceMatrix PreferenceMatrix::from_ordered(std::size_t n, std::span<const double> forward,
                                                std::size_t invalid_count) {
  if (forward.size() != n * n) throw DomainError("ordered preference table must be n*n");
  PreferenceMatrix m(n);
  m.invalid_count_ = invalid_count;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double p_ij = forward[i * n + j];
      const double p_ji = forward[j * n + i];
      if (!(p_ij >= 0.0 && p_ij <= 1.0 && p_ji >= 0.0 && p_ji <= 1.0))
        throw DomainError("ordered preference outside [0,1]");
      m.set(i, j, (p_ij + (1.0 - p_ji)) / 2.0);
    }
  }
  return m;
}

PreferenceMatrix PreferenceMatrix::from_entries(std::size_t n, std::vector<double> entries,
                                                std::size_t invalid_count) {
  if (entries.size() != n * n) throw DomainError("preference matrix must have n*n entries");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = entries[i * n + j];
      if (!(v >= 0.0 && v <= 1.0)) throw DomainError("preference entry outside [0,1]");
      if (i < j && std::abs(v + entries[j * n + i] - 1.0) > 1e-12)
        throw DomainError("preference matrix violates P(i,j) + P(j,i) = 1 at (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
    }
    entries[i * n + i] = 0.5;
  }
  PreferenceMatrix m;
  m.n_ = n;
  m.entries_ = std::move(entries);
  m.invalid_count_ = invalid_count;
  return m;
}

void PreferenceMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i == j) return;
  entries_[i * n_ + j] = value;
  entries_[j * n_ + i] = 1.0 - value;
}

const char* to_string(AdvantageVariant v) noexcept {
  return v == AdvantageVariant::Grpo ? "grpo" : "drgrpo";
}

AdvantageVariant variant_from_string(const std::string& s) {
  if (s == "drgrpo") return AdvantageVariant::DrGrpo;
  if (s == "grpo") return AdvantageVariant::Grpo;
  throw DomainError("unknown advantage variant: " + s + " (expected drgrpo|grpo)");
}

const char* to_string(JudgeKind k) noexcept {
  switch (k) {
    case JudgeKind::Remote:
      return "remote";
    case JudgeKind::BradleyTerry:
      return "bradley_terry";
    case JudgeKind::Cyclic:
      return "cyclic";
    case JudgeKind::Positional:
      return "positional";
    case JudgeKind::Oracle:
      break;
  }
  return "oracle";
}

JudgeKind judge_kind_from_string(const std::string& s) {
  for (auto k : {JudgeKind::Remote, JudgeKind::BradleyTerry, JudgeKind::Cyclic,
                 JudgeKind::Positional, JudgeKind::Oracle}) {
    if (s == to_string(k)) return k;
  }
  throw DomainError("unknown judge kind: " + s);
}

int RetryPolicy::delay_ms(int failed_attempts) const noexcept {
  if (backoff_ms.empty() || failed_attempts <= 0) return 0;
  const auto idx = std::min<std::size_t>(static_cast<std::size_t>(failed_attempts - 1),
                                         backoff_ms.size() - 1);
  return backoff_ms[idx];
}

std::vector<std::string> JudgeSpec::violations() const {
  std::vector<std::string> out;
  if (kind == JudgeKind::Remote) {
    if (!endpoint_url || endpoint_url->empty()) out.emplace_back("judge.endpoint_url: required for remote judge");
    if (!model_id || model_id->empty()) out.emplace_back("judge.model_id: required for remote judge");
  }
  if (!(temperature >= 0.0)) out.emplace_back("judge.temperature: must be >= 0");
  if (max_concurrency < 1) out.emplace_back("judge.max_concurrency: must be positive");
  if (retry.max_attempts < 1) out.emplace_back("judge.retry.max_attempts: must be positive");
  for (int d : retry.backoff_ms)
    if (d < 0) out.emplace_back("judge.retry.backoff_ms: delays must be >= 0");
  if (!(position_bias >= 0.0 && position_bias <= 1.0))
    out.emplace_back("judge.position_bias: must lie in [0,1]");
  return out;
}

std::vector<std::string> validate_group(const RolloutGroup& group, bool tournament) {
  std::vector<std::string> v;
  const auto& t = group.task;
  if (t.task_id.empty()) v.emplace_back("task.task_id: must be non-empty");
  if (!is_iso639_1(t.target_lang))
    v.emplace_back("task.target_lang: '" + t.target_lang + "' is not an ISO 639-1 code");
  if (t.reference_response.empty()) v.emplace_back("task.reference_response: must be non-empty");
  if (auto boxed = extract_boxed(t.reference_response)) {
    if (normalize_answer(*boxed) != t.reference_answer)
      v.emplace_back("task.reference_answer: does not match the reference's boxed answer");
  }

  const auto n = group.responses.size();
  if (n < 1) v.emplace_back("responses: N >= 1 required");
  if (tournament && n < 2) v.emplace_back("responses: N >= 2 required for tournaments");

  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = group.responses[i];
    const std::string where = "responses[" + std::to_string(i) + "]";
    if (r.task_id != t.task_id)
      v.emplace_back(where + ".task_id: '" + r.task_id + "' does not match task '" + t.task_id + "'");
    if (r.rollout_index != i)
      v.emplace_back(where + ".rollout_index: expected " + std::to_string(i));
    const auto split = split_response(r.text);
    const bool has_box = split.answer.has_value();
    if (has_box != r.boxed_answer.has_value())
      v.emplace_back(where + ".boxed_answer: presence must match a balanced box in text");
    else if (has_box && normalize_answer(*split.answer) != *r.boxed_answer)
      v.emplace_back(where + ".boxed_answer: does not match the last box in text");
    if (r.cot != split.cot) v.emplace_back(where + ".cot: must be the text before the last box");
    if (r.side_info.cls && (*r.side_info.cls < 0 || *r.side_info.cls > 2))
      v.emplace_back(where + ".side_info.cls: must be 0, 1 or 2");
  }
  return v;
}

}  // namespace tourney
