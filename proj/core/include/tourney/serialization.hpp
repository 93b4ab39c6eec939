#pragma once

// JSON mappings for the domain types (nlohmann ADL hooks), plus the two
// line formats trainers exchange with the engine: rollout groups in, reward
// lines out.

#include <nlohmann/json.hpp>

#include "tourney/types.hpp"
#include "tourney/verdict_cache.hpp"

namespace tourney {

void to_json(nlohmann::json& j, const TaskInstance& t);
void from_json(const nlohmann::json& j, TaskInstance& t);

void to_json(nlohmann::json& j, const SideInfo& s);
void from_json(const nlohmann::json& j, SideInfo& s);

void to_json(nlohmann::json& j, const Response& r);
void from_json(const nlohmann::json& j, Response& r);

void to_json(nlohmann::json& j, const Verdict& v);
void from_json(const nlohmann::json& j, Verdict& v);

void to_json(nlohmann::json& j, const PreferenceRecord& p);
void from_json(const nlohmann::json& j, PreferenceRecord& p);

void to_json(nlohmann::json& j, const PreferenceMatrix& m);
void from_json(const nlohmann::json& j, PreferenceMatrix& m);

void to_json(nlohmann::json& j, const RewardBreakdown& r);
void from_json(const nlohmann::json& j, RewardBreakdown& r);

void to_json(nlohmann::json& j, const AdvantageVector& a);
void from_json(const nlohmann::json& j, AdvantageVector& a);

void to_json(nlohmann::json& j, const JudgeSpec& s);
void from_json(const nlohmann::json& j, JudgeSpec& s);

void to_json(nlohmann::json& j, const CacheEntry& e);
void from_json(const nlohmann::json& j, CacheEntry& e);

// Rollout-group line: {task_id, target_lang, query, gold_answer,
// reference_response, responses: [text, ...], side_info?: [{...}, ...]}.
// Throws MissingField (line 0) when a required key is absent.
nlohmann::json group_to_line(const RolloutGroup& g);
RolloutGroup group_from_line(const nlohmann::json& j, std::size_t line = 0);

// Builds a TaskInstance from the dataset fields, normalizing answers and
// deriving reference_answer from the reference's last box.
TaskInstance task_from_line(const nlohmann::json& j, std::size_t line = 0);

struct RewardLine {
  std::string task_id;
  std::size_t rollout_index = 0;
  RewardBreakdown breakdown;
  double advantage = 0.0;

  bool operator==(const RewardLine&) const = default;
};

void to_json(nlohmann::json& j, const RewardLine& r);
void from_json(const nlohmann::json& j, RewardLine& r);

// Matrix line for `tournament` output and `pnt` input: {task_id, n, entries,
// invalid_count}.
nlohmann::json matrix_to_line(std::string_view task_id, const PreferenceMatrix& m);

}  // namespace tourney
