#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tourney {

// A query in its target language together with the privileged English
// reference. Answers are stored already normalized.
struct TaskInstance {
  std::string task_id;
  std::string query;
  std::string target_lang;
  std::string gold_answer;
  std::string reference_response;
  std::string reference_answer;  // empty when the reference has no boxed answer

  bool operator==(const TaskInstance&) const = default;
};

// Annotations consumed by the simulated judges. Real rollouts carry none;
// test fixtures and grafted pairs fill what their judge kind needs.
struct SideInfo {
  std::optional<double> latent_score;  // bradley_terry
  std::optional<int> cls;              // cyclic, in {0,1,2}
  std::optional<bool> answer_correct;  // oracle
  std::optional<bool> cot_correct;     // oracle

  bool empty() const noexcept {
    return !latent_score && !cls && !answer_correct && !cot_correct;
  }
  bool operator==(const SideInfo&) const = default;
};

// One rollout y = (cot, answer).
struct Response {
  std::size_t rollout_index = 0;
  std::string task_id;
  std::string text;
  std::optional<std::string> boxed_answer;  // normalized
  std::string cot;                          // text before the final box
  SideInfo side_info;

  bool operator==(const Response&) const = default;
};

// Builds a Response from raw generated text, filling boxed_answer and cot.
Response make_response(std::string task_id, std::size_t rollout_index, std::string text,
                       SideInfo side_info = {});

struct RolloutGroup {
  TaskInstance task;
  std::vector<Response> responses;

  std::size_t size() const noexcept { return responses.size(); }
  bool operator==(const RolloutGroup&) const = default;
};

// Builds a group from the task and raw texts, assigning rollout indices.
RolloutGroup make_group(TaskInstance task, const std::vector<std::string>& texts,
                        const std::vector<SideInfo>& side_info = {});

enum class Choice : std::uint8_t { A, B, Invalid };

const char* to_string(Choice c) noexcept;
Choice choice_from_string(const std::string& s);

struct Verdict {
  Choice choice = Choice::Invalid;
  std::string raw;

  bool operator==(const Verdict&) const = default;
};

struct PreferenceRecord {
  std::string task_id;
  std::pair<std::size_t, std::size_t> pair;  // (i, j): y_i shown as A, y_j as B
  Choice verdict = Choice::Invalid;
  std::string raw_judge_output;
  std::string cache_key;

  bool operator==(const PreferenceRecord&) const = default;
};

// N x N debiased preferences; entry (i, j) is the probability y_i beats y_j.
// Every construction path keeps entry(i,j) + entry(j,i) == 1 for i != j.
class PreferenceMatrix {
 public:
  PreferenceMatrix() = default;

  // All off-diagonal entries 0.5.
  explicit PreferenceMatrix(std::size_t n);

  // Position-debiased construction from per-order preferences: forward[i*n+j]
  // is P(y_i beats y_j | y_i shown first). Diagonal of forward is ignored.
  static PreferenceMatrix from_ordered(std::size_t n, std::span<const double> forward,
                                       std::size_t invalid_count = 0);

  // Takes already-debiased entries (row-major). Throws DomainError when an
  // entry is outside [0,1] or a pair violates antisymmetry beyond 1e-12.
  static PreferenceMatrix from_entries(std::size_t n, std::vector<double> entries,
                                       std::size_t invalid_count = 0);

  std::size_t n() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const double> entries() const noexcept { return entries_; }
  std::size_t invalid_count() const noexcept { return invalid_count_; }

  // Sets entry (i, j) and its complement (j, i).
  void set(std::size_t i, std::size_t j, double value);

  bool operator==(const PreferenceMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
  std::size_t invalid_count_ = 0;
};

struct RewardBreakdown {
  int acc = 0;
  int fmt = 0;
  int lang = 0;
  double judge = 0.0;
  double total = 0.0;

  bool operator==(const RewardBreakdown&) const = default;
};

enum class AdvantageVariant : std::uint8_t { DrGrpo, Grpo };

const char* to_string(AdvantageVariant v) noexcept;
AdvantageVariant variant_from_string(const std::string& s);

struct AdvantageVector {
  std::vector<double> values;
  AdvantageVariant variant = AdvantageVariant::DrGrpo;

  bool operator==(const AdvantageVector&) const = default;
};

enum class JudgeKind : std::uint8_t { Remote, BradleyTerry, Cyclic, Positional, Oracle };

const char* to_string(JudgeKind k) noexcept;
JudgeKind judge_kind_from_string(const std::string& s);

struct RetryPolicy {
  int max_attempts = 3;
  std::vector<int> backoff_ms{500, 2000, 8000};  // last value repeats

  int delay_ms(int failed_attempts) const noexcept;
  bool operator==(const RetryPolicy&) const = default;
};

struct JudgeSpec {
  JudgeKind kind = JudgeKind::Oracle;
  bool privileged = true;
  std::optional<std::string> endpoint_url;
  std::optional<std::string> model_id;
  double temperature = 0.0;
  int max_concurrency = 8;
  RetryPolicy retry;
  std::optional<std::uint64_t> seed;
  double position_bias = 1.0;  // positional judge: P(choose A)
  double timeout_s = 60.0;     // remote judge, per attempt

  // Empty when the spec is usable; otherwise one message per broken rule.
  std::vector<std::string> violations() const;
  bool operator==(const JudgeSpec&) const = default;
};

// Returns the list of broken invariants. Empty means the group is valid.
// `tournament` additionally requires N >= 2.
std::vector<std::string> validate_group(const RolloutGroup& group, bool tournament = false);

}  // namespace tourney
