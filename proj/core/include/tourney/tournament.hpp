#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tourney/judge.hpp"
#include "tourney/types.hpp"
#include "tourney/verdict_cache.hpp"

namespace tourney {

struct TournamentPlan {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs;
};

// For i < j in lexicographic order: (i, j) then (j, i). Throws GroupTooSmall
// for n < 2.
TournamentPlan plan(std::size_t n);

// One ordered comparison: `a` is shown as Response A.
struct Matchup {
  const Response* a = nullptr;
  const Response* b = nullptr;
};

struct JudgedMatchup {
  Verdict verdict;
  std::string cache_key;
  bool from_cache = false;
};

struct JudgeRunStats {
  std::size_t judge_calls = 0;
  std::size_t cache_hits = 0;
};

// Judges every matchup for one task: cache first, then the judge on a miss,
// with up to spec().max_concurrency calls in flight. Results are indexed like
// `matchups` regardless of completion order. Every matchup is attempted
// before an error is rethrown; completed verdicts are already cached by then.
// JudgeUnavailable takes precedence over other failures.
std::vector<JudgedMatchup> judge_matchups(const TaskInstance& task,
                                          std::span<const Matchup> matchups, Judge& judge,
                                          VerdictCache* cache, JudgeRunStats* stats = nullptr);

// P(a beats b | this order) read off a verdict: 1 for A, 0 for B, 0.5 for
// Invalid.
double forward_preference(Choice c) noexcept;

// Averages the two orderings: (P(a first) + 1 - P(b first)) / 2.
double debiased_preference(Choice a_first, Choice b_first) noexcept;

struct TournamentResult {
  std::vector<PreferenceRecord> records;  // plan order
  PreferenceMatrix matrix;
  JudgeRunStats stats;
};

TournamentResult run_tournament(const RolloutGroup& group, Judge& judge, VerdictCache* cache);

// r_i = sum_{j != i} P~(i beats j) / (n - 1).
std::vector<double> win_rate_rewards(const PreferenceMatrix& matrix);

}  // namespace tourney
