#include "tourney/tournament.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "tourney/errors.hpp"

namespace tourney {

TournamentPlan plan(std::size_t n) {
  if (n < 2) throw GroupTooSmall(n);
  TournamentPlan p{n, {}};
  p.ordered_pairs.reserve(n * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      p.ordered_pairs.emplace_back(i, j);
      p.ordered_pairs.emplace_back(j, i);
    }
  }
  return p;
}

double forward_preference(Choice c) noexcept {
  switch (c) {
    case Choice::A:
      return 1.0;
    case Choice::B:
      return 0.0;
    case Choice::Invalid:
      break;
  }
  return 0.5;
}

double debiased_preference(Choice a_first, Choice b_first) noexcept {
  return (forward_preference(a_first) + (1.0 - forward_preference(b_first))) / 2.0;
}

std::vector<JudgedMatchup> judge_matchups(const TaskInstance& task,
                                          std::span<const Matchup> matchups, Judge& judge,
                                          VerdictCache* cache, JudgeRunStats* stats) {
  const bool privileged = judge.spec().privileged;
  const auto identity = judge.identity();

  std::vector<JudgeRequest> requests;
  std::vector<JudgedMatchup> out(matchups.size());
  requests.reserve(matchups.size());
  for (std::size_t k = 0; k < matchups.size(); ++k) {
    const auto& m = matchups[k];
    auto req = render_prompt(privileged, task.query, task.reference_response, m.a->text, m.b->text);
    req.metadata.task_id = task.task_id;
    req.metadata.pair = {m.a->rollout_index, m.b->rollout_index};
    const JudgeCall call{req, task.query, *m.a, *m.b};
    out[k].cache_key = cache_key(identity, req, judge.cache_salt(call));
    requests.push_back(std::move(req));
  }

  // Duplicate texts are judged independently; the cache keeps the first verdict.
  std::vector<std::size_t> pending;
  JudgeRunStats local;
  for (std::size_t k = 0; k < matchups.size(); ++k) {
    if (cache) {
      if (auto hit = cache->lookup(out[k].cache_key)) {
        out[k].verdict = std::move(*hit);
        out[k].from_cache = true;
        ++local.cache_hits;
        continue;
      }
    }
    pending.push_back(k);
  }

  std::vector<std::exception_ptr> errors(pending.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t slot = next++; slot < pending.size(); slot = next++) {
      const auto k = pending[slot];
      try {
        const JudgeCall call{requests[k], task.query, *matchups[k].a, *matchups[k].b};
        auto verdict = judge.judge(call);
        if (cache) cache->insert(out[k].cache_key, verdict);
        out[k].verdict = std::move(verdict);
      } catch (...) {
        errors[slot] = std::current_exception();
      }
    }
  };
  const auto workers = std::min<std::size_t>(
      pending.size(), static_cast<std::size_t>(std::max(1, judge.spec().max_concurrency)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  local.judge_calls = pending.size();

  if (stats) {
    stats->judge_calls += local.judge_calls;
    stats->cache_hits += local.cache_hits;
  }

  std::exception_ptr first, unavailable;
  std::size_t failed = 0;
  for (auto& e : errors) {
    if (!e) continue;
    ++failed;
    if (!first) first = e;
    if (!unavailable) {
      try {
        std::rethrow_exception(e);
      } catch (const JudgeUnavailable&) {
        unavailable = e;
      } catch (...) {
      }
    }
  }
  if (unavailable) {
    try {
      std::rethrow_exception(unavailable);
    } catch (const JudgeUnavailable& e) {
      throw JudgeUnavailable("task " + task.task_id + ": " + std::to_string(failed) + " of " +
                             std::to_string(pending.size()) + " judge calls failed; " + e.what());
    }
  }
  if (first) std::rethrow_exception(first);
  return out;
}

TournamentResult run_tournament(const RolloutGroup& group, Judge& judge, VerdictCache* cache) {
  const auto n = group.responses.size();
  const auto p = plan(n);

  std::vector<Matchup> matchups;
  matchups.reserve(p.ordered_pairs.size());
  for (auto [i, j] : p.ordered_pairs) matchups.push_back({&group.responses[i], &group.responses[j]});

  TournamentResult result;
  const auto judged = judge_matchups(group.task, matchups, judge, cache, &result.stats);

  std::vector<double> forward(n * n, 0.5);
  std::size_t invalid = 0;
  result.records.reserve(judged.size());
  for (std::size_t k = 0; k < judged.size(); ++k) {
    const auto [i, j] = p.ordered_pairs[k];
    const auto& v = judged[k].verdict;
    forward[i * n + j] = forward_preference(v.choice);
    if (v.choice == Choice::Invalid) ++invalid;
    result.records.push_back({group.task.task_id, {i, j}, v.choice, v.raw, judged[k].cache_key});
  }
  result.matrix = PreferenceMatrix::from_ordered(n, forward, invalid);
  if (invalid > 0)
    spdlog::info("task {}: {} of {} judge verdicts were unparseable", group.task.task_id, invalid,
                 judged.size());
  return result;
}

std::vector<double> win_rate_rewards(const PreferenceMatrix& matrix) {
  const auto n = matrix.n();
  if (n < 2) throw GroupTooSmall(n);
  std::vector<double> rewards(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) sum += matrix(i, j);
    rewards[i] = sum / static_cast<double>(n - 1);
  }
  return rewards;
}

}  // namespace tourney
