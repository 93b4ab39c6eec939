#include "tourney/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

#include "tourney/errors.hpp"

namespace tourney {

const char* to_string(TieRule r) noexcept {
  return r == TieRule::KeepTie ? "keep_tie" : "break_by_index";
}

TieRule tie_rule_from_string(const std::string& s) {
  if (s == "keep_tie") return TieRule::KeepTie;
  if (s == "break_by_index") return TieRule::BreakByIndex;
  throw DomainError("unknown tie rule: " + s);
}

MajorityTournament::MajorityTournament(std::size_t n, TieRule rule)
    : n_(n), rule_(rule), upper_(n < 2 ? 0 : n * (n - 1) / 2, Direction::Tie) {}

std::size_t MajorityTournament::index(std::size_t i, std::size_t j) const {
  if (i >= j || j >= n_) throw DomainError("tournament index out of range");
  // Row-major over the strict upper triangle.
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

Direction MajorityTournament::direction(std::size_t i, std::size_t j) const {
  return upper_[index(i, j)];
}

void MajorityTournament::set_direction(std::size_t i, std::size_t j, Direction d) {
  upper_[index(i, j)] = d;
}

bool MajorityTournament::decided(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  const auto d = direction(std::min(i, j), std::max(i, j));
  return d != Direction::Tie || rule_ == TieRule::BreakByIndex;
}

bool MajorityTournament::beats(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  const bool lower_first = i < j;
  const auto d = direction(std::min(i, j), std::max(i, j));
  switch (d) {
    case Direction::IBeatsJ:
      return lower_first;
    case Direction::JBeatsI:
      return !lower_first;
    case Direction::Tie:
      break;
  }
  return rule_ == TieRule::BreakByIndex && lower_first;
}

MajorityTournament majority_tournament(const PreferenceMatrix& matrix, TieRule tie_rule) {
  MajorityTournament t(matrix.n(), tie_rule);
  for (std::size_t i = 0; i < matrix.n(); ++i) {
    for (std::size_t j = i + 1; j < matrix.n(); ++j) {
      const double p = matrix(i, j);
      t.set_direction(i, j, p > 0.5 ? Direction::IBeatsJ
                            : p < 0.5 ? Direction::JBeatsI
                                      : Direction::Tie);
    }
  }
  return t;
}

SubsetStatus classify(const MajorityTournament& t, std::span<const std::size_t> v) {
  bool tie = false;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (!t.decided(v[a], v[b])) {
        tie = true;
        continue;
      }
      for (std::size_t c = b + 1; c < v.size(); ++c) {
        const auto x = v[a], y = v[b], z = v[c];
        if (!t.decided(x, z) || !t.decided(y, z)) continue;
        const bool fwd = t.beats(x, y) && t.beats(y, z) && t.beats(z, x);
        const bool rev = t.beats(y, x) && t.beats(z, y) && t.beats(x, z);
        if (fwd || rev) return SubsetStatus::Cyclic;
      }
    }
  }
  return tie ? SubsetStatus::Indeterminate : SubsetStatus::Transitive;
}

bool is_transitive(const MajorityTournament& t) {
  std::vector<std::size_t> all(t.n());
  std::iota(all.begin(), all.end(), 0);
  return classify(t, all) != SubsetStatus::Cyclic;
}

namespace {

// C(n, k), saturating at `cap + 1` so huge groups never overflow.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  k = std::min(k, n - k);
  long double c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (c > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(std::llround(static_cast<double>(c)));
}

// Advances `idx` to the next k-combination of [0, n); false after the last.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const auto k = idx.size();
  for (std::size_t p = k; p-- > 0;) {
    if (idx[p] < n - k + p) {
      ++idx[p];
      for (std::size_t q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

PntReport pnt(std::span<const PreferenceMatrix> matrices, const PntOptions& opt) {
  if (opt.k < 3) throw DomainError("PNT needs subsets of at least 3 responses");
  for (const auto& m : matrices)
    if (opt.k > m.n()) throw SubsetTooLarge(opt.k, m.n());

  PntReport report;
  double frac_sum = 0.0;
  std::size_t frac_count = 0;
  for (std::size_t mi = 0; mi < matrices.size(); ++mi) {
    const auto t = majority_tournament(matrices[mi], opt.tie_rule);
    const auto n = t.n();
    std::size_t cyclic = 0, decided = 0, seen = 0;
    auto tally = [&](std::span<const std::size_t> subset) {
      ++seen;
      switch (classify(t, subset)) {
        case SubsetStatus::Cyclic:
          ++cyclic;
          ++decided;
          break;
        case SubsetStatus::Transitive:
          ++decided;
          break;
        case SubsetStatus::Indeterminate:
          break;
      }
    };

    std::vector<std::size_t> subset(opt.k);
    if (binomial_capped(n, opt.k, opt.samples_per_matrix) <= opt.samples_per_matrix) {
      ++report.exhaustive_matrices;
      std::iota(subset.begin(), subset.end(), 0);
      do tally(subset);
      while (next_combination(subset, n));
    } else {
      std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                        static_cast<std::uint32_t>(mi)};
      std::mt19937_64 rng(seq);
      std::vector<std::size_t> all(n);
      std::iota(all.begin(), all.end(), 0);
      for (std::size_t s = 0; s < opt.samples_per_matrix; ++s) {
        subset.clear();
        std::sample(all.begin(), all.end(), std::back_inserter(subset), opt.k, rng);
        tally(subset);
      }
    }

    report.subsets += seen;
    report.decided += decided;
    report.cyclic += cyclic;
    const double frac = decided ? static_cast<double>(cyclic) / static_cast<double>(decided) : 0.0;
    report.per_matrix.push_back(frac);
    if (decided) {
      frac_sum += frac;
      ++frac_count;
    }
  }
  if (opt.averaging == PntAveraging::Pooled)
    report.pnt = report.decided ? static_cast<double>(report.cyclic) / static_cast<double>(report.decided) : 0.0;
  else
    report.pnt = frac_count ? frac_sum / static_cast<double>(frac_count) : 0.0;
  return report;
}

const char* to_string(RowType r) noexcept {
  switch (r) {
    case RowType::CorrectVsWrong:
      return "correct_vs_wrong";
    case RowType::AnswerOnly:
      return "answer_only";
    case RowType::CotOnly:
      return "cot_only";
  }
  return "?";
}

RowType row_type_from_string(const std::string& s) {
  if (s == "correct_vs_wrong" || s == "1") return RowType::CorrectVsWrong;
  if (s == "answer_only" || s == "2") return RowType::AnswerOnly;
  if (s == "cot_only" || s == "3") return RowType::CotOnly;
  throw DomainError("unknown graft row type: " + s);
}

std::string graft(std::string_view cot, std::string_view answer) {
  std::string out(cot);
  out += "\\boxed{";
  out += answer;
  out += '}';
  return out;
}

std::vector<GraftPair> build_graft_pairs(const TaskInstance& task,
                                         std::span<const Response> correct_pool,
                                         std::span<const Response> incorrect_pool,
                                         RowType row_type, std::size_t count, std::uint64_t seed) {
  auto usable = [](std::span<const Response> pool, const char* name) {
    std::vector<const Response*> out;
    for (const auto& r : pool)
      if (r.boxed_answer) out.push_back(&r);
    if (out.empty())
      throw InsufficientPool(std::string(name) + " pool has no response with a boxed answer");
    return out;
  };
  const auto good = usable(correct_pool, "correct");
  const auto bad = usable(incorrect_pool, "incorrect");

  std::mt19937_64 rng(seed);
  auto pick = [&rng](const std::vector<const Response*>& pool) {
    return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
  };
  auto side = [&](std::string text, bool cot_ok, bool ans_ok) {
    SideInfo info;
    info.cot_correct = cot_ok;
    info.answer_correct = ans_ok;
    return make_response(task.task_id, 0, std::move(text), info);
  };

  std::vector<GraftPair> pairs;
  pairs.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto* c = pick(good);
    const auto* w = pick(bad);
    Response winner, loser;
    switch (row_type) {
      case RowType::CorrectVsWrong:
        winner = side(graft(c->cot, *c->boxed_answer), true, true);
        loser = side(graft(w->cot, *w->boxed_answer), false, false);
        break;
      case RowType::AnswerOnly:
        winner = side(graft(c->cot, *c->boxed_answer), true, true);
        loser = side(graft(w->cot, *c->boxed_answer), false, true);
        break;
      case RowType::CotOnly:
        winner = side(graft(c->cot, *w->boxed_answer), true, false);
        loser = side(graft(w->cot, *w->boxed_answer), false, false);
        break;
    }
    const bool winner_left = std::bernoulli_distribution(0.5)(rng);
    GraftPair p{task, std::move(winner), std::move(loser), row_type, Side::Left};
    if (!winner_left) {
      std::swap(p.left, p.right);
      p.ground_truth_winner = Side::Right;
    }
    p.left.rollout_index = 0;
    p.right.rollout_index = 1;
    pairs.push_back(std::move(p));
  }
  return pairs;
}

Interval wilson_interval(double successes, std::size_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double p = successes / nn;
  const double z2 = z * z;
  const double center = (p + z2 / (2 * nn)) / (1 + z2 / nn);
  const double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / (1 + z2 / nn);
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

GraftReport graft_accuracy(Judge& judge, std::span<const GraftPair> pairs, VerdictCache* cache) {
  GraftReport report;
  if (pairs.empty()) return report;
  report.row_type = pairs.front().row_type;
  report.pairs = pairs.size();

  // Batch matchups per task so concurrency spans the whole row.
  std::map<std::string, std::vector<std::size_t>> by_task;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (pairs[k].row_type != report.row_type)
      throw DomainError("graft_accuracy expects pairs of a single row type");
    by_task[pairs[k].task.task_id].push_back(k);
  }

  double credit = 0.0;
  for (const auto& [task_id, idx] : by_task) {
    std::vector<Matchup> matchups;
    matchups.reserve(idx.size() * 2);
    for (auto k : idx) {
      matchups.push_back({&pairs[k].left, &pairs[k].right});
      matchups.push_back({&pairs[k].right, &pairs[k].left});
    }
    const auto judged = judge_matchups(pairs[idx.front()].task, matchups, judge, cache);
    for (std::size_t m = 0; m < idx.size(); ++m) {
      const double left = debiased_preference(judged[2 * m].verdict.choice,
                                              judged[2 * m + 1].verdict.choice);
      const double p = pairs[idx[m]].ground_truth_winner == Side::Left ? left : 1.0 - left;
      credit += p > 0.5 ? 1.0 : p == 0.5 ? 0.5 : 0.0;
    }
  }
  report.accuracy = credit / static_cast<double>(pairs.size());
  report.ci95 = wilson_interval(credit, pairs.size());
  return report;
}

HeadToHead head_to_head(Judge& judge, std::span<const RolloutGroup> model_a,
                        std::span<const RolloutGroup> model_b, VerdictCache* cache) {
  std::unordered_map<std::string, const RolloutGroup*> b_by_task;
  for (const auto& g : model_b)
    if (!b_by_task.emplace(g.task.task_id, &g).second)
      throw TaskMismatch("model b has duplicate task " + g.task.task_id);
  if (model_a.size() != model_b.size())
    throw TaskMismatch("models cover different numbers of tasks");

  HeadToHead out;
  double sum = 0.0;
  for (const auto& ga : model_a) {
    const auto it = b_by_task.find(ga.task.task_id);
    if (it == b_by_task.end()) throw TaskMismatch("task " + ga.task.task_id + " missing from model b");
    const auto& gb = *it->second;
    if (ga.size() != gb.size())
      throw TaskMismatch("task " + ga.task.task_id + ": response counts differ");

    std::vector<Matchup> matchups;
    matchups.reserve(ga.size() * gb.size() * 2);
    for (const auto& x : ga.responses) {
      for (const auto& y : gb.responses) {
        matchups.push_back({&x, &y});
        matchups.push_back({&y, &x});
      }
    }
    const auto judged = judge_matchups(ga.task, matchups, judge, cache);
    for (std::size_t m = 0; m + 1 < judged.size(); m += 2)
      sum += debiased_preference(judged[m].verdict.choice, judged[m + 1].verdict.choice);
    out.pairs += matchups.size() / 2;
    ++out.tasks;
  }
  if (out.pairs) out.win_rate = sum / static_cast<double>(out.pairs);
  return out;
}

std::vector<std::vector<double>> head_to_head_matrix(
    Judge& judge, std::span<const std::vector<RolloutGroup>> models, VerdictCache* cache) {
  const auto m = models.size();
  std::vector<std::vector<double>> out(m, std::vector<double>(m, 0.5));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double w = head_to_head(judge, models[i], models[j], cache).win_rate;
      out[i][j] = w;
      out[j][i] = 1.0 - w;
    }
  }
  return out;
}

}  // namespace tourney
