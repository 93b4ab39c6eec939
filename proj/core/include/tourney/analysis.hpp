#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tourney/judge.hpp"
#include "tourney/tournament.hpp"
#include "tourney/types.hpp"
#include "tourney/verdict_cache.hpp"

namespace tourney {

enum class TieRule : std::uint8_t { KeepTie, BreakByIndex };

const char* to_string(TieRule r) noexcept;
TieRule tie_rule_from_string(const std::string& s);

enum class Direction : std::uint8_t { IBeatsJ, JBeatsI, Tie };

// Thresholded view of a preference matrix: P~ > 0.5 wins, < 0.5 loses,
// exactly 0.5 ties. Under BreakByIndex a tie goes to the lower index.
class MajorityTournament {
 public:
  MajorityTournament() = default;
  MajorityTournament(std::size_t n, TieRule rule);

  std::size_t n() const noexcept { return n_; }
  TieRule tie_rule() const noexcept { return rule_; }

  // Raw direction for i < j (ties are kept here regardless of the rule).
  Direction direction(std::size_t i, std::size_t j) const;
  void set_direction(std::size_t i, std::size_t j, Direction d);

  // Decided after the tie rule is applied. False for unresolved ties.
  bool beats(std::size_t i, std::size_t j) const;
  bool decided(std::size_t i, std::size_t j) const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;
  std::size_t n_ = 0;
  TieRule rule_ = TieRule::KeepTie;
  std::vector<Direction> upper_;
};

MajorityTournament majority_tournament(const PreferenceMatrix& matrix,
                                       TieRule tie_rule = TieRule::KeepTie);

enum class SubsetStatus : std::uint8_t { Transitive, Cyclic, Indeterminate };

// Cyclic when the vertices contain a decided 3-cycle; Indeterminate when
// they contain an unresolved tie and no cycle.
SubsetStatus classify(const MajorityTournament& t, std::span<const std::size_t> vertices);

// True iff no decided 3-cycle exists.
bool is_transitive(const MajorityTournament& t);

enum class PntAveraging : std::uint8_t { PerMatrix, Pooled };

struct PntOptions {
  std::size_t k = 3;
  std::size_t samples_per_matrix = 1000;
  std::uint64_t seed = 0;
  TieRule tie_rule = TieRule::KeepTie;
  PntAveraging averaging = PntAveraging::PerMatrix;
};

struct PntReport {
  double pnt = 0.0;
  std::size_t subsets = 0;    // examined, across matrices
  std::size_t decided = 0;    // Transitive + Cyclic
  std::size_t cyclic = 0;
  std::size_t exhaustive_matrices = 0;
  std::vector<double> per_matrix;  // fraction per matrix; 0 when nothing decided
};

// Fraction of decided size-k sub-tournaments that contain a 3-cycle.
// Enumerates every subset when C(n, k) <= samples_per_matrix, otherwise
// draws that many uniform subsets. Per-matrix averaging skips matrices with
// no decided subset. Throws SubsetTooLarge when k exceeds some n and
// DomainError when k < 3.
PntReport pnt(std::span<const PreferenceMatrix> matrices, const PntOptions& options);

enum class RowType : std::uint8_t {
  CorrectVsWrong,  // correct CoT + correct answer vs wrong CoT + wrong answer
  AnswerOnly,      // correct CoT + correct answer vs wrong CoT + correct answer
  CotOnly,         // correct CoT + wrong answer vs wrong CoT + wrong answer
};

const char* to_string(RowType r) noexcept;
RowType row_type_from_string(const std::string& s);

enum class Side : std::uint8_t { Left, Right };

struct GraftPair {
  TaskInstance task;
  Response left;   // side_info carries answer_correct / cot_correct
  Response right;
  RowType row_type = RowType::CorrectVsWrong;
  Side ground_truth_winner = Side::Left;
};

// Text before the final box followed by "\boxed{answer}".
std::string graft(std::string_view cot, std::string_view answer);

// Splices CoTs and answers drawn from the two pools of one task into
// `count` pairs of the requested row type, with left/right order drawn
// from the seed. Throws InsufficientPool when a pool has no response with
// a boxed answer.
std::vector<GraftPair> build_graft_pairs(const TaskInstance& task,
                                         std::span<const Response> correct_pool,
                                         std::span<const Response> incorrect_pool,
                                         RowType row_type, std::size_t count, std::uint64_t seed);

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

// Wilson score interval for `successes` out of `n` at the given z.
Interval wilson_interval(double successes, std::size_t n, double z = 1.959963984540054);

struct GraftReport {
  RowType row_type = RowType::CorrectVsWrong;
  std::size_t pairs = 0;
  double accuracy = 0.0;
  Interval ci95;
};

// Judges each pair in both orders; debiased preference for the winner
// above 0.5 scores 1, exactly 0.5 scores one half. Throws DomainError when
// pairs mix row types.
GraftReport graft_accuracy(Judge& judge, std::span<const GraftPair> pairs,
                           VerdictCache* cache = nullptr);

struct HeadToHead {
  double win_rate = 0.5;  // P~(model a beats model b), pooled over pairs
  std::size_t tasks = 0;
  std::size_t pairs = 0;
};

// Every cross-model response pair of every task, judged in both orders.
// Throws TaskMismatch unless both sides cover the same task ids with equal
// response counts.
HeadToHead head_to_head(Judge& judge, std::span<const RolloutGroup> model_a,
                        std::span<const RolloutGroup> model_b, VerdictCache* cache = nullptr);

// Row model vs column model for every pair of models; diagonal 0.5.
std::vector<std::vector<double>> head_to_head_matrix(
    Judge& judge, std::span<const std::vector<RolloutGroup>> models,
    VerdictCache* cache = nullptr);

}  // namespace tourney
