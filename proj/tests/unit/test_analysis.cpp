#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tourney/analysis.hpp"
#include "tourney/answer.hpp"
#include "tourney/errors.hpp"

using namespace tourney;
namespace tt = tourney::testing;

namespace {

PreferenceMatrix from_wins(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& wins) {
  PreferenceMatrix m(n);
  for (auto [w, l] : wins) m.set(w, l, 1.0);
  return m;
}

// Debiased matrix for a cyclic judge over the given classes.
PreferenceMatrix cyclic_matrix(const std::vector<int>& classes) {
  SimulatedJudge judge(tt::simulated(JudgeKind::Cyclic));
  const auto g = tt::group(classes.size(), [&](std::size_t i) { return tt::cls(classes[i]); });
  return run_tournament(g, judge, nullptr).matrix;
}

// Brute force over all triads straight from the class labels.
std::pair<std::size_t, std::size_t> triad_oracle(const std::vector<int>& classes, bool break_ties) {
  std::size_t cyclic = 0, decided = 0;
  const auto n = classes.size();
  auto beats = [&](std::size_t i, std::size_t j) {
    if (classes[i] == classes[j]) return break_ties && i < j;
    return (classes[i] + 1) % 3 == classes[j];
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const bool tie = classes[a] == classes[b] || classes[b] == classes[c] || classes[a] == classes[c];
        const bool cyc = (beats(a, b) && beats(b, c) && beats(c, a)) || (beats(b, a) && beats(c, b) && beats(a, c));
        if (cyc) {
          ++cyclic;
          ++decided;
        } else if (!tie || break_ties) {
          ++decided;
        }
      }
  return {cyclic, decided};
}

Response text_resp(std::string id, std::size_t idx, std::string text) {
  return make_response(std::move(id), idx, std::move(text));
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("majority_tournament thresholds") {
    PreferenceMatrix m(3);
    m.set(0, 1, 1.0);
    m.set(0, 2, 0.75);
    m.set(1, 2, 0.5);
    const auto t = majority_tournament(m);
    CHECK(t.direction(0, 1) == Direction::IBeatsJ);
    CHECK(t.direction(0, 2) == Direction::IBeatsJ);
    CHECK(t.direction(1, 2) == Direction::Tie);
    CHECK_FALSE(t.decided(1, 2));
    const auto b = majority_tournament(m, TieRule::BreakByIndex);
    CHECK(b.beats(1, 2));
    CHECK_FALSE(b.beats(2, 1));
    PreferenceMatrix l(2);
    l.set(0, 1, 0.25);
    CHECK(majority_tournament(l).beats(1, 0));
  }

  TEST_CASE("is_transitive examples") {
    CHECK(is_transitive(majority_tournament(from_wins(3, {{0, 1}, {1, 2}, {0, 2}}))));
    CHECK_FALSE(is_transitive(majority_tournament(from_wins(3, {{0, 1}, {1, 2}, {2, 0}}))));
    CHECK(is_transitive(majority_tournament(from_wins(2, {{1, 0}}))));
    CHECK(is_transitive(majority_tournament(PreferenceMatrix(2))));
  }

  TEST_CASE("is_transitive agrees with the win-count sequence test") {
    std::mt19937_64 rng(31);
    std::bernoulli_distribution coin(0.5);
    for (int round = 0; round < 500; ++round) {
      const std::size_t n = 3 + static_cast<std::size_t>(round) % 6;
      PreferenceMatrix m(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, coin(rng) ? 1.0 : 0.0);
      std::vector<std::size_t> wins(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && m(i, j) > 0.5) ++wins[i];
      std::sort(wins.begin(), wins.end());
      std::vector<std::size_t> seq(n);
      std::iota(seq.begin(), seq.end(), 0);
      CHECK(is_transitive(majority_tournament(m)) == (wins == seq));
    }
  }

  TEST_CASE("pnt examples") {
    const std::vector<PreferenceMatrix> linear{from_wins(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})};
    CHECK(pnt(linear, {}).pnt == 0.0);
    const std::vector<PreferenceMatrix> cycle{from_wins(3, {{0, 1}, {1, 2}, {2, 0}})};
    CHECK(pnt(cycle, {}).pnt == 1.0);
    PntOptions big;
    big.k = 5;
    CHECK_THROWS_AS(pnt(cycle, big), SubsetTooLarge);
    big.k = 2;
    CHECK_THROWS_AS(pnt(cycle, big), DomainError);
  }

  TEST_CASE("cyclic judge PNT equals the brute-force triad count") {
    const std::vector<int> classes{0, 0, 1, 1, 2, 2};
    const std::vector<PreferenceMatrix> ms{cyclic_matrix(classes)};
    for (bool brk : {false, true}) {
      PntOptions o;
      o.tie_rule = brk ? TieRule::BreakByIndex : TieRule::KeepTie;
      const auto r = pnt(ms, o);
      const auto [cyc, dec] = triad_oracle(classes, brk);
      CHECK(r.subsets == 20);
      CHECK(r.exhaustive_matrices == 1);
      CHECK(r.cyclic == cyc);
      CHECK(r.decided == dec);
      CHECK(r.pnt == static_cast<double>(cyc) / static_cast<double>(dec));
    }
    // 2*2*2 cross-class triads, all cyclic; others contain a tie.
    CHECK(triad_oracle(classes, false) == std::pair<std::size_t, std::size_t>{8, 8});
    CHECK(triad_oracle(classes, true) == std::pair<std::size_t, std::size_t>{8, 20});
  }

  TEST_CASE("sampled PNT lies within 3 sigma of the exhaustive value") {
    std::mt19937_64 rng(77);
    std::bernoulli_distribution coin(0.5);
    for (int round = 0; round < 5; ++round) {
      PreferenceMatrix m(9);
      for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j) m.set(i, j, coin(rng) ? 1.0 : 0.0);
      const std::vector<PreferenceMatrix> ms{m};
      PntOptions exhaustive;
      exhaustive.k = 4;
      exhaustive.samples_per_matrix = 1000;  // C(9,4) = 126
      const auto e = pnt(ms, exhaustive);
      CHECK(e.exhaustive_matrices == 1);
      PntOptions sampled = exhaustive;
      sampled.samples_per_matrix = 100;
      sampled.seed = static_cast<std::uint64_t>(round);
      const auto s = pnt(ms, sampled);
      CHECK(s.exhaustive_matrices == 0);
      CHECK(s.subsets == 100);
      const double sigma = std::sqrt(e.pnt * (1 - e.pnt) / 100.0);
      CHECK(std::abs(s.pnt - e.pnt) <= 3 * sigma + 1e-12);
    }
  }

  TEST_CASE("pnt averaging modes") {
    const std::vector<PreferenceMatrix> ms{from_wins(3, {{0, 1}, {1, 2}, {2, 0}}),
                                           from_wins(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})};
    PntOptions o;
    CHECK(pnt(ms, o).pnt == 0.5);  // (1 + 0) / 2
    o.averaging = PntAveraging::Pooled;
    CHECK(pnt(ms, o).pnt == 0.2);  // 1 cyclic of 5 decided triads
  }

  TEST_CASE("graft pairs follow the row patterns") {
    const auto task = tt::task();
    const std::vector<Response> good{text_resp("t0", 0, "good reasoning \\boxed{42}")};
    const std::vector<Response> bad{text_resp("t0", 1, "bad reasoning \\boxed{41}")};
    auto flags = [](const Response& r) {
      return std::pair{*r.side_info.cot_correct, *r.side_info.answer_correct};
    };
    for (auto row : {RowType::CorrectVsWrong, RowType::AnswerOnly, RowType::CotOnly}) {
      for (const auto& p : build_graft_pairs(task, good, bad, row, 20, 3)) {
        const auto& win = p.ground_truth_winner == Side::Left ? p.left : p.right;
        const auto& lose = p.ground_truth_winner == Side::Left ? p.right : p.left;
        CHECK(p.left.rollout_index == 0);
        CHECK(p.right.rollout_index == 1);
        switch (row) {
          case RowType::CorrectVsWrong:
            CHECK(flags(win) == std::pair{true, true});
            CHECK(flags(lose) == std::pair{false, false});
            CHECK(win.text == "good reasoning \\boxed{42}");
            break;
          case RowType::AnswerOnly:
            CHECK(flags(win) == std::pair{true, true});
            CHECK(flags(lose) == std::pair{false, true});
            CHECK(lose.text == "bad reasoning \\boxed{42}");
            break;
          case RowType::CotOnly:
            CHECK(flags(win) == std::pair{true, false});
            CHECK(flags(lose) == std::pair{false, false});
            CHECK(win.text == "good reasoning \\boxed{41}");
            break;
        }
        CHECK(extract_boxed(win.text).has_value());
      }
    }
    const std::vector<Response> unboxed{text_resp("t0", 2, "no answer")};
    CHECK_THROWS_AS(build_graft_pairs(task, unboxed, bad, RowType::CotOnly, 1, 0), InsufficientPool);
    CHECK_THROWS_AS(build_graft_pairs(task, good, {}, RowType::CotOnly, 1, 0), InsufficientPool);
  }

  TEST_CASE("left and right are both used") {
    const std::vector<Response> good{text_resp("t0", 0, "a \\boxed{42}")};
    const std::vector<Response> bad{text_resp("t0", 1, "b \\boxed{1}")};
    const auto pairs = build_graft_pairs(tt::task(), good, bad, RowType::CorrectVsWrong, 200, 9);
    const auto left = std::count_if(pairs.begin(), pairs.end(),
                                    [](const GraftPair& p) { return p.ground_truth_winner == Side::Left; });
    CHECK(left > 60);
    CHECK(left < 140);
  }

  TEST_CASE("graft accuracy of oracle and positional judges") {
    const std::vector<Response> good{text_resp("t0", 0, "right way \\boxed{42}"),
                                     text_resp("t0", 1, "also right \\boxed{42}")};
    const std::vector<Response> bad{text_resp("t0", 2, "wrong way \\boxed{40}"),
                                    text_resp("t0", 3, "also wrong \\boxed{39}")};
    SimulatedJudge oracle(tt::simulated(JudgeKind::Oracle));
    auto pos_spec = tt::simulated(JudgeKind::Positional);
    pos_spec.position_bias = 1.0;
    SimulatedJudge positional(pos_spec);
    for (auto row : {RowType::CorrectVsWrong, RowType::AnswerOnly, RowType::CotOnly}) {
      const auto pairs = build_graft_pairs(tt::task(), good, bad, row, 50, 1);
      CHECK(graft_accuracy(oracle, pairs).accuracy == 1.0);
      CHECK(graft_accuracy(positional, pairs).accuracy == 0.5);
    }
  }

  TEST_CASE("row 3 needs the oracle to consult cot_correct") {
    const std::vector<Response> good{text_resp("t0", 0, "right \\boxed{42}")};
    const std::vector<Response> bad{text_resp("t0", 1, "wrong \\boxed{40}")};
    auto pairs = build_graft_pairs(tt::task(), good, bad, RowType::CotOnly, 40, 2);
    for (auto& p : pairs) {
      p.left.side_info.cot_correct.reset();
      p.right.side_info.cot_correct.reset();
    }
    SimulatedJudge oracle(tt::simulated(JudgeKind::Oracle));
    CHECK(graft_accuracy(oracle, pairs).accuracy == 0.5);
  }

  TEST_CASE("graft_accuracy rejects mixed rows") {
    const std::vector<Response> good{text_resp("t0", 0, "r \\boxed{42}")};
    const std::vector<Response> bad{text_resp("t0", 1, "w \\boxed{40}")};
    auto pairs = build_graft_pairs(tt::task(), good, bad, RowType::CotOnly, 2, 2);
    pairs[1].row_type = RowType::AnswerOnly;
    SimulatedJudge oracle(tt::simulated(JudgeKind::Oracle));
    CHECK_THROWS_AS(graft_accuracy(oracle, pairs), DomainError);
  }

  TEST_CASE("wilson interval") {
    // Standard Wilson bounds for 50/100 and 45/50 at z = 1.96.
    const auto i = wilson_interval(50, 100);
    CHECK(i.low == doctest::Approx(0.4038).epsilon(1e-3));
    CHECK(i.high == doctest::Approx(0.5962).epsilon(1e-3));
    const auto j = wilson_interval(45, 50);
    CHECK(j.low == doctest::Approx(0.7864).epsilon(1e-3));
    CHECK(j.high == doctest::Approx(0.9565).epsilon(1e-3));
  }

  TEST_CASE("head_to_head against itself is one half") {
    SimulatedJudge bt(tt::simulated(JudgeKind::BradleyTerry));
    std::mt19937_64 rng(2);
    std::normal_distribution<double> z;
    std::vector<RolloutGroup> model;
    for (int t = 0; t < 3; ++t)
      model.push_back(tt::group(4, [&](std::size_t) { return tt::score(z(rng)); }, "t" + std::to_string(t)));
    CHECK(head_to_head(bt, model, model).win_rate == 0.5);
  }

  TEST_CASE("head_to_head with a dominant model") {
    SimulatedJudge bt(tt::simulated(JudgeKind::BradleyTerry));
    std::vector<RolloutGroup> a, b;
    for (int t = 0; t < 2; ++t) {
      const auto id = "t" + std::to_string(t);
      a.push_back(tt::group(3, [](std::size_t i) { return tt::score(10.0 + static_cast<double>(i)); }, id));
      auto g = tt::group(3, [](std::size_t i) { return tt::score(static_cast<double>(i)); }, id);
      for (auto& r : g.responses) r.text = "model b " + r.text;
      b.push_back(g);
    }
    CHECK(head_to_head(bt, a, b).win_rate == 1.0);
    CHECK(head_to_head(bt, b, a).win_rate == 0.0);
  }

  TEST_CASE("head_to_head hand-computed example") {
    // Ordered verdicts: key is "<text in slot A>|<text in slot B>".
    const std::map<std::string, Choice> v{
        // task 1: P~ = 1, 0.5, 0, 0.75
        {"1a0|1b0", Choice::A}, {"1b0|1a0", Choice::B},
        {"1a0|1b1", Choice::A}, {"1b1|1a0", Choice::A},
        {"1a1|1b0", Choice::B}, {"1b0|1a1", Choice::A},
        {"1a1|1b1", Choice::Invalid}, {"1b1|1a1", Choice::B},
        // task 2: P~ = 0, 1, 0.75, 1
        {"2a0|2b0", Choice::B}, {"2b0|2a0", Choice::A},
        {"2a0|2b1", Choice::A}, {"2b1|2a0", Choice::B},
        {"2a1|2b0", Choice::A}, {"2b0|2a1", Choice::Invalid},
        {"2a1|2b1", Choice::A}, {"2b1|2a1", Choice::B},
    };
    tt::ScriptedJudge judge([&](std::size_t, std::size_t, const JudgeCall& c) {
      return v.at(c.a.text + "|" + c.b.text);
    });
    auto model = [](const std::string& m) {
      std::vector<RolloutGroup> out;
      for (std::string t : {"1", "2"}) {
        auto task = tt::task("task" + t);
        out.push_back(make_group(task, {t + m + "0", t + m + "1"}));
      }
      return out;
    };
    const auto a = model("a"), b = model("b");
    const double expected = (1 + 0.5 + 0 + 0.75 + 0 + 1 + 0.75 + 1) / 8.0;
    const auto r = head_to_head(judge, a, b);
    CHECK(r.win_rate == expected);
    CHECK(r.win_rate == 0.625);
    CHECK(r.pairs == 8);
    CHECK(r.tasks == 2);
    CHECK(head_to_head(judge, b, a).win_rate + r.win_rate == 1.0);
  }

  TEST_CASE("head_to_head rejects unaligned inputs") {
    SimulatedJudge bt(tt::simulated(JudgeKind::BradleyTerry));
    const std::vector<RolloutGroup> a{tt::group(2, [](std::size_t) { return tt::score(1); }, "x")};
    const std::vector<RolloutGroup> b{tt::group(2, [](std::size_t) { return tt::score(1); }, "y")};
    const std::vector<RolloutGroup> c{tt::group(3, [](std::size_t) { return tt::score(1); }, "x")};
    CHECK_THROWS_AS(head_to_head(bt, a, b), TaskMismatch);
    CHECK_THROWS_AS(head_to_head(bt, a, c), TaskMismatch);
  }

  TEST_CASE("head_to_head matrix is antisymmetric") {
    SimulatedJudge bt(tt::simulated(JudgeKind::BradleyTerry));
    std::vector<std::vector<RolloutGroup>> models;
    for (int m = 0; m < 3; ++m) {
      auto g = tt::group(2, [m](std::size_t i) { return tt::score(m * 1.5 + static_cast<double>(i)); }, "t");
      for (auto& r : g.responses) r.text = "m" + std::to_string(m) + " " + r.text;
      models.push_back({g});
    }
    const auto mat = head_to_head_matrix(bt, models);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(mat[i][i] == 0.5);
      for (std::size_t j = 0; j < 3; ++j) CHECK(mat[i][j] + mat[j][i] == 1.0);
    }
  }
}
