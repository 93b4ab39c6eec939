#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tourney/errors.hpp"
#include "tourney/iso639.hpp"
#include "tourney/serialization.hpp"

using namespace tourney;
namespace tt = tourney::testing;
using nlohmann::json;

TEST_SUITE("core_model") {
  TEST_CASE("validate_group accepts a well-formed group of eight") {
    CHECK(validate_group(tt::group(8), true).empty());
  }

  TEST_CASE("validate_group names a mismatched task_id") {
    auto g = tt::group(8);
    g.responses[3].task_id = "other";
    const auto v = validate_group(g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("task_id") != std::string::npos);
  }

  TEST_CASE("validate_group requires two responses only for tournaments") {
    const auto g = tt::group(1);
    CHECK(validate_group(g, false).empty());
    const auto v = validate_group(g, true);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("N") != std::string::npos);
  }

  TEST_CASE("validate_group flags a bad language code and empty reference") {
    auto g = tt::group(2);
    g.task.target_lang = "xx";
    g.task.reference_response.clear();
    g.task.reference_answer.clear();
    CHECK(validate_group(g).size() == 2);
  }

  TEST_CASE("validate_group flags rollout index and box consistency") {
    auto g = tt::group(3);
    g.responses[2].rollout_index = 7;
    g.responses[1].boxed_answer.reset();
    CHECK(validate_group(g).size() == 2);
  }

  TEST_CASE("make_response splits cot and normalized answer") {
    const auto r = make_response("t", 0, "think hard \\boxed{ 3.50 } done");
    REQUIRE(r.boxed_answer);
    CHECK(*r.boxed_answer == "3.5");
    CHECK(r.cot == "think hard ");
    const auto none = make_response("t", 1, "no box");
    CHECK_FALSE(none.boxed_answer);
    CHECK(none.cot == "no box");
  }

  TEST_CASE("iso 639-1 table holds exactly 183 lowercase codes") {
    std::size_t count = 0;
    for (char a = 'a'; a <= 'z'; ++a)
      for (char b = 'a'; b <= 'z'; ++b) count += is_iso639_1(std::string{a, b});
    CHECK(count == 183);
    for (const char* c : {"en", "es", "zh", "ja", "sw", "yo", "te", "bn", "aa", "zu"}) CHECK(is_iso639_1(c));
    for (const char* c : {"xx", "EN", "", "eng", "e"}) CHECK_FALSE(is_iso639_1(c));
  }

  TEST_CASE("PreferenceMatrix construction paths keep antisymmetry") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int round = 0; round < 50; ++round) {
      const std::size_t n = 2 + round % 9;
      std::vector<double> fwd(n * n, 0.5);
      for (auto& v : fwd) v = pick(rng) * 0.5;
      const auto m = PreferenceMatrix::from_ordered(n, fwd);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(m(i, i) == 0.5);
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) CHECK(std::abs(m(i, j) + m(j, i) - 1.0) <= 1e-12);
      }
      auto copy = m;
      copy.set(0, 1, 0.3);
      CHECK(copy(1, 0) == doctest::Approx(0.7));
    }
  }

  TEST_CASE("from_entries rejects broken antisymmetry and range") {
    CHECK_THROWS_AS(PreferenceMatrix::from_entries(2, {0.5, 0.6, 0.6, 0.5}), DomainError);
    CHECK_THROWS_AS(PreferenceMatrix::from_entries(2, {0.5, 1.5, -0.5, 0.5}), DomainError);
    CHECK_NOTHROW(PreferenceMatrix::from_entries(2, {0.5, 0.75, 0.25, 0.5}));
  }

  TEST_CASE("serialization round-trips every domain type") {
    auto g = tt::group(3, [](std::size_t i) {
      SideInfo s;
      s.latent_score = 0.5 * static_cast<double>(i);
      s.answer_correct = i % 2 == 0;
      return s;
    });
    CHECK(group_from_line(json::parse(group_to_line(g).dump())) == g);
    CHECK(json(g.task).get<TaskInstance>() == g.task);
    for (const auto& r : g.responses) CHECK(json(r).get<Response>() == r);

    const Verdict v{Choice::B, "because \\boxed{B}"};
    CHECK(json(v).get<Verdict>() == v);
    const PreferenceRecord rec{"t0", {1, 2}, Choice::Invalid, "???", "abc"};
    CHECK(json(rec).get<PreferenceRecord>() == rec);
    const auto m = PreferenceMatrix::from_entries(3, {0.5, 1, 0.25, 0, 0.5, 0.5, 0.75, 0.5, 0.5}, 2);
    CHECK(json::parse(json(m).dump()).get<PreferenceMatrix>() == m);
    const RewardBreakdown b{1, 1, 0, 0.75, 2.75};
    CHECK(json(b).get<RewardBreakdown>() == b);
    const AdvantageVector a{{1, -1}, AdvantageVariant::Grpo};
    CHECK(json(a).get<AdvantageVector>() == a);
    JudgeSpec spec;
    spec.kind = JudgeKind::Remote;
    spec.endpoint_url = "http://x/v1/chat/completions";
    spec.model_id = "m";
    spec.seed = 9;
    CHECK(json(spec).get<JudgeSpec>() == spec);
    const CacheEntry e{"k", v, 1234};
    CHECK(json(e).get<CacheEntry>() == e);
    const RewardLine line{"t0", 2, b, -0.5};
    CHECK(json(line).get<RewardLine>() == line);
  }

  TEST_CASE("group_from_line reports missing fields and side_info length") {
    auto j = group_to_line(tt::group(2));
    j.erase("reference_response");
    CHECK_THROWS_AS(group_from_line(j, 4), MissingField);
    auto k = group_to_line(tt::group(2));
    k["side_info"] = json::array({json::object()});
    CHECK_THROWS_AS(group_from_line(k, 1), ParseError);
  }

  TEST_CASE("JudgeSpec rules") {
    JudgeSpec s;
    s.kind = JudgeKind::Remote;
    CHECK_FALSE(s.violations().empty());
    s.endpoint_url = "http://localhost:1";
    s.model_id = "m";
    CHECK(s.violations().empty());
    s.max_concurrency = 0;
    CHECK_FALSE(s.violations().empty());
  }
}
