#include <benchmark/benchmark.h>

#include <random>

#include "tourney/analysis.hpp"
#include "tourney/judge.hpp"
#include "tourney/language.hpp"
#include "tourney/tournament.hpp"

using namespace tourney;

namespace {

RolloutGroup bt_group(std::size_t n) {
  TaskInstance t;
  t.task_id = "bench";
  t.query = "What is 6 times 7?";
  t.target_lang = "en";
  t.gold_answer = "42";
  t.reference_response = "\\boxed{42}";
  std::vector<std::string> texts;
  std::vector<SideInfo> info;
  for (std::size_t i = 0; i < n; ++i) {
    texts.push_back("candidate " + std::to_string(i) + " \\boxed{" + std::to_string(i) + "}");
    SideInfo s;
    s.latent_score = static_cast<double>(i % 5);
    info.push_back(s);
  }
  return make_group(t, texts, info);
}

void BM_Tournament(benchmark::State& state) {
  JudgeSpec spec;
  spec.kind = JudgeKind::BradleyTerry;
  spec.seed = 1;
  SimulatedJudge judge(spec);
  const auto g = bt_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(win_rate_rewards(run_tournament(g, judge, nullptr).matrix));
}
BENCHMARK(BM_Tournament)->Arg(8)->Arg(16);

void BM_LanguageFraction(benchmark::State& state) {
  ScriptNgramClassifier classifier;
  std::string text;
  for (int i = 0; i < 40; ++i) text += "El gato come pescado todos los días y luego duerme. ";
  for (auto _ : state) benchmark::DoNotOptimize(language_fraction(text, "es", classifier));
}
BENCHMARK(BM_LanguageFraction);

void BM_Pnt(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.5);
  std::vector<PreferenceMatrix> ms;
  for (int k = 0; k < 16; ++k) {
    PreferenceMatrix m(8);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = i + 1; j < 8; ++j) m.set(i, j, coin(rng) ? 1.0 : 0.0);
    ms.push_back(m);
  }
  PntOptions o;
  o.k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pnt(ms, o));
}
BENCHMARK(BM_Pnt)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
