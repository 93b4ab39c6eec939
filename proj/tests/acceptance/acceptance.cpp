// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <spdlog/spdlog.h>

#include "httplib.h"
#include "support.hpp"
#include "tourney/analysis.hpp"
#include "tourney/engine.hpp"
#include "tourney/language.hpp"
#include "tourney/rl.hpp"
#include "tourney/service.hpp"
#include "tourney/verifiable.hpp"

using namespace tourney;
namespace tt = tourney::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome ok(std::string d = {}) { return {true, std::move(d)}; }
Outcome fail(std::string d) { return {false, std::move(d)}; }

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Outcome positional_cancellation() {
  auto spec = tt::simulated(JudgeKind::Positional);
  spec.position_bias = 1.0;
  SimulatedJudge judge(spec);
  const auto t0 = Clock::now();
  const auto g = tt::group(8);
  const auto m = run_tournament(g, judge, nullptr).matrix;
  const auto r = win_rate_rewards(m);
  const auto a = group_advantages(r).values;
  const double elapsed = ms_since(t0);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (i != j && m(i, j) != 0.5) return fail("entry not 0.5");
  for (std::size_t i = 0; i < 8; ++i)
    if (r[i] != 0.5 || a[i] != 0.0) return fail("reward or advantage not exact");
  if (elapsed >= 1000) return fail("took " + std::to_string(elapsed) + " ms");
  return ok(std::to_string(elapsed) + " ms");
}

Outcome conservation() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(2, 16);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0;
  for (int round = 0; round < 1000; ++round) {
    const auto n = size(rng);
    PreferenceMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, u(rng));
    const auto r = win_rate_rewards(m);
    worst = std::max(worst, std::abs(std::accumulate(r.begin(), r.end(), 0.0) - static_cast<double>(n) / 2));
  }
  std::ostringstream d;
  d << "max deviation " << std::scientific << std::setprecision(2) << worst;
  if (worst > 1e-9) return fail(d.str());
  return ok(d.str());
}

Outcome bt_ordering() {
  SimulatedJudge judge(tt::simulated(JudgeKind::BradleyTerry));
  std::mt19937_64 rng(11);
  std::normal_distribution<double> z;
  for (int draw = 0; draw < 100; ++draw) {
    std::vector<double> s(8);
    for (auto& x : s) x = z(rng);
    const auto g = tt::group(8, [&](std::size_t i) { return tt::score(s[i]); });
    const auto r = win_rate_rewards(run_tournament(g, judge, nullptr).matrix);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        if (s[i] < s[j] && !(r[i] < r[j])) return fail("order broken on draw " + std::to_string(draw));
    if (*std::max_element(r.begin(), r.end()) != 1.0) return fail("max reward below 1");
  }
  return ok();
}

Outcome cyclic_robustness() {
  const std::vector<int> classes{0, 0, 1, 1, 2, 2};
  SimulatedJudge judge(tt::simulated(JudgeKind::Cyclic));
  const auto g = tt::group(6, [&](std::size_t i) { return tt::cls(classes[i]); });
  const auto m = run_tournament(g, judge, nullptr).matrix;
  for (double r : win_rate_rewards(m))
    if (std::abs(r - 0.5) > 1e-12) return fail("reward " + std::to_string(r));

  // Brute force: a triad is decided iff it has one member per class, and
  // every such triad is a cycle.
  std::size_t cyclic = 0, decided = 0;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b)
      for (std::size_t c = b + 1; c < 6; ++c) {
        const int mask = (1 << classes[a]) | (1 << classes[b]) | (1 << classes[c]);
        if (mask == 7) ++cyclic, ++decided;
      }
  const std::vector<PreferenceMatrix> ms{m};
  const auto rep = pnt(ms, PntOptions{});
  if (rep.subsets != 20 || rep.exhaustive_matrices != 1) return fail("not exhaustive");
  if (rep.cyclic != cyclic || rep.decided != decided ||
      rep.pnt != static_cast<double>(cyclic) / static_cast<double>(decided))
    return fail("pnt " + std::to_string(rep.pnt));
  return ok("pnt " + std::to_string(rep.pnt) + " over " + std::to_string(decided) + " decided triads");
}

Outcome call_counts() {
  tt::CountingJudge judge(tt::simulated(JudgeKind::BradleyTerry));
  VerdictCache cache;
  const auto g = tt::group(8, [](std::size_t i) { return tt::score(static_cast<double>(i)); });
  run_tournament(g, judge, &cache);
  const std::size_t cold = judge.calls;
  run_tournament(g, judge, &cache);
  const std::size_t warm = judge.calls - cold;
  if (cold != 56 || warm != 0) return fail("cold " + std::to_string(cold) + ", warm " + std::to_string(warm));
  return ok("cold 56, warm 0");
}

Outcome threshold_boundary() {
  if (fidelity_passes(0.70) != 1 || fidelity_passes(0.6999) != 0) return fail("fidelity_passes");
  ScriptNgramClassifier classifier;
  // 7 English words of 10 counted units, then 6999 of 10000.
  auto fraction = [&](std::size_t english, std::size_t total) {
    std::string text;
    for (std::size_t i = 0; i < english; ++i) {
      static const char* words[] = {"the", "cat", "eats", "fish"};
      text += words[i % 4];
      text += (i % 4 == 3) ? ". " : " ";
    }
    text += "\n";
    for (std::size_t i = english; i < total; ++i) text += "кошка ";
    return language_fraction(text, "en", classifier);
  };
  const auto a = fraction(7, 10);
  const auto b = fraction(6999, 10000);
  if (a.counted_units != 10 || a.fraction != 0.70) return fail("7/10 text gave " + std::to_string(a.fraction));
  if (b.counted_units != 10000 || b.fraction != 0.6999)
    return fail("6999/10000 text gave " + std::to_string(b.fraction));
  if (fidelity_passes(a.fraction) != 1 || fidelity_passes(b.fraction) != 0) return fail("scores");
  return ok();
}

Outcome drgrpo_exactness() {
  const std::vector<double> totals{2, 1, 0, 1};
  if (group_advantages(totals).values != std::vector<double>{1, 0, -1, 0}) return fail("advantages");
  const double s = clipped_surrogate(2.0, 1.0);
  if (std::abs(s - 1.28) > 1e-15) return fail("surrogate " + std::to_string(s));
  return ok();
}

Outcome grafting() {
  const auto task = tt::task();
  std::vector<Response> good, bad;
  for (std::size_t i = 0; i < 4; ++i) {
    good.push_back(make_response("t0", i, "Six sevens, step " + std::to_string(i) + ", give \\boxed{42}"));
    bad.push_back(make_response("t0", 4 + i, "Six plus seven, step " + std::to_string(i) + ", gives \\boxed{" +
                                                 std::to_string(13 + i) + "}"));
  }
  SimulatedJudge oracle(tt::simulated(JudgeKind::Oracle));
  auto pos = tt::simulated(JudgeKind::Positional);
  pos.position_bias = 1.0;
  SimulatedJudge positional(pos);
  std::string detail;
  for (auto row : {RowType::CorrectVsWrong, RowType::AnswerOnly, RowType::CotOnly}) {
    const auto pairs = build_graft_pairs(task, good, bad, row, 200, 5);
    const auto o = graft_accuracy(oracle, pairs);
    const auto p = graft_accuracy(positional, pairs);
    if (o.pairs != 200 || o.accuracy != 1.0 || p.accuracy != 0.5)
      return fail(std::string(to_string(row)) + ": oracle " + std::to_string(o.accuracy) + ", positional " +
                  std::to_string(p.accuracy));
  }
  return ok("200 pairs per row");
}

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(TOURNEY_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome prompt_fidelity() {
  for (bool priv : {true, false}) {
    const auto r = render_prompt(priv, "QUERY", "REFERENCE", "RESPONSE_A", "RESPONSE_B");
    const std::string stem = priv ? "privileged" : "nonprivileged";
    const auto sys = read_file(stem + "_system.txt");
    const auto user = read_file(stem + "_user.txt");
    if (sys.empty() || user.empty()) return fail("golden files missing");
    if (r.system_message != sys || r.user_message != user) return fail(stem + " prompt differs");
    if (r.user_message.find("\\boxed{A} or \\boxed{B}") == std::string::npos) return fail("boxed instruction");
  }
  return ok();
}

Outcome service_determinism() {
  EngineConfig config;
  config.judge.kind = JudgeKind::BradleyTerry;
  config.judge.temperature = 1.0;
  config.judge.seed = 3;
  RewardEngine engine(config);
  RewardService service(engine);
  const int port = service.bind("127.0.0.1", 0);
  std::jthread server([&] { service.listen(); });
  struct Stop {
    RewardService& s;
    ~Stop() { s.stop(); }
  } stop{service};

  std::mt19937_64 rng(5);
  std::normal_distribution<double> z;
  const auto g = tt::group(8, [&](std::size_t) { return tt::score(z(rng)); });
  const auto body = nlohmann::json::array({group_to_line(g)}).dump();

  httplib::Client client("127.0.0.1", port);
  for (int i = 0; i < 50 && !client.Get("/healthz"); ++i) std::this_thread::sleep_for(std::chrono::milliseconds(10));
  const auto t0 = Clock::now();
  const auto first = client.Post("/v1/rewards", body, "application/json");
  const double latency = ms_since(t0);
  const auto second = client.Post("/v1/rewards", body, "application/json");
  if (!first || !second) return fail("request failed");
  if (first->status != 200) return fail("status " + std::to_string(first->status) + ": " + first->body);
  if (first->body != second->body) return fail("bodies differ");
  if (latency >= 100) return fail("latency " + std::to_string(latency) + " ms");
  return ok(std::to_string(latency) + " ms");
}

Outcome self_comparison() {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> z;
  std::uniform_int_distribution<std::size_t> groups(1, 4), size(1, 5);
  auto spec = tt::simulated(JudgeKind::BradleyTerry);
  spec.temperature = 1.0;
  SimulatedJudge judge(spec);
  for (int round = 0; round < 10; ++round) {
    std::vector<RolloutGroup> model;
    const auto tasks = groups(rng);
    for (std::size_t t = 0; t < tasks; ++t)
      model.push_back(tt::group(size(rng), [&](std::size_t) { return tt::score(z(rng)); },
                                "r" + std::to_string(round) + "t" + std::to_string(t)));
    const auto h = head_to_head(judge, model, model);
    if (h.win_rate != 0.5) return fail("round " + std::to_string(round) + ": " + std::to_string(h.win_rate));
  }
  return ok();
}

}  // namespace

int main() {
  spdlog::set_level(spdlog::level::warn);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"positional judge cancels under debiasing", positional_cancellation},
      {"win-rate rewards sum to N/2", conservation},
      {"Bradley-Terry rewards follow latent scores", bt_ordering},
      {"cyclic judge gives flat rewards and exact PNT", cyclic_robustness},
      {"56 judge calls cold, 0 warm", call_counts},
      {"language threshold boundary at 0.70", threshold_boundary},
      {"Dr.GRPO advantages and clipped surrogate", drgrpo_exactness},
      {"grafting accuracy of oracle and positional judges", grafting},
      {"judge prompts match golden files", prompt_fidelity},
      {"service responses are deterministic and fast", service_determinism},
      {"head-to-head self-comparison is 0.5", self_comparison},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("threw: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " - " << criteria[i].first
              << (o.detail.empty() ? "" : " (" + o.detail + ")") << "\n";
  }
  return failures == 0 ? 0 : 1;
}
