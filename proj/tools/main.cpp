// tourney: batch reward scoring, judge tournaments and diagnostics over
// JSONL rollout files, plus the HTTP reward service.

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <csignal>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "tourney/analysis.hpp"
#include "tourney/config.hpp"
#include "tourney/engine.hpp"
#include "tourney/errors.hpp"
#include "tourney/io.hpp"
#include "tourney/service.hpp"
#include "tourney/verifiable.hpp"

using namespace tourney;
using nlohmann::json;

namespace {

struct Options {
  std::vector<std::string> in;
  std::string out = "-";
  std::string config;
  std::string judge;
  std::string variant;
  std::optional<std::uint64_t> seed;
  std::vector<std::size_t> k{3};
  std::size_t samples = 1000;
  std::string tie_rule = "keep_tie";
  bool pooled = false;
  bool matrix = false;
  std::string records;
  std::string row = "all";
  std::size_t count = 200;
  std::vector<std::string> names;
};

EngineConfig load(const Options& o) {
  auto cfg = o.config.empty() ? default_config() : load_config(o.config);
  if (!o.judge.empty()) cfg.judge.kind = judge_kind_from_string(o.judge);
  if (!o.variant.empty()) cfg.rl.variant = variant_from_string(o.variant);
  if (o.seed) cfg.judge.seed = *o.seed;
  cfg.validate();
  return cfg;
}

std::vector<RolloutGroup> groups_from(const std::string& path) {
  if (path == "-") return read_groups(std::cin);
  return load_groups(path);
}

std::vector<TaskInstance> tasks_of(const std::vector<RolloutGroup>& groups) {
  std::vector<TaskInstance> tasks;
  std::map<std::string, bool> seen;
  for (const auto& g : groups)
    if (seen.emplace(g.task.task_id, true).second) tasks.push_back(g.task);
  return tasks;
}

int cmd_score(const Options& o) {
  RewardEngine engine(load(o));
  const auto groups = groups_from(o.in.front());
  engine.validate(groups, false);
  OutputSink sink(o.out);
  for (const auto& g : groups)
    for (const auto& s : engine.score(g)) sink.stream() << to_json_line(s).dump() << '\n';
  const auto tasks = tasks_of(groups);
  const auto m = eval_metrics(groups, tasks, engine.classifier(), engine.config().language_threshold);
  spdlog::info("{} tasks, {} responses: accuracy {:.2f}%, language fidelity {:.2f}%", m.tasks,
               m.responses, m.accuracy_pct, m.fidelity_pct);
  return 0;
}

int cmd_tournament(const Options& o) {
  RewardEngine engine(load(o));
  const auto groups = groups_from(o.in.front());
  engine.validate(groups, true);
  OutputSink sink(o.out);
  std::optional<OutputSink> records;
  if (!o.records.empty()) records.emplace(o.records);
  JudgeRunStats total;
  for (const auto& g : groups) {
    const auto t = engine.tournament(g);
    sink.stream() << matrix_to_line(g.task.task_id, t.matrix).dump() << '\n';
    if (records)
      for (const auto& r : t.records) records->stream() << json(r).dump() << '\n';
    total.judge_calls += t.stats.judge_calls;
    total.cache_hits += t.stats.cache_hits;
  }
  spdlog::info("{} groups: {} judge calls, {} cache hits", groups.size(), total.judge_calls,
               total.cache_hits);
  return 0;
}

int cmd_rewards(const Options& o) {
  RewardEngine engine(load(o));
  const auto groups = groups_from(o.in.front());
  OutputSink sink(o.out);
  const auto body = engine.rewards_body(groups, o.matrix);
  if (o.matrix) {
    sink.stream() << body.dump() << '\n';
  } else {
    for (const auto& line : body) sink.stream() << line.dump() << '\n';
  }
  return 0;
}

int cmd_pnt(const Options& o) {
  std::vector<NamedMatrix> named;
  if (o.in.front() == "-") {
    named = read_matrices(std::cin);
  } else {
    std::ifstream in(o.in.front());
    if (!in) throw Error("cannot open " + o.in.front());
    named = read_matrices(in);
  }
  std::vector<PreferenceMatrix> matrices;
  for (auto& m : named) matrices.push_back(std::move(m.matrix));

  std::vector<std::pair<std::size_t, PntReport>> rows;
  for (auto k : o.k) {
    PntOptions opt;
    opt.k = k;
    opt.samples_per_matrix = o.samples;
    opt.seed = o.seed.value_or(0);
    opt.tie_rule = tie_rule_from_string(o.tie_rule);
    opt.averaging = o.pooled ? PntAveraging::Pooled : PntAveraging::PerMatrix;
    rows.emplace_back(k, pnt(matrices, opt));
  }
  OutputSink sink(o.out);
  write_pnt_csv(sink.stream(), rows);
  return 0;
}

int cmd_graft(const Options& o) {
  RewardEngine engine(load(o));
  const auto groups = groups_from(o.in.front());
  engine.validate(groups, false);

  std::vector<RowType> rows;
  if (o.row == "all") rows = {RowType::CorrectVsWrong, RowType::AnswerOnly, RowType::CotOnly};
  else rows = {row_type_from_string(o.row)};

  std::vector<GraftReport> reports;
  for (auto row : rows) {
    std::vector<GraftPair> pairs;
    std::uint64_t salt = 0;
    for (const auto& g : groups) {
      std::vector<Response> good, bad;
      for (const auto& r : g.responses)
        (score_accuracy(r, g.task.gold_answer) ? good : bad).push_back(r);
      if (good.empty() || bad.empty()) {
        spdlog::debug("task {}: skipped, needs both correct and incorrect responses", g.task.task_id);
        continue;
      }
      auto built = build_graft_pairs(g.task, good, bad, row, o.count, o.seed.value_or(0) + salt++);
      std::move(built.begin(), built.end(), std::back_inserter(pairs));
    }
    if (pairs.empty()) throw InsufficientPool("no task has both correct and incorrect responses");
    reports.push_back(graft_accuracy(engine.judge(), pairs, &engine.cache()));
  }
  OutputSink sink(o.out);
  write_graft_csv(sink.stream(), reports);
  return 0;
}

int cmd_h2h(const Options& o) {
  if (o.in.size() < 2) throw DomainError("h2h needs at least two --in files");
  RewardEngine engine(load(o));
  std::vector<std::vector<RolloutGroup>> models;
  for (const auto& path : o.in) {
    models.push_back(groups_from(path));
    engine.validate(models.back(), false);
  }
  auto names = o.names;
  if (names.empty()) names = o.in;
  if (names.size() != models.size()) throw DomainError("--names must match the number of --in files");
  const auto m = head_to_head_matrix(engine.judge(), models, &engine.cache());
  OutputSink sink(o.out);
  write_h2h_csv(sink.stream(), names, m);
  return 0;
}

RewardService* g_service = nullptr;

int cmd_serve(const Options& o) {
  RewardEngine engine(load(o));
  RewardService service(engine);
  const int port = service.bind(engine.config().host, engine.config().port);
  g_service = &service;
  std::signal(SIGINT, [](int) {
    if (g_service) g_service->stop();
  });
  std::signal(SIGTERM, [](int) {
    if (g_service) g_service->stop();
  });
  spdlog::info("listening on {}:{}", engine.config().host, port);
  service.listen();
  g_service = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_mt("tourney"));

  CLI::App app{"Judge tournaments and verifiable rewards for RL post-training"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--in", o.in, "Input JSONL ('-' for stdin)");
    if (needs_input) in->required();
    sub->add_option("--out", o.out, "Output path ('-' for stdout)");
    sub->add_option("--config", o.config, "Config file (key = value)");
    sub->add_option("--judge", o.judge, "Override judge kind")
        ->check(CLI::IsMember({"remote", "bradley_terry", "cyclic", "positional", "oracle"}));
    sub->add_option("--seed", o.seed, "Seed for simulated judges and sampling");
  };

  auto* score = app.add_subcommand("score", "Verifiable rewards per response");
  common(score, true);
  auto* tournament = app.add_subcommand("tournament", "Debiased preference matrix per group");
  common(tournament, true);
  tournament->add_option("--records", o.records, "Also write every judged pair here");
  auto* rewards = app.add_subcommand("rewards", "Composite rewards and advantages");
  common(rewards, true);
  rewards->add_option("--variant", o.variant, "Advantage estimator")
      ->check(CLI::IsMember({"drgrpo", "grpo"}));
  rewards->add_flag("--matrix", o.matrix, "Emit {rewards, matrices} instead of reward lines");
  auto* pnt_cmd = app.add_subcommand("pnt", "Intransitivity of preference matrices (CSV)");
  common(pnt_cmd, true);
  pnt_cmd->add_option("--k", o.k, "Subset size(s)")->delimiter(',');
  pnt_cmd->add_option("--samples", o.samples, "Subsets per matrix before sampling kicks in");
  pnt_cmd->add_option("--tie-rule", o.tie_rule)->check(CLI::IsMember({"keep_tie", "break_by_index"}));
  pnt_cmd->add_flag("--pooled", o.pooled, "Pool subsets across matrices");
  auto* graft_cmd = app.add_subcommand("graft", "Judge accuracy on grafted CoT/answer pairs (CSV)");
  common(graft_cmd, true);
  graft_cmd->add_option("--row", o.row, "all, correct_vs_wrong, answer_only or cot_only");
  graft_cmd->add_option("--count", o.count, "Pairs per task and row");
  auto* h2h = app.add_subcommand("h2h", "Head-to-head win rates between models (CSV)");
  common(h2h, true);
  h2h->add_option("--names", o.names, "Model names, one per --in");
  auto* serve = app.add_subcommand("serve", "Run the HTTP reward service");
  common(serve, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }

  try {
    if (*score) return cmd_score(o);
    if (*tournament) return cmd_tournament(o);
    if (*rewards) return cmd_rewards(o);
    if (*pnt_cmd) return cmd_pnt(o);
    if (*graft_cmd) return cmd_graft(o);
    if (*h2h) return cmd_h2h(o);
    if (*serve) return cmd_serve(o);
  } catch (const ValidationError& e) {
    spdlog::error("{}", e.what());
    for (const auto& v : e.violations()) spdlog::error("  {}", v);
    return 1;
  } catch (const JudgeUnavailable& e) {
    spdlog::error("judge unavailable: {}", e.what());
    return 2;
  } catch (const MalformedResponse& e) {
    spdlog::error("judge returned a malformed payload: {}", e.what());
    return 2;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 1;
}
