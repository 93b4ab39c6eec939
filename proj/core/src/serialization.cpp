#include "tourney/serialization.hpp"

#include "tourney/answer.hpp"
#include "tourney/errors.hpp"

namespace tourney {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& j, const char* name, std::size_t line) {
  if (!j.is_object() || !j.contains(name)) throw MissingField(line, name);
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(line, std::string("field '") + name + "': " + e.what());
  }
}

template <typename T>
void put_opt(json& j, const char* name, const std::optional<T>& v) {
  if (v) j[name] = *v;
}

template <typename T>
void get_opt(const json& j, const char* name, std::optional<T>& v) {
  if (j.contains(name) && !j.at(name).is_null()) v = j.at(name).get<T>();
  else v.reset();
}

}  // namespace

void to_json(json& j, const TaskInstance& t) {
  j = json{{"task_id", t.task_id},
           {"query", t.query},
           {"target_lang", t.target_lang},
           {"gold_answer", t.gold_answer},
           {"reference_response", t.reference_response},
           {"reference_answer", t.reference_answer}};
}

void from_json(const json& j, TaskInstance& t) {
  t = task_from_line(j);
  if (j.contains("reference_answer")) t.reference_answer = j.at("reference_answer").get<std::string>();
}

TaskInstance task_from_line(const json& j, std::size_t line) {
  TaskInstance t;
  t.task_id = field<std::string>(j, "task_id", line);
  t.query = field<std::string>(j, "query", line);
  t.target_lang = field<std::string>(j, "target_lang", line);
  t.gold_answer = normalize_answer(field<std::string>(j, "gold_answer", line));
  t.reference_response = field<std::string>(j, "reference_response", line);
  if (auto boxed = extract_boxed(t.reference_response)) t.reference_answer = normalize_answer(*boxed);
  return t;
}

void to_json(json& j, const SideInfo& s) {
  j = json::object();
  put_opt(j, "latent_score", s.latent_score);
  put_opt(j, "cls", s.cls);
  put_opt(j, "answer_correct", s.answer_correct);
  put_opt(j, "cot_correct", s.cot_correct);
}

void from_json(const json& j, SideInfo& s) {
  get_opt(j, "latent_score", s.latent_score);
  get_opt(j, "cls", s.cls);
  get_opt(j, "answer_correct", s.answer_correct);
  get_opt(j, "cot_correct", s.cot_correct);
}

void to_json(json& j, const Response& r) {
  j = json{{"rollout_index", r.rollout_index},
           {"task_id", r.task_id},
           {"text", r.text},
           {"boxed_answer", r.boxed_answer ? json(*r.boxed_answer) : json(nullptr)},
           {"cot", r.cot}};
  if (!r.side_info.empty()) j["side_info"] = r.side_info;
}

void from_json(const json& j, Response& r) {
  r.rollout_index = j.at("rollout_index").get<std::size_t>();
  r.task_id = j.at("task_id").get<std::string>();
  r.text = j.at("text").get<std::string>();
  get_opt(j, "boxed_answer", r.boxed_answer);
  r.cot = j.at("cot").get<std::string>();
  r.side_info = j.contains("side_info") ? j.at("side_info").get<SideInfo>() : SideInfo{};
}

void to_json(json& j, const Verdict& v) { j = json{{"choice", to_string(v.choice)}, {"raw", v.raw}}; }

void from_json(const json& j, Verdict& v) {
  v.choice = choice_from_string(j.at("choice").get<std::string>());
  v.raw = j.at("raw").get<std::string>();
}

void to_json(json& j, const PreferenceRecord& p) {
  j = json{{"task_id", p.task_id},
           {"pair", {p.pair.first, p.pair.second}},
           {"verdict", to_string(p.verdict)},
           {"raw_judge_output", p.raw_judge_output},
           {"cache_key", p.cache_key}};
}

void from_json(const json& j, PreferenceRecord& p) {
  p.task_id = j.at("task_id").get<std::string>();
  const auto& pr = j.at("pair");
  p.pair = {pr.at(0).get<std::size_t>(), pr.at(1).get<std::size_t>()};
  p.verdict = choice_from_string(j.at("verdict").get<std::string>());
  p.raw_judge_output = j.at("raw_judge_output").get<std::string>();
  p.cache_key = j.at("cache_key").get<std::string>();
}

void to_json(json& j, const PreferenceMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.n(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  j = json{{"n", m.n()}, {"entries", std::move(rows)}, {"invalid_count", m.invalid_count()}};
}

void from_json(const json& j, PreferenceMatrix& m) {
  const auto n = j.at("n").get<std::size_t>();
  const auto& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != n) throw DomainError("matrix entries must have n rows");
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw DomainError("matrix rows must have n entries");
    for (const auto& v : row) flat.push_back(v.get<double>());
  }
  m = PreferenceMatrix::from_entries(n, std::move(flat), j.value("invalid_count", std::size_t{0}));
}

void to_json(json& j, const RewardBreakdown& r) {
  j = json{{"acc", r.acc}, {"fmt", r.fmt}, {"lang", r.lang}, {"judge", r.judge}, {"total", r.total}};
}

void from_json(const json& j, RewardBreakdown& r) {
  r.acc = j.at("acc").get<int>();
  r.fmt = j.at("fmt").get<int>();
  r.lang = j.at("lang").get<int>();
  r.judge = j.at("judge").get<double>();
  r.total = j.at("total").get<double>();
}

void to_json(json& j, const AdvantageVector& a) {
  j = json{{"values", a.values}, {"variant", to_string(a.variant)}};
}

void from_json(const json& j, AdvantageVector& a) {
  a.values = j.at("values").get<std::vector<double>>();
  a.variant = variant_from_string(j.at("variant").get<std::string>());
}

void to_json(json& j, const JudgeSpec& s) {
  j = json{{"kind", to_string(s.kind)},
           {"privileged", s.privileged},
           {"temperature", s.temperature},
           {"max_concurrency", s.max_concurrency},
           {"retry", {{"max_attempts", s.retry.max_attempts}, {"backoff_ms", s.retry.backoff_ms}}},
           {"position_bias", s.position_bias},
           {"timeout_s", s.timeout_s}};
  put_opt(j, "endpoint_url", s.endpoint_url);
  put_opt(j, "model_id", s.model_id);
  put_opt(j, "seed", s.seed);
}

void from_json(const json& j, JudgeSpec& s) {
  s = JudgeSpec{};
  s.kind = judge_kind_from_string(j.at("kind").get<std::string>());
  s.privileged = j.value("privileged", s.privileged);
  s.temperature = j.value("temperature", s.temperature);
  s.max_concurrency = j.value("max_concurrency", s.max_concurrency);
  if (j.contains("retry")) {
    const auto& r = j.at("retry");
    s.retry.max_attempts = r.value("max_attempts", s.retry.max_attempts);
    if (r.contains("backoff_ms")) s.retry.backoff_ms = r.at("backoff_ms").get<std::vector<int>>();
  }
  s.position_bias = j.value("position_bias", s.position_bias);
  s.timeout_s = j.value("timeout_s", s.timeout_s);
  get_opt(j, "endpoint_url", s.endpoint_url);
  get_opt(j, "model_id", s.model_id);
  get_opt(j, "seed", s.seed);
}

void to_json(json& j, const CacheEntry& e) {
  j = json{{"key", e.key},
           {"choice", to_string(e.verdict.choice)},
           {"raw", e.verdict.raw},
           {"created_at", e.created_at}};
}

void from_json(const json& j, CacheEntry& e) {
  e.key = j.at("key").get<std::string>();
  e.verdict.choice = choice_from_string(j.at("choice").get<std::string>());
  e.verdict.raw = j.at("raw").get<std::string>();
  e.created_at = j.value("created_at", std::int64_t{0});
}

json group_to_line(const RolloutGroup& g) {
  json j{{"task_id", g.task.task_id},
         {"target_lang", g.task.target_lang},
         {"query", g.task.query},
         {"gold_answer", g.task.gold_answer},
         {"reference_response", g.task.reference_response}};
  json texts = json::array();
  bool any_side = false;
  for (const auto& r : g.responses) {
    texts.push_back(r.text);
    any_side = any_side || !r.side_info.empty();
  }
  j["responses"] = std::move(texts);
  if (any_side) {
    json side = json::array();
    for (const auto& r : g.responses) side.push_back(r.side_info);
    j["side_info"] = std::move(side);
  }
  return j;
}

RolloutGroup group_from_line(const json& j, std::size_t line) {
  auto task = task_from_line(j, line);
  const auto texts = field<std::vector<std::string>>(j, "responses", line);
  std::vector<SideInfo> side;
  if (j.contains("side_info")) {
    try {
      side = j.at("side_info").get<std::vector<SideInfo>>();
    } catch (const json::exception& e) {
      throw ParseError(line, std::string("field 'side_info': ") + e.what());
    }
    if (side.size() != texts.size())
      throw ParseError(line, "side_info must have one entry per response");
  }
  return make_group(std::move(task), texts, side);
}

void to_json(json& j, const RewardLine& r) {
  j = json{{"task_id", r.task_id},          {"rollout_index", r.rollout_index},
           {"acc", r.breakdown.acc},        {"fmt", r.breakdown.fmt},
           {"lang", r.breakdown.lang},      {"judge", r.breakdown.judge},
           {"total", r.breakdown.total},    {"advantage", r.advantage}};
}

void from_json(const json& j, RewardLine& r) {
  r.task_id = j.at("task_id").get<std::string>();
  r.rollout_index = j.at("rollout_index").get<std::size_t>();
  r.breakdown = j.get<RewardBreakdown>();
  r.advantage = j.at("advantage").get<double>();
}

json matrix_to_line(std::string_view task_id, const PreferenceMatrix& m) {
  json j = m;
  j["task_id"] = task_id;
  return j;
}

}  // namespace tourney
