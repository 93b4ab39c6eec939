#include "tourney/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "tourney/errors.hpp"

namespace tourney {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string unquote(std::string v) {
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front())
    return v.substr(1, v.size() - 2);
  return v;
}

// Drops a trailing comment that is outside quotes.
std::string strip_comment(std::string_view line) {
  char quote = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quote) {
      if (c == quote) quote = 0;
    } else if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '#') {
      return std::string(line.substr(0, i));
    }
  }
  return std::string(line);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw DomainError("config " + key + ": expected a number, got '" + v + "'");
  }
}

long long to_int(const std::string& key, const std::string& v) {
  long long out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size())
    throw DomainError("config " + key + ": expected an integer, got '" + v + "'");
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw DomainError("config " + key + ": expected true or false, got '" + v + "'");
}

std::optional<std::string> optional_string(const std::string& v) {
  if (v.empty()) return std::nullopt;
  return v;
}

using Setter = void (*)(EngineConfig&, const std::string& key, const std::string& value);

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table{
      {"judge.kind", [](EngineConfig& c, const std::string&, const std::string& v) {
         c.judge.kind = judge_kind_from_string(v);
       }},
      {"judge.privileged", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.judge.privileged = to_bool(k, v);
       }},
      {"judge.endpoint_url", [](EngineConfig& c, const std::string&, const std::string& v) {
         c.judge.endpoint_url = optional_string(v);
       }},
      {"judge.model_id", [](EngineConfig& c, const std::string&, const std::string& v) {
         c.judge.model_id = optional_string(v);
       }},
      {"judge.temperature", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.judge.temperature = to_double(k, v);
       }},
      {"judge.max_concurrency", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.judge.max_concurrency = static_cast<int>(to_int(k, v));
       }},
      {"judge.retry.max_attempts", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.judge.retry.max_attempts = static_cast<int>(to_int(k, v));
       }},
      {"judge.retry.backoff_ms", [](EngineConfig& c, const std::string& k, const std::string& v) {
         std::vector<int> out;
         std::stringstream ss(v);
         for (std::string item; std::getline(ss, item, ',');) {
           item = trim(item);
           if (!item.empty()) out.push_back(static_cast<int>(to_int(k, item)));
         }
         c.judge.retry.backoff_ms = std::move(out);
       }},
      {"judge.seed", [](EngineConfig& c, const std::string& k, const std::string& v) {
         if (v.empty()) c.judge.seed.reset();
         else c.judge.seed = static_cast<std::uint64_t>(to_int(k, v));
       }},
      {"judge.position_bias", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.judge.position_bias = to_double(k, v);
       }},
      {"judge.timeout_s", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.judge.timeout_s = to_double(k, v);
       }},
      {"rl.variant", [](EngineConfig& c, const std::string&, const std::string& v) {
         c.rl.variant = variant_from_string(v);
       }},
      {"rl.grpo_std_epsilon", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.rl.grpo_std_epsilon = to_double(k, v);
       }},
      {"rl.eps_low", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.rl.eps_low = to_double(k, v);
       }},
      {"rl.eps_high", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.rl.eps_high = to_double(k, v);
       }},
      {"reward.weight_acc", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.weights.acc = to_double(k, v);
       }},
      {"reward.weight_fmt", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.weights.fmt = to_double(k, v);
       }},
      {"reward.weight_lang", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.weights.lang = to_double(k, v);
       }},
      {"reward.weight_judge", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.weights.judge = to_double(k, v);
       }},
      {"language.threshold", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.language_threshold = to_double(k, v);
       }},
      {"language.classifier", [](EngineConfig& c, const std::string&, const std::string& v) {
         c.classifier = v;
       }},
      {"rollouts_per_prompt", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.rollouts_per_prompt = static_cast<int>(to_int(k, v));
       }},
      {"sampling_temperature", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.sampling_temperature = to_double(k, v);
       }},
      {"cache.path", [](EngineConfig& c, const std::string&, const std::string& v) {
         if (v.empty()) c.cache_path.reset();
         else c.cache_path = v;
       }},
      {"service.host", [](EngineConfig& c, const std::string&, const std::string& v) {
         c.host = v;
       }},
      {"service.port", [](EngineConfig& c, const std::string& k, const std::string& v) {
         c.port = static_cast<int>(to_int(k, v));
       }},
  };
  return table;
}

std::string env_name(const std::string& key) {
  std::string out = "TOURNEY_";
  for (char c : key) out += c == '.' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

void apply(EngineConfig& c, const std::string& key, const std::string& value) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) {
    if (key.find("api_key") != std::string::npos)
      throw DomainError("config " + key + ": API keys are read from TOURNEY_JUDGE_API_KEY only");
    throw DomainError("unknown config key: " + key);
  }
  it->second(c, key, value);
}

void apply_env(EngineConfig& c, const EnvLookup& env) {
  if (!env) return;
  for (const auto& [key, setter] : setters())
    if (auto v = env(env_name(key))) setter(c, key, *v);
}

}  // namespace

void EngineConfig::validate() const {
  if (auto v = judge.violations(); !v.empty()) throw DomainError("judge: " + v.front());
  rl.validate();
  if (!(language_threshold > 0.0 && language_threshold <= 1.0))
    throw DomainError("language.threshold must lie in (0, 1]");
  if (rollouts_per_prompt < 1) throw DomainError("rollouts_per_prompt must be positive");
  if (sampling_temperature < 0.0) throw DomainError("sampling_temperature must be >= 0");
  if (classifier != "script_ngram") throw DomainError("unknown classifier: " + classifier);
  if (port < 0 || port > 65535) throw DomainError("service.port out of range");
}

std::optional<std::string> process_env(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) return std::string(v);
  return std::nullopt;
}

EngineConfig parse_config(std::string_view text, const EnvLookup& env) {
  EngineConfig c;
  std::string section;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const auto line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(lineno, "unterminated section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected key = value");
    auto key = trim(std::string_view(line).substr(0, eq));
    if (!section.empty()) key = section + "." + key;
    try {
      apply(c, key, unquote(trim(std::string_view(line).substr(eq + 1))));
    } catch (const DomainError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  apply_env(c, env);
  c.validate();
  return c;
}

EngineConfig load_config(const std::filesystem::path& path, const EnvLookup& env) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), env);
}

EngineConfig default_config(const EnvLookup& env) { return parse_config("", env); }

}  // namespace tourney
