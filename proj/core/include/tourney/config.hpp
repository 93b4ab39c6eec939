#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "tourney/rl.hpp"
#include "tourney/types.hpp"
#include "tourney/verifiable.hpp"

namespace tourney {

struct EngineConfig {
  JudgeSpec judge;
  RlConfig rl;
  RewardWeights weights;
  double language_threshold = kDefaultLanguageThreshold;
  int rollouts_per_prompt = 8;       // recorded, not enforced
  double sampling_temperature = 1.0;  // recorded, not enforced
  std::optional<std::filesystem::path> cache_path;
  std::string classifier = "script_ngram";
  std::string host = "127.0.0.1";
  int port = 8080;

  // Throws DomainError on the first inconsistent setting.
  void validate() const;
  bool operator==(const EngineConfig&) const = default;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

// Reads the process environment.
std::optional<std::string> process_env(const std::string& name);

// Flat "key = value" lines; '#' starts a comment, "[section]" prefixes the
// keys that follow with "section.", values may be double-quoted. Every key
// can be overridden by TOURNEY_<KEY> with dots as underscores, e.g.
// TOURNEY_JUDGE_KIND. Unknown keys throw DomainError. API keys are never
// read from here.
EngineConfig parse_config(std::string_view text, const EnvLookup& env = process_env);
EngineConfig load_config(const std::filesystem::path& path, const EnvLookup& env = process_env);

// Defaults plus environment overrides, for runs without a config file.
EngineConfig default_config(const EnvLookup& env = process_env);

}  // namespace tourney
