#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "tourney/judge.hpp"
#include "tourney/types.hpp"

namespace tourney {

struct CacheEntry {
  std::string key;
  Verdict verdict;
  std::int64_t created_at = 0;  // unix seconds

  bool operator==(const CacheEntry&) const = default;
};

// sha256 over the judge identity, extra salt, and the rendered messages.
std::string cache_key(std::string_view judge_identity, const JudgeRequest& request,
                      std::string_view salt = {});

// Verdict store shared by every tournament in the process. Backed by an
// append-only JSONL file when a path is given; purely in-memory otherwise.
// The first verdict stored for a key wins; later inserts are ignored.
class VerdictCache {
 public:
  VerdictCache() = default;
  // Loads existing entries. A torn final line (crash mid-append) is skipped
  // with a warning; any other malformed line throws ParseError.
  explicit VerdictCache(std::filesystem::path path);

  VerdictCache(const VerdictCache&) = delete;
  VerdictCache& operator=(const VerdictCache&) = delete;

  std::optional<Verdict> lookup(const std::string& key) const;
  // Returns false if the key was already present.
  bool insert(const std::string& key, const Verdict& verdict);

  std::size_t size() const;
  const std::optional<std::filesystem::path>& path() const noexcept { return path_; }

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, CacheEntry> entries_;
  std::optional<std::filesystem::path> path_;
  std::ofstream out_;
};

}  // namespace tourney
