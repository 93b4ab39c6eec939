#include "tourney/verdict_cache.hpp"

#include <spdlog/spdlog.h>

#include <chrono>
#include <vector>

#include "tourney/errors.hpp"
#include "tourney/serialization.hpp"
#include "tourney/sha256.hpp"

namespace tourney {

std::string cache_key(std::string_view judge_identity, const JudgeRequest& request,
                      std::string_view salt) {
  std::string material;
  material.reserve(judge_identity.size() + salt.size() + request.system_message.size() +
                   request.user_message.size() + 64);
  for (std::string_view part : {judge_identity, salt, std::string_view(request.system_message),
                                std::string_view(request.user_message)}) {
    material += std::to_string(part.size());
    material += ':';
    material += part;
  }
  return sha256_hex(material);
}

VerdictCache::VerdictCache(std::filesystem::path path) : path_(std::move(path)) {
  std::vector<std::string> lines;
  {
    std::ifstream in(*path_);
    for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    try {
      auto e = nlohmann::json::parse(lines[i]).get<CacheEntry>();
      entries_.try_emplace(e.key, std::move(e));
    } catch (const std::exception& ex) {
      if (i + 1 == lines.size()) {
        spdlog::warn("verdict cache {}: skipping torn final line", path_->string());
        continue;
      }
      throw ParseError(i + 1, std::string("verdict cache: ") + ex.what());
    }
  }
  if (path_->has_parent_path()) std::filesystem::create_directories(path_->parent_path());
  out_.open(*path_, std::ios::app);
  if (!out_) throw Error("cannot open verdict cache for append: " + path_->string());
}

std::optional<Verdict> VerdictCache::lookup(const std::string& key) const {
  std::lock_guard lock(mu_);
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second.verdict;
}

bool VerdictCache::insert(const std::string& key, const Verdict& verdict) {
  const auto now = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count();
  std::lock_guard lock(mu_);
  auto [it, inserted] = entries_.try_emplace(key, CacheEntry{key, verdict, now});
  if (inserted && out_.is_open()) {
    out_ << nlohmann::json(it->second).dump() << '\n';
    out_.flush();
  }
  return inserted;
}

std::size_t VerdictCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

}  // namespace tourney
