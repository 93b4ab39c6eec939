#include "tourney/rl.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

#include "tourney/errors.hpp"

namespace tourney {

void RlConfig::validate() const {
  if (!(eps_low > 0.0 && eps_low <= eps_high && eps_high < 1.0))
    throw DomainError("clipping constants must satisfy 0 < eps_low <= eps_high < 1");
  if (!(grpo_std_epsilon > 0.0)) throw DomainError("grpo_std_epsilon must be positive");
}

RewardBreakdown composite_reward(int acc, int fmt, int lang, double judge,
                                 const RewardWeights& weights) {
  auto binary = [](int v, const char* name) {
    if (v != 0 && v != 1) throw DomainError(std::string(name) + " must be 0 or 1");
  };
  binary(acc, "acc");
  binary(fmt, "fmt");
  binary(lang, "lang");
  if (!(judge >= 0.0 && judge <= 1.0)) throw DomainError("judge reward must lie in [0, 1]");

  RewardBreakdown r{acc, fmt, lang, judge, 0.0};
  if (weights.is_unit()) {
    r.total = acc + fmt + lang + judge;
  } else {
    static std::atomic<bool> warned{false};
    if (!warned.exchange(true))
      spdlog::warn("non-unit reward weights in use; total is no longer the plain component sum");
    r.total = weights.acc * acc + weights.fmt * fmt + weights.lang * lang + weights.judge * judge;
  }
  return r;
}

AdvantageVector group_advantages(std::span<const double> totals, const RlConfig& config) {
  AdvantageVector out{{}, config.variant};
  if (totals.empty()) return out;
  const auto n = static_cast<double>(totals.size());
  const double mean = std::accumulate(totals.begin(), totals.end(), 0.0) / n;
  out.values.reserve(totals.size());
  for (double r : totals) out.values.push_back(r - mean);
  if (config.variant == AdvantageVariant::Grpo) {
    double ss = 0.0;
    for (double d : out.values) ss += d * d;
    const double denom = std::sqrt(ss / n) + config.grpo_std_epsilon;
    for (double& v : out.values) v /= denom;
  }
  return out;
}

double clipped_surrogate(double ratio, double advantage, const RlConfig& config) {
  if (!(ratio > 0.0)) throw DomainError("probability ratio must be positive");
  const double clipped = std::clamp(ratio, 1.0 - config.eps_low, 1.0 + config.eps_high);
  return std::min(ratio * advantage, clipped * advantage);
}

}  // namespace tourney
