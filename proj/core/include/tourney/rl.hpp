#pragma once

#include <span>
#include <string>
#include <vector>

#include "tourney/types.hpp"

namespace tourney {

struct RlConfig {
  AdvantageVariant variant = AdvantageVariant::DrGrpo;
  double grpo_std_epsilon = 1e-6;
  double eps_low = 0.2;
  double eps_high = 0.28;

  // Throws DomainError unless 0 < eps_low <= eps_high < 1 and the std
  // epsilon is positive.
  void validate() const;
  bool operator==(const RlConfig&) const = default;
};

// Multipliers on the four reward components. Anything other than all-ones
// departs from the plain sum and is logged once as a warning.
struct RewardWeights {
  double acc = 1.0;
  double fmt = 1.0;
  double lang = 1.0;
  double judge = 1.0;

  bool is_unit() const noexcept { return acc == 1.0 && fmt == 1.0 && lang == 1.0 && judge == 1.0; }
  bool operator==(const RewardWeights&) const = default;
};

// total = acc + fmt + lang + judge. Throws DomainError for binary terms
// outside {0,1} or judge outside [0,1].
RewardBreakdown composite_reward(int acc, int fmt, int lang, double judge,
                                 const RewardWeights& weights = {});

// drgrpo: r_i - mean. grpo: (r_i - mean) / (population std + eps).
AdvantageVector group_advantages(std::span<const double> totals, const RlConfig& config = {});

// min(ratio * a, clamp(ratio, 1 - eps_low, 1 + eps_high) * a).
// Throws DomainError for ratio <= 0.
double clipped_surrogate(double ratio, double advantage, const RlConfig& config = {});

}  // namespace tourney
