#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "common/jsonio.hpp"
#include "common/timeutil.hpp"

namespace promptrend {

enum class RiskTier { low, moderate, high };

constexpr std::string_view tier_name(RiskTier tier) {
  switch (tier) {
    case RiskTier::low:
      return "Low";
    case RiskTier::moderate:
      return "Moderate";
    case RiskTier::high:
      return "High";
  }
  return "Low";
}

RiskTier tier_from_name(std::string_view name);

// Subscores on the 0-100 scale. HP/ES/CA are required for any assessment;
// XPE/TR/PV arrive after empirical testing and stay unset in Phase 1.
struct DimensionScores {
  double harm_potential = 0.0;
  double exploit_sophistication = 0.0;
  double community_adoption = 0.0;
  std::optional<double> cross_platform_efficacy;
  std::optional<double> temporal_resilience;
  std::optional<double> propagation_velocity;

  bool phase2_complete() const {
    return cross_platform_efficacy && temporal_resilience && propagation_velocity;
  }

  void validate() const;
  Json to_json() const;
  static DimensionScores from_json(const Json& j);
};

// Additive score adjustments, each within its declared range and at most one
// of each kind.
struct ModifierSet {
  std::optional<int> mutation;              // [+5, +15]
  std::optional<int> corporate_response;    // [-20, -5]
  std::optional<int> academic_citation;     // exactly +10
  std::optional<int> tool_integration;      // exactly +15
  std::optional<int> regulatory_attention;  // exactly +10

  int sum() const;
  bool empty() const;
  void validate() const;
  Json to_json() const;
  static ModifierSet from_json(const Json& j);
};

struct PvafAssessment {
  int phase = 1;  // 1 or 2
  DimensionScores dims;
  ModifierSet modifiers;
  double base_score = 0.0;
  double final_score = 0.0;
  RiskTier tier = RiskTier::low;
  UnixSeconds scored_at = 0;
  UnixSeconds next_retest_at = 0;

  void validate() const;
  Json to_json() const;
  static PvafAssessment from_json(const Json& j);
};

}  // namespace promptrend
