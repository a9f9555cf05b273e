#include "core/assessment.hpp"

#include <cmath>

namespace promptrend {

namespace {

void check_range(double value, std::string_view what) {
  if (!(value >= 0.0 && value <= 100.0)) {
    throw validation_error(std::string(what) + " out of range [0,100]: " +
                           std::to_string(value));
  }
}

std::optional<double> opt_number(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    return std::nullopt;
  }
  return it->get<double>();
}

std::optional<int> opt_int(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    return std::nullopt;
  }
  return it->get<int>();
}

Json opt_to_json(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json opt_to_json(const std::optional<int>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

RiskTier tier_from_name(std::string_view name) {
  if (name == "Low") return RiskTier::low;
  if (name == "Moderate") return RiskTier::moderate;
  if (name == "High") return RiskTier::high;
  throw validation_error("unknown risk tier: " + std::string(name));
}

void DimensionScores::validate() const {
  check_range(harm_potential, "dims.HP");
  check_range(exploit_sophistication, "dims.ES");
  check_range(community_adoption, "dims.CA");
  if (cross_platform_efficacy) check_range(*cross_platform_efficacy, "dims.XPE");
  if (temporal_resilience) check_range(*temporal_resilience, "dims.TR");
  if (propagation_velocity) check_range(*propagation_velocity, "dims.PV");
}

Json DimensionScores::to_json() const {
  return Json{{"HP", harm_potential},
              {"ES", exploit_sophistication},
              {"CA", community_adoption},
              {"XPE", opt_to_json(cross_platform_efficacy)},
              {"TR", opt_to_json(temporal_resilience)},
              {"PV", opt_to_json(propagation_velocity)}};
}

DimensionScores DimensionScores::from_json(const Json& j) {
  DimensionScores dims;
  dims.harm_potential = require_number(j, "HP", "dims");
  dims.exploit_sophistication = require_number(j, "ES", "dims");
  dims.community_adoption = require_number(j, "CA", "dims");
  dims.cross_platform_efficacy = opt_number(j, "XPE");
  dims.temporal_resilience = opt_number(j, "TR");
  dims.propagation_velocity = opt_number(j, "PV");
  dims.validate();
  return dims;
}

int ModifierSet::sum() const {
  int total = 0;
  for (const auto& m : {mutation, corporate_response, academic_citation,
                        tool_integration, regulatory_attention}) {
    total += m.value_or(0);
  }
  return total;
}

bool ModifierSet::empty() const {
  return !mutation && !corporate_response && !academic_citation &&
         !tool_integration && !regulatory_attention;
}

void ModifierSet::validate() const {
  if (mutation && (*mutation < 5 || *mutation > 15)) {
    throw validation_error("modifiers.mutation must be in [+5,+15]");
  }
  if (corporate_response && (*corporate_response < -20 || *corporate_response > -5)) {
    throw validation_error("modifiers.corporate_response must be in [-20,-5]");
  }
  if (academic_citation && *academic_citation != 10) {
    throw validation_error("modifiers.academic_citation must be +10");
  }
  if (tool_integration && *tool_integration != 15) {
    throw validation_error("modifiers.tool_integration must be +15");
  }
  if (regulatory_attention && *regulatory_attention != 10) {
    throw validation_error("modifiers.regulatory_attention must be +10");
  }
}

Json ModifierSet::to_json() const {
  return Json{{"mutation", opt_to_json(mutation)},
              {"corporate_response", opt_to_json(corporate_response)},
              {"academic_citation", opt_to_json(academic_citation)},
              {"tool_integration", opt_to_json(tool_integration)},
              {"regulatory_attention", opt_to_json(regulatory_attention)}};
}

ModifierSet ModifierSet::from_json(const Json& j) {
  ModifierSet mods;
  mods.mutation = opt_int(j, "mutation");
  mods.corporate_response = opt_int(j, "corporate_response");
  mods.academic_citation = opt_int(j, "academic_citation");
  mods.tool_integration = opt_int(j, "tool_integration");
  mods.regulatory_attention = opt_int(j, "regulatory_attention");
  mods.validate();
  return mods;
}

void PvafAssessment::validate() const {
  if (phase != 1 && phase != 2) {
    throw validation_error("assessment.phase must be 1 or 2");
  }
  dims.validate();
  modifiers.validate();
  check_range(base_score, "assessment.base_score");
  check_range(final_score, "assessment.final_score");
  double expected = base_score + modifiers.sum();
  expected = std::min(100.0, std::max(0.0, expected));
  if (std::abs(expected - final_score) > 1e-9) {
    throw validation_error("assessment.final_score inconsistent with base + modifiers");
  }
}

Json PvafAssessment::to_json() const {
  return Json{{"phase", phase},
              {"dims", dims.to_json()},
              {"modifiers", modifiers.to_json()},
              {"base_score", base_score},
              {"final_score", final_score},
              {"tier", std::string(tier_name(tier))},
              {"scored_at", scored_at},
              {"next_retest_at", next_retest_at}};
}

PvafAssessment PvafAssessment::from_json(const Json& j) {
  PvafAssessment a;
  a.phase = static_cast<int>(require_int(j, "phase", "assessment"));
  a.dims = DimensionScores::from_json(require_field(j, "dims", "assessment"));
  a.modifiers = ModifierSet::from_json(require_field(j, "modifiers", "assessment"));
  a.base_score = require_number(j, "base_score", "assessment");
  a.final_score = require_number(j, "final_score", "assessment");
  a.tier = tier_from_name(require_string(j, "tier", "assessment"));
  a.scored_at = require_int(j, "scored_at", "assessment");
  a.next_retest_at = require_int(j, "next_retest_at", "assessment");
  a.validate();
  return a;
}

}  // namespace promptrend
