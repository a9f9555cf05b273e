#pragma once

#include <vector>

#include "common/timeutil.hpp"
#include "core/assessment.hpp"

namespace promptrend {

// Phase 1: equal thirds over HP/ES/CA. (Exactly 1/3 each, so a perfect
// triple scores a perfect 100.)
double score_phase1(const DimensionScores& dims);

// Phase 2: 0.20*HP + 0.20*ES + 0.15*(CA + XPE + TR + PV). All six dimensions
// must be present; otherwise a phase error points the caller at Phase 1.
double score_phase2(const DimensionScores& dims);

// Additive stacking, then clamp to [0,100]; order-independent.
double apply_modifiers(double base_score, const ModifierSet& modifiers);

RiskTier tier_for(double final_score);

inline constexpr int kRetestOffsetsDays[] = {7, 30, 90, 180};

// The four retest checkpoints after `scored_at` (day = 86400 s).
std::vector<UnixSeconds> retest_schedule(UnixSeconds scored_at);

// Earliest checkpoint strictly after `now`; 0 when the schedule is consumed.
UnixSeconds next_retest(UnixSeconds scored_at, UnixSeconds now);

// Full assessment for the given phase (1 or 2); next_retest_at is the first
// checkpoint. Modifiers are permitted in Phase 1; callers surface a flag.
PvafAssessment assess(const DimensionScores& dims, const ModifierSet& modifiers,
                      int phase, UnixSeconds scored_at);

}  // namespace promptrend
