#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "common/jsonio.hpp"
#include "common/timeutil.hpp"
#include "core/assessment.hpp"
#include "core/enrichment.hpp"

namespace promptrend {

enum class Platform { discord, reddit, github, forum, twitter, other };

constexpr std::string_view platform_name(Platform p) {
  switch (p) {
    case Platform::discord:
      return "discord";
    case Platform::reddit:
      return "reddit";
    case Platform::github:
      return "github";
    case Platform::forum:
      return "forum";
    case Platform::twitter:
      return "twitter";
    case Platform::other:
      return "other";
  }
  return "other";
}

Platform platform_from_name(std::string_view name);

struct EngagementSignals {
  std::int64_t upvotes = 0;
  std::int64_t comments = 0;
  std::int64_t shares = 0;
  std::int64_t crossposts = 0;

  // comments/upvotes; +inf sentinel when upvotes == 0.
  double engagement_ratio() const {
    if (upvotes <= 0) {
      return std::numeric_limits<double>::infinity();
    }
    return static_cast<double>(comments) / static_cast<double>(upvotes);
  }

  void validate() const;
  Json to_json() const;
  static EngagementSignals from_json(const Json& j);
};

enum class RelationKind { variant, cross_platform_instance, technical_similarity };

std::string_view relation_kind_name(RelationKind kind);
RelationKind relation_kind_from_name(std::string_view name);

struct RelationEdge {
  RelationKind kind = RelationKind::variant;
  std::string target_id;
  double similarity = 0.0;  // in [0,1]
  std::string note;

  Json to_json() const;
  static RelationEdge from_json(const Json& j);
};

struct ScoreEntry {
  UnixSeconds at = 0;
  double score = 0.0;
};

// One community-discovered prompt with provenance, enrichment, relations,
// and (once scored) its PVAF assessment.
struct VulnerabilityRecord {
  std::string id;  // content-derived, see canonical_id()
  Platform platform = Platform::other;
  std::string source_locator;
  UnixSeconds discovered_at = 0;
  std::string author_token;
  std::string prompt_text;
  std::string title;
  EngagementSignals engagement;
  EnrichmentBundle enrichment;
  std::vector<RelationEdge> relations;
  std::optional<PvafAssessment> assessment;
  std::vector<ScoreEntry> score_history;

  void validate() const;
  Json to_json() const;
  static VulnerabilityRecord from_json(const Json& j);
};

// Deterministic content identity: SHA-256 over (platform, source_locator,
// NFC- and whitespace-normalized prompt_text). Same logical content, same id.
std::string canonical_id(Platform platform, std::string_view source_locator,
                         std::string_view prompt_text);

// Stable pseudonym for an author handle, salted by a deployment secret so
// tokens are consistent within a deployment but not linkable across them.
std::string author_token(std::string_view author, std::string_view salt);

}  // namespace promptrend
