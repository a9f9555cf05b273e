#include "core/record.hpp"

#include "common/hash.hpp"
#include "common/text.hpp"

namespace promptrend {

namespace {

// Allow fixture clocks to run slightly ahead of the host.
constexpr std::int64_t kFutureDriftSeconds = 300;

}  // namespace

Platform platform_from_name(std::string_view name) {
  if (name == "discord") return Platform::discord;
  if (name == "reddit") return Platform::reddit;
  if (name == "github") return Platform::github;
  if (name == "forum") return Platform::forum;
  if (name == "twitter") return Platform::twitter;
  if (name == "other") return Platform::other;
  throw validation_error("unknown platform: " + std::string(name));
}

void EngagementSignals::validate() const {
  if (upvotes < 0 || comments < 0 || shares < 0 || crossposts < 0) {
    throw validation_error("engagement counts must be >= 0");
  }
}

Json EngagementSignals::to_json() const {
  return Json{{"upvotes", upvotes},
              {"comments", comments},
              {"shares", shares},
              {"crossposts", crossposts}};
}

EngagementSignals EngagementSignals::from_json(const Json& j) {
  EngagementSignals e;
  e.upvotes = require_int(j, "upvotes", "engagement");
  e.comments = require_int(j, "comments", "engagement");
  e.shares = require_int(j, "shares", "engagement");
  e.crossposts = require_int(j, "crossposts", "engagement");
  e.validate();
  return e;
}

std::string_view relation_kind_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::variant:
      return "variant";
    case RelationKind::cross_platform_instance:
      return "cross_platform_instance";
    case RelationKind::technical_similarity:
      return "technical_similarity";
  }
  return "variant";
}

RelationKind relation_kind_from_name(std::string_view name) {
  if (name == "variant") return RelationKind::variant;
  if (name == "cross_platform_instance") return RelationKind::cross_platform_instance;
  if (name == "technical_similarity") return RelationKind::technical_similarity;
  throw validation_error("unknown relation kind: " + std::string(name));
}

Json RelationEdge::to_json() const {
  return Json{{"kind", std::string(relation_kind_name(kind))},
              {"target_id", target_id},
              {"similarity", similarity},
              {"note", note}};
}

RelationEdge RelationEdge::from_json(const Json& j) {
  RelationEdge e;
  e.kind = relation_kind_from_name(require_string(j, "kind", "relation"));
  e.target_id = require_string(j, "target_id", "relation");
  e.similarity = require_number(j, "similarity", "relation");
  e.note = j.value("note", std::string{});
  if (e.similarity < 0.0 || e.similarity > 1.0) {
    throw validation_error("relation.similarity out of [0,1]");
  }
  return e;
}

void VulnerabilityRecord::validate() const {
  if (prompt_text.empty()) {
    throw validation_error("record.prompt_text must be non-empty");
  }
  if (id.empty()) {
    throw validation_error("record.id must be non-empty");
  }
  if (id != canonical_id(platform, source_locator, prompt_text)) {
    throw validation_error("record.id does not match canonical content hash");
  }
  if (discovered_at > now_unix() + kFutureDriftSeconds) {
    throw validation_error("record.discovered_at lies in the future");
  }
  engagement.validate();
  EnrichmentSchema::bundled().validate(enrichment.json());
  for (const auto& edge : relations) {
    if (edge.target_id == id) {
      throw validation_error("relation.target_id must differ from owner id");
    }
    if (edge.similarity < 0.0 || edge.similarity > 1.0) {
      throw validation_error("relation.similarity out of [0,1]");
    }
  }
  if (assessment) {
    assessment->validate();
  }
  for (std::size_t i = 1; i < score_history.size(); ++i) {
    if (score_history[i].at <= score_history[i - 1].at) {
      throw validation_error("record.score_history timestamps must be strictly increasing");
    }
  }
}

Json VulnerabilityRecord::to_json() const {
  Json relations_json = Json::array();
  for (const auto& edge : relations) {
    relations_json.push_back(edge.to_json());
  }
  Json history = Json::array();
  for (const auto& entry : score_history) {
    history.push_back(Json{{"at", entry.at}, {"score", entry.score}});
  }
  return Json{{"id", id},
              {"platform", std::string(platform_name(platform))},
              {"source_locator", source_locator},
              {"discovered_at", discovered_at},
              {"author_token", author_token},
              {"prompt_text", prompt_text},
              {"title", title},
              {"engagement", engagement.to_json()},
              {"enrichment", enrichment.json()},
              {"relations", relations_json},
              {"assessment", assessment ? assessment->to_json() : Json(nullptr)},
              {"score_history", history}};
}

VulnerabilityRecord VulnerabilityRecord::from_json(const Json& j) {
  VulnerabilityRecord r;
  r.id = require_string(j, "id", "record");
  r.platform = platform_from_name(require_string(j, "platform", "record"));
  r.source_locator = require_string(j, "source_locator", "record");
  r.discovered_at = require_int(j, "discovered_at", "record");
  r.author_token = require_string(j, "author_token", "record");
  r.prompt_text = require_string(j, "prompt_text", "record");
  r.title = require_string(j, "title", "record");
  r.engagement = EngagementSignals::from_json(require_field(j, "engagement", "record"));
  r.enrichment = EnrichmentBundle(require_field(j, "enrichment", "record"));
  const Json& relations = require_field(j, "relations", "record");
  for (const auto& edge : relations) {
    r.relations.push_back(RelationEdge::from_json(edge));
  }
  const Json& assessment = require_field(j, "assessment", "record");
  if (!assessment.is_null()) {
    r.assessment = PvafAssessment::from_json(assessment);
  }
  const Json& history = require_field(j, "score_history", "record");
  for (const auto& entry : history) {
    r.score_history.push_back(
        {require_int(entry, "at", "score_history"),
         require_number(entry, "score", "score_history")});
  }
  r.validate();
  return r;
}

std::string canonical_id(Platform platform, std::string_view source_locator,
                         std::string_view prompt_text) {
  if (prompt_text.empty()) {
    throw validation_error("canonical_id: prompt_text must be non-empty");
  }
  std::string material;
  material.append(platform_name(platform));
  material.push_back('\x1f');
  material.append(source_locator);
  material.push_back('\x1f');
  material.append(normalize_text(prompt_text));
  return sha256_hex(material);
}

std::string author_token(std::string_view author, std::string_view salt) {
  std::string material;
  material.append(salt);
  material.push_back('\x1f');
  material.append(author);
  return sha256_hex(material);
}

}  // namespace promptrend
