#pragma once

#include <memory>
#include <string>
#include <vector>

#include "core/store.hpp"
#include "ingest/connector.hpp"
#include "ingest/judge.hpp"
#include "ingest/lexicon.hpp"

namespace promptrend {

struct CascadeThresholds {
  double stage1 = 0.7;
  double stage2 = 0.7;
};

// Relative weights for combining the stage-2 judge outputs; the harm signal
// is min(1, |harm_categories| / 4).
struct Stage2Weights {
  double relevance = 1.0;
  double sophistication = 1.0;
  double harm = 1.0;
};

struct CascadeDecision {
  bool accepted = false;
  int rejected_stage = 0;     // 1 or 2 when rejected, else 0
  double stage1_score = 0.0;  // keyword score, always present
  bool stage2_evaluated = false;
  double stage2_score = 0.0;
  JudgeAssessment judgment;   // meaningful when stage2_evaluated
};

// Two-stage filter: keyword relevance gate, then judge-combination gate.
// Judge exceptions propagate; IngestPipeline turns them into parked posts.
CascadeDecision filter_cascade(const RawPost& post, const Lexicon& lexicon,
                               RelevanceJudge& judge,
                               const CascadeThresholds& thresholds,
                               const Stage2Weights& weights);

// Builds the fully enriched record for an accepted post; every leaf of the
// enrichment manifest is populated (with null where no evidence exists).
VulnerabilityRecord build_record(const RawPost& post,
                                 const CascadeDecision& decision,
                                 std::string_view author_salt,
                                 UnixSeconds collected_at);

// Engagement-ratio-descending queue order (zero-upvote records count as
// infinite ratio); ties: discovered_at ascending, then id.
std::vector<VulnerabilityRecord> prioritize(std::vector<VulnerabilityRecord> records);

struct ParkedPost {
  RawPost post;
  std::string error;
  int attempts = 1;
};

struct IngestReport {
  std::size_t polled = 0;
  std::size_t accepted = 0;
  std::size_t rejected_stage1 = 0;
  std::size_t rejected_stage2 = 0;
  std::size_t duplicates = 0;
  std::size_t parked = 0;
  std::vector<std::string> new_ids;

  Json to_json() const;
};

// Serialized ingest boundary: cascade, enrich, dedup by canonical id against
// the store, persist. Judge failures park the post in the retry queue; parked
// posts are never dropped.
class IngestPipeline {
 public:
  IngestPipeline(Store& store, Lexicon lexicon,
                 std::shared_ptr<RelevanceJudge> judge,
                 CascadeThresholds thresholds = {}, Stage2Weights weights = {},
                 std::string author_salt = "promptrend");

  IngestReport run(const std::vector<RawPost>& posts, UnixSeconds collected_at);
  IngestReport retry_parked(UnixSeconds collected_at);

  const std::vector<ParkedPost>& retry_queue() const { return parked_; }
  void load_retry_queue(const std::filesystem::path& path);
  void save_retry_queue(const std::filesystem::path& path) const;

  const Lexicon& lexicon() const { return lexicon_; }

 private:
  IngestReport process(const std::vector<RawPost>& posts,
                       UnixSeconds collected_at,
                       std::vector<ParkedPost>* repark_into, int base_attempts);

  Store& store_;
  Lexicon lexicon_;
  std::shared_ptr<RelevanceJudge> judge_;
  CascadeThresholds thresholds_;
  Stage2Weights weights_;
  std::string author_salt_;
  std::vector<ParkedPost> parked_;
};

}  // namespace promptrend
