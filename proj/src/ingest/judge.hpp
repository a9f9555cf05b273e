#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "common/jsonio.hpp"
#include "ingest/lexicon.hpp"

namespace promptrend {

struct JudgeAssessment {
  double relevance = 0.0;           // [0,1]
  double sophistication_hint = 0.0; // [0,1]
  std::vector<std::string> harm_categories;
};

// Stage-2 relevance judge. The bundled implementation is a deterministic
// heuristic so the pipeline runs offline; an LLM-backed judge plugs in behind
// the same interface and is identified by id() in the audit trail.
class RelevanceJudge {
 public:
  virtual ~RelevanceJudge() = default;
  virtual std::string id() const = 0;
  virtual JudgeAssessment assess(const std::string& text, const Json& context) = 0;
};

class HeuristicJudge : public RelevanceJudge {
 public:
  explicit HeuristicJudge(Lexicon lexicon);
  std::string id() const override { return "heuristic-judge/v1"; }
  JudgeAssessment assess(const std::string& text, const Json& context) override;

 private:
  Lexicon lexicon_;
};

// Deterministic surface-feature detectors shared by the judge and the
// enrichment builder. All matching is case-insensitive and token-based.
std::vector<std::string> detect_encodings(std::string_view text);
std::vector<std::string> detect_technique_tags(std::string_view text);
std::vector<std::string> detect_harm_categories(std::string_view text);
std::vector<std::string> detect_model_mentions(std::string_view text);
bool detect_imperative(std::string_view text);

}  // namespace promptrend
