#include "ingest/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>

#include "common/errors.hpp"
#include "common/hash.hpp"
#include "common/text.hpp"

namespace promptrend {
namespace {

std::size_t codepoint_count(std::string_view text) {
  std::size_t i = 0, n = 0;
  while (i < text.size()) {
    decode_utf8(text, i);
    ++n;
  }
  return n;
}

std::string codepoint_prefix(std::string_view text, std::size_t max_points) {
  std::size_t i = 0, n = 0;
  while (i < text.size() && n < max_points) {
    decode_utf8(text, i);
    ++n;
  }
  return std::string(text.substr(0, i));
}

std::vector<std::string> extract_code_blocks(std::string_view text) {
  std::vector<std::string> blocks;
  std::size_t pos = 0;
  while (true) {
    const std::size_t open = text.find("```", pos);
    if (open == std::string_view::npos) break;
    const std::size_t close = text.find("```", open + 3);
    if (close == std::string_view::npos) break;
    blocks.emplace_back(text.substr(open + 3, close - open - 3));
    pos = close + 3;
  }
  return blocks;
}

std::vector<std::string> extract_urls(std::string_view text) {
  std::vector<std::string> urls;
  for (std::string_view scheme : {"http://", "https://"}) {
    std::size_t pos = 0;
    while ((pos = text.find(scheme, pos)) != std::string_view::npos) {
      std::size_t end = pos;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) &&
             text[end] != '"' && text[end] != '<' && text[end] != '>') {
        ++end;
      }
      urls.emplace_back(text.substr(pos, end - pos));
      pos = end;
    }
  }
  std::sort(urls.begin(), urls.end());
  return urls;
}

// Longest double-quoted span of at least 40 codepoints, if any.
Json quoted_prompt(std::string_view text) {
  std::string best;
  std::size_t pos = 0;
  while (true) {
    const std::size_t open = text.find('"', pos);
    if (open == std::string_view::npos) break;
    const std::size_t close = text.find('"', open + 1);
    if (close == std::string_view::npos) break;
    std::string_view span = text.substr(open + 1, close - open - 1);
    if (codepoint_count(span) >= 40 && span.size() > best.size()) {
      best = std::string(span);
    }
    pos = close + 1;
  }
  return best.empty() ? Json(nullptr) : Json(best);
}

bool mostly_ascii_letters(std::string_view text) {
  std::size_t letters = 0, non_ascii = 0;
  for (unsigned char c : text) {
    if (std::isalpha(c) != 0) ++letters;
    if (c >= 0x80) ++non_ascii;
  }
  return letters > 0 && non_ascii * 10 < letters;
}

Json string_list_json(const std::vector<std::string>& items) {
  Json out = Json::array();
  for (const auto& s : items) out.push_back(s);
  return out;
}

}  // namespace

CascadeDecision filter_cascade(const RawPost& post, const Lexicon& lexicon,
                               RelevanceJudge& judge,
                               const CascadeThresholds& thresholds,
                               const Stage2Weights& weights) {
  if (thresholds.stage1 <= 0 || thresholds.stage1 > 1 || thresholds.stage2 <= 0 ||
      thresholds.stage2 > 1) {
    throw config_error("filter thresholds must lie in (0,1]");
  }
  const double weight_sum =
      weights.relevance + weights.sophistication + weights.harm;
  if (weight_sum <= 0) throw config_error("stage-2 weights must sum positive");

  CascadeDecision decision;
  decision.stage1_score = keyword_score(post.text, lexicon);
  if (decision.stage1_score < thresholds.stage1) {
    decision.rejected_stage = 1;
    return decision;
  }

  const Json context{{"title", post.title},
                     {"platform", platform_name(post.platform)}};
  decision.judgment = judge.assess(post.text, context);
  decision.stage2_evaluated = true;
  const double harm_signal = std::min(
      1.0, static_cast<double>(decision.judgment.harm_categories.size()) / 4.0);
  decision.stage2_score = (weights.relevance * decision.judgment.relevance +
                           weights.sophistication * decision.judgment.sophistication_hint +
                           weights.harm * harm_signal) /
                          weight_sum;
  if (decision.stage2_score < thresholds.stage2) {
    decision.rejected_stage = 2;
    return decision;
  }
  decision.accepted = true;
  return decision;
}

VulnerabilityRecord build_record(const RawPost& post,
                                 const CascadeDecision& decision,
                                 std::string_view author_salt,
                                 UnixSeconds collected_at) {
  VulnerabilityRecord record;
  record.platform = post.platform;
  record.source_locator = post.source_locator;
  record.prompt_text = post.text;
  record.title = post.title;
  record.discovered_at = post.posted_at;
  record.author_token = author_token(post.author, author_salt);
  record.engagement = post.engagement;
  record.id = canonical_id(post.platform, post.source_locator, post.text);

  const double age_hours =
      std::max<double>(0, static_cast<double>(collected_at - post.posted_at)) /
      3600.0;
  const std::string normalized = normalize_text(post.text);
  const std::vector<std::string> code_blocks = extract_code_blocks(post.text);
  const std::vector<std::string> urls = extract_urls(post.text);
  const std::vector<std::string> tokens = tokenize(post.text);

  EnrichmentBundle enrichment;
  const auto set = [&](const char* group, const char* leaf, Json value) {
    enrichment.set(group, leaf, std::move(value));
  };

  set("temporal", "first_seen", post.posted_at);
  set("temporal", "last_seen", post.posted_at);
  set("temporal", "thread_age_hours", age_hours);
  set("temporal", "repost_lag_hours", nullptr);
  set("temporal", "collection_lag_hours", age_hours);
  set("temporal", "first_platform", platform_name(post.platform));
  set("temporal", "activity_window_hours", 0.0);
  set("temporal", "peak_activity_at", post.posted_at);
  set("temporal", "discovery_hour_utc",
      static_cast<int>((post.posted_at / 3600) % 24));
  set("temporal", "discovery_weekday",
      static_cast<int>((post.posted_at / kSecondsPerDay + 4) % 7));

  set("social", "upvotes", post.engagement.upvotes);
  set("social", "comments", post.engagement.comments);
  set("social", "shares", post.engagement.shares);
  set("social", "crossposts", post.engagement.crossposts);
  set("social", "engagement_ratio",
      post.engagement.upvotes > 0
          ? Json(static_cast<double>(post.engagement.comments) /
                 static_cast<double>(post.engagement.upvotes))
          : Json(nullptr));
  set("social", "author_activity_count", nullptr);
  set("social", "author_account_age_days", nullptr);
  set("social", "community_size", nullptr);
  set("social", "community_posts_per_day", nullptr);
  set("social", "unique_participants", nullptr);
  set("social", "max_thread_depth", nullptr);
  set("social", "share_velocity_per_day",
      age_hours > 0 ? Json(static_cast<double>(post.engagement.shares) /
                           (age_hours / 24.0))
                    : Json(nullptr));

  set("technical", "detected_encodings", string_list_json(detect_encodings(post.text)));
  set("technical", "detected_language",
      mostly_ascii_letters(post.text) ? "en" : "und");
  set("technical", "token_estimate", static_cast<std::int64_t>(tokens.size()));
  set("technical", "char_count",
      static_cast<std::int64_t>(codepoint_count(post.text)));
  set("technical", "line_count",
      static_cast<std::int64_t>(1 + std::count(post.text.begin(), post.text.end(), '\n')));
  set("technical", "code_block_count", static_cast<std::int64_t>(code_blocks.size()));
  set("technical", "url_count", static_cast<std::int64_t>(urls.size()));
  set("technical", "model_family_mentions",
      string_list_json(detect_model_mentions(post.text)));
  set("technical", "category_tags",
      string_list_json(detect_technique_tags(post.text)));
  set("technical", "judge_relevance",
      decision.stage2_evaluated ? Json(decision.judgment.relevance) : Json(nullptr));
  set("technical", "judge_sophistication",
      decision.stage2_evaluated ? Json(decision.judgment.sophistication_hint)
                                : Json(nullptr));
  set("technical", "judge_harm_categories",
      decision.stage2_evaluated
          ? string_list_json(decision.judgment.harm_categories)
          : Json(Json::array()));
  set("technical", "lexicon_score", decision.stage1_score);

  set("content", "original_text", post.text);
  set("content", "normalized_text", normalized);
  set("content", "title_snapshot", post.title);
  set("content", "extracted_code_blocks", string_list_json(code_blocks));
  set("content", "extracted_urls", string_list_json(urls));
  set("content", "quoted_prompt", quoted_prompt(post.text));
  set("content", "references_system_prompt",
      [&] {
        const std::vector<std::string> toks = tokenize(post.text);
        for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
          if (toks[i] == "system" && (toks[i + 1] == "prompt" || toks[i + 1] == "message")) {
            return true;
          }
        }
        return false;
      }());
  set("content", "content_hash", sha256_hex(normalized));
  set("content", "summary", codepoint_prefix(normalized, 200));
  set("content", "attachment_count", 0);
  set("content", "redactions_applied", false);
  set("content", "contains_imperative", detect_imperative(post.text));

  record.enrichment = std::move(enrichment);
  record.validate();
  return record;
}

std::vector<VulnerabilityRecord> prioritize(std::vector<VulnerabilityRecord> records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const VulnerabilityRecord& a, const VulnerabilityRecord& b) {
                     const double ra = a.engagement.engagement_ratio();
                     const double rb = b.engagement.engagement_ratio();
                     if (ra != rb) return ra > rb;
                     if (a.discovered_at != b.discovered_at) {
                       return a.discovered_at < b.discovered_at;
                     }
                     return a.id < b.id;
                   });
  return records;
}

Json IngestReport::to_json() const {
  Json ids = Json::array();
  for (const auto& id : new_ids) ids.push_back(id);
  return Json{{"polled", polled},
              {"accepted", accepted},
              {"rejected_stage1", rejected_stage1},
              {"rejected_stage2", rejected_stage2},
              {"duplicates", duplicates},
              {"parked", parked},
              {"new_ids", ids}};
}

IngestPipeline::IngestPipeline(Store& store, Lexicon lexicon,
                               std::shared_ptr<RelevanceJudge> judge,
                               CascadeThresholds thresholds, Stage2Weights weights,
                               std::string author_salt)
    : store_(store),
      lexicon_(std::move(lexicon)),
      judge_(std::move(judge)),
      thresholds_(thresholds),
      weights_(weights),
      author_salt_(std::move(author_salt)) {
  if (!judge_) throw config_error("ingest pipeline requires a judge");
}

IngestReport IngestPipeline::process(const std::vector<RawPost>& posts,
                                     UnixSeconds collected_at,
                                     std::vector<ParkedPost>* repark_into,
                                     int base_attempts) {
  IngestReport report;
  report.polled = posts.size();
  for (const RawPost& post : posts) {
    CascadeDecision decision;
    try {
      decision = filter_cascade(post, lexicon_, *judge_, thresholds_, weights_);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::config) throw;  // misconfiguration, not judge flake
      repark_into->push_back(ParkedPost{post, e.what(), base_attempts + 1});
      ++report.parked;
      continue;
    } catch (const std::exception& e) {
      repark_into->push_back(ParkedPost{post, e.what(), base_attempts + 1});
      ++report.parked;
      continue;
    }
    if (!decision.accepted) {
      if (decision.rejected_stage == 1) {
        ++report.rejected_stage1;
      } else {
        ++report.rejected_stage2;
      }
      continue;
    }
    const std::string id = canonical_id(post.platform, post.source_locator, post.text);
    if (store_.contains(id)) {
      ++report.duplicates;
      continue;
    }
    VulnerabilityRecord record =
        build_record(post, decision, author_salt_, collected_at);
    store_.put(record);
    ++report.accepted;
    report.new_ids.push_back(record.id);
  }
  return report;
}

IngestReport IngestPipeline::run(const std::vector<RawPost>& posts,
                                 UnixSeconds collected_at) {
  return process(posts, collected_at, &parked_, 0);
}

IngestReport IngestPipeline::retry_parked(UnixSeconds collected_at) {
  std::vector<ParkedPost> pending = std::move(parked_);
  parked_.clear();
  std::vector<RawPost> posts;
  posts.reserve(pending.size());
  int max_attempts = 0;
  for (const ParkedPost& p : pending) {
    posts.push_back(p.post);
    max_attempts = std::max(max_attempts, p.attempts);
  }
  return process(posts, collected_at, &parked_, max_attempts);
}

void IngestPipeline::load_retry_queue(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return;  // nothing parked yet
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const Json row = parse_json(line, "retry queue:" + std::to_string(line_no));
    ParkedPost parked;
    parked.post = raw_post_from_json(require_field(row, "post", "retry queue"));
    parked.error = row.value("error", std::string{});
    parked.attempts = static_cast<int>(row.value("attempts", std::int64_t{1}));
    parked_.push_back(std::move(parked));
  }
}

void IngestPipeline::save_retry_queue(const std::filesystem::path& path) const {
  std::string body;
  for (const ParkedPost& p : parked_) {
    const Json row{{"post", raw_post_to_json(p.post)},
                   {"error", p.error},
                   {"attempts", p.attempts}};
    body += row.dump();
    body += '\n';
  }
  write_text_file(path, body);
}

}  // namespace promptrend
