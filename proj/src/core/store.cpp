#include "core/store.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>

#include "common/errors.hpp"
#include "common/jsonio.hpp"

namespace promptrend {
namespace {

constexpr int kFormatVersion = 1;
constexpr const char* kSegmentName = "000001.jsonl";

bool relation_seen(const std::vector<RelationEdge>& edges, const RelationEdge& e) {
  return std::any_of(edges.begin(), edges.end(), [&](const RelationEdge& have) {
    return have.kind == e.kind && have.target_id == e.target_id;
  });
}

bool same_assessment(const std::optional<PvafAssessment>& a,
                     const std::optional<PvafAssessment>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a.has_value()) return true;
  return a->to_json() == b->to_json();
}

// Applies an incoming record on top of the stored one. Provenance fields
// (platform, locator, discovery time, author, prompt, title) stay as first
// written; mutable observation fields are refreshed from the incoming copy.
VulnerabilityRecord merge_records(const VulnerabilityRecord& stored,
                                  const VulnerabilityRecord& incoming,
                                  bool* history_appended) {
  VulnerabilityRecord merged = stored;
  merged.engagement = incoming.engagement;
  merged.enrichment = incoming.enrichment;
  for (const RelationEdge& e : incoming.relations) {
    if (!relation_seen(merged.relations, e)) merged.relations.push_back(e);
  }
  if (incoming.assessment.has_value() &&
      !same_assessment(stored.assessment, incoming.assessment)) {
    merged.assessment = incoming.assessment;
    if (!merged.score_history.empty() &&
        incoming.assessment->scored_at <= merged.score_history.back().at) {
      throw validation_error(
          "record " + stored.id +
          ": scored_at must exceed the last score_history timestamp");
    }
    merged.score_history.push_back(
        ScoreEntry{incoming.assessment->scored_at, incoming.assessment->final_score});
    *history_appended = true;
  }
  return merged;
}

}  // namespace

Store::Store(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::unique_ptr<Store> Store::open(const std::filesystem::path& dir) {
  std::unique_ptr<Store> store(new Store(dir));
  std::error_code ec;
  std::filesystem::create_directories(dir / "segments", ec);
  if (ec) throw io_error("cannot create store directory " + dir.string());

  const auto meta_path = dir / "meta.json";
  if (std::filesystem::exists(meta_path)) {
    Json meta = read_json_file(meta_path.string());
    if (require_int(meta, "format_version") != kFormatVersion) {
      throw state_error("unsupported store format in " + meta_path.string());
    }
  } else {
    Json meta;
    meta["format_version"] = kFormatVersion;
    write_text_file(meta_path.string(), meta.dump() + "\n");
  }
  store->active_segment_ = kSegmentName;
  store->load();
  return store;
}

void Store::load() {
  const auto seg_dir = dir_ / "segments";
  std::vector<std::filesystem::path> segments;
  for (const auto& entry : std::filesystem::directory_iterator(seg_dir)) {
    if (entry.path().extension() == ".jsonl") segments.push_back(entry.path());
  }
  std::sort(segments.begin(), segments.end());
  for (const auto& seg : segments) {
    std::ifstream in(seg, std::ios::binary);
    if (!in) throw io_error("cannot read store segment " + seg.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      Json row = parse_json(line, seg.filename().string() + ":" +
                                      std::to_string(line_no));
      const auto seq = static_cast<std::int64_t>(require_int(row, "seq"));
      const int revision = static_cast<int>(require_int(row, "revision"));
      VulnerabilityRecord record =
          VulnerabilityRecord::from_json(require_field(row, "record"));
      auto it = entries_.find(record.id);
      if (it == entries_.end()) {
        entries_.emplace(record.id, Entry{std::move(record), seq, revision});
      } else {
        it->second.record = std::move(record);
        it->second.revision = revision;
      }
      next_seq_ = std::max(next_seq_, seq + 1);
    }
  }
}

void Store::append_line(const Json& line) {
  const auto seg_path = dir_ / "segments" / active_segment_;
  std::ofstream out(seg_path, std::ios::binary | std::ios::app);
  if (!out) throw io_error("cannot append to store segment " + seg_path.string());
  out << line.dump() << '\n';
  out.flush();
  if (!out) throw io_error("write failed on store segment " + seg_path.string());
}

PutResult Store::put(const VulnerabilityRecord& record) {
  record.validate();
  std::unique_lock lock(mutex_);

  VulnerabilityRecord to_store;
  PutResult result;
  std::int64_t first_seq = 0;
  auto it = entries_.find(record.id);
  if (it == entries_.end()) {
    to_store = record;
    if (to_store.assessment.has_value() && to_store.score_history.empty()) {
      to_store.score_history.push_back(ScoreEntry{to_store.assessment->scored_at,
                                                  to_store.assessment->final_score});
      result.history_appended = true;
    }
    result.revision = 1;
    first_seq = next_seq_;
  } else {
    bool history_appended = false;
    VulnerabilityRecord merged = merge_records(it->second.record, record,
                                               &history_appended);
    if (merged.to_json() == it->second.record.to_json()) {
      result.revision = it->second.revision;
      result.history_appended = false;
      return result;  // byte-identical: append-only log stays untouched
    }
    to_store = std::move(merged);
    result.revision = it->second.revision + 1;
    result.history_appended = history_appended;
    first_seq = it->second.first_seq;
  }
  to_store.validate();

  const std::int64_t seq = next_seq_++;
  Json row;
  row["seq"] = seq;
  row["revision"] = result.revision;
  row["record"] = to_store.to_json();
  append_line(row);

  Json index_row;
  index_row["id"] = to_store.id;
  index_row["segment"] = active_segment_;
  index_row["seq"] = seq;
  index_row["revision"] = result.revision;
  std::ofstream index(dir_ / "index.jsonl", std::ios::binary | std::ios::app);
  if (!index) throw io_error("cannot append to store index in " + dir_.string());
  index << index_row.dump() << '\n';

  if (it == entries_.end()) {
    entries_.emplace(to_store.id, Entry{std::move(to_store), first_seq,
                                        result.revision});
  } else {
    it->second.record = std::move(to_store);
    it->second.revision = result.revision;
  }
  return result;
}

VulnerabilityRecord Store::get(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(id);
  if (it == entries_.end()) throw not_found_error("no record with id " + id);
  return it->second.record;
}

bool Store::contains(const std::string& id) const {
  std::shared_lock lock(mutex_);
  return entries_.count(id) != 0;
}

std::vector<VulnerabilityRecord> Store::scan(const ScanFilter& filter) const {
  std::vector<VulnerabilityRecord> out;
  for_each(filter, [&](const VulnerabilityRecord& r) { out.push_back(r); });
  return out;
}

void Store::for_each(const ScanFilter& filter,
                     const std::function<void(const VulnerabilityRecord&)>& fn) const {
  std::shared_lock lock(mutex_);
  std::vector<const Entry*> ordered;
  ordered.reserve(entries_.size());
  for (const auto& [id, entry] : entries_) ordered.push_back(&entry);
  std::sort(ordered.begin(), ordered.end(), [](const Entry* a, const Entry* b) {
    return a->first_seq < b->first_seq;
  });
  for (const Entry* entry : ordered) {
    const VulnerabilityRecord& r = entry->record;
    if (filter.platform.has_value() && r.platform != *filter.platform) continue;
    if (filter.scored.has_value() && r.assessment.has_value() != *filter.scored) {
      continue;
    }
    fn(r);
  }
}

std::size_t Store::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

}  // namespace promptrend
