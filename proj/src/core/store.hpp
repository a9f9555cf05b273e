#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "core/record.hpp"

namespace promptrend {

struct ScanFilter {
  std::optional<Platform> platform;
  std::optional<bool> scored;  // true: assessment present; false: absent
};

struct PutResult {
  int revision = 1;
  bool history_appended = false;
};

// Document store over append-only JSONL segments plus an id index file.
// Single writer, many readers; records are immutable values once returned.
//
// Layout under the store directory:
//   meta.json              format marker
//   segments/000001.jsonl  one JSON object per line: {seq, revision, record}
//   index.jsonl            one line per put: {id, segment, seq, revision}
//
// Re-putting an existing id never rewrites provenance: engagement/enrichment
// are refreshed, relations are unioned, and a changed assessment appends to
// score_history. A byte-identical put is a no-op.
class Store {
 public:
  static std::unique_ptr<Store> open(const std::filesystem::path& dir);

  PutResult put(const VulnerabilityRecord& record);
  VulnerabilityRecord get(const std::string& id) const;
  bool contains(const std::string& id) const;

  // Stable scan order: first-put sequence.
  std::vector<VulnerabilityRecord> scan(const ScanFilter& filter = {}) const;
  void for_each(const ScanFilter& filter,
                const std::function<void(const VulnerabilityRecord&)>& fn) const;

  std::size_t size() const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  explicit Store(std::filesystem::path dir);
  void load();
  void append_line(const Json& line);

  struct Entry {
    VulnerabilityRecord record;
    std::int64_t first_seq = 0;
    int revision = 1;
  };

  std::filesystem::path dir_;
  std::map<std::string, Entry> entries_;
  std::int64_t next_seq_ = 1;
  std::string active_segment_;
  mutable std::shared_mutex mutex_;
};

}  // namespace promptrend
