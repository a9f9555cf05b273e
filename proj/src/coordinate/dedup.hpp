#pragma once

#include <map>
#include <string>
#include <vector>

#include "common/jsonio.hpp"
#include "coordinate/fingerprint.hpp"
#include "core/record.hpp"
#include "core/store.hpp"

namespace promptrend {

struct DedupEdge {
  std::string member_id;     // non-canonical record
  std::string canonical_id;  // cluster representative
  RelationKind kind = RelationKind::variant;
  double similarity = 0.0;   // cosine(member, canonical)
};

struct DedupResult {
  // Clusters keyed by canonical id; members ordered canonical first, then
  // (discovered_at, id). Clusters themselves are ordered by canonical id.
  std::vector<std::vector<std::string>> clusters;
  std::map<std::string, std::string> canonical_of;  // member -> canonical
  std::vector<DedupEdge> edges;

  Json to_json() const;
};

// Single-linkage clustering at cosine >= threshold over precomputed
// fingerprints (aligned with records). Permutation-invariant; no record is
// dropped or modified — edges describe the relations to attach.
DedupResult dedup(const std::vector<VulnerabilityRecord>& records,
                  const std::vector<SemanticFingerprint>& fingerprints,
                  double threshold = 0.85);

// Convenience overload: fingerprints computed with `embedder`.
DedupResult dedup(const std::vector<VulnerabilityRecord>& records,
                  const Embedder& embedder, double threshold = 0.85);

// Writes the dedup edges onto the member records in the store.
void apply_dedup(Store& store, const DedupResult& result);

}  // namespace promptrend
