#pragma once

#include <map>
#include <string>
#include <vector>

#include "common/jsonio.hpp"
#include "coordinate/dedup.hpp"

namespace promptrend {

enum class PropagationKind { cross_post, independent_rediscovery };

constexpr const char* propagation_kind_name(PropagationKind k) {
  return k == PropagationKind::cross_post ? "cross_post"
                                          : "independent_rediscovery";
}

struct PropagationEdge {
  std::string from_id;
  std::string to_id;
  double lag_hours = 0.0;  // to.discovered_at - from.discovered_at, >= 0
  PropagationKind kind = PropagationKind::independent_rediscovery;
};

struct PlatformFirstSeen {
  std::string platform;
  std::string record_id;
  UnixSeconds first_seen = 0;
};

struct PropagationResult {
  std::vector<PropagationEdge> edges;
  // canonical id -> platforms in order of first appearance within the cluster
  std::map<std::string, std::vector<PlatformFirstSeen>> journeys;

  Json to_json() const;
};

// Within each dedup cluster: edges run from the temporally first record on
// each platform to every strictly later record on a different platform.
// similarity >= 0.97 marks a cross_post, anything lower an independent
// rediscovery. Fingerprints must align with `records`.
PropagationResult propagation_graph(
    const std::vector<VulnerabilityRecord>& records,
    const std::vector<SemanticFingerprint>& fingerprints,
    const DedupResult& dedup_result, double cross_post_threshold = 0.97);

}  // namespace promptrend
