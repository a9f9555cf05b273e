#include "coordinate/propagation.hpp"

#include <algorithm>

#include "common/errors.hpp"

namespace promptrend {

Json PropagationResult::to_json() const {
  Json edge_list = Json::array();
  for (const PropagationEdge& e : edges) {
    edge_list.push_back(Json{{"from", e.from_id},
                             {"to", e.to_id},
                             {"lag_hours", e.lag_hours},
                             {"kind", propagation_kind_name(e.kind)}});
  }
  Json journey_map = Json::object();
  for (const auto& [canonical, journey] : journeys) {
    Json stops = Json::array();
    for (const PlatformFirstSeen& stop : journey) {
      stops.push_back(Json{{"platform", stop.platform},
                           {"record_id", stop.record_id},
                           {"first_seen", stop.first_seen}});
    }
    journey_map[canonical] = std::move(stops);
  }
  return Json{{"edges", edge_list}, {"journeys", journey_map}};
}

PropagationResult propagation_graph(
    const std::vector<VulnerabilityRecord>& records,
    const std::vector<SemanticFingerprint>& fingerprints,
    const DedupResult& dedup_result, double cross_post_threshold) {
  if (records.size() != fingerprints.size()) {
    throw validation_error("propagation: records and fingerprints must align");
  }
  std::map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < records.size(); ++i) index_of[records[i].id] = i;

  PropagationResult result;
  for (const auto& members : dedup_result.clusters) {
    const std::string& canonical = members.front();

    // Temporally first record per platform, plus the journey table.
    std::map<Platform, std::size_t> first_on_platform;
    for (const std::string& id : members) {
      auto it = index_of.find(id);
      if (it == index_of.end()) {
        throw validation_error("propagation: cluster member " + id +
                               " missing from record set");
      }
      const std::size_t idx = it->second;
      auto [slot, inserted] = first_on_platform.emplace(records[idx].platform, idx);
      if (!inserted) {
        const VulnerabilityRecord& have = records[slot->second];
        const VulnerabilityRecord& cand = records[idx];
        if (cand.discovered_at < have.discovered_at ||
            (cand.discovered_at == have.discovered_at && cand.id < have.id)) {
          slot->second = idx;
        }
      }
    }

    std::vector<PlatformFirstSeen> journey;
    for (const auto& [platform, idx] : first_on_platform) {
      journey.push_back(PlatformFirstSeen{std::string(platform_name(platform)),
                                          records[idx].id,
                                          records[idx].discovered_at});
    }
    std::sort(journey.begin(), journey.end(),
              [](const PlatformFirstSeen& a, const PlatformFirstSeen& b) {
                if (a.first_seen != b.first_seen) return a.first_seen < b.first_seen;
                return a.record_id < b.record_id;
              });
    result.journeys[canonical] = std::move(journey);

    // Edges: platform-first record -> strictly later records elsewhere.
    for (const auto& [platform, from_idx] : first_on_platform) {
      const VulnerabilityRecord& from = records[from_idx];
      for (const std::string& id : members) {
        const std::size_t to_idx = index_of[id];
        const VulnerabilityRecord& to = records[to_idx];
        if (to.platform == from.platform) continue;
        if (to.discovered_at <= from.discovered_at) continue;
        PropagationEdge edge;
        edge.from_id = from.id;
        edge.to_id = to.id;
        edge.lag_hours =
            static_cast<double>(to.discovered_at - from.discovered_at) / 3600.0;
        edge.kind = cosine(fingerprints[from_idx], fingerprints[to_idx]) >=
                            cross_post_threshold
                        ? PropagationKind::cross_post
                        : PropagationKind::independent_rediscovery;
        result.edges.push_back(std::move(edge));
      }
    }
  }

  std::sort(result.edges.begin(), result.edges.end(),
            [](const PropagationEdge& a, const PropagationEdge& b) {
              if (a.from_id != b.from_id) return a.from_id < b.from_id;
              if (a.to_id != b.to_id) return a.to_id < b.to_id;
              return false;
            });
  return result;
}

}  // namespace promptrend
