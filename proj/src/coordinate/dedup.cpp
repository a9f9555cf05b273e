#include "coordinate/dedup.hpp"

#include <algorithm>
#include <numeric>

#include "common/errors.hpp"

namespace promptrend {
namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Json DedupResult::to_json() const {
  Json cluster_list = Json::array();
  for (const auto& members : clusters) {
    Json m = Json::array();
    for (const auto& id : members) m.push_back(id);
    cluster_list.push_back(Json{{"canonical", members.front()}, {"members", m}});
  }
  Json edge_list = Json::array();
  for (const DedupEdge& e : edges) {
    edge_list.push_back(Json{{"member", e.member_id},
                             {"canonical", e.canonical_id},
                             {"kind", std::string(relation_kind_name(e.kind))},
                             {"similarity", e.similarity}});
  }
  return Json{{"clusters", cluster_list}, {"edges", edge_list}};
}

DedupResult dedup(const std::vector<VulnerabilityRecord>& records,
                  const std::vector<SemanticFingerprint>& fingerprints,
                  double threshold) {
  if (records.size() != fingerprints.size()) {
    throw validation_error("dedup: records and fingerprints must align");
  }
  if (threshold <= 0 || threshold > 1) {
    throw config_error("dedup: threshold must lie in (0,1]");
  }
  for (std::size_t i = 1; i < fingerprints.size(); ++i) {
    if (fingerprints[i].embedder_id != fingerprints[0].embedder_id) {
      throw config_error("dedup: mixed embedders (" + fingerprints[0].embedder_id +
                         " vs " + fingerprints[i].embedder_id + ")");
    }
  }

  const std::size_t n = records.size();
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cosine(fingerprints[i], fingerprints[j]) >= threshold) uf.unite(i, j);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);

  DedupResult result;
  struct ClusterTmp {
    std::size_t canonical_index;
    std::vector<std::size_t> members;  // sorted by (discovered_at, id)
  };
  std::vector<ClusterTmp> tmp;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      if (records[a].discovered_at != records[b].discovered_at) {
        return records[a].discovered_at < records[b].discovered_at;
      }
      return records[a].id < records[b].id;
    });
    tmp.push_back(ClusterTmp{members.front(), members});
  }
  std::sort(tmp.begin(), tmp.end(), [&](const ClusterTmp& a, const ClusterTmp& b) {
    return records[a.canonical_index].id < records[b.canonical_index].id;
  });

  // Index fingerprints by position for similarity lookups.
  std::map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < n; ++i) index_of[records[i].id] = i;

  for (const ClusterTmp& cluster : tmp) {
    const VulnerabilityRecord& canonical = records[cluster.canonical_index];
    std::vector<std::string> member_ids;
    for (std::size_t idx : cluster.members) {
      member_ids.push_back(records[idx].id);
      result.canonical_of[records[idx].id] = canonical.id;
      if (idx == cluster.canonical_index) continue;
      DedupEdge edge;
      edge.member_id = records[idx].id;
      edge.canonical_id = canonical.id;
      edge.kind = records[idx].platform != canonical.platform
                      ? RelationKind::cross_platform_instance
                      : RelationKind::variant;
      edge.similarity = cosine(fingerprints[idx], fingerprints[cluster.canonical_index]);
      result.edges.push_back(std::move(edge));
    }
    result.clusters.push_back(std::move(member_ids));
  }
  return result;
}

DedupResult dedup(const std::vector<VulnerabilityRecord>& records,
                  const Embedder& embedder, double threshold) {
  std::vector<SemanticFingerprint> fingerprints;
  fingerprints.reserve(records.size());
  for (const VulnerabilityRecord& r : records) {
    fingerprints.push_back(embedder.fingerprint(r.prompt_text));
  }
  return dedup(records, fingerprints, threshold);
}

void apply_dedup(Store& store, const DedupResult& result) {
  for (const DedupEdge& e : result.edges) {
    VulnerabilityRecord record = store.get(e.member_id);
    RelationEdge relation;
    relation.kind = e.kind;
    relation.target_id = e.canonical_id;
    relation.similarity = e.similarity;
    relation.note = "dedup canonical";
    const bool already = std::any_of(
        record.relations.begin(), record.relations.end(), [&](const RelationEdge& have) {
          return have.kind == relation.kind && have.target_id == relation.target_id;
        });
    if (!already) {
      record.relations.push_back(std::move(relation));
      store.put(record);
    }
  }
}

}  // namespace promptrend
