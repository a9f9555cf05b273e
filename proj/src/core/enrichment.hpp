#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "common/jsonio.hpp"

namespace promptrend {

// One declared enrichment leaf. The manifest is the source of truth for the
// bundle layout: validation walks it rather than a hardcoded struct, so the
// field set stays auditable and adjustable.
struct EnrichmentField {
  std::string group;
  std::string name;
  std::string type;  // "int" | "number" | "string" | "bool" | "string_array"
};

class EnrichmentSchema {
 public:
  // The bundled manifest: 47 leaves across temporal/social/technical/content.
  static const EnrichmentSchema& bundled();

  static EnrichmentSchema from_json(const Json& manifest);

  const std::vector<EnrichmentField>& fields() const { return fields_; }
  const std::vector<std::string>& groups() const { return groups_; }
  std::size_t leaf_count() const { return fields_.size(); }

  // Throws validation_error naming the offending field path. Every declared
  // leaf must be present (null allowed, absent not); unknown keys rejected.
  void validate(const Json& bundle) const;

  // A bundle with every leaf present and null.
  Json empty_bundle() const;

  Json to_json() const;

 private:
  std::vector<EnrichmentField> fields_;
  std::vector<std::string> groups_;
};

// Enrichment bundles are schema-validated JSON objects. Typed accessors are
// provided for the leaves the pipeline itself reads.
class EnrichmentBundle {
 public:
  EnrichmentBundle() : data_(EnrichmentSchema::bundled().empty_bundle()) {}
  explicit EnrichmentBundle(Json data);

  const Json& json() const { return data_; }
  Json& json() { return data_; }

  void set(std::string_view group, std::string_view name, Json value);
  const Json& get(std::string_view group, std::string_view name) const;

  double number_or(std::string_view group, std::string_view name, double fallback) const;
  std::vector<std::string> string_list(std::string_view group, std::string_view name) const;

 private:
  Json data_;
};

}  // namespace promptrend
