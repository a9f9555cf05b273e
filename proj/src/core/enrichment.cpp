#include "core/enrichment.hpp"

#include <algorithm>

namespace promptrend {

namespace {

// Declared reconstruction of the 47-field enrichment layout, embedded from
// data/enrichment_schema.json at build time. The four groups are fixed; the
// leaf inventory within them is this project's schema, kept as data so the
// count is a checked constant.
constexpr std::string_view kBundledManifest =
#include "enrichment_schema_data.inc"
    ;

bool type_matches(const Json& value, std::string_view type) {
  if (value.is_null()) {
    return true;
  }
  if (type == "int") {
    return value.is_number_integer() || value.is_number_unsigned();
  }
  if (type == "number") {
    return value.is_number();
  }
  if (type == "string") {
    return value.is_string();
  }
  if (type == "bool") {
    return value.is_boolean();
  }
  if (type == "string_array") {
    if (!value.is_array()) {
      return false;
    }
    return std::all_of(value.begin(), value.end(),
                       [](const Json& v) { return v.is_string(); });
  }
  return false;
}

}  // namespace

const EnrichmentSchema& EnrichmentSchema::bundled() {
  static const EnrichmentSchema schema =
      from_json(parse_json(kBundledManifest, "bundled enrichment manifest"));
  return schema;
}

EnrichmentSchema EnrichmentSchema::from_json(const Json& manifest) {
  EnrichmentSchema schema;
  const Json& groups = require_field(manifest, "groups", "enrichment manifest");
  if (!groups.is_object()) {
    throw validation_error("enrichment manifest: 'groups' must be an object");
  }
  for (const auto& [group_name, leaves] : groups.items()) {
    if (!leaves.is_object()) {
      throw validation_error("enrichment manifest: group '" + group_name +
                             "' must be an object");
    }
    schema.groups_.push_back(group_name);
    for (const auto& [leaf_name, type] : leaves.items()) {
      if (!type.is_string()) {
        throw validation_error("enrichment manifest: leaf '" + group_name + "." +
                               leaf_name + "' type must be a string");
      }
      schema.fields_.push_back({group_name, leaf_name, type.get<std::string>()});
    }
  }
  if (schema.fields_.empty()) {
    throw config_error("enrichment manifest declares no leaves");
  }
  return schema;
}

void EnrichmentSchema::validate(const Json& bundle) const {
  if (!bundle.is_object()) {
    throw validation_error("enrichment: bundle must be an object");
  }
  for (const auto& field : fields_) {
    auto group_it = bundle.find(field.group);
    if (group_it == bundle.end() || !group_it->is_object()) {
      throw validation_error("enrichment." + field.group + ": group missing");
    }
    auto leaf_it = group_it->find(field.name);
    if (leaf_it == group_it->end()) {
      throw validation_error("enrichment." + field.group + "." + field.name +
                             ": leaf absent (null it instead)");
    }
    if (!type_matches(*leaf_it, field.type)) {
      throw validation_error("enrichment." + field.group + "." + field.name +
                             ": expected " + field.type + " or null");
    }
  }
  // Reject undeclared keys so the manifest stays authoritative.
  for (const auto& [group_name, leaves] : bundle.items()) {
    bool known_group = std::find(groups_.begin(), groups_.end(), group_name) != groups_.end();
    if (!known_group) {
      throw validation_error("enrichment." + group_name + ": undeclared group");
    }
    for (const auto& [leaf_name, value] : leaves.items()) {
      (void)value;
      bool known = std::any_of(fields_.begin(), fields_.end(), [&](const EnrichmentField& f) {
        return f.group == group_name && f.name == leaf_name;
      });
      if (!known) {
        throw validation_error("enrichment." + group_name + "." + leaf_name +
                               ": undeclared leaf");
      }
    }
  }
}

Json EnrichmentSchema::empty_bundle() const {
  Json bundle = Json::object();
  for (const auto& group : groups_) {
    bundle[group] = Json::object();
  }
  for (const auto& field : fields_) {
    bundle[field.group][field.name] = nullptr;
  }
  return bundle;
}

Json EnrichmentSchema::to_json() const {
  Json groups = Json::object();
  for (const auto& field : fields_) {
    groups[field.group][field.name] = field.type;
  }
  return Json{{"schema_version", 1}, {"groups", groups}};
}

EnrichmentBundle::EnrichmentBundle(Json data) : data_(std::move(data)) {
  EnrichmentSchema::bundled().validate(data_);
}

void EnrichmentBundle::set(std::string_view group, std::string_view name, Json value) {
  data_[std::string(group)][std::string(name)] = std::move(value);
}

const Json& EnrichmentBundle::get(std::string_view group, std::string_view name) const {
  static const Json kNull;
  auto group_it = data_.find(group);
  if (group_it == data_.end()) {
    return kNull;
  }
  auto leaf_it = group_it->find(name);
  return leaf_it == group_it->end() ? kNull : *leaf_it;
}

double EnrichmentBundle::number_or(std::string_view group, std::string_view name,
                                   double fallback) const {
  const Json& v = get(group, name);
  return v.is_number() ? v.get<double>() : fallback;
}

std::vector<std::string> EnrichmentBundle::string_list(std::string_view group,
                                                       std::string_view name) const {
  std::vector<std::string> out;
  const Json& v = get(group, name);
  if (v.is_array()) {
    for (const auto& item : v) {
      if (item.is_string()) {
        out.push_back(item.get<std::string>());
      }
    }
  }
  return out;
}

}  // namespace promptrend
