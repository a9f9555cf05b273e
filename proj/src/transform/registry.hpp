#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "common/jsonio.hpp"

namespace promptrend {

enum class StrategyCategory {
  encoding,
  linguistic,
  psychological,
  structural,
  technical_obfuscation,
  academic,
  social_engineering,
  advanced,
};

constexpr const char* category_name(StrategyCategory c) {
  switch (c) {
    case StrategyCategory::encoding: return "encoding";
    case StrategyCategory::linguistic: return "linguistic";
    case StrategyCategory::psychological: return "psychological";
    case StrategyCategory::structural: return "structural";
    case StrategyCategory::technical_obfuscation: return "technical_obfuscation";
    case StrategyCategory::academic: return "academic";
    case StrategyCategory::social_engineering: return "social_engineering";
    case StrategyCategory::advanced: return "advanced";
  }
  return "encoding";
}
StrategyCategory category_from_name(std::string_view name);

enum class StrategyKind { algorithmic, templated };

struct StrategyDef {
  std::string id;
  StrategyCategory category = StrategyCategory::encoding;
  StrategyKind kind = StrategyKind::algorithmic;
  std::string method;  // codec name, "template", "fragment", "reorder", ...
  bool invertible = false;
  Json params;  // method-specific settings from the manifest entry
};

// Immutable registry of prompt transformation strategies, loaded from the
// manifest JSON. Exactly 71 strategies across eight categories; `apply` is
// deterministic and templated strategies always carry the original prompt
// verbatim (fragmenting strategies carry it as ordered tagged fragments).
class TransformRegistry {
 public:
  static const TransformRegistry& bundled();
  static TransformRegistry from_json(const Json& manifest);
  static const char* bundled_manifest_text();

  const std::vector<StrategyDef>& manifest() const { return defs_; }
  bool has(std::string_view id) const;
  const StrategyDef& strategy(std::string_view id) const;

  std::string apply(std::string_view id, std::string_view prompt) const;
  bool invertible(std::string_view id) const;
  std::string invert(std::string_view id, std::string_view transformed) const;

  // Payload pieces produced by fragment/reorder strategies, in original
  // order; single-element for every other strategy. Used by containment
  // checks.
  std::vector<std::string> payload_fragments(std::string_view id,
                                             std::string_view prompt) const;

 private:
  std::vector<StrategyDef> defs_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

}  // namespace promptrend
