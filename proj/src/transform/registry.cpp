#include "transform/registry.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "common/errors.hpp"
#include "common/hash.hpp"
#include "common/rng.hpp"
#include "common/text.hpp"
#include "transform/codecs.hpp"

namespace promptrend {
namespace {

constexpr const char kBundledManifestText[] =
#include "strategies_data.inc"
    ;

constexpr std::string_view kPromptSlot = "{prompt}";
constexpr std::size_t kExpectedStrategyCount = 71;

// Codec methods and whether a matching decoder exists.
constexpr std::array<std::pair<const char*, bool>, 14> kCodecMethods{{
    {"none", true},
    {"base64", true},
    {"base64_double", true},
    {"hex", true},
    {"hex_spaced", true},
    {"rot13", true},
    {"rot47", true},
    {"url_encode", true},
    {"url_encode_full", true},
    {"binary_bits", true},
    {"unicode_fullwidth", false},
    {"unicode_circled", false},
    {"leetspeak", false},
    {"zwsp", false},
}};

const bool* codec_invertible(std::string_view method) {
  for (const auto& [name, invertible] : kCodecMethods) {
    if (method == name) return &invertible;
  }
  return nullptr;
}

std::size_t count_slots(std::string_view text) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(kPromptSlot, pos)) != std::string_view::npos) {
    ++count;
    pos += kPromptSlot.size();
  }
  return count;
}

std::size_t codepoint_count(std::string_view text) {
  std::size_t i = 0;
  std::size_t n = 0;
  while (i < text.size()) {
    decode_utf8(text, i);
    ++n;
  }
  return n;
}

void check_prompt_budget(const StrategyDef& def, std::string_view prompt) {
  if (!def.params.contains("max_prompt_chars")) return;
  const auto budget =
      static_cast<std::size_t>(def.params["max_prompt_chars"].get<std::int64_t>());
  if (codepoint_count(prompt) > budget) {
    throw validation_error("template slot overflow: prompt exceeds " +
                           std::to_string(budget) + " chars for strategy " +
                           def.id);
  }
}

// Splits on codepoint boundaries into `parts` non-empty pieces with seeded
// cut positions, so byte-wise concatenation reproduces the input exactly.
std::vector<std::string> split_fragments(std::string_view prompt,
                                         std::size_t parts,
                                         std::uint64_t seed) {
  std::vector<std::size_t> offsets;  // byte offset of each codepoint
  std::size_t i = 0;
  while (i < prompt.size()) {
    offsets.push_back(i);
    decode_utf8(prompt, i);
  }
  offsets.push_back(prompt.size());
  const std::size_t n = offsets.size() - 1;
  const std::size_t k = std::max<std::size_t>(1, std::min(parts, n));

  Rng rng(seed ^ fnv1a64(prompt));
  std::vector<std::size_t> cuts;  // codepoint indices, strictly increasing
  std::size_t prev = 0;
  for (std::size_t j = 1; j < k; ++j) {
    const std::size_t lo = prev + 1;
    const std::size_t hi = n - (k - j);  // leave room for remaining pieces
    cuts.push_back(lo + rng.below(hi - lo + 1));
    prev = cuts.back();
  }
  cuts.push_back(n);

  std::vector<std::string> fragments;
  std::size_t start = 0;
  for (std::size_t cut : cuts) {
    fragments.emplace_back(prompt.substr(offsets[start], offsets[cut] - offsets[start]));
    start = cut;
  }
  return fragments;
}

std::string apply_codec(const StrategyDef& def, std::string_view prompt) {
  const std::string p(prompt);
  if (def.method == "none") return p;
  if (def.method == "base64") return codecs::base64_encode(p);
  if (def.method == "base64_double") {
    return codecs::base64_encode(codecs::base64_encode(p));
  }
  if (def.method == "hex") return codecs::hex_encode(p, /*spaced=*/false);
  if (def.method == "hex_spaced") return codecs::hex_encode(p, /*spaced=*/true);
  if (def.method == "rot13") return codecs::rot13(p);
  if (def.method == "rot47") return codecs::rot47(p);
  if (def.method == "url_encode") return codecs::url_encode(p, /*full=*/false);
  if (def.method == "url_encode_full") return codecs::url_encode(p, /*full=*/true);
  if (def.method == "binary_bits") return codecs::binary_encode(p);
  if (def.method == "unicode_fullwidth") return codecs::fullwidth(p);
  if (def.method == "unicode_circled") return codecs::circled(p);
  if (def.method == "leetspeak") return codecs::leetspeak(p);
  if (def.method == "zwsp") {
    const auto every =
        static_cast<std::size_t>(def.params.value("every", std::int64_t{3}));
    return codecs::zwsp_inject(p, every);
  }
  throw internal_error("unhandled codec method " + def.method);
}

std::string invert_codec(const StrategyDef& def, std::string_view text) {
  const std::string t(text);
  if (def.method == "none") return t;
  if (def.method == "base64") return codecs::base64_decode(t);
  if (def.method == "base64_double") {
    return codecs::base64_decode(codecs::base64_decode(t));
  }
  if (def.method == "hex" || def.method == "hex_spaced") {
    return codecs::hex_decode(t);
  }
  if (def.method == "rot13") return codecs::rot13(t);
  if (def.method == "rot47") return codecs::rot47(t);
  if (def.method == "url_encode" || def.method == "url_encode_full") {
    return codecs::url_decode(t);
  }
  if (def.method == "binary_bits") return codecs::binary_decode(t);
  throw internal_error("unhandled invertible method " + def.method);
}

}  // namespace

StrategyCategory category_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(StrategyCategory::advanced); ++i) {
    const auto c = static_cast<StrategyCategory>(i);
    if (name == category_name(c)) return c;
  }
  throw validation_error("unknown strategy category: " + std::string(name));
}

const TransformRegistry& TransformRegistry::bundled() {
  static const TransformRegistry registry =
      from_json(parse_json(kBundledManifestText, "bundled strategy manifest"));
  return registry;
}

const char* TransformRegistry::bundled_manifest_text() {
  return kBundledManifestText;
}

TransformRegistry TransformRegistry::from_json(const Json& manifest) {
  TransformRegistry registry;
  const Json& list = require_field(manifest, "strategies");
  if (!list.is_array()) {
    throw validation_error("strategy manifest: strategies must be an array");
  }
  for (const Json& item : list) {
    StrategyDef def;
    def.id = require_string(item, "id");
    def.category = category_from_name(require_string(item, "category"));
    const std::string kind = require_string(item, "kind");
    if (kind == "algorithmic") {
      def.kind = StrategyKind::algorithmic;
    } else if (kind == "templated") {
      def.kind = StrategyKind::templated;
    } else {
      throw validation_error("strategy " + def.id + ": unknown kind " + kind);
    }
    def.method = require_string(item, "method");
    def.invertible = require_field(item, "invertible").get<bool>();
    def.params = item;

    const bool* codec = codec_invertible(def.method);
    if (def.kind == StrategyKind::algorithmic) {
      if (codec == nullptr) {
        throw validation_error("strategy " + def.id + ": unknown codec method " +
                               def.method);
      }
      if (def.invertible && !*codec) {
        throw validation_error("strategy " + def.id +
                               ": method has no decoder but claims invertible");
      }
    } else {
      if (codec != nullptr) {
        throw validation_error("strategy " + def.id +
                               ": codec method on a templated strategy");
      }
      if (def.invertible) {
        throw validation_error("strategy " + def.id +
                               ": templated strategies are not invertible");
      }
      if (def.method == "template") {
        if (count_slots(require_string(item, "template")) != 1) {
          throw validation_error("strategy " + def.id +
                                 ": template must contain the prompt slot once");
        }
      } else if (def.method == "fragment" || def.method == "reorder") {
        if (require_int(item, "parts") < 2) {
          throw validation_error("strategy " + def.id + ": parts must be >= 2");
        }
        require_int(item, "seed");
        require_string(item, "intro");
      } else if (def.method == "pseudo_translation") {
        require_string(item, "lang");
      } else {
        throw validation_error("strategy " + def.id + ": unknown method " +
                               def.method);
      }
    }
    if (registry.by_id_.count(def.id) != 0) {
      throw validation_error("strategy manifest: duplicate id " + def.id);
    }
    registry.by_id_.emplace(def.id, registry.defs_.size());
    registry.defs_.push_back(std::move(def));
  }

  if (registry.defs_.size() != kExpectedStrategyCount) {
    throw validation_error("strategy manifest must define exactly " +
                           std::to_string(kExpectedStrategyCount) +
                           " strategies, got " +
                           std::to_string(registry.defs_.size()));
  }
  std::set<StrategyCategory> seen;
  for (const StrategyDef& def : registry.defs_) seen.insert(def.category);
  if (seen.size() != 8) {
    throw validation_error("strategy manifest must cover all eight categories");
  }
  return registry;
}

bool TransformRegistry::has(std::string_view id) const {
  return by_id_.count(std::string(id)) != 0;
}

const StrategyDef& TransformRegistry::strategy(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) {
    throw not_found_error("unknown transformation strategy: " + std::string(id));
  }
  return defs_[it->second];
}

std::string TransformRegistry::apply(std::string_view id,
                                     std::string_view prompt) const {
  if (prompt.empty()) throw validation_error("prompt must be non-empty");
  const StrategyDef& def = strategy(id);
  if (def.kind == StrategyKind::algorithmic) return apply_codec(def, prompt);

  check_prompt_budget(def, prompt);
  if (def.method == "template") {
    const std::string tmpl = def.params["template"].get<std::string>();
    const std::size_t pos = tmpl.find(kPromptSlot);
    std::string out = tmpl.substr(0, pos);
    out += prompt;
    out += tmpl.substr(pos + kPromptSlot.size());
    return out;
  }
  if (def.method == "pseudo_translation") {
    const std::string lang = def.params["lang"].get<std::string>();
    std::string out = "[translated:" + lang + "] ";
    out += prompt;
    out += " [/translated]";
    return out;
  }

  // fragment / reorder
  const auto parts = static_cast<std::size_t>(def.params["parts"].get<std::int64_t>());
  const auto seed = static_cast<std::uint64_t>(def.params["seed"].get<std::int64_t>());
  std::vector<std::string> fragments = split_fragments(prompt, parts, seed);
  const std::size_t k = fragments.size();
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  const char* tag = def.method == "fragment" ? "PART" : "SEG";
  if (def.method == "reorder") {
    std::uint64_t mix = seed;
    Rng rng(splitmix64(mix) ^ fnv1a64(prompt));
    rng.shuffle(order);
  }
  std::string out = def.params["intro"].get<std::string>();
  for (std::size_t idx : order) {
    out += '\n';
    out += '[';
    out += tag;
    out += ' ';
    out += std::to_string(idx + 1);
    out += '/';
    out += std::to_string(k);
    out += "] ";
    out += fragments[idx];
  }
  return out;
}

bool TransformRegistry::invertible(std::string_view id) const {
  return strategy(id).invertible;
}

std::string TransformRegistry::invert(std::string_view id,
                                      std::string_view transformed) const {
  const StrategyDef& def = strategy(id);
  if (!def.invertible) {
    throw validation_error("strategy " + def.id + " does not support inversion");
  }
  return invert_codec(def, transformed);
}

std::vector<std::string> TransformRegistry::payload_fragments(
    std::string_view id, std::string_view prompt) const {
  if (prompt.empty()) throw validation_error("prompt must be non-empty");
  const StrategyDef& def = strategy(id);
  if (def.kind == StrategyKind::templated &&
      (def.method == "fragment" || def.method == "reorder")) {
    const auto parts =
        static_cast<std::size_t>(def.params["parts"].get<std::int64_t>());
    const auto seed =
        static_cast<std::uint64_t>(def.params["seed"].get<std::int64_t>());
    return split_fragments(prompt, parts, seed);
  }
  return {std::string(prompt)};
}

}  // namespace promptrend
