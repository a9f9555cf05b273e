#include "ingest/judge.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "common/text.hpp"

namespace promptrend {
namespace {

bool contains_phrase(const std::vector<std::string>& tokens,
                     std::string_view phrase) {
  const std::vector<std::string> needle = tokenize(phrase);
  if (needle.empty() || needle.size() > tokens.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= tokens.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (tokens[i + j] != needle[j]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

bool any_phrase(const std::vector<std::string>& tokens,
                std::initializer_list<std::string_view> phrases) {
  return std::any_of(phrases.begin(), phrases.end(), [&](std::string_view p) {
    return contains_phrase(tokens, p);
  });
}

bool is_base64_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '+' ||
         c == '/' || c == '=';
}

bool looks_like_base64(std::string_view text) {
  std::size_t run = 0;
  bool upper = false, lower = false, digit_or_symbol = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool in_run = i < text.size() && is_base64_char(text[i]);
    if (in_run) {
      const char c = text[i];
      ++run;
      upper = upper || (c >= 'A' && c <= 'Z');
      lower = lower || (c >= 'a' && c <= 'z');
      digit_or_symbol = digit_or_symbol || (c >= '0' && c <= '9') ||
                        c == '+' || c == '/' || c == '=';
    } else {
      if (run >= 24 && upper && lower && digit_or_symbol) return true;
      run = 0;
      upper = lower = digit_or_symbol = false;
    }
  }
  return false;
}

bool looks_like_hex(std::string_view text) {
  std::size_t run = 0, digits = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool in_run =
        i < text.size() &&
        std::isxdigit(static_cast<unsigned char>(text[i])) != 0;
    if (in_run) {
      ++run;
      if (std::isdigit(static_cast<unsigned char>(text[i])) != 0) ++digits;
    } else {
      if (run >= 16 && digits >= 2) return true;
      run = 0;
      digits = 0;
    }
  }
  return false;
}

bool looks_like_url_encoded(std::string_view text) {
  std::size_t escapes = 0;
  for (std::size_t i = 0; i + 2 < text.size(); ++i) {
    if (text[i] == '%' &&
        std::isxdigit(static_cast<unsigned char>(text[i + 1])) != 0 &&
        std::isxdigit(static_cast<unsigned char>(text[i + 2])) != 0) {
      ++escapes;
    }
  }
  return escapes >= 3;
}

bool looks_like_binary(std::string_view text) {
  std::size_t bits = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : '\0';
    if (c == '0' || c == '1') {
      ++bits;
    } else if (c == ' ') {
      continue;  // spaces do not break a bit run
    } else {
      if (bits >= 16) return true;
      bits = 0;
    }
  }
  return false;
}

bool contains_zwsp(std::string_view text) {
  return text.find("\xE2\x80\x8B") != std::string_view::npos;
}

std::size_t count_code_fences(std::string_view text) {
  std::size_t fences = 0, pos = 0;
  while ((pos = text.find("```", pos)) != std::string_view::npos) {
    ++fences;
    pos += 3;
  }
  return fences / 2;
}

}  // namespace

std::vector<std::string> detect_encodings(std::string_view text) {
  std::vector<std::string> found;
  if (looks_like_base64(text)) found.emplace_back("base64");
  if (looks_like_hex(text)) found.emplace_back("hex");
  if (looks_like_url_encoded(text)) found.emplace_back("url");
  if (looks_like_binary(text)) found.emplace_back("binary");
  if (contains_zwsp(text)) found.emplace_back("zwsp");
  return found;
}

std::vector<std::string> detect_technique_tags(std::string_view text) {
  const std::vector<std::string> tokens = tokenize(text);
  std::vector<std::string> tags;
  if (any_phrase(tokens, {"ignore previous instructions", "ignore all instructions",
                          "override instructions", "forget your instructions",
                          "disregard", "new instructions"})) {
    tags.emplace_back("instruction_override");
  }
  if (any_phrase(tokens, {"dan", "act as", "pretend you are", "roleplay",
                          "persona", "stay in character", "you are now"})) {
    tags.emplace_back("persona_attack");
  }
  if (!detect_encodings(text).empty() ||
      any_phrase(tokens, {"base64", "rot13", "hex", "morse", "cipher",
                          "leetspeak", "url encoding"})) {
    tags.emplace_back("encoding_attack");
  }
  if (any_phrase(tokens, {"hypothetical", "hypothetically", "imagine",
                          "thought experiment", "fictional", "in a story"})) {
    tags.emplace_back("hypothetical_framing");
  }
  if (any_phrase(tokens, {"system prompt", "system message",
                          "hidden instructions", "initial prompt"})) {
    tags.emplace_back("system_prompt_attack");
  }
  if (any_phrase(tokens, {"multi turn", "turn 1", "next message", "crescendo",
                          "step by step over several messages"})) {
    tags.emplace_back("multi_turn");
  }
  if (any_phrase(tokens, {"reassemble", "fragment", "payload splitting",
                          "token smuggling", "split into parts"})) {
    tags.emplace_back("payload_splitting");
  }
  return tags;
}

std::vector<std::string> detect_harm_categories(std::string_view text) {
  const std::vector<std::string> tokens = tokenize(text);
  std::vector<std::string> categories;
  const auto add = [&](const char* category,
                       std::initializer_list<std::string_view> phrases) {
    if (any_phrase(tokens, phrases)) categories.emplace_back(category);
  };
  add("malware_generation", {"malware", "ransomware", "keylogger", "trojan",
                             "botnet", "rootkit", "virus", "backdoor",
                             "exploit code"});
  add("weapons", {"bomb", "explosive", "weapon", "firearm", "bioweapon",
                  "nerve agent"});
  add("violence", {"kill", "assault", "violence", "hurt someone"});
  add("self_harm", {"self harm", "suicide"});
  add("fraud_scam", {"phishing", "scam", "fraud", "counterfeit",
                     "money laundering", "identity theft"});
  add("privacy_violation", {"dox", "doxx", "stalk", "surveillance",
                            "personal information", "exfiltration"});
  add("disinformation", {"disinformation", "misinformation", "propaganda",
                         "fake news"});
  add("harassment_hate", {"harass", "harassment", "hate speech", "slur",
                          "bully"});
  return categories;
}

std::vector<std::string> detect_model_mentions(std::string_view text) {
  const std::vector<std::string> tokens = tokenize(text);
  std::vector<std::string> mentions;
  const auto add = [&](const char* family,
                       std::initializer_list<std::string_view> phrases) {
    if (any_phrase(tokens, phrases)) mentions.emplace_back(family);
  };
  add("openai", {"gpt", "chatgpt", "o1", "o3", "openai"});
  add("anthropic", {"claude", "anthropic"});
  add("google", {"gemini", "bard", "palm"});
  add("meta", {"llama"});
  add("mistral", {"mistral", "mixtral"});
  add("xai", {"grok"});
  return mentions;
}

bool detect_imperative(std::string_view text) {
  static constexpr std::array<std::string_view, 18> kVerbs{
      "ignore", "write", "tell", "pretend", "act", "disregard", "bypass",
      "execute", "answer", "explain", "describe", "generate", "create",
      "produce", "output", "respond", "simulate", "decode"};
  // Imperative = a known verb opening the text or any sentence within it.
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : '.';
    if (c != '.' && c != '!' && c != '?' && c != '\n') continue;
    const std::vector<std::string> tokens = tokenize(text.substr(start, i - start));
    if (!tokens.empty() &&
        std::find(kVerbs.begin(), kVerbs.end(), tokens.front()) != kVerbs.end()) {
      return true;
    }
    start = i + 1;
  }
  return false;
}

HeuristicJudge::HeuristicJudge(Lexicon lexicon) : lexicon_(std::move(lexicon)) {}

JudgeAssessment HeuristicJudge::assess(const std::string& text,
                                       const Json& context) {
  (void)context;
  JudgeAssessment out;
  const double ks = text.empty() ? 0.0 : keyword_score(text, lexicon_);
  const std::vector<std::string> encodings = detect_encodings(text);
  const std::vector<std::string> techniques = detect_technique_tags(text);
  const bool imperative = detect_imperative(text);

  out.relevance = std::min(1.0, 0.8 * ks + (encodings.empty() ? 0.0 : 0.15) +
                                    (imperative ? 0.15 : 0.0));
  out.sophistication_hint =
      std::min(1.0, 0.3 * static_cast<double>(encodings.size()) +
                        0.2 * static_cast<double>(techniques.size()) +
                        0.1 * static_cast<double>(count_code_fences(text)) +
                        0.5 * ks);
  out.harm_categories = detect_harm_categories(text);
  return out;
}

}  // namespace promptrend
