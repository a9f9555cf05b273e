#include "ingest/lexicon.hpp"

#include <cmath>
#include <unordered_set>

#include "common/errors.hpp"
#include "common/text.hpp"

namespace promptrend {
namespace {

constexpr std::string_view kBundledLexiconText =
#include "lexicon_data.inc"
    ;

}  // namespace

const Lexicon& Lexicon::bundled() {
  static const Lexicon lexicon =
      from_json(parse_json(kBundledLexiconText, "bundled lexicon"));
  return lexicon;
}

Lexicon Lexicon::from_json(const Json& doc) {
  Lexicon lexicon;
  lexicon.version = require_int(doc, "version", "lexicon");
  const Json& terms = require_field(doc, "terms", "lexicon");
  if (!terms.is_array() || terms.empty()) {
    throw config_error("lexicon: terms must be a non-empty array");
  }
  std::unordered_set<std::string> seen;
  for (const Json& item : terms) {
    LexiconTerm term;
    term.term = require_string(item, "term", "lexicon.terms");
    term.weight = require_number(item, "weight", "lexicon.terms");
    if (term.term.empty()) throw config_error("lexicon: empty term");
    if (term.weight <= 0) {
      throw config_error("lexicon: weight must be positive for " + term.term);
    }
    if (!seen.insert(ascii_lower(term.term)).second) {
      throw config_error("lexicon: duplicate term " + term.term);
    }
    lexicon.terms.push_back(std::move(term));
  }
  return lexicon;
}

Json Lexicon::to_json() const {
  Json list = Json::array();
  for (const LexiconTerm& t : terms) {
    list.push_back(Json{{"term", t.term}, {"weight", t.weight}});
  }
  return Json{{"version", version}, {"terms", list}};
}

bool Lexicon::contains(std::string_view term) const {
  const std::string needle = ascii_lower(term);
  for (const LexiconTerm& t : terms) {
    if (ascii_lower(t.term) == needle) return true;
  }
  return false;
}

LexiconUpdateResult lexicon_update(const Lexicon& lexicon,
                                   const std::vector<LexiconTerm>& new_terms) {
  if (new_terms.empty()) {
    throw validation_error("lexicon_update: new_terms must be non-empty");
  }
  LexiconUpdateResult result;
  result.lexicon = lexicon;
  std::unordered_set<std::string> have;
  for (const LexiconTerm& t : lexicon.terms) have.insert(ascii_lower(t.term));
  for (const LexiconTerm& t : new_terms) {
    if (t.term.empty() || t.weight <= 0) {
      throw validation_error("lexicon_update: invalid term " + t.term);
    }
    const std::string key = ascii_lower(t.term);
    if (!have.insert(key).second) {
      result.ignored_duplicates.push_back(t.term);
      continue;
    }
    result.lexicon.terms.push_back(t);
    result.added.push_back(t.term);
  }
  if (!result.added.empty()) result.lexicon.version = lexicon.version + 1;
  return result;
}

double keyword_score(std::string_view text, const Lexicon& lexicon) {
  if (text.empty()) throw validation_error("keyword_score: text must be non-empty");
  if (lexicon.terms.empty()) throw config_error("keyword_score: empty lexicon");

  const std::vector<std::string> tokens = tokenize(text);
  if (tokens.empty()) return 0.0;

  double exponent = 0.0;
  for (const LexiconTerm& term : lexicon.terms) {
    const std::vector<std::string> phrase = tokenize(term.term);
    if (phrase.empty() || phrase.size() > tokens.size()) continue;
    std::size_t count = 0;
    for (std::size_t i = 0; i + phrase.size() <= tokens.size(); ++i) {
      bool match = true;
      for (std::size_t j = 0; j < phrase.size(); ++j) {
        if (tokens[i + j] != phrase[j]) {
          match = false;
          break;
        }
      }
      if (match) ++count;
    }
    if (count > 0) {
      const double tf = 100.0 * static_cast<double>(count) /
                        static_cast<double>(tokens.size());
      exponent += term.weight * tf;
    }
  }
  return 1.0 - std::exp(-exponent);
}

}  // namespace promptrend
