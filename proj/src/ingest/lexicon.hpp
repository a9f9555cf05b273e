#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "common/jsonio.hpp"

namespace promptrend {

struct LexiconTerm {
  std::string term;   // single word or multi-word phrase
  double weight = 1;  // > 0
};

// Versioned keyword lexicon driving stage-1 relevance scoring. Updates are
// value-producing: lexicon_update returns a new lexicon with a bumped version
// so connectors can swap atomically.
struct Lexicon {
  std::vector<LexiconTerm> terms;
  std::int64_t version = 1;

  static const Lexicon& bundled();  // exactly 127 terms
  static Lexicon from_json(const Json& doc);
  Json to_json() const;

  bool contains(std::string_view term) const;  // case-insensitive
};

struct LexiconUpdateResult {
  Lexicon lexicon;
  std::vector<std::string> added;
  std::vector<std::string> ignored_duplicates;
};

// Appends the case-insensitively novel terms and bumps the version; if every
// term is a duplicate the input lexicon is returned unchanged.
LexiconUpdateResult lexicon_update(const Lexicon& lexicon,
                                   const std::vector<LexiconTerm>& new_terms);

// 1 - exp(-sum(weight_i * tf_i)) where tf_i counts case-insensitive
// whole-token matches of term i per 100 tokens of `text`. Multi-word terms
// match consecutive token runs; all start positions count.
double keyword_score(std::string_view text, const Lexicon& lexicon);

}  // namespace promptrend
