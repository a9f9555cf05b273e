#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace promptrend {

// Unicode NFC normalization (UTF-8 in/out). Invalid UTF-8 bytes pass through
// unchanged so hashing stays total over arbitrary input.
std::string nfc(std::string_view utf8);

// NFC + trim + collapse every whitespace run to a single ASCII space.
// This is the canonical text form used for identity hashing.
std::string normalize_text(std::string_view utf8);

// Lowercase (ASCII range only; sufficient for lexicon terms).
std::string ascii_lower(std::string_view text);

// Split into word tokens: maximal runs of alphanumeric chars (ASCII) plus
// any non-ASCII bytes; everything else is a separator. Lowercased.
std::vector<std::string> tokenize(std::string_view text);

// Decode the next UTF-8 codepoint starting at `i`; advances `i`. Returns
// U+FFFD for malformed sequences (consuming one byte).
char32_t decode_utf8(std::string_view s, std::size_t& i);

// Append a codepoint as UTF-8.
void append_utf8(std::string& out, char32_t cp);

}  // namespace promptrend
