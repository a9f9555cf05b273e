#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// Byte- and codepoint-level text codecs backing the algorithmic
// transformation strategies. Encoders are total over arbitrary UTF-8 input;
// decoders throw a validation error on malformed input.
namespace promptrend::codecs {

std::string base64_encode(std::string_view bytes);
std::string base64_decode(std::string_view text);

// Lowercase hex over UTF-8 bytes; `spaced` separates bytes with one space.
std::string hex_encode(std::string_view bytes, bool spaced);
std::string hex_decode(std::string_view text);  // whitespace between bytes ok

// ASCII-letter rotation; both are involutions and leave other bytes alone.
std::string rot13(std::string_view text);
std::string rot47(std::string_view text);

// RFC 3986 percent-encoding. `full` escapes every byte, otherwise only
// bytes outside the unreserved set.
std::string url_encode(std::string_view bytes, bool full);
std::string url_decode(std::string_view text);

// Each byte as eight '0'/'1' characters, bytes separated by one space.
std::string binary_encode(std::string_view bytes);
std::string binary_decode(std::string_view text);

// Codepoint substitutions. These are intentionally one-way: an input that
// already contains mapped target characters cannot be distinguished from an
// encoded one, so only best-effort normalizers are offered for reading back.
std::string fullwidth(std::string_view text);
std::string fullwidth_to_ascii(std::string_view text);
std::string circled(std::string_view text);
std::string circled_to_ascii(std::string_view text);
std::string leetspeak(std::string_view text);
std::string leetspeak_to_ascii(std::string_view text);

// Insert U+200B after every k-th codepoint; strip removes all U+200B.
std::string zwsp_inject(std::string_view text, std::size_t every);
std::string zwsp_strip(std::string_view text);

}  // namespace promptrend::codecs
