#include "transform/codecs.hpp"

#include <array>
#include <cctype>

#include "common/errors.hpp"
#include "common/text.hpp"

namespace promptrend::codecs {
namespace {

constexpr char kBase64Alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

constexpr std::array<int, 256> make_base64_reverse() {
  std::array<int, 256> table{};
  for (auto& v : table) v = -1;
  for (int i = 0; i < 64; ++i) {
    table[static_cast<unsigned char>(kBase64Alphabet[i])] = i;
  }
  return table;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

constexpr char kHexDigits[] = "0123456789abcdef";

bool url_unreserved(unsigned char c) {
  return std::isalnum(c) != 0 || c == '-' || c == '_' || c == '.' || c == '~';
}

}  // namespace

std::string base64_encode(std::string_view bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  while (i + 3 <= bytes.size()) {
    const unsigned a = static_cast<unsigned char>(bytes[i]);
    const unsigned b = static_cast<unsigned char>(bytes[i + 1]);
    const unsigned c = static_cast<unsigned char>(bytes[i + 2]);
    out += kBase64Alphabet[a >> 2];
    out += kBase64Alphabet[((a & 0x3) << 4) | (b >> 4)];
    out += kBase64Alphabet[((b & 0xF) << 2) | (c >> 6)];
    out += kBase64Alphabet[c & 0x3F];
    i += 3;
  }
  const std::size_t rest = bytes.size() - i;
  if (rest == 1) {
    const unsigned a = static_cast<unsigned char>(bytes[i]);
    out += kBase64Alphabet[a >> 2];
    out += kBase64Alphabet[(a & 0x3) << 4];
    out += "==";
  } else if (rest == 2) {
    const unsigned a = static_cast<unsigned char>(bytes[i]);
    const unsigned b = static_cast<unsigned char>(bytes[i + 1]);
    out += kBase64Alphabet[a >> 2];
    out += kBase64Alphabet[((a & 0x3) << 4) | (b >> 4)];
    out += kBase64Alphabet[(b & 0xF) << 2];
    out += '=';
  }
  return out;
}

std::string base64_decode(std::string_view text) {
  static constexpr auto kReverse = make_base64_reverse();
  std::string out;
  out.reserve(text.size() / 4 * 3);
  unsigned buffer = 0;
  int bits = 0;
  std::size_t pad = 0;
  for (char c : text) {
    if (c == '\n' || c == '\r') continue;
    if (c == '=') {
      ++pad;
      continue;
    }
    if (pad > 0) throw validation_error("base64: data after padding");
    const int v = kReverse[static_cast<unsigned char>(c)];
    if (v < 0) throw validation_error("base64: invalid character");
    buffer = (buffer << 6) | static_cast<unsigned>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out += static_cast<char>((buffer >> bits) & 0xFF);
    }
  }
  if (pad > 2) throw validation_error("base64: bad padding");
  return out;
}

std::string hex_encode(std::string_view bytes, bool spaced) {
  std::string out;
  out.reserve(bytes.size() * (spaced ? 3 : 2));
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (spaced && i > 0) out += ' ';
    const unsigned char c = static_cast<unsigned char>(bytes[i]);
    out += kHexDigits[c >> 4];
    out += kHexDigits[c & 0xF];
  }
  return out;
}

std::string hex_decode(std::string_view text) {
  std::string out;
  int high = -1;
  for (char c : text) {
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
      if (high >= 0) throw validation_error("hex: odd digit before separator");
      continue;
    }
    const int v = hex_digit(c);
    if (v < 0) throw validation_error("hex: invalid character");
    if (high < 0) {
      high = v;
    } else {
      out += static_cast<char>((high << 4) | v);
      high = -1;
    }
  }
  if (high >= 0) throw validation_error("hex: odd number of digits");
  return out;
}

std::string rot13(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'a' && c <= 'z') {
      c = static_cast<char>('a' + (c - 'a' + 13) % 26);
    } else if (c >= 'A' && c <= 'Z') {
      c = static_cast<char>('A' + (c - 'A' + 13) % 26);
    }
  }
  return out;
}

std::string rot47(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (u >= 33 && u <= 126) c = static_cast<char>(33 + (u - 33 + 47) % 94);
  }
  return out;
}

std::string url_encode(std::string_view bytes, bool full) {
  std::string out;
  out.reserve(bytes.size() * 3);
  for (char c : bytes) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (!full && url_unreserved(u)) {
      out += c;
    } else {
      out += '%';
      out += kHexDigits[u >> 4];
      out += kHexDigits[u & 0xF];
    }
  }
  return out;
}

std::string url_decode(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '%') {
      out += text[i];
      continue;
    }
    if (i + 2 >= text.size()) throw validation_error("url: truncated escape");
    const int hi = hex_digit(text[i + 1]);
    const int lo = hex_digit(text[i + 2]);
    if (hi < 0 || lo < 0) throw validation_error("url: invalid escape");
    out += static_cast<char>((hi << 4) | lo);
    i += 2;
  }
  return out;
}

std::string binary_encode(std::string_view bytes) {
  std::string out;
  out.reserve(bytes.size() * 9);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (i > 0) out += ' ';
    const unsigned char c = static_cast<unsigned char>(bytes[i]);
    for (int bit = 7; bit >= 0; --bit) out += ((c >> bit) & 1) ? '1' : '0';
  }
  return out;
}

std::string binary_decode(std::string_view text) {
  std::string out;
  unsigned value = 0;
  int bits = 0;
  for (char c : text) {
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
    if (c != '0' && c != '1') throw validation_error("binary: invalid character");
    value = (value << 1) | static_cast<unsigned>(c - '0');
    if (++bits == 8) {
      out += static_cast<char>(value);
      value = 0;
      bits = 0;
    }
  }
  if (bits != 0) throw validation_error("binary: bit count not a multiple of 8");
  return out;
}

std::string fullwidth(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char32_t cp = decode_utf8(text, i);
    if (cp == U' ') {
      append_utf8(out, U'　');
    } else if (cp >= 0x21 && cp <= 0x7E) {
      append_utf8(out, 0xFF01 + (cp - 0x21));
    } else {
      append_utf8(out, cp);
    }
  }
  return out;
}

std::string fullwidth_to_ascii(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char32_t cp = decode_utf8(text, i);
    if (cp == 0x3000) {
      out += ' ';
    } else if (cp >= 0xFF01 && cp <= 0xFF5E) {
      out += static_cast<char>(0x21 + (cp - 0xFF01));
    } else {
      append_utf8(out, cp);
    }
  }
  return out;
}

std::string circled(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char32_t cp = decode_utf8(text, i);
    if (cp >= U'a' && cp <= U'z') {
      append_utf8(out, 0x24D0 + (cp - U'a'));
    } else if (cp >= U'A' && cp <= U'Z') {
      append_utf8(out, 0x24B6 + (cp - U'A'));
    } else if (cp >= U'1' && cp <= U'9') {
      append_utf8(out, 0x2460 + (cp - U'1'));
    } else if (cp == U'0') {
      append_utf8(out, 0x24EA);
    } else {
      append_utf8(out, cp);
    }
  }
  return out;
}

std::string circled_to_ascii(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char32_t cp = decode_utf8(text, i);
    if (cp >= 0x24D0 && cp <= 0x24E9) {
      out += static_cast<char>('a' + (cp - 0x24D0));
    } else if (cp >= 0x24B6 && cp <= 0x24CF) {
      out += static_cast<char>('A' + (cp - 0x24B6));
    } else if (cp >= 0x2460 && cp <= 0x2468) {
      out += static_cast<char>('1' + (cp - 0x2460));
    } else if (cp == 0x24EA) {
      out += '0';
    } else {
      append_utf8(out, cp);
    }
  }
  return out;
}

std::string leetspeak(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    switch (c) {
      case 'a': case 'A': c = '4'; break;
      case 'e': case 'E': c = '3'; break;
      case 'i': case 'I': c = '1'; break;
      case 'o': case 'O': c = '0'; break;
      case 's': case 'S': c = '5'; break;
      case 't': case 'T': c = '7'; break;
      default: break;
    }
  }
  return out;
}

std::string leetspeak_to_ascii(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    switch (c) {
      case '4': c = 'a'; break;
      case '3': c = 'e'; break;
      case '1': c = 'i'; break;
      case '0': c = 'o'; break;
      case '5': c = 's'; break;
      case '7': c = 't'; break;
      default: break;
    }
  }
  return out;
}

std::string zwsp_inject(std::string_view text, std::size_t every) {
  if (every == 0) throw validation_error("zwsp: interval must be positive");
  std::string out;
  std::size_t i = 0;
  std::size_t count = 0;
  while (i < text.size()) {
    const char32_t cp = decode_utf8(text, i);
    append_utf8(out, cp);
    if (++count % every == 0 && i < text.size()) append_utf8(out, U'​');
  }
  return out;
}

std::string zwsp_strip(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char32_t cp = decode_utf8(text, i);
    if (cp != 0x200B) append_utf8(out, cp);
  }
  return out;
}

}  // namespace promptrend::codecs
