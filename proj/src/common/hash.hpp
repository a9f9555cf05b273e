#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace promptrend {

// Hex-encoded SHA-256 digest (64 lowercase hex chars).
std::string sha256_hex(std::string_view bytes);

// FNV-1a 64-bit. Used for feature hashing and mock-response bucketing where a
// platform-stable, non-cryptographic hash is required (std::hash is not
// stable across implementations).
constexpr std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string to_hex(std::string_view bytes);

}  // namespace promptrend
