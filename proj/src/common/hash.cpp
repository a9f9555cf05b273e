#include "common/hash.hpp"

#include <openssl/evp.h>

#include <array>

#include "common/errors.hpp"

namespace promptrend {

std::string to_hex(std::string_view bytes) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kHex[(c >> 4) & 0x0F]);
    out.push_back(kHex[c & 0x0F]);
  }
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int digest_len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) {
    throw Error(ErrorKind::internal, "sha256: EVP_MD_CTX_new failed");
  }
  bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
            EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) == 1 &&
            EVP_DigestFinal_ex(ctx, digest.data(), &digest_len) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) {
    throw Error(ErrorKind::internal, "sha256: digest computation failed");
  }
  return to_hex(std::string_view(reinterpret_cast<const char*>(digest.data()), digest_len));
}

}  // namespace promptrend
