#include "coordinate/fingerprint.hpp"

#include <cmath>
#include <map>

#include "common/errors.hpp"
#include "common/hash.hpp"
#include "common/text.hpp"

namespace promptrend {
namespace {

// Signed feature hashing: bucket from one hash stream, sign from another.
void bucket_and_sign(std::string_view gram, std::size_t dim, std::size_t* bucket,
                     double* sign) {
  const std::uint64_t h = fnv1a64(gram);
  *bucket = static_cast<std::size_t>(h % dim);
  const std::uint64_t h2 = fnv1a64(std::string("#") + std::string(gram));
  *sign = (h2 >> 63) != 0 ? -1.0 : 1.0;
}

}  // namespace

SemanticFingerprint NgramEmbedder::fingerprint(std::string_view text) const {
  if (text.empty()) {
    throw validation_error("fingerprint: text must be non-empty");
  }
  // Codepoint boundaries so multi-byte characters are never split mid-gram.
  std::vector<std::size_t> offsets;
  std::size_t i = 0;
  while (i < text.size()) {
    offsets.push_back(i);
    decode_utf8(text, i);
  }
  offsets.push_back(text.size());
  const std::size_t n = offsets.size() - 1;

  std::map<std::string, std::pair<std::size_t, double>> grams;  // gram -> (count, idf)
  for (std::size_t len = 3; len <= 5; ++len) {
    if (n < len) continue;
    const double idf = static_cast<double>(len - 2);  // 3→1, 4→2, 5→3
    for (std::size_t start = 0; start + len <= n; ++start) {
      std::string gram(text.substr(offsets[start], offsets[start + len] - offsets[start]));
      auto [it, inserted] = grams.emplace(std::move(gram), std::make_pair(0u, idf));
      it->second.first += 1;
    }
  }
  if (grams.empty()) {
    // Shorter than the smallest gram: hash the whole text as one feature.
    grams.emplace(std::string(text), std::make_pair(1u, 1.0));
  }

  SemanticFingerprint fp;
  fp.embedder_id = id();
  fp.vector.assign(kDim, 0.0);
  for (const auto& [gram, stats] : grams) {
    const auto& [count, idf] = stats;
    const double tf = 1.0 + std::log(static_cast<double>(count));
    std::size_t bucket = 0;
    double sign = 1.0;
    bucket_and_sign(gram, kDim, &bucket, &sign);
    fp.vector[bucket] += sign * tf * idf;
  }

  double norm = 0.0;
  for (double v : fp.vector) norm += v * v;
  norm = std::sqrt(norm);
  if (norm < 1e-12) {
    fp.vector[0] = 1.0;  // total cancellation: degenerate but valid unit vector
  } else {
    for (double& v : fp.vector) v /= norm;
  }
  return fp;
}

double cosine(const SemanticFingerprint& a, const SemanticFingerprint& b) {
  if (a.embedder_id != b.embedder_id) {
    throw config_error("cosine: fingerprints from different embedders (" +
                       a.embedder_id + " vs " + b.embedder_id + ")");
  }
  if (a.dim() != b.dim() || a.dim() == 0) {
    throw config_error("cosine: dimension mismatch");
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    dot += a.vector[i] * b.vector[i];
    na += a.vector[i] * a.vector[i];
    nb += b.vector[i] * b.vector[i];
  }
  if (na <= 0 || nb <= 0) throw config_error("cosine: zero-norm fingerprint");
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace promptrend
