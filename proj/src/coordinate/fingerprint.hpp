#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace promptrend {

struct SemanticFingerprint {
  std::vector<double> vector;  // L2-normalized
  std::string embedder_id;

  std::size_t dim() const { return vector.size(); }
};

// Text-to-vector interface; semantic-model embedders plug in here. The
// bundled embedder is dependency-free n-gram hashing.
class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::string id() const = 0;
  virtual std::size_t dim() const = 0;
  virtual SemanticFingerprint fingerprint(std::string_view text) const = 0;
};

// TF-IDF-style fingerprints: character 3–5-grams (over codepoints), hashed
// into 512 dimensions with sign hashing, sublinear term frequency (1+ln tf),
// a length-class idf proxy (longer grams weigh more), L2-normalized.
class NgramEmbedder : public Embedder {
 public:
  static constexpr std::size_t kDim = 512;

  std::string id() const override { return "tfidf-char-ngram-512/v1"; }
  std::size_t dim() const override { return kDim; }
  SemanticFingerprint fingerprint(std::string_view text) const override;
};

// Cosine similarity; throws a configuration error on embedder or dimension
// mismatch. Symmetric, in [-1, 1].
double cosine(const SemanticFingerprint& a, const SemanticFingerprint& b);

}  // namespace promptrend
