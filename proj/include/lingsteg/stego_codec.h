// Copyright 2026 The lingsteg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The covert code: codewords for the secret symbols are inserted, in order,
// at the inter-word positions whose newly formed n-grams are most frequent in
// the corpus. The receiver reads codewords left to right.

#ifndef LINGSTEG_STEGO_CODEC_H_
#define LINGSTEG_STEGO_CODEC_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lingsteg/codebook.h"
#include "lingsteg/corpus.h"
#include "lingsteg/ngram_model.h"

namespace lingsteg {

inline constexpr std::size_t kMinCoverTokens = 3;
inline constexpr int kDefaultMaxAttempts = 1000;

struct StegoOptions {
  // When set, covers that already hold a codeword are rejected and every
  // stego is decoded before it is returned. When cleared, the first cover
  // drawn is used as is, which exposes accidental-codeword decode errors.
  bool validate = true;
  int max_attempts = kDefaultMaxAttempts;
};

struct StegoResult {
  Message stego;
  Message cover;
  // Indices into stego.tokens, strictly increasing.
  std::vector<std::size_t> inserted_positions;
  int attempts = 0;
  double density = 0.0;

  // {stego, cover, inserted_positions, attempts, density}; texts are
  // space-joined token strings.
  std::string ToJson() const;
  bool operator==(const StegoResult&) const = default;
};

// Covers eligible for insertion (at least kMinCoverTokens tokens).
class CoverPool {
 public:
  // Throws ParameterError when no message is long enough.
  explicit CoverPool(const Corpus& corpus);

  std::size_t size() const { return eligible_.size(); }
  const Message& at(std::size_t i) const {
    return corpus_->messages()[eligible_[i]];
  }

 private:
  const Corpus* corpus_;
  std::vector<std::size_t> eligible_;
};

bool ContainsCodeword(std::span<const Token> tokens, const Codebook& cb);

// Sum of log(1 + count) over every n-gram, n = 2..max_n, that contains the
// inserted word once `word` is placed before tokens[pos]. pos must satisfy
// 1 <= pos <= len(tokens) - 1; throws ParameterError otherwise.
double InsertionScore(const NGramModel& model, std::span<const Token> tokens,
                      std::size_t pos, const std::string& word);

// Highest-scoring insertion index in [min_pos, len(tokens) - 1], smallest
// index on ties. Throws NoPositionError when the range is empty.
std::size_t BestPosition(const NGramModel& model, std::span<const Token> tokens,
                         const std::string& word, std::size_t min_pos);

// Inserts the codewords of `secret` into one given cover, each at the best
// position after the previous one. attempts is reported as 1.
StegoResult EmbedInCover(const Secret& secret, const Codebook& cb,
                         const NGramModel& model, const Message& cover);

// Draws covers uniformly with the seeded RNG until one steganizes; see
// StegoOptions for the rejection rules. Throws ParameterError for symbols
// outside the alphabet and SteganizationError once max_attempts covers were
// rejected.
StegoResult Steganize(const Secret& secret, const Codebook& cb,
                      const NGramModel& model, const CoverPool& covers,
                      std::uint64_t seed, const StegoOptions& options = {});
StegoResult Steganize(const Secret& secret, const Codebook& cb,
                      const NGramModel& model, const Corpus& covers,
                      std::uint64_t seed, const StegoOptions& options = {});

// Receiver side: the symbols of every codeword in `tokens`, left to right.
Secret Decode(std::span<const Token> tokens, const Codebook& cb);

}  // namespace lingsteg

#endif  // LINGSTEG_STEGO_CODEC_H_
