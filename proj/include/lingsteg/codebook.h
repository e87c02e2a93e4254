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

#ifndef LINGSTEG_CODEBOOK_H_
#define LINGSTEG_CODEBOOK_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lingsteg/corpus.h"
#include "lingsteg/ngram_model.h"

namespace lingsteg {

inline constexpr int kCodebookFormatVersion = 1;
inline constexpr std::string_view kDigitAlphabet = "0123456789";

// Inclusive range of unigram occurrence counts. An absent upper bound is the
// open-ended "lo+" band.
struct FrequencyBand {
  std::uint64_t lo = 1;
  std::optional<std::uint64_t> hi;

  bool Contains(std::uint64_t count) const {
    return count >= lo && (!hi || count <= *hi);
  }

  // Accepts "lo-hi" and "lo+". Throws ParameterError otherwise.
  static FrequencyBand Parse(std::string_view text);
  std::string ToString() const;

  bool operator==(const FrequencyBand&) const = default;
};

// A secret symbol is one printable non-space ASCII character.
using Symbol = char;

// Ordered symbols of a secret message.
struct Secret {
  std::string symbols;

  std::size_t size() const { return symbols.size(); }
  bool empty() const { return symbols.empty(); }
  bool operator==(const Secret&) const = default;
};

// The shared secret mapping between alphabet symbols and codewords. This is
// key material: it travels out of band and never on the cover channel.
class Codebook {
 public:
  // Validates the mapping: every alphabet symbol mapped exactly once, no
  // duplicate symbol or codeword, every codeword a single scrubbed token.
  // Throws ValidationError.
  Codebook(std::string alphabet, std::map<Symbol, std::string> forward,
           FrequencyBand band, std::uint64_t seed);

  const std::string& alphabet() const { return alphabet_; }
  const std::map<Symbol, std::string>& forward() const { return forward_; }
  const FrequencyBand& band() const { return band_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t size() const { return forward_.size(); }

  // Throws ParameterError for a symbol outside the alphabet.
  const std::string& MapSymbol(Symbol symbol) const;
  std::optional<Symbol> UnmapWord(std::string_view word) const;
  bool IsCodeword(std::string_view word) const {
    return inverse_.find(word) != inverse_.end();
  }
  bool InAlphabet(Symbol symbol) const {
    return forward_.find(symbol) != forward_.end();
  }

  // Throws ParameterError when a character is not in the alphabet.
  Secret ParseSecret(std::string_view text) const;

  std::string ToJson() const;
  // Throws FormatError on schema problems, ValidationError on a broken
  // bijection.
  static Codebook FromJson(std::string_view text);
  void Save(const std::filesystem::path& path) const;
  static Codebook Load(const std::filesystem::path& path);

  bool operator==(const Codebook& other) const {
    return alphabet_ == other.alphabet_ && forward_ == other.forward_ &&
           band_ == other.band_ && seed_ == other.seed_;
  }

 private:
  std::string alphabet_;
  std::map<Symbol, std::string> forward_;
  std::unordered_map<std::string, Symbol, StringHash, std::equal_to<>>
      inverse_;
  FrequencyBand band_;
  std::uint64_t seed_;
};

// Words of the model vocabulary whose unigram count lies in `band`, sorted.
std::vector<std::string> WordsInBand(const NGramModel& model,
                                     const FrequencyBand& band);

// Samples |alphabet| distinct words uniformly without replacement from the
// band and assigns them to the symbols in alphabet order. Throws
// InsufficientBandError when the band holds too few words.
Codebook SelectCodebook(const NGramModel& model, const FrequencyBand& band,
                        std::string_view alphabet, std::uint64_t seed);

}  // namespace lingsteg

#endif  // LINGSTEG_CODEBOOK_H_
