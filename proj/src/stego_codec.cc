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

#include "lingsteg/stego_codec.h"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "lingsteg/errors.h"
#include "lingsteg/rng.h"

namespace lingsteg {

std::string StegoResult::ToJson() const {
  nlohmann::json doc;
  doc["stego"] = JoinTokens(stego.tokens);
  doc["cover"] = JoinTokens(cover.tokens);
  doc["inserted_positions"] = inserted_positions;
  doc["attempts"] = attempts;
  doc["density"] = density;
  return doc.dump();
}

CoverPool::CoverPool(const Corpus& corpus) : corpus_(&corpus) {
  const auto& messages = corpus.messages();
  for (std::size_t i = 0; i < messages.size(); ++i) {
    if (messages[i].tokens.size() >= kMinCoverTokens) eligible_.push_back(i);
  }
  if (eligible_.empty()) {
    throw ParameterError("no cover has at least " +
                         std::to_string(kMinCoverTokens) + " tokens");
  }
}

bool ContainsCodeword(std::span<const Token> tokens, const Codebook& cb) {
  return std::any_of(tokens.begin(), tokens.end(),
                     [&cb](const Token& t) { return cb.IsCodeword(t); });
}

double InsertionScore(const NGramModel& model, std::span<const Token> tokens,
                      std::size_t pos, const std::string& word) {
  if (pos < 1 || pos + 1 > tokens.size()) {
    throw ParameterError("insertion index " + std::to_string(pos) +
                         " is not an inter-word position");
  }
  const std::size_t reach = static_cast<std::size_t>(model.max_n()) - 1;
  const std::size_t lo = pos > reach ? pos - reach : 0;
  const std::size_t hi = std::min(tokens.size(), pos + reach);
  // Only the neighbourhood that can share an n-gram with the new word.
  Tokens window(tokens.begin() + lo, tokens.begin() + pos);
  window.push_back(word);
  window.insert(window.end(), tokens.begin() + pos, tokens.begin() + hi);
  const std::size_t at = pos - lo;

  double score = 0.0;
  for (int n = 2; n <= model.max_n(); ++n) {
    const std::size_t len = static_cast<std::size_t>(n);
    if (window.size() < len) break;
    const std::size_t first = at + 1 > len ? at + 1 - len : 0;
    const std::size_t last = std::min(at, window.size() - len);
    for (std::size_t s = first; s <= last; ++s) {
      score += std::log1p(static_cast<double>(
          model.Count(std::span<const Token>(window).subspan(s, len))));
    }
  }
  return score;
}

std::size_t BestPosition(const NGramModel& model, std::span<const Token> tokens,
                         const std::string& word, std::size_t min_pos) {
  const std::size_t first = std::max<std::size_t>(min_pos, 1);
  if (tokens.size() < 2 || first > tokens.size() - 1) {
    throw NoPositionError("no inter-word position at or after index " +
                          std::to_string(min_pos));
  }
  std::size_t best = first;
  double best_score = InsertionScore(model, tokens, first, word);
  for (std::size_t pos = first + 1; pos <= tokens.size() - 1; ++pos) {
    const double score = InsertionScore(model, tokens, pos, word);
    if (score > best_score) {
      best = pos;
      best_score = score;
    }
  }
  return best;
}

StegoResult EmbedInCover(const Secret& secret, const Codebook& cb,
                         const NGramModel& model, const Message& cover) {
  if (cover.tokens.size() < kMinCoverTokens) {
    throw ParameterError("cover needs at least " +
                         std::to_string(kMinCoverTokens) + " tokens");
  }
  StegoResult result;
  result.cover = cover;
  result.stego = cover;
  std::size_t min_pos = 1;
  for (Symbol s : secret.symbols) {
    const std::string& word = cb.MapSymbol(s);
    const std::size_t pos =
        BestPosition(model, result.stego.tokens, word, min_pos);
    result.stego.tokens.insert(result.stego.tokens.begin() + pos, word);
    result.inserted_positions.push_back(pos);
    min_pos = pos + 1;
  }
  result.attempts = 1;
  result.density = static_cast<double>(result.inserted_positions.size()) /
                   static_cast<double>(result.stego.tokens.size());
  return result;
}

StegoResult Steganize(const Secret& secret, const Codebook& cb,
                      const NGramModel& model, const CoverPool& covers,
                      std::uint64_t seed, const StegoOptions& options) {
  if (options.max_attempts < 1) {
    throw ParameterError("max_attempts must be >= 1");
  }
  for (Symbol s : secret.symbols) cb.MapSymbol(s);

  Rng rng(seed);
  for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
    const Message& cover = covers.at(rng.Uniform(covers.size()));
    if (options.validate && ContainsCodeword(cover.tokens, cb)) continue;
    StegoResult result = EmbedInCover(secret, cb, model, cover);
    if (options.validate && Decode(result.stego.tokens, cb) != secret) {
      continue;
    }
    result.attempts = attempt;
    return result;
  }
  throw SteganizationError("no usable cover after " +
                               std::to_string(options.max_attempts) +
                               " attempts",
                           options.max_attempts);
}

StegoResult Steganize(const Secret& secret, const Codebook& cb,
                      const NGramModel& model, const Corpus& covers,
                      std::uint64_t seed, const StegoOptions& options) {
  return Steganize(secret, cb, model, CoverPool(covers), seed, options);
}

Secret Decode(std::span<const Token> tokens, const Codebook& cb) {
  Secret secret;
  for (const auto& t : tokens) {
    if (auto s = cb.UnmapWord(t)) secret.symbols.push_back(*s);
  }
  return secret;
}

}  // namespace lingsteg
