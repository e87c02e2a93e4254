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

#include "lingsteg/desk_corpus.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string_view>

#include "lingsteg/errors.h"
#include "lingsteg/rng.h"

namespace lingsteg {
namespace {

// Head of the rank list, roughly in frequency order.
constexpr std::string_view kCommonWords[] = {
    "i",     "the",   "to",    "a",     "my",    "and",   "is",    "you",
    "it",    "in",    "for",   "of",    "me",    "so",    "on",    "that",
    "have",  "just",  "but",   "im",    "with",  "be",    "not",   "at",
    "was",   "day",   "now",   "all",   "get",   "this",  "up",    "go",
    "good",  "out",   "like",  "today", "no",    "do",    "love",  "work",
    "your",  "too",   "got",   "going", "what",  "lol",   "are",   "dont",
    "its",   "back",  "time",  "from",  "know",  "one",   "can",   "will",
    "am",    "really", "we",   "u",     "home",  "want",  "new",   "see",
    "night", "still", "well",  "some",  "need",  "think", "about",
    "when",  "miss",  "last",  "morning", "had", "feel",  "oh",    "there",
    "how",   "more",  "sleep", "been",  "much",  "he",    "thanks", "off",
    "bad",   "tonight", "happy", "haha", "here", "they",  "great", "again",
    "why",   "she",   "hope",  "if",    "sad",   "would", "fun",   "tomorrow",
    "right", "make",  "wish",  "cant",  "twitter", "only", "though", "come",
    "week",  "sorry", "did",   "help",  "trash", "cast",  "poor",  "heap",
    "useful", "longer", "take", "pill", "red",   "nice",  "an",    "very",
};

std::vector<std::string> BuildVocabulary(std::size_t size, Rng& rng) {
  static constexpr std::string_view kOnsets[] = {
      "b", "d", "f", "g", "h", "k", "l", "m", "n", "p", "r", "s", "t", "v",
      "w", "z", "br", "ch", "cl", "dr", "fl", "gr", "pl", "sh", "st", "tr"};
  static constexpr std::string_view kNuclei[] = {"a",  "e",  "i",  "o", "u",
                                                 "ai", "ea", "oo", "ou"};
  static constexpr std::string_view kCodas[] = {"", "", "n", "r", "s", "t",
                                                "l", "m", "ck", "ng"};
  std::vector<std::string> vocab;
  std::set<std::string> seen;
  for (auto w : kCommonWords) {
    if (vocab.size() >= size) break;
    if (seen.emplace(w).second) vocab.emplace_back(w);
  }
  while (vocab.size() < size) {
    std::string word;
    const std::size_t syllables = 2 + rng.Uniform(2);
    for (std::size_t s = 0; s < syllables; ++s) {
      word += kOnsets[rng.Uniform(std::size(kOnsets))];
      word += kNuclei[rng.Uniform(std::size(kNuclei))];
    }
    word += kCodas[rng.Uniform(std::size(kCodas))];
    if (seen.insert(word).second) vocab.push_back(std::move(word));
  }
  return vocab;
}

class ZipfSampler {
 public:
  ZipfSampler(std::size_t n, double exponent) : cdf_(n) {
    double acc = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      acc += 1.0 / std::pow(static_cast<double>(r + 1), exponent);
      cdf_[r] = acc;
    }
    for (auto& c : cdf_) c /= acc;
  }

  std::size_t operator()(Rng& rng) const {
    const double u = rng.UniformReal();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return std::min<std::size_t>(it - cdf_.begin(), cdf_.size() - 1);
  }

 private:
  std::vector<double> cdf_;
};

std::string Decorate(std::string word, Rng& rng, bool first) {
  if (first && rng.UniformReal() < 0.4 && word[0] >= 'a' && word[0] <= 'z') {
    word[0] = static_cast<char>(word[0] - 'a' + 'A');
  }
  const double u = rng.UniformReal();
  if (u < 0.04) return word + ",";
  if (u < 0.06) return word + "!";
  if (u < 0.07) return word + "...";
  if (u < 0.075) return "\"" + word + "\"";
  return word;
}

}  // namespace

std::vector<std::string> GenerateDeskCorpus(const DeskCorpusOptions& options) {
  if (options.vocabulary < 2 || options.min_length < 1 ||
      options.max_length < options.min_length || options.successors < 1) {
    throw ParameterError("invalid desk corpus options");
  }
  Rng rng(options.seed);
  const auto vocab = BuildVocabulary(options.vocabulary, rng);
  const ZipfSampler zipf(vocab.size(), options.zipf_exponent);

  std::vector<std::vector<std::size_t>> next(vocab.size());
  for (auto& list : next) {
    for (std::size_t k = 0; k < options.successors; ++k) {
      list.push_back(zipf(rng));
    }
  }

  std::vector<std::string> lines;
  lines.reserve(options.messages);
  const std::size_t span = options.max_length - options.min_length + 1;
  for (std::size_t m = 0; m < options.messages; ++m) {
    const std::size_t length = options.min_length + rng.Uniform(span);
    std::string line;
    if (rng.UniformReal() < 0.15) {
      line += "@user" + std::to_string(rng.Uniform(500)) + " ";
    }
    std::size_t w = zipf(rng);
    for (std::size_t i = 0; i < length; ++i) {
      if (i) line.push_back(' ');
      line += Decorate(vocab[w], rng, i == 0);
      w = rng.UniformReal() < options.follow_probability
              ? next[w][rng.Uniform(next[w].size())]
              : zipf(rng);
    }
    if (rng.UniformReal() < 0.10) {
      line += " #tag" + std::to_string(rng.Uniform(50));
    }
    if (rng.UniformReal() < 0.05) {
      line += " http://t.co/" + std::to_string(rng.Uniform(100000));
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace lingsteg
