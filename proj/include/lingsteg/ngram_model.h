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

#ifndef LINGSTEG_NGRAM_MODEL_H_
#define LINGSTEG_NGRAM_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lingsteg/corpus.h"

namespace lingsteg {

inline constexpr int kDefaultMaxN = 3;
inline constexpr int kModelFormatVersion = 1;

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};

// Occurrences of each n-gram, keyed by its tokens joined with single spaces.
using GramCounts =
    std::unordered_map<std::string, std::uint64_t, StringHash, std::equal_to<>>;

// Smoothed or raw probabilities keyed by gram (or word), ordered for stable
// iteration.
using ProbabilityMap = std::map<std::string, double>;

// Frequency tables of every n-gram of order 1..max_n counted inside message
// boundaries. Immutable once built; concurrent queries are safe.
class NGramModel {
 public:
  // Throws ParameterError when max_n < 1.
  static NGramModel Build(const Corpus& corpus, int max_n = kDefaultMaxN);
  static NGramModel Build(std::span<const Tokens> messages, int max_n);

  int max_n() const { return max_n_; }

  // Exact count of `gram`; 0 when unseen. len(gram) must be in 1..max_n.
  std::uint64_t Count(std::span<const Token> gram) const;
  std::uint64_t Count(std::initializer_list<std::string_view> gram) const;
  // Count of an already space-joined gram of the given order.
  std::uint64_t CountJoined(int order, std::string_view joined) const;

  const GramCounts& counts(int order) const;
  std::uint64_t total(int order) const;
  std::size_t vocab_size() const { return counts_.front().size(); }

  // Unigram probabilities over `vocabulary` with additive smoothing:
  // p(w) = (count(w) + lambda) / (total(1) + lambda * |vocabulary|).
  // An empty vocabulary means the model's own.
  ProbabilityMap UnigramDistribution(
      double lambda, const std::vector<std::string>& vocabulary = {}) const;
  // Same rule over grams of an arbitrary order.
  ProbabilityMap GramDistribution(
      int order, double lambda,
      const std::vector<std::string>& support = {}) const;

  // Length-normalized corpus typicality of a text: the mean of
  // log(1 + count(g)) over every n-gram g of `tokens`, n = 1..max_n.
  // Throws ParameterError on empty input.
  double PlausibilityScore(std::span<const Token> tokens) const;

  // Versioned JSON document; counts are written in sorted order so equal
  // models serialize to identical bytes.
  std::string ToJson() const;
  static NGramModel FromJson(std::string_view text);
  void Save(const std::filesystem::path& path) const;
  static NGramModel Load(const std::filesystem::path& path);

  bool operator==(const NGramModel& other) const;

 private:
  explicit NGramModel(int max_n);

  void AddMessage(std::span<const Token> tokens);
  void CheckOrder(int order) const;

  int max_n_;
  std::vector<GramCounts> counts_;
  std::vector<std::uint64_t> totals_;
};

// Sorted union of the grams of `order` seen by either model.
std::vector<std::string> UnionSupport(const NGramModel& a, const NGramModel& b,
                                      int order = 1);

}  // namespace lingsteg

#endif  // LINGSTEG_NGRAM_MODEL_H_
