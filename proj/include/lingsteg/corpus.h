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

// Cover-message ingestion: scrubbing of non-verbal artifacts, whitespace
// tokenization and the immutable Corpus container.

#ifndef LINGSTEG_CORPUS_H_
#define LINGSTEG_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lingsteg {

using Token = std::string;
using Tokens = std::vector<Token>;

struct Message {
  Tokens tokens;
  // Opaque identifier of the raw record; line number for file corpora.
  std::string source_id;

  bool operator==(const Message&) const = default;
};

// Lowercases `raw`, drops whole tokens that are usernames ("@..."), hashtags
// ("#...") or URLs (containing "://" or starting with "www."), and strips
// ASCII punctuation from the remaining tokens. Digits are kept. Tokens
// reduced to nothing by stripping disappear. The result is single-space
// separated.
std::string ScrubMessage(std::string_view raw);

// Splits on runs of whitespace.
Tokens Tokenize(std::string_view text);

// Joins tokens with single spaces.
std::string JoinTokens(const Tokens& tokens);

class Corpus {
 public:
  // Throws EmptyCorpusError when no message has a token. Messages with zero
  // tokens are dropped.
  explicit Corpus(std::vector<Message> messages);

  // Scrubs and tokenizes each raw line; source ids are 1-based line numbers.
  static Corpus FromLines(const std::vector<std::string>& lines,
                          std::optional<std::size_t> limit = std::nullopt);

  const std::vector<Message>& messages() const { return messages_; }
  std::size_t size() const { return messages_.size(); }

  // Per-word occurrence counts, ordered by word.
  const std::map<Token, std::uint64_t>& vocabulary() const {
    return vocabulary_;
  }
  std::uint64_t total_tokens() const { return total_tokens_; }

 private:
  std::vector<Message> messages_;
  std::map<Token, std::uint64_t> vocabulary_;
  std::uint64_t total_tokens_ = 0;
};

// Reads a line-delimited UTF-8 file, one raw message per line, keeping at most
// `limit` usable messages. Throws IoError or EmptyCorpusError.
Corpus LoadCorpus(const std::filesystem::path& path,
                  std::optional<std::size_t> limit = std::nullopt);

}  // namespace lingsteg

#endif  // LINGSTEG_CORPUS_H_
