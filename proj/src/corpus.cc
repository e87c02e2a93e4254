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

#include "lingsteg/corpus.h"

#include <fstream>
#include <utility>

#include "lingsteg/errors.h"

namespace lingsteg {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// ASCII punctuation only; UTF-8 continuation bytes are never touched.
bool IsPunct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= 0x21 && u <= 0x2f) || (u >= 0x3a && u <= 0x40) ||
         (u >= 0x5b && u <= 0x60) || (u >= 0x7b && u <= 0x7e);
}

char ToLower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool IsNonVerbal(std::string_view token) {
  return token.starts_with('@') || token.starts_with('#') ||
         token.starts_with("www.") ||
         token.find("://") != std::string_view::npos;
}

template <typename Fn>
void ForEachWhitespaceRun(std::string_view text, Fn&& fn) {
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    if (i > start) fn(text.substr(start, i - start));
  }
}

}  // namespace

std::string ScrubMessage(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  ForEachWhitespaceRun(raw, [&out](std::string_view piece) {
    std::string token;
    token.reserve(piece.size());
    for (char c : piece) token.push_back(ToLower(c));
    if (IsNonVerbal(token)) return;
    std::string kept;
    kept.reserve(token.size());
    for (char c : token) {
      if (!IsPunct(c)) kept.push_back(c);
    }
    if (kept.empty()) return;
    if (!out.empty()) out.push_back(' ');
    out += kept;
  });
  return out;
}

Tokens Tokenize(std::string_view text) {
  Tokens tokens;
  ForEachWhitespaceRun(text, [&tokens](std::string_view piece) {
    tokens.emplace_back(piece);
  });
  return tokens;
}

std::string JoinTokens(const Tokens& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

Corpus::Corpus(std::vector<Message> messages) {
  messages_.reserve(messages.size());
  for (auto& m : messages) {
    if (m.tokens.empty()) continue;
    for (const auto& t : m.tokens) ++vocabulary_[t];
    total_tokens_ += m.tokens.size();
    messages_.push_back(std::move(m));
  }
  if (messages_.empty()) {
    throw EmptyCorpusError("corpus contains no usable messages");
  }
}

Corpus Corpus::FromLines(const std::vector<std::string>& lines,
                         std::optional<std::size_t> limit) {
  std::vector<Message> messages;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (limit && messages.size() >= *limit) break;
    Tokens tokens = Tokenize(ScrubMessage(lines[i]));
    if (tokens.empty()) continue;
    messages.push_back(Message{std::move(tokens), std::to_string(i + 1)});
  }
  return Corpus(std::move(messages));
}

Corpus LoadCorpus(const std::filesystem::path& path,
                  std::optional<std::size_t> limit) {
  std::ifstream in(path);
  if (!in || std::filesystem::is_directory(path)) throw IoError("cannot read corpus file: " + path.string());
  std::vector<Message> messages;
  std::string line;
  std::size_t line_no = 0;
  while ((!limit || messages.size() < *limit) && std::getline(in, line)) {
    ++line_no;
    Tokens tokens = Tokenize(ScrubMessage(line));
    if (tokens.empty()) continue;
    messages.push_back(Message{std::move(tokens), std::to_string(line_no)});
  }
  if (in.bad()) throw IoError("error while reading " + path.string());
  if (messages.empty()) {
    throw EmptyCorpusError("no usable messages in " + path.string());
  }
  return Corpus(std::move(messages));
}

}  // namespace lingsteg
