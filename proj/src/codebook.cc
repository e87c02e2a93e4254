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

#include "lingsteg/codebook.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "lingsteg/errors.h"
#include "lingsteg/rng.h"

namespace lingsteg {
namespace {

using nlohmann::json;

std::optional<std::uint64_t> ParseCount(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

bool IsSymbolChar(char c) { return c > ' ' && c < 0x7f; }

}  // namespace

FrequencyBand FrequencyBand::Parse(std::string_view text) {
  FrequencyBand band;
  if (text.ends_with('+')) {
    auto lo = ParseCount(text.substr(0, text.size() - 1));
    if (!lo) throw ParameterError("bad band \"" + std::string(text) + "\"");
    band.lo = *lo;
  } else {
    const auto dash = text.find('-');
    if (dash == std::string_view::npos) {
      throw ParameterError("band must be \"lo-hi\" or \"lo+\", got \"" +
                           std::string(text) + "\"");
    }
    auto lo = ParseCount(text.substr(0, dash));
    auto hi = ParseCount(text.substr(dash + 1));
    if (!lo || !hi) {
      throw ParameterError("bad band \"" + std::string(text) + "\"");
    }
    band.lo = *lo;
    band.hi = *hi;
  }
  if (band.lo < 1) throw ParameterError("band lower bound must be >= 1");
  if (band.hi && *band.hi < band.lo) {
    throw ParameterError("band upper bound below lower bound");
  }
  return band;
}

std::string FrequencyBand::ToString() const {
  return hi ? std::to_string(lo) + "-" + std::to_string(*hi)
            : std::to_string(lo) + "+";
}

Codebook::Codebook(std::string alphabet, std::map<Symbol, std::string> forward,
                   FrequencyBand band, std::uint64_t seed)
    : alphabet_(std::move(alphabet)),
      forward_(std::move(forward)),
      band_(band),
      seed_(seed) {
  std::set<Symbol> seen;
  for (Symbol s : alphabet_) {
    if (!IsSymbolChar(s)) {
      throw ValidationError("alphabet symbols must be printable ASCII");
    }
    if (!seen.insert(s).second) {
      throw ValidationError(std::string("duplicate alphabet symbol '") + s +
                            "'");
    }
    if (!forward_.contains(s)) {
      throw ValidationError(std::string("symbol '") + s + "' has no codeword");
    }
  }
  if (forward_.size() != seen.size()) {
    throw ValidationError("codebook maps symbols outside its alphabet");
  }
  for (const auto& [symbol, word] : forward_) {
    if (word.empty() || ScrubMessage(word) != word ||
        Tokenize(word).size() != 1) {
      throw ValidationError("codeword \"" + word +
                            "\" is not a single scrubbed token");
    }
    if (!inverse_.emplace(word, symbol).second) {
      throw ValidationError("codeword \"" + word +
                            "\" is mapped from two symbols");
    }
  }
  if (band_.lo < 1 || (band_.hi && *band_.hi < band_.lo)) {
    throw ValidationError("codebook band is empty or invalid");
  }
}

const std::string& Codebook::MapSymbol(Symbol symbol) const {
  auto it = forward_.find(symbol);
  if (it == forward_.end()) {
    throw ParameterError(std::string("symbol '") + symbol +
                         "' is not in the codebook alphabet");
  }
  return it->second;
}

std::optional<Symbol> Codebook::UnmapWord(std::string_view word) const {
  auto it = inverse_.find(word);
  if (it == inverse_.end()) return std::nullopt;
  return it->second;
}

Secret Codebook::ParseSecret(std::string_view text) const {
  for (char c : text) {
    if (!InAlphabet(c)) {
      throw ParameterError(std::string("secret symbol '") + c +
                           "' is not in the codebook alphabet");
    }
  }
  return Secret{std::string(text)};
}

std::string Codebook::ToJson() const {
  json doc;
  doc["version"] = kCodebookFormatVersion;
  doc["alphabet"] = alphabet_;
  json fwd = json::object();
  for (const auto& [symbol, word] : forward_) {
    fwd[std::string(1, symbol)] = word;
  }
  doc["forward"] = std::move(fwd);
  doc["band"] = {{"lo", band_.lo},
                 {"hi", band_.hi ? json(*band_.hi) : json(nullptr)}};
  doc["seed"] = seed_;
  return doc.dump(2);
}

Codebook Codebook::FromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("codebook is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("version")) {
      throw FormatError("codebook document has no version field");
    }
    if (doc.at("version").get<int>() != kCodebookFormatVersion) {
      throw FormatError("unsupported codebook version " +
                        doc.at("version").dump());
    }
    auto alphabet = doc.at("alphabet").get<std::string>();
    std::map<Symbol, std::string> forward;
    for (const auto& [key, value] : doc.at("forward").items()) {
      if (key.size() != 1) {
        throw FormatError("codebook symbols must be single characters");
      }
      forward[key[0]] = value.get<std::string>();
    }
    FrequencyBand band;
    const auto& b = doc.at("band");
    band.lo = b.at("lo").get<std::uint64_t>();
    if (b.contains("hi") && !b.at("hi").is_null()) {
      band.hi = b.at("hi").get<std::uint64_t>();
    }
    return Codebook(std::move(alphabet), std::move(forward), band,
                    doc.at("seed").get<std::uint64_t>());
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed codebook: ") + e.what());
  }
}

void Codebook::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write codebook file: " + path.string());
  out << ToJson() << '\n';
  if (!out) throw IoError("error while writing " + path.string());
}

Codebook Codebook::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in || std::filesystem::is_directory(path)) {
    throw IoError("cannot read codebook file: " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return FromJson(buf.str());
}

std::vector<std::string> WordsInBand(const NGramModel& model,
                                     const FrequencyBand& band) {
  std::vector<std::string> words;
  for (const auto& [word, c] : model.counts(1)) {
    if (band.Contains(c)) words.push_back(word);
  }
  std::sort(words.begin(), words.end());
  return words;
}

Codebook SelectCodebook(const NGramModel& model, const FrequencyBand& band,
                        std::string_view alphabet, std::uint64_t seed) {
  if (alphabet.empty()) throw ParameterError("alphabet must not be empty");
  if (band.lo < 1 || (band.hi && *band.hi < band.lo)) {
    throw ParameterError("invalid band " + band.ToString());
  }
  auto words = WordsInBand(model, band);
  if (words.size() < alphabet.size()) {
    throw InsufficientBandError(
        "band " + band.ToString() + " holds " + std::to_string(words.size()) +
            " words, need " + std::to_string(alphabet.size()),
        words.size(), alphabet.size());
  }
  // Partial Fisher-Yates over the sorted candidates.
  Rng rng(seed);
  std::map<Symbol, std::string> forward;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const auto j = i + rng.Uniform(words.size() - i);
    std::swap(words[i], words[j]);
    forward[alphabet[i]] = words[i];
  }
  return Codebook(std::string(alphabet), std::move(forward), band, seed);
}

}  // namespace lingsteg
