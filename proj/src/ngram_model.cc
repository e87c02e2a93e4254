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

#include "lingsteg/ngram_model.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "lingsteg/errors.h"

namespace lingsteg {
namespace {

using nlohmann::json;

std::string JoinRange(std::span<const Token> tokens) {
  std::string key;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) key.push_back(' ');
    key += tokens[i];
  }
  return key;
}

}  // namespace

NGramModel::NGramModel(int max_n)
    : max_n_(max_n), counts_(max_n), totals_(max_n, 0) {}

NGramModel NGramModel::Build(const Corpus& corpus, int max_n) {
  if (max_n < 1) throw ParameterError("max_n must be >= 1");
  NGramModel model(max_n);
  for (const auto& m : corpus.messages()) model.AddMessage(m.tokens);
  return model;
}

NGramModel NGramModel::Build(std::span<const Tokens> messages, int max_n) {
  if (max_n < 1) throw ParameterError("max_n must be >= 1");
  NGramModel model(max_n);
  for (const auto& m : messages) model.AddMessage(m);
  return model;
}

void NGramModel::AddMessage(std::span<const Token> tokens) {
  for (int n = 1; n <= max_n_; ++n) {
    if (tokens.size() < static_cast<std::size_t>(n)) break;
    auto& table = counts_[n - 1];
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      ++table[JoinRange(tokens.subspan(i, n))];
    }
    totals_[n - 1] += tokens.size() - n + 1;
  }
}

void NGramModel::CheckOrder(int order) const {
  if (order < 1 || order > max_n_) {
    throw ParameterError("n-gram order " + std::to_string(order) +
                         " outside 1.." + std::to_string(max_n_));
  }
}

std::uint64_t NGramModel::Count(std::span<const Token> gram) const {
  CheckOrder(static_cast<int>(gram.size()));
  return CountJoined(static_cast<int>(gram.size()), JoinRange(gram));
}

std::uint64_t NGramModel::Count(
    std::initializer_list<std::string_view> gram) const {
  Tokens tokens(gram.begin(), gram.end());
  return Count(tokens);
}

std::uint64_t NGramModel::CountJoined(int order,
                                      std::string_view joined) const {
  CheckOrder(order);
  const auto& table = counts_[order - 1];
  auto it = table.find(joined);
  return it == table.end() ? 0 : it->second;
}

const GramCounts& NGramModel::counts(int order) const {
  CheckOrder(order);
  return counts_[order - 1];
}

std::uint64_t NGramModel::total(int order) const {
  CheckOrder(order);
  return totals_[order - 1];
}

ProbabilityMap NGramModel::UnigramDistribution(
    double lambda, const std::vector<std::string>& vocabulary) const {
  return GramDistribution(1, lambda, vocabulary);
}

ProbabilityMap NGramModel::GramDistribution(
    int order, double lambda, const std::vector<std::string>& support) const {
  CheckOrder(order);
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("smoothing lambda must be finite and >= 0");
  }
  const auto& table = counts_[order - 1];
  std::vector<std::string> own;
  const std::vector<std::string>* keys = &support;
  if (support.empty()) {
    own.reserve(table.size());
    for (const auto& [gram, _] : table) own.push_back(gram);
    keys = &own;
  }
  const double denom = static_cast<double>(totals_[order - 1]) +
                       lambda * static_cast<double>(keys->size());
  if (denom <= 0.0) {
    throw ParameterError("distribution has no mass: no grams and lambda = 0");
  }
  ProbabilityMap dist;
  for (const auto& key : *keys) {
    auto it = table.find(key);
    const double c = it == table.end() ? 0.0 : static_cast<double>(it->second);
    dist[key] = (c + lambda) / denom;
  }
  return dist;
}

double NGramModel::PlausibilityScore(std::span<const Token> tokens) const {
  if (tokens.empty()) throw ParameterError("cannot score an empty text");
  double sum = 0.0;
  std::size_t grams = 0;
  for (int n = 1; n <= max_n_; ++n) {
    if (tokens.size() < static_cast<std::size_t>(n)) break;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      sum += std::log1p(static_cast<double>(
          CountJoined(n, JoinRange(tokens.subspan(i, n)))));
      ++grams;
    }
  }
  return sum / static_cast<double>(grams);
}

std::string NGramModel::ToJson() const {
  json doc;
  doc["version"] = kModelFormatVersion;
  doc["max_n"] = max_n_;
  doc["totals"] = totals_;
  json orders = json::array();
  for (const auto& table : counts_) {
    std::vector<std::pair<std::string, std::uint64_t>> rows(table.begin(),
                                                            table.end());
    std::sort(rows.begin(), rows.end());
    json arr = json::array();
    for (auto& [gram, c] : rows) arr.push_back(json::array({gram, c}));
    orders.push_back(std::move(arr));
  }
  doc["counts"] = std::move(orders);
  return doc.dump();
}

NGramModel NGramModel::FromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("model is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("version")) {
      throw FormatError("model document has no version field");
    }
    if (doc.at("version").get<int>() != kModelFormatVersion) {
      throw FormatError("unsupported model version " +
                        doc.at("version").dump());
    }
    const int max_n = doc.at("max_n").get<int>();
    if (max_n < 1) throw FormatError("model max_n must be >= 1");
    const auto& totals = doc.at("totals");
    const auto& orders = doc.at("counts");
    if (!totals.is_array() || !orders.is_array() ||
        totals.size() != static_cast<std::size_t>(max_n) ||
        orders.size() != static_cast<std::size_t>(max_n)) {
      throw FormatError("model needs one totals entry and one count table "
                        "per order");
    }
    NGramModel model(max_n);
    for (int n = 0; n < max_n; ++n) {
      model.totals_[n] = totals[n].get<std::uint64_t>();
      std::uint64_t sum = 0;
      for (const auto& row : orders[n]) {
        if (!row.is_array() || row.size() != 2) {
          throw FormatError("count rows must be [gram, count] pairs");
        }
        auto gram = row[0].get<std::string>();
        const auto c = row[1].get<std::uint64_t>();
        if (static_cast<int>(Tokenize(gram).size()) != n + 1 ||
            JoinTokens(Tokenize(gram)) != gram) {
          throw ValidationError("gram \"" + gram + "\" is not of order " +
                                std::to_string(n + 1));
        }
        sum += c;
        if (!model.counts_[n].emplace(std::move(gram), c).second) {
          throw ValidationError("duplicate gram in order " +
                                std::to_string(n + 1));
        }
      }
      if (sum != model.totals_[n]) {
        throw ValidationError("order " + std::to_string(n + 1) +
                              " total does not match its counts");
      }
    }
    return model;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed model document: ") + e.what());
  }
}

void NGramModel::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model file: " + path.string());
  out << ToJson() << '\n';
  if (!out) throw IoError("error while writing " + path.string());
}

NGramModel NGramModel::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in || std::filesystem::is_directory(path)) {
    throw IoError("cannot read model file: " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return FromJson(buf.str());
}

bool NGramModel::operator==(const NGramModel& other) const {
  return max_n_ == other.max_n_ && totals_ == other.totals_ &&
         counts_ == other.counts_;
}

std::vector<std::string> UnionSupport(const NGramModel& a, const NGramModel& b,
                                      int order) {
  std::set<std::string> keys;
  for (const auto& [gram, _] : a.counts(order)) keys.insert(gram);
  for (const auto& [gram, _] : b.counts(order)) keys.insert(gram);
  return {keys.begin(), keys.end()};
}

}  // namespace lingsteg
