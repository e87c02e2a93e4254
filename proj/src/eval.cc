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

#include "lingsteg/eval.h"

#include <cmath>
#include <sstream>

#include "lingsteg/errors.h"
#include "lingsteg/rng.h"
#include "parallel.h"

namespace lingsteg {
namespace {

using nlohmann::json;

// Stream tags for seeds that are not per-trial.
constexpr std::uint64_t kCodebookStream = 0xc0deb00cULL;
constexpr std::uint64_t kDistinguisherStream = 0xd157ULL;

void CheckTrials(const TrialConfig& config) {
  if (config.trials < 1) throw ParameterError("trials must be >= 1");
}

struct Round {
  bool failed = false;
  bool mis_decoded = false;
  StegoResult result;
};

Round RunRound(const CoverPool& pool, const NGramModel& model,
               const Codebook& cb, std::size_t secret_len,
               std::uint64_t trial_seed, bool validate) {
  Round round;
  const Secret secret = RandomSecret(cb, secret_len, DeriveSeed(trial_seed, 1));
  StegoOptions options;
  options.validate = validate;
  try {
    round.result =
        Steganize(secret, cb, model, pool, DeriveSeed(trial_seed, 2), options);
  } catch (const SteganizationError&) {
    round.failed = true;
    return round;
  }
  round.mis_decoded = Decode(round.result.stego.tokens, cb) != secret;
  return round;
}

std::string CsvField(const std::optional<std::string>& s) {
  if (!s) return "";
  std::string out = "\"";
  for (char c : *s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

double Density(const StegoResult& result) {
  if (result.stego.tokens.empty()) {
    throw ParameterError("density of an empty stego is undefined");
  }
  return static_cast<double>(result.inserted_positions.size()) /
         static_cast<double>(result.stego.tokens.size());
}

double KlDivergence(const ProbabilityMap& p, const ProbabilityMap& q) {
  if (p.size() != q.size()) {
    throw DomainError("KL divergence needs distributions over one support");
  }
  double sum = 0.0;
  for (auto pi = p.begin(), qi = q.begin(); pi != p.end(); ++pi, ++qi) {
    if (pi->first != qi->first) {
      throw DomainError("KL divergence supports differ at \"" + pi->first +
                        "\"");
    }
    const double pw = pi->second;
    const double qw = qi->second;
    if (pw < 0.0 || qw < 0.0) throw DomainError("negative probability");
    if (pw == 0.0) continue;
    if (qw == 0.0) {
      throw DomainError("q vanishes where p does not, at \"" + pi->first +
                        "\"");
    }
    sum += pw * std::log(pw / qw);
  }
  return sum;
}

double CorpusDivergence(const NGramModel& corpus_model,
                        std::span<const Tokens> messages, double lambda,
                        int order) {
  const NGramModel sample = NGramModel::Build(messages, order);
  const auto support = UnionSupport(corpus_model, sample, order);
  return KlDivergence(corpus_model.GramDistribution(order, lambda, support),
                      sample.GramDistribution(order, lambda, support));
}

double DistinguisherAccuracy(
    const NGramModel& model,
    std::span<const std::pair<Tokens, Tokens>> pairs, std::uint64_t seed) {
  if (pairs.empty()) throw ParameterError("distinguisher needs >= 1 pair");
  Rng rng(seed);
  std::size_t correct = 0;
  for (const auto& [cover, stego] : pairs) {
    const bool stego_first = rng.Uniform(2) == 1;
    const Tokens& first = stego_first ? stego : cover;
    const Tokens& second = stego_first ? cover : stego;
    const bool guess_first =
        model.PlausibilityScore(first) <= model.PlausibilityScore(second);
    if (guess_first == stego_first) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(pairs.size());
}

Secret RandomSecret(const Codebook& cb, std::size_t length,
                    std::uint64_t seed) {
  Rng rng(seed);
  Secret secret;
  secret.symbols.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    secret.symbols.push_back(cb.alphabet()[rng.Uniform(cb.alphabet().size())]);
  }
  return secret;
}

EvalReport EstimateDecodability(const Corpus& corpus, const NGramModel& model,
                                const Codebook& cb, std::size_t secret_len,
                                const TrialConfig& config, bool validate,
                                double lambda) {
  CheckTrials(config);
  const CoverPool pool(corpus);
  std::vector<Round> rounds(config.trials);
  internal::ParallelFor(config.trials, config.workers, [&](std::size_t i) {
    rounds[i] = RunRound(pool, model, cb, secret_len,
                         DeriveSeed(config.seed, i), validate);
  });

  EvalReport report;
  report.trials = config.trials;
  std::vector<Tokens> stegos;
  std::vector<std::pair<Tokens, Tokens>> pairs;
  double density_sum = 0.0;
  for (auto& r : rounds) {
    if (r.failed) {
      ++report.failures;
      continue;
    }
    if (r.mis_decoded) ++report.mis_decodes;
    density_sum += r.result.density;
    stegos.push_back(r.result.stego.tokens);
    pairs.emplace_back(std::move(r.result.cover.tokens),
                       std::move(r.result.stego.tokens));
  }
  report.errors = report.failures + report.mis_decodes;
  report.decodability = 1.0 - static_cast<double>(report.errors) /
                                  static_cast<double>(report.trials);
  if (!stegos.empty()) {
    report.mean_density = density_sum / static_cast<double>(stegos.size());
    report.kl_nats = CorpusDivergence(model, stegos, lambda);
    report.distinguisher_accuracy = DistinguisherAccuracy(
        model, pairs, DeriveSeed(config.seed, kDistinguisherStream));
  }
  return report;
}

std::vector<BandExperimentRow> RunBandExperiment(
    const Corpus& corpus, const NGramModel& model,
    const std::vector<FrequencyBand>& bands, std::string_view alphabet,
    std::size_t secret_len, const TrialConfig& config, bool validate) {
  if (bands.empty()) throw ParameterError("band list is empty");
  CheckTrials(config);
  const CoverPool pool(corpus);
  const std::uint64_t codebook_seed = DeriveSeed(config.seed, kCodebookStream);

  std::vector<BandExperimentRow> rows;
  for (std::size_t b = 0; b < bands.size(); ++b) {
    BandExperimentRow row;
    row.band = bands[b];
    row.band_words = WordsInBand(model, bands[b]).size();
    std::optional<Codebook> cb;
    try {
      cb = SelectCodebook(model, bands[b], alphabet,
                          DeriveSeed(codebook_seed, b));
    } catch (const InsufficientBandError& e) {
      row.skipped = e.what();
      rows.push_back(std::move(row));
      continue;
    }
    for (const auto& [_, word] : cb->forward()) row.codewords.push_back(word);

    std::vector<Round> rounds(config.trials);
    internal::ParallelFor(config.trials, config.workers, [&](std::size_t i) {
      rounds[i] = RunRound(pool, model, *cb, secret_len,
                           DeriveSeed(config.seed, i), validate);
    });
    row.trials = config.trials;
    for (const auto& r : rounds) {
      if (r.failed) {
        ++row.exhaustions;
      } else if (r.mis_decoded) {
        ++row.errors;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t InsertionsForDensity(std::size_t cover_len, double target) {
  if (!(target >= 0.0 && target < 1.0)) {
    throw ParameterError("target density must lie in [0, 1)");
  }
  const double len = static_cast<double>(cover_len);
  const double ideal = target * len / (1.0 - target);
  const auto lo = static_cast<std::size_t>(std::floor(ideal));
  auto gap = [&](std::size_t k) {
    const double kd = static_cast<double>(k);
    return std::abs(kd / (len + kd) - target);
  };
  return gap(lo + 1) < gap(lo) ? lo + 1 : lo;
}

std::vector<DensityPoint> RunDensityExperiment(
    const Corpus& corpus, const NGramModel& model, const Codebook& cb,
    const std::vector<double>& densities, const TrialConfig& config,
    double lambda, int kl_order) {
  CheckTrials(config);
  if (kl_order < 1 || kl_order > model.max_n()) {
    throw ParameterError("KL order must lie in 1.." +
                         std::to_string(model.max_n()));
  }
  const CoverPool pool(corpus);
  const std::size_t n_points = densities.size();

  std::vector<bool> valid(n_points);
  for (std::size_t d = 0; d < n_points; ++d) {
    valid[d] = densities[d] >= 0.0 && densities[d] < 1.0;
  }

  // stegos[i][d]: trial i at density d; empty when the cover search failed.
  std::vector<std::vector<StegoResult>> stegos(config.trials);
  internal::ParallelFor(config.trials, config.workers, [&](std::size_t i) {
    const std::uint64_t trial_seed = DeriveSeed(config.seed, i);
    Rng rng(trial_seed);
    const Message* cover = nullptr;
    for (int a = 0; a < kDefaultMaxAttempts && cover == nullptr; ++a) {
      const Message& candidate = pool.at(rng.Uniform(pool.size()));
      if (!ContainsCodeword(candidate.tokens, cb)) cover = &candidate;
    }
    if (cover == nullptr) return;
    auto& row = stegos[i];
    row.resize(n_points);
    for (std::size_t d = 0; d < n_points; ++d) {
      if (!valid[d]) continue;
      const std::size_t k =
          InsertionsForDensity(cover->tokens.size(), densities[d]);
      row[d] = EmbedInCover(RandomSecret(cb, k, DeriveSeed(trial_seed, 1)), cb,
                            model, *cover);
    }
  });

  std::vector<DensityPoint> points;
  for (std::size_t d = 0; d < n_points; ++d) {
    DensityPoint point;
    point.target = densities[d];
    point.trials = config.trials;
    if (!valid[d]) {
      point.skipped = "target density outside [0, 1)";
      points.push_back(std::move(point));
      continue;
    }
    std::vector<Tokens> messages;
    std::size_t total_tokens = 0;
    for (const auto& row : stegos) {
      if (row.empty()) {
        ++point.failures;
        continue;
      }
      point.inserted += row[d].inserted_positions.size();
      total_tokens += row[d].stego.tokens.size();
      messages.push_back(row[d].stego.tokens);
    }
    if (messages.empty()) {
      point.skipped = "no cover free of codewords was found";
    } else if (densities[d] > 0.0 && point.inserted == 0) {
      point.skipped = "target density unreachable for the available covers";
    } else {
      point.achieved = static_cast<double>(point.inserted) /
                       static_cast<double>(total_tokens);
      point.kl_nats = CorpusDivergence(model, messages, lambda, kl_order);
    }
    points.push_back(std::move(point));
  }
  return points;
}

json ToJson(const EvalReport& report) {
  return {{"trials", report.trials},
          {"errors", report.errors},
          {"mis_decodes", report.mis_decodes},
          {"failures", report.failures},
          {"decodability", report.decodability},
          {"mean_density", report.mean_density},
          {"kl_nats", report.kl_nats},
          {"distinguisher_accuracy", report.distinguisher_accuracy},
          {"distinguisher_advantage",
           DistinguisherAdvantage(report.distinguisher_accuracy)}};
}

json ToJson(const BandExperimentRow& row) {
  json j = {{"band", row.band.ToString()},
            {"lo", row.band.lo},
            {"hi", row.band.hi ? json(*row.band.hi) : json(nullptr)},
            {"band_words", row.band_words},
            {"codewords", row.codewords},
            {"trials", row.trials},
            {"errors", row.errors},
            {"exhaustions", row.exhaustions}};
  j["skipped"] = row.skipped ? json(*row.skipped) : json(nullptr);
  return j;
}

json ToJson(const DensityPoint& point) {
  json j = {{"target", point.target},   {"achieved", point.achieved},
            {"trials", point.trials},   {"failures", point.failures},
            {"inserted", point.inserted}, {"kl_nats", point.kl_nats}};
  j["skipped"] = point.skipped ? json(*point.skipped) : json(nullptr);
  return j;
}

std::string BandRowsToCsv(const std::vector<BandExperimentRow>& rows) {
  std::ostringstream out;
  out << "band,band_words,trials,errors,exhaustions,skipped\n";
  for (const auto& r : rows) {
    out << r.band.ToString() << ',' << r.band_words << ',' << r.trials << ','
        << r.errors << ',' << r.exhaustions << ',' << CsvField(r.skipped)
        << '\n';
  }
  return out.str();
}

std::string DensityPointsToCsv(const std::vector<DensityPoint>& points) {
  std::ostringstream out;
  out.precision(17);
  out << "target,achieved,trials,failures,inserted,kl_nats,skipped\n";
  for (const auto& p : points) {
    out << p.target << ',' << p.achieved << ',' << p.trials << ','
        << p.failures << ',' << p.inserted << ',' << p.kl_nats << ','
        << CsvField(p.skipped) << '\n';
  }
  return out.str();
}

}  // namespace lingsteg
