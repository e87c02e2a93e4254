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

// Measurement harness: decodability, density and detectability estimates and
// the two desk-scale experiments (codeword frequency band vs. decode errors,
// insertion density vs. word-frequency divergence).

#ifndef LINGSTEG_EVAL_H_
#define LINGSTEG_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lingsteg/codebook.h"
#include "lingsteg/corpus.h"
#include "lingsteg/ngram_model.h"
#include "lingsteg/stego_codec.h"

namespace lingsteg {

inline constexpr double kDefaultLambda = 1.0;
inline constexpr std::size_t kDefaultSecretLen = 2;

// Shared knobs of every randomized experiment. Trial i always runs on
// DeriveSeed(seed, i), so results do not depend on `workers`.
struct TrialConfig {
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct EvalReport {
  std::size_t trials = 0;
  // Failed rounds: mis-decodes plus steganization failures.
  std::size_t errors = 0;
  std::size_t mis_decodes = 0;
  std::size_t failures = 0;
  double decodability = 0.0;
  double mean_density = 0.0;
  double kl_nats = 0.0;
  double distinguisher_accuracy = 0.0;
};

struct BandExperimentRow {
  FrequencyBand band;
  std::size_t band_words = 0;
  std::vector<std::string> codewords;
  std::size_t trials = 0;
  std::size_t errors = 0;
  // Rounds whose cover search ran out of attempts (validated runs only).
  std::size_t exhaustions = 0;
  std::optional<std::string> skipped;
};

struct DensityPoint {
  double target = 0.0;
  double achieved = 0.0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t inserted = 0;
  double kl_nats = 0.0;
  std::optional<std::string> skipped;
};

// Codewords over total words of the stego. Throws ParameterError when the
// stego is empty.
double Density(const StegoResult& result);

// D_KL(p || q) in nats over a shared support; zero-probability terms of p
// contribute nothing. Throws DomainError when the supports differ or q
// vanishes where p does not.
double KlDivergence(const ProbabilityMap& p, const ProbabilityMap& q);

// KL between the corpus distribution of `order`-grams and that of `messages`,
// both additively smoothed with `lambda` over the union support.
double CorpusDivergence(const NGramModel& corpus_model,
                        std::span<const Tokens> messages, double lambda,
                        int order = 1);

// Empirical pair-classification accuracy of the plausibility distinguisher.
// Each (cover, stego) pair is shown in seeded random order and the text with
// the lower plausibility score is called the stego; on a tie the first one
// shown is. Throws ParameterError on an empty list.
double DistinguisherAccuracy(
    const NGramModel& model,
    std::span<const std::pair<Tokens, Tokens>> pairs, std::uint64_t seed);

// |2 * accuracy - 1|.
inline double DistinguisherAdvantage(double accuracy) {
  const double a = 2.0 * accuracy - 1.0;
  return a < 0 ? -a : a;
}

// Uniformly random symbols of the codebook alphabet.
Secret RandomSecret(const Codebook& cb, std::size_t length, std::uint64_t seed);

// Runs config.trials steganize + decode rounds on random secrets. With
// validate cleared, a round fails when the decoded secret differs from the
// sent one; with it set, when steganization gives up.
EvalReport EstimateDecodability(const Corpus& corpus, const NGramModel& model,
                                const Codebook& cb, std::size_t secret_len,
                                const TrialConfig& config, bool validate,
                                double lambda = kDefaultLambda);

// One codebook per band (seeded), then config.trials unvalidated rounds per
// band. Bands without enough words are returned as skipped rows.
std::vector<BandExperimentRow> RunBandExperiment(
    const Corpus& corpus, const NGramModel& model,
    const std::vector<FrequencyBand>& bands, std::string_view alphabet,
    std::size_t secret_len, const TrialConfig& config, bool validate = false);

// For each target density, steganizes config.trials covers with as many
// codewords as brings each one nearest the target, then measures the
// smoothed KL between the corpus and the steganized set. Target 0 is the
// no-insertion control. Trial i draws the same cover at every target.
std::vector<DensityPoint> RunDensityExperiment(
    const Corpus& corpus, const NGramModel& model, const Codebook& cb,
    const std::vector<double>& densities, const TrialConfig& config,
    double lambda = kDefaultLambda, int kl_order = 1);

// Number of insertions k >= 0 minimizing |k / (cover_len + k) - target|,
// smallest k on ties.
std::size_t InsertionsForDensity(std::size_t cover_len, double target);

nlohmann::json ToJson(const EvalReport& report);
nlohmann::json ToJson(const BandExperimentRow& row);
nlohmann::json ToJson(const DensityPoint& point);

std::string BandRowsToCsv(const std::vector<BandExperimentRow>& rows);
std::string DensityPointsToCsv(const std::vector<DensityPoint>& points);

}  // namespace lingsteg

#endif  // LINGSTEG_EVAL_H_
