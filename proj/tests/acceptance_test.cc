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

// Acceptance suite. Runs every exit criterion on the synthetic desk corpus
// and prints one PASS/FAIL line per criterion. Exit status is non-zero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lingsteg/codebook.h"
#include "lingsteg/corpus.h"
#include "lingsteg/desk_corpus.h"
#include "lingsteg/errors.h"
#include "lingsteg/eval.h"
#include "lingsteg/ngram_model.h"
#include "lingsteg/rng.h"
#include "lingsteg/stego_codec.h"

namespace lingsteg {
namespace {

// Fixed before any run; see README for the desk-scale caveat on criterion 3.
constexpr std::uint64_t kExperimentSeed = 1;
constexpr std::size_t kMinDeskMessages = 10000;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Desk {
  Corpus corpus;
  NGramModel model;
};

const Desk& DeskSetup() {
  static const Desk desk = [] {
    Corpus corpus = Corpus::FromLines(GenerateDeskCorpus());
    NGramModel model = NGramModel::Build(corpus, kDefaultMaxN);
    return Desk{std::move(corpus), std::move(model)};
  }();
  return desk;
}

// P(X >= k) for X ~ Binomial(n, 1/2).
double BinomialUpperTail(std::size_t n, std::size_t k) {
  double tail = 0.0;
  for (std::size_t i = k; i <= n; ++i) {
    tail += std::exp(std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                     std::lgamma(n - i + 1.0) - n * std::log(2.0));
  }
  return tail;
}

Outcome WorkedExample() {
  const Codebook cb("21", {{'2', "good"}, {'1', "really"}},
                    FrequencyBand{1, {}}, 0);
  const Tokens stego = Tokenize(ScrubMessage(
      "poor cast off to the good trash heap when no longer really usefull"));
  const Secret s = Decode(stego, cb);
  return {s.symbols == "21", "decoded \"" + s.symbols + "\""};
}

Outcome RoundTrip() {
  const Desk& desk = DeskSetup();
  if (desk.corpus.size() < kMinDeskMessages) {
    return {false, "desk corpus too small"};
  }
  const CoverPool pool(desk.corpus);
  const char* bands[] = {"4-6", "6-8", "8-12", "14+"};
  std::vector<Codebook> books;
  for (std::size_t b = 0; b < 4; ++b) {
    books.push_back(SelectCodebook(desk.model, FrequencyBand::Parse(bands[b]),
                                   kDigitAlphabet,
                                   DeriveSeed(kExperimentSeed, 100 + b)));
  }
  constexpr std::size_t kTrials = 1000;
  std::size_t ok = 0, failures = 0, bad_decode = 0, bad_cover = 0,
              bad_order = 0;
  for (std::size_t i = 0; i < kTrials; ++i) {
    const std::uint64_t seed = DeriveSeed(kExperimentSeed, i);
    const Codebook& cb = books[i % books.size()];
    const Secret secret = RandomSecret(cb, 1 + i % 4, DeriveSeed(seed, 1));
    StegoResult r;
    try {
      r = Steganize(secret, cb, desk.model, pool, DeriveSeed(seed, 2));
    } catch (const SteganizationError&) {
      ++failures;
      continue;
    }
    bool good = true;
    if (Decode(r.stego.tokens, cb) != secret) {
      ++bad_decode;
      good = false;
    }
    Tokens recovered = r.stego.tokens;
    for (auto it = r.inserted_positions.rbegin();
         it != r.inserted_positions.rend(); ++it) {
      recovered.erase(recovered.begin() + *it);
    }
    if (recovered != r.cover.tokens) {
      ++bad_cover;
      good = false;
    }
    bool ordered = r.inserted_positions.size() == secret.size();
    for (std::size_t k = 0; ordered && k < secret.size(); ++k) {
      ordered = (k == 0 || r.inserted_positions[k] > r.inserted_positions[k - 1]) &&
                r.stego.tokens[r.inserted_positions[k]] ==
                    cb.MapSymbol(secret.symbols[k]);
    }
    if (!ordered) {
      ++bad_order;
      good = false;
    }
    if (good) ++ok;
  }
  std::ostringstream d;
  d << kTrials << " trials on " << desk.corpus.size() << " messages: " << ok
    << " clean, " << failures << " steganization failures, " << bad_decode
    << " decode / " << bad_cover << " cover / " << bad_order
    << " order violations";
  return {ok > 0 && bad_decode == 0 && bad_cover == 0 && bad_order == 0,
          d.str()};
}

std::vector<FrequencyBand> PaperBands() {
  return {FrequencyBand::Parse("4-6"), FrequencyBand::Parse("6-8"),
          FrequencyBand::Parse("8-12"), FrequencyBand::Parse("14+")};
}

Outcome BandMonotonicity() {
  const Desk& desk = DeskSetup();
  TrialConfig config;
  config.trials = 2000;
  config.seed = kExperimentSeed;
  config.workers = 2;
  const auto rows = RunBandExperiment(desk.corpus, desk.model, PaperBands(),
                                      kDigitAlphabet, kDefaultSecretLen, config,
                                      /*validate=*/false);
  std::ostringstream d;
  d << "errors per band (2000 trials):";
  bool monotone = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].skipped) return {false, "band skipped: " + *rows[i].skipped};
    d << ' ' << rows[i].band.ToString() << '=' << rows[i].errors;
    if (i && rows[i].errors < rows[i - 1].errors) monotone = false;
  }
  const bool ratio = rows[3].errors >= 2 * rows[0].errors;
  d << (monotone ? "; non-decreasing" : "; NOT non-decreasing")
    << "; group4/group1 = "
    << (rows[0].errors ? static_cast<double>(rows[3].errors) / rows[0].errors
                       : INFINITY);
  return {monotone && ratio, d.str()};
}

// Mean errors per band over several seeds; printed for context only.
std::string BandSeedSweep() {
  const Desk& desk = DeskSetup();
  constexpr int kSeeds = 20;
  std::vector<double> mean(4, 0.0);
  int monotone = 0;
  for (int s = 1; s <= kSeeds; ++s) {
    TrialConfig config;
    config.trials = 2000;
    config.seed = static_cast<std::uint64_t>(s);
    config.workers = 2;
    const auto rows = RunBandExperiment(desk.corpus, desk.model, PaperBands(),
                                        kDigitAlphabet, kDefaultSecretLen,
                                        config, false);
    bool mono = true;
    for (std::size_t i = 0; i < 4; ++i) {
      mean[i] += static_cast<double>(rows[i].errors) / kSeeds;
      if (i && rows[i].errors < rows[i - 1].errors) mono = false;
    }
    monotone += mono;
  }
  std::ostringstream d;
  d.precision(4);
  d << "seeds 1.." << kSeeds << " mean errors 4-6=" << mean[0]
    << " 6-8=" << mean[1] << " 8-12=" << mean[2] << " 14+=" << mean[3]
    << "; monotone for " << monotone << "/" << kSeeds << " seeds";
  return d.str();
}

Outcome DensityMonotonicity() {
  const Desk& desk = DeskSetup();
  const Codebook cb = SelectCodebook(desk.model, FrequencyBand::Parse("14+"),
                                     kDigitAlphabet,
                                     DeriveSeed(kExperimentSeed, 200));
  TrialConfig config;
  config.trials = 500;
  config.seed = kExperimentSeed;
  config.workers = 2;
  const auto points = RunDensityExperiment(
      desk.corpus, desk.model, cb, {0.0, 0.05, 0.1, 0.2, 0.3}, config,
      kDefaultLambda);
  for (const auto& p : points) {
    if (p.skipped) return {false, "point skipped: " + *p.skipped};
  }
  const double noise = points[0].kl_nats;
  int inversions = 0;
  bool small = true;
  std::ostringstream d;
  d.precision(5);
  d << "control KL=" << noise << "; KL:";
  for (std::size_t i = 1; i < points.size(); ++i) {
    d << ' ' << points[i].target << "->" << points[i].kl_nats;
    if (i > 1 && points[i].kl_nats < points[i - 1].kl_nats) {
      ++inversions;
      if (points[i - 1].kl_nats - points[i].kl_nats >= 2 * noise) {
        small = false;
      }
    }
  }
  d << "; inversions=" << inversions;
  return {inversions <= 1 && small, d.str()};
}

Outcome KlAxioms() {
  Rng rng(kExperimentSeed);
  double worst_self = 0.0, most_negative = INFINITY;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + rng.Uniform(50);
    ProbabilityMap p, q;
    double sp = 0.0, sq = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::string key = "w" + std::to_string(k);
      p[key] = rng.Uniform(5) == 0 ? 0.0 : rng.UniformReal();
      q[key] = 1e-6 + rng.UniformReal();
      sp += p[key];
      sq += q[key];
    }
    if (sp == 0.0) {
      p["w0"] = 1.0;
      sp = 1.0;
    }
    for (auto& [_, v] : p) v /= sp;
    for (auto& [_, v] : q) v /= sq;
    worst_self = std::max(worst_self, std::abs(KlDivergence(p, p)));
    most_negative = std::min(most_negative, KlDivergence(p, q));
  }
  const double hand = KlDivergence({{"a", 1.0}, {"b", 0.0}},
                                   {{"a", 0.5}, {"b", 0.5}});
  std::ostringstream d;
  d << "max |KL(p,p)|=" << worst_self << ", min KL(p,q)=" << most_negative
    << ", KL((1,0)||(.5,.5))=" << hand;
  return {worst_self <= 1e-12 && most_negative >= -1e-12 &&
              std::abs(hand - std::log(2.0)) <= 1e-9,
          d.str()};
}

Outcome Distinguisher() {
  const Desk& desk = DeskSetup();
  const CoverPool pool(desk.corpus);

  std::vector<std::pair<Tokens, Tokens>> same;
  for (std::size_t i = 0; i < 1000; ++i) {
    Rng rng(DeriveSeed(kExperimentSeed, i));
    const auto& c = pool.at(rng.Uniform(pool.size())).tokens;
    same.emplace_back(c, c);
  }
  const double chance = DistinguisherAccuracy(desk.model, same,
                                              DeriveSeed(kExperimentSeed, 300));
  const double se = std::sqrt(0.25 / 1000.0);
  const bool chance_ok = std::abs(chance - 0.5) <= 3 * se;

  const Codebook rare = SelectCodebook(desk.model, FrequencyBand::Parse("4-6"),
                                       kDigitAlphabet,
                                       DeriveSeed(kExperimentSeed, 301));
  std::vector<std::pair<Tokens, Tokens>> dense;
  double min_density = 1.0;
  for (std::size_t i = 0; dense.size() < 200; ++i) {
    Rng rng(DeriveSeed(DeriveSeed(kExperimentSeed, 302), i));
    const Message& cover = pool.at(rng.Uniform(pool.size()));
    if (ContainsCodeword(cover.tokens, rare)) continue;
    // Smallest k with k / (L + k) >= 0.3.
    const std::size_t len = cover.tokens.size();
    std::size_t k = 1;
    while (10 * k < 3 * (len + k)) ++k;
    const StegoResult r = EmbedInCover(
        RandomSecret(rare, k, rng.Next()), rare, desk.model, cover);
    min_density = std::min(min_density, r.density);
    dense.emplace_back(r.cover.tokens, r.stego.tokens);
  }
  const double acc = DistinguisherAccuracy(desk.model, dense,
                                           DeriveSeed(kExperimentSeed, 303));
  const auto correct = static_cast<std::size_t>(std::llround(acc * 200));
  const double p_value = BinomialUpperTail(200, correct);

  std::ostringstream d;
  d << "(c,c) accuracy=" << chance << " (3SE=" << 3 * se
    << "); rare dense accuracy=" << acc << " over 200 pairs, min density "
    << min_density << ", one-sided p=" << p_value;
  return {chance_ok && acc > 0.5 && p_value < 0.05 && min_density >= 0.3,
          d.str()};
}

Outcome Determinism() {
  const Desk& desk = DeskSetup();
  std::vector<std::string> mismatches;
  auto check = [&mismatches](const std::string& name,
                             const std::function<std::string(unsigned)>& run) {
    const std::string a = run(1), b = run(1), c = run(4);
    if (a != b || a != c) mismatches.push_back(name);
  };
  check("model", [&](unsigned) {
    return NGramModel::Build(desk.corpus, kDefaultMaxN).ToJson();
  });
  check("codebook", [&](unsigned) {
    return SelectCodebook(desk.model, FrequencyBand::Parse("8-12"),
                          kDigitAlphabet, 17)
        .ToJson();
  });
  const Codebook cb = SelectCodebook(desk.model, FrequencyBand::Parse("14+"),
                                     kDigitAlphabet, 18);
  check("steganize", [&](unsigned) {
    return Steganize(cb.ParseSecret("2718"), cb, desk.model, desk.corpus, 19)
        .ToJson();
  });
  TrialConfig config;
  config.trials = 300;
  config.seed = 20;
  check("band", [&](unsigned w) {
    TrialConfig c = config;
    c.workers = w;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : RunBandExperiment(desk.corpus, desk.model,
                                           PaperBands(), kDigitAlphabet, 2, c)) {
      j.push_back(ToJson(r));
    }
    return j.dump();
  });
  check("density", [&](unsigned w) {
    TrialConfig c = config;
    c.workers = w;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : RunDensityExperiment(desk.corpus, desk.model, cb,
                                              {0.0, 0.1, 0.3}, c)) {
      j.push_back(ToJson(p));
    }
    return j.dump();
  });
  check("decodability", [&](unsigned w) {
    TrialConfig c = config;
    c.workers = w;
    return ToJson(EstimateDecodability(desk.corpus, desk.model, cb, 2, c, true))
        .dump();
  });
  std::string detail = "model, codebook, steganize, band, density, "
                       "decodability reruns with 1 and 4 workers";
  if (!mismatches.empty()) {
    detail = "differs:";
    for (const auto& m : mismatches) detail += " " + m;
  }
  return {mismatches.empty(), detail};
}

}  // namespace
}  // namespace lingsteg

int main() {
  using lingsteg::Outcome;
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 worked-example golden decode", lingsteg::WorkedExample},
      {"2 round-trip property", lingsteg::RoundTrip},
      {"3 band-experiment monotonicity", lingsteg::BandMonotonicity},
      {"4 density-detectability monotonicity", lingsteg::DensityMonotonicity},
      {"5 KL axioms", lingsteg::KlAxioms},
      {"6 distinguisher sanity", lingsteg::Distinguisher},
      {"7 determinism", lingsteg::Determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("[%s] %s: %s (%lld ms)\n", o.pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), static_cast<long long>(ms));
    if (!o.pass) ++failed;
  }
  std::printf("[INFO] band sweep: %s\n", lingsteg::BandSeedSweep().c_str());
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
