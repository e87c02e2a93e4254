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

#include "cli.h"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lingsteg/codebook.h"
#include "lingsteg/corpus.h"
#include "lingsteg/errors.h"
#include "lingsteg/eval.h"
#include "lingsteg/ngram_model.h"
#include "lingsteg/rng.h"
#include "lingsteg/stego_codec.h"

namespace lingsteg::cli {
namespace {

using nlohmann::json;

constexpr char kToolVersion[] = LINGSTEG_VERSION;
constexpr char kDefaultBands[] = "4-6,6-8,8-12,14+";
constexpr char kDefaultDensities[] = "0,0.05,0.1,0.2,0.3";

std::string Timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("error while writing " + path);
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<FrequencyBand> ParseBands(const std::string& text) {
  std::vector<FrequencyBand> bands;
  for (const auto& item : SplitList(text)) {
    bands.push_back(FrequencyBand::Parse(item));
  }
  if (bands.empty()) throw ParameterError("no bands given");
  return bands;
}

std::vector<double> ParseDensities(const std::string& text) {
  std::vector<double> densities;
  for (const auto& item : SplitList(text)) {
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) {
      throw ParameterError("bad density \"" + item + "\"");
    }
    densities.push_back(d);
  }
  if (densities.empty()) throw ParameterError("no densities given");
  return densities;
}

// Options shared by the randomized subcommands.
struct Shared {
  std::string corpus_path;
  std::string model_path;
  std::string codebook_path;
  std::string out_path;
  std::string format;
  std::uint64_t seed = 1;
  int max_n = kDefaultMaxN;
  std::optional<std::size_t> limit;
};

NGramModel ModelFor(const Shared& opts, const Corpus& corpus) {
  if (!opts.model_path.empty()) return NGramModel::Load(opts.model_path);
  return NGramModel::Build(corpus, opts.max_n);
}

json Envelope(const std::string& command, std::uint64_t seed, json config) {
  return {{"tool", "lingsteg"},
          {"tool_version", kToolVersion},
          {"command", command},
          {"seed", seed},
          {"config", std::move(config)},
          {"generated_at", Timestamp()}};
}

// Writes <out>.json and <out>.csv when an output prefix was given, then
// prints either the summary or the requested document format.
void Emit(const Shared& opts, const json& doc, const std::string& csv,
          const std::string& summary, std::ostream& out) {
  if (!opts.out_path.empty()) {
    WriteFile(opts.out_path + ".json", doc.dump(2) + "\n");
    WriteFile(opts.out_path + ".csv", csv);
  }
  if (opts.format == "json") {
    out << doc.dump(2) << '\n';
  } else if (opts.format == "csv") {
    out << csv;
  } else {
    out << summary;
  }
}

int BuildModel(const Shared& opts, std::ostream& out) {
  const Corpus corpus = LoadCorpus(opts.corpus_path, opts.limit);
  const NGramModel model = NGramModel::Build(corpus, opts.max_n);
  model.Save(opts.out_path);
  out << "messages " << corpus.size() << '\n'
      << "vocabulary " << corpus.vocabulary().size() << '\n'
      << "tokens " << corpus.total_tokens() << '\n';
  for (int n = 1; n <= model.max_n(); ++n) {
    out << "order " << n << " distinct " << model.counts(n).size()
        << " total " << model.total(n) << '\n';
  }
  return kOk;
}

int GenCodebook(const Shared& opts, const std::string& band_text,
                const std::string& alphabet, std::ostream& out) {
  const NGramModel model = NGramModel::Load(opts.model_path);
  const FrequencyBand band = FrequencyBand::Parse(band_text);
  const Codebook cb = SelectCodebook(model, band, alphabet, opts.seed);
  cb.Save(opts.out_path);
  out << "band " << band.ToString() << " holds "
      << WordsInBand(model, band).size() << " words; chose " << cb.size()
      << '\n';
  return kOk;
}

int Encode(const Shared& opts, const std::string& secret_text,
           bool no_validate, int max_attempts, std::ostream& out) {
  const Codebook cb = Codebook::Load(opts.codebook_path);
  const Secret secret = cb.ParseSecret(secret_text);
  const Corpus corpus = LoadCorpus(opts.corpus_path, opts.limit);
  const NGramModel model = ModelFor(opts, corpus);
  StegoOptions options;
  options.validate = !no_validate;
  options.max_attempts = max_attempts;
  const StegoResult result =
      Steganize(secret, cb, model, corpus, opts.seed, options);
  out << JoinTokens(result.stego.tokens) << '\n';
  if (!opts.out_path.empty()) {
    json doc = json::parse(result.ToJson());
    doc["seed"] = opts.seed;
    doc["tool_version"] = kToolVersion;
    doc["config"] = {{"validate", options.validate},
                     {"max_attempts", options.max_attempts},
                     {"secret_length", secret.size()}};
    WriteFile(opts.out_path, doc.dump(2) + "\n");
  }
  return kOk;
}

int DecodeText(const Shared& opts, const std::vector<std::string>& text,
               std::istream& in, std::ostream& out) {
  const Codebook cb = Codebook::Load(opts.codebook_path);
  auto decode_line = [&cb](const std::string& line) {
    return Decode(Tokenize(ScrubMessage(line)), cb).symbols;
  };
  if (!text.empty()) {
    std::string joined;
    for (const auto& t : text) joined += t + " ";
    out << decode_line(joined) << '\n';
    return kOk;
  }
  std::string line;
  while (std::getline(in, line)) out << decode_line(line) << '\n';
  return kOk;
}

struct EvalOptions {
  std::string bands = kDefaultBands;
  std::string densities = kDefaultDensities;
  std::string alphabet{kDigitAlphabet};
  std::size_t trials = 2000;
  std::size_t secret_len = kDefaultSecretLen;
  double lambda = kDefaultLambda;
  int kl_order = 1;
  unsigned workers = 0;
  bool validate = false;
  bool control = false;
};

TrialConfig TrialsOf(const Shared& opts, const EvalOptions& eo) {
  TrialConfig config;
  config.trials = eo.trials;
  config.seed = opts.seed;
  config.workers =
      eo.workers ? eo.workers : std::max(1u, std::thread::hardware_concurrency());
  return config;
}

int EvalBand(const Shared& opts, const EvalOptions& eo, std::ostream& out) {
  const Corpus corpus = LoadCorpus(opts.corpus_path, opts.limit);
  const NGramModel model = ModelFor(opts, corpus);
  const auto bands = ParseBands(eo.bands);
  const auto rows =
      RunBandExperiment(corpus, model, bands, eo.alphabet, eo.secret_len,
                        TrialsOf(opts, eo), eo.validate);
  json results = json::array();
  for (const auto& r : rows) results.push_back(ToJson(r));
  json doc = Envelope("eval band", opts.seed,
                      {{"bands", eo.bands},
                       {"alphabet", eo.alphabet},
                       {"trials", eo.trials},
                       {"secret_len", eo.secret_len},
                       {"validate", eo.validate},
                       {"messages", corpus.size()},
                       {"max_n", model.max_n()}});
  doc["results"] = std::move(results);

  std::ostringstream summary;
  summary << std::left << std::setw(8) << "band" << std::setw(8) << "words"
          << std::setw(8) << "trials" << std::setw(8) << "errors"
          << "exhausted\n";
  for (const auto& r : rows) {
    summary << std::setw(8) << r.band.ToString() << std::setw(8)
            << r.band_words;
    if (r.skipped) {
      summary << "skipped: " << *r.skipped << '\n';
      continue;
    }
    summary << std::setw(8) << r.trials << std::setw(8) << r.errors
            << r.exhaustions << '\n';
  }
  Emit(opts, doc, BandRowsToCsv(rows), summary.str(), out);
  return kOk;
}

int EvalDensity(const Shared& opts, const EvalOptions& eo, std::ostream& out) {
  const Codebook cb = Codebook::Load(opts.codebook_path);
  const Corpus corpus = LoadCorpus(opts.corpus_path, opts.limit);
  const NGramModel model = ModelFor(opts, corpus);
  const auto densities = ParseDensities(eo.densities);
  const auto points = RunDensityExperiment(corpus, model, cb, densities,
                                           TrialsOf(opts, eo), eo.lambda,
                                           eo.kl_order);
  json results = json::array();
  for (const auto& p : points) results.push_back(ToJson(p));
  json doc = Envelope("eval density", opts.seed,
                      {{"densities", densities},
                       {"trials", eo.trials},
                       {"lambda", eo.lambda},
                       {"kl_order", eo.kl_order},
                       {"band", cb.band().ToString()},
                       {"messages", corpus.size()},
                       {"max_n", model.max_n()}});
  doc["results"] = std::move(results);

  std::ostringstream summary;
  summary << std::left << std::setw(10) << "target" << std::setw(12)
          << "achieved" << "kl_nats\n";
  for (const auto& p : points) {
    summary << std::setw(10) << p.target;
    if (p.skipped) {
      summary << "skipped: " << *p.skipped << '\n';
      continue;
    }
    summary << std::setw(12) << std::setprecision(4) << p.achieved
            << std::setprecision(6) << p.kl_nats << '\n';
  }
  Emit(opts, doc, DensityPointsToCsv(points), summary.str(), out);
  return kOk;
}

int EvalDistinguish(const Shared& opts, const EvalOptions& eo,
                    std::ostream& out) {
  const Corpus corpus = LoadCorpus(opts.corpus_path, opts.limit);
  const NGramModel model = ModelFor(opts, corpus);
  const TrialConfig config = TrialsOf(opts, eo);
  if (config.trials < 1) throw ParameterError("trials must be >= 1");
  const CoverPool pool(corpus);

  std::vector<std::pair<Tokens, Tokens>> pairs;
  std::size_t failures = 0;
  std::optional<Codebook> cb;
  if (!eo.control) {
    if (opts.codebook_path.empty()) {
      throw ParameterError("--codebook is required unless --control is set");
    }
    cb = Codebook::Load(opts.codebook_path);
  }
  for (std::size_t i = 0; i < config.trials; ++i) {
    const std::uint64_t trial_seed = DeriveSeed(opts.seed, i);
    if (eo.control) {
      Rng rng(trial_seed);
      const Message& c = pool.at(rng.Uniform(pool.size()));
      pairs.emplace_back(c.tokens, c.tokens);
      continue;
    }
    try {
      const Secret secret =
          RandomSecret(*cb, eo.secret_len, DeriveSeed(trial_seed, 1));
      auto r = Steganize(secret, *cb, model, pool, DeriveSeed(trial_seed, 2));
      pairs.emplace_back(std::move(r.cover.tokens), std::move(r.stego.tokens));
    } catch (const SteganizationError&) {
      ++failures;
    }
  }
  if (pairs.empty()) throw SteganizationError("no pair could be built", 0);
  const double accuracy =
      DistinguisherAccuracy(model, pairs, DeriveSeed(opts.seed, 0xd157));
  const double n = static_cast<double>(pairs.size());
  const double stderr_half = std::sqrt(0.25 / n);

  json result = {{"pairs", pairs.size()},
                 {"failures", failures},
                 {"accuracy", accuracy},
                 {"advantage", DistinguisherAdvantage(accuracy)},
                 {"chance_standard_error", stderr_half}};
  json doc = Envelope("eval distinguish", opts.seed,
                      {{"trials", eo.trials},
                       {"secret_len", eo.secret_len},
                       {"control", eo.control},
                       {"messages", corpus.size()},
                       {"max_n", model.max_n()}});
  doc["results"] = json::array({result});

  std::ostringstream csv;
  csv.precision(17);
  csv << "pairs,failures,accuracy,advantage,chance_standard_error\n"
      << pairs.size() << ',' << failures << ',' << accuracy << ','
      << DistinguisherAdvantage(accuracy) << ',' << stderr_half << '\n';
  std::ostringstream summary;
  summary << "pairs " << pairs.size() << "\naccuracy " << accuracy
          << "\nadvantage " << DistinguisherAdvantage(accuracy)
          << "\nchance standard error " << stderr_half << '\n';
  Emit(opts, doc, csv.str(), summary.str(), out);
  return kOk;
}

int EvalDecodability(const Shared& opts, const EvalOptions& eo,
                     std::ostream& out) {
  const Codebook cb = Codebook::Load(opts.codebook_path);
  const Corpus corpus = LoadCorpus(opts.corpus_path, opts.limit);
  const NGramModel model = ModelFor(opts, corpus);
  const EvalReport report =
      EstimateDecodability(corpus, model, cb, eo.secret_len,
                           TrialsOf(opts, eo), eo.validate, eo.lambda);
  json doc = Envelope("eval decodability", opts.seed,
                      {{"trials", eo.trials},
                       {"secret_len", eo.secret_len},
                       {"validate", eo.validate},
                       {"lambda", eo.lambda},
                       {"band", cb.band().ToString()},
                       {"messages", corpus.size()},
                       {"max_n", model.max_n()}});
  doc["results"] = json::array({ToJson(report)});

  std::ostringstream csv;
  csv.precision(17);
  csv << "trials,errors,mis_decodes,failures,decodability,mean_density,"
         "kl_nats,distinguisher_accuracy\n"
      << report.trials << ',' << report.errors << ',' << report.mis_decodes
      << ',' << report.failures << ',' << report.decodability << ','
      << report.mean_density << ',' << report.kl_nats << ','
      << report.distinguisher_accuracy << '\n';
  std::ostringstream summary;
  summary << "trials " << report.trials << "\nerrors " << report.errors
          << "\ndecodability " << report.decodability << "\nmean density "
          << report.mean_density << "\nkl_nats " << report.kl_nats
          << "\ndistinguisher accuracy " << report.distinguisher_accuracy
          << '\n';
  Emit(opts, doc, csv.str(), summary.str(), out);
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Linguistic steganography by n-gram guided codeword insertion"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Shared opts;
  std::string band_text;
  std::string alphabet{kDigitAlphabet};
  std::string secret_text;
  bool no_validate = false;
  int max_attempts = kDefaultMaxAttempts;
  std::vector<std::string> text;
  EvalOptions eo;

  auto add_limit = [&opts](CLI::App* cmd) {
    cmd->add_option("--limit", opts.limit, "Read at most this many messages");
  };

  auto* build = app.add_subcommand("build-model", "Count n-grams of a corpus");
  build->add_option("--corpus", opts.corpus_path, "Line-delimited corpus")
      ->required();
  build->add_option("--max-n", opts.max_n, "Highest n-gram order")
      ->capture_default_str();
  build->add_option("--out", opts.out_path, "Model JSON to write")->required();
  add_limit(build);

  auto* gen = app.add_subcommand("gen-codebook",
                                 "Sample a codebook from a frequency band");
  gen->add_option("--model", opts.model_path, "Model JSON")->required();
  gen->add_option("--band", band_text, "Unigram count band, lo-hi or lo+")
      ->required();
  gen->add_option("--alphabet", alphabet, "Secret symbols")
      ->capture_default_str();
  gen->add_option("--seed", opts.seed, "RNG seed")->capture_default_str();
  gen->add_option("--out", opts.out_path, "Codebook JSON to write")
      ->required();

  auto* encode = app.add_subcommand("encode", "Hide a secret in a cover");
  encode->add_option("--secret", secret_text, "Secret symbols")->required();
  encode->add_option("--codebook", opts.codebook_path, "Codebook JSON")
      ->required();
  encode->add_option("--corpus", opts.corpus_path, "Cover corpus")
      ->required();
  encode->add_option("--model", opts.model_path,
                     "Model JSON (built from the corpus when omitted)");
  encode->add_option("--max-n", opts.max_n, "Order when building the model")
      ->capture_default_str();
  encode->add_option("--seed", opts.seed, "RNG seed")->capture_default_str();
  encode->add_option("--max-attempts", max_attempts, "Covers to try")
      ->capture_default_str();
  encode->add_flag("--no-validate", no_validate,
                   "Skip accidental-codeword rejection and round-trip check");
  encode->add_option("--out", opts.out_path, "StegoResult JSON to write");
  add_limit(encode);

  auto* decode = app.add_subcommand("decode", "Extract a secret from text");
  decode->add_option("--codebook", opts.codebook_path, "Codebook JSON")
      ->required();
  decode->add_option("text", text, "Text to decode (stdin when omitted)");

  auto* eval = app.add_subcommand("eval", "Run an experiment");
  eval->require_subcommand(1);
  auto add_eval_common = [&](CLI::App* cmd) {
    cmd->add_option("--corpus", opts.corpus_path, "Cover corpus")->required();
    cmd->add_option("--model", opts.model_path,
                    "Model JSON (built from the corpus when omitted)");
    cmd->add_option("--max-n", opts.max_n, "Order when building the model")
        ->capture_default_str();
    cmd->add_option("--seed", opts.seed, "Master seed")->capture_default_str();
    cmd->add_option("--trials", eo.trials, "Trials per point")
        ->capture_default_str();
    cmd->add_option("--secret-len", eo.secret_len, "Secret length")
        ->capture_default_str();
    cmd->add_option("--workers", eo.workers,
                    "Worker threads (0: one per core); results do not depend "
                    "on it");
    cmd->add_option("--out", opts.out_path,
                    "Output prefix for <out>.json and <out>.csv");
    cmd->add_option("--format", opts.format, "Print json or csv to stdout")
        ->check(CLI::IsMember({"json", "csv"}));
    add_limit(cmd);
  };
  auto* band = eval->add_subcommand("band", "Decode errors per frequency band");
  add_eval_common(band);
  band->add_option("--bands", eo.bands, "Comma-separated bands")
      ->capture_default_str();
  band->add_option("--alphabet", eo.alphabet, "Secret symbols")
      ->capture_default_str();
  auto* validate_flag = band->add_flag(
      "--validate", eo.validate, "Reject covers with accidental codewords");
  band->add_flag("--no-validate", no_validate,
                 "Measure raw decode errors (default)")
      ->excludes(validate_flag);

  auto* density =
      eval->add_subcommand("density", "Word-frequency KL versus density");
  add_eval_common(density);
  density->add_option("--codebook", opts.codebook_path, "Codebook JSON")
      ->required();
  density->add_option("--densities", eo.densities, "Comma-separated targets")
      ->capture_default_str();
  density->add_option("--lambda", eo.lambda, "Additive smoothing")
      ->capture_default_str();
  density->add_option("--kl-order", eo.kl_order, "n-gram order of the KL")
      ->capture_default_str();

  auto* distinguish = eval->add_subcommand(
      "distinguish", "Plausibility distinguisher accuracy on pairs");
  add_eval_common(distinguish);
  distinguish->add_option("--codebook", opts.codebook_path, "Codebook JSON");
  distinguish->add_flag("--control", eo.control,
                        "Use (cover, cover) pairs instead of stegos");

  auto* decodability =
      eval->add_subcommand("decodability", "Decodability, density and "
                                           "detectability estimates");
  add_eval_common(decodability);
  decodability->add_option("--codebook", opts.codebook_path, "Codebook JSON")
      ->required();
  decodability->add_flag("--no-validate", no_validate,
                         "Measure raw decode errors");
  decodability->add_option("--lambda", eo.lambda, "Additive smoothing")
      ->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return BuildModel(opts, out);
    if (*gen) return GenCodebook(opts, band_text, alphabet, out);
    if (*encode) return Encode(opts, secret_text, no_validate, max_attempts, out);
    if (*decode) return DecodeText(opts, text, in, out);
    if (*band) return EvalBand(opts, eo, out);
    if (*density) return EvalDensity(opts, eo, out);
    if (*distinguish) return EvalDistinguish(opts, eo, out);
    if (*decodability) {
      eo.validate = !no_validate;
      return EvalDecodability(opts, eo, out);
    }
  } catch (const InsufficientBandError& e) {
    err << "error: " << e.what() << '\n';
    return kInsufficientBand;
  } catch (const SteganizationError& e) {
    err << "error: " << e.what() << '\n';
    return kSteganizationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lingsteg::cli
