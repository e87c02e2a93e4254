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

// Writes the synthetic desk corpus, one raw message per line.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lingsteg/desk_corpus.h"

int main(int argc, char** argv) {
  CLI::App app{"Generate the synthetic desk corpus"};
  lingsteg::DeskCorpusOptions options;
  std::string out_path;
  app.add_option("--out", out_path, "Output file (stdout when omitted)");
  app.add_option("--messages", options.messages, "Number of messages");
  app.add_option("--vocabulary", options.vocabulary, "Vocabulary size");
  app.add_option("--seed", options.seed, "Generator seed");
  CLI11_PARSE(app, argc, argv);

  const auto lines = lingsteg::GenerateDeskCorpus(options);
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  for (const auto& line : lines) out << line << '\n';
  return out ? 0 : 2;
}
