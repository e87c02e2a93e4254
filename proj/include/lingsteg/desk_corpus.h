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

// Synthetic tweet-like corpus for desk-scale experiments and tests. Words
// follow a Zipf law over a fixed vocabulary and each word prefers a few
// successors, so the corpus has bigram and trigram structure. Raw lines carry
// mentions, hashtags, links, capitals and punctuation for the scrubber.

#ifndef LINGSTEG_DESK_CORPUS_H_
#define LINGSTEG_DESK_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lingsteg {

struct DeskCorpusOptions {
  std::size_t messages = 12000;
  std::size_t vocabulary = 6000;
  double zipf_exponent = 1.05;
  // Probability that the next word is one of the current word's successors.
  double follow_probability = 0.5;
  std::size_t successors = 6;
  std::size_t min_length = 4;
  std::size_t max_length = 17;
  std::uint64_t seed = 2020;
};

std::vector<std::string> GenerateDeskCorpus(
    const DeskCorpusOptions& options = {});

}  // namespace lingsteg

#endif  // LINGSTEG_DESK_CORPUS_H_
