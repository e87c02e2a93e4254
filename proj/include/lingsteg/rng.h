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

#ifndef LINGSTEG_RNG_H_
#define LINGSTEG_RNG_H_

#include <cstdint>
#include <random>

namespace lingsteg {

// Mixes a master seed with a stream index into an independent child seed
// (SplitMix64 finalizer). Used to give every trial, band and worker its own
// reproducible stream regardless of scheduling.
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream);

// Seeded generator whose outputs are identical on every platform. The
// standard distributions are implementation-defined, so bounded draws are
// done here by rejection sampling on the raw 64-bit engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t Uniform(std::uint64_t bound);

  // Uniform real in [0, 1) with 53 bits of precision.
  double UniformReal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace lingsteg

#endif  // LINGSTEG_RNG_H_
