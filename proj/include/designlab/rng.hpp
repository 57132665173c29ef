// Copyright 2026 The designlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DESIGNLAB_RNG_HPP
#define DESIGNLAB_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace designlab {

uint64_t splitmix64(uint64_t x);

// Seeded stream. Streams with the same (seed, stream) pair produce identical
// sequences, and distinct stream ids give statistically independent sequences.
class Rng {
   public:
    explicit Rng(uint64_t seed, uint64_t stream = 0);

    uint64_t bits() { return engine_(); }
    // Uniform in [0, n).
    uint64_t below(uint64_t n);
    double uniform();
    double normal();
    // Standard complex Gaussian, E|z|^2 = 1.
    std::complex<double> complex_normal();

    std::mt19937_64 &engine() { return engine_; }

   private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace designlab

#endif
