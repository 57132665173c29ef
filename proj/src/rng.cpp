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

#include "designlab/rng.hpp"

#include <cmath>

namespace designlab {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng::Rng(uint64_t seed, uint64_t stream) {
    uint64_t s = splitmix64(seed) ^ splitmix64(stream ^ 0xD1B54A32D192ED03ULL);
    uint64_t a = splitmix64(s);
    uint64_t b = splitmix64(a);
    std::seed_seq seq{uint32_t(a), uint32_t(a >> 32), uint32_t(b), uint32_t(b >> 32)};
    engine_.seed(seq);
}

uint64_t Rng::below(uint64_t n) {
    // Rejection keeps the draw unbiased.
    uint64_t limit = n == 0 ? 0 : UINT64_MAX - (UINT64_MAX % n);
    while (true) {
        uint64_t r = engine_();
        if (r < limit) {
            return r % n;
        }
    }
}

double Rng::uniform() {
    return double(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    return normal_(engine_);
}

std::complex<double> Rng::complex_normal() {
    double re = normal();
    double im = normal();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
}

}  // namespace designlab
