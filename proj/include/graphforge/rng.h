// Copyright 2026 The Graphforge Authors
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

#ifndef GRAPHFORGE_RNG_H
#define GRAPHFORGE_RNG_H

#include <cstdint>
#include <random>

namespace graphforge {

/// Seeded random source passed explicitly to every stochastic operation.
///
/// Uniform doubles are built from the top 53 bits of the engine output so that
/// streams are identical across standard library implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        return uniform() < p;
    }

    bool coin() {
        return (engine_() >> 63) != 0;
    }

    /// Uniform integer in [0, n). Requires n > 0.
    uint64_t below(uint64_t n) {
        // Rejection sampling keeps the distribution exact.
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % n;
    }

   private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to derive independent per-trial seeds.
inline uint64_t mix_seed(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for trial `index` of a run rooted at `root`. Independent of thread
/// count and completion order.
inline uint64_t trial_seed(uint64_t root, uint64_t index) {
    return mix_seed(mix_seed(root) ^ (index * 0xD1B54A32D192ED03ULL + 1));
}

}  // namespace graphforge

#endif
