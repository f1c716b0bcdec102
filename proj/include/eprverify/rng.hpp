// Copyright 2026 The eprverify Authors
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

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace eprverify {

/// Seeded PRNG for reproducible simulations.
///
/// Wraps std::mt19937_64 but performs all range reduction itself
/// (mask-and-reject for integers, 53-bit shift for doubles, Box-Muller for
/// normals), so identical seeds give identical streams on every platform and
/// standard library. This is what makes the byte-identical results contract
/// of the CLI hold.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() {
        return engine_();
    }

    /// One uniformly random bit.
    uint8_t bit() {
        return static_cast<uint8_t>(next_u64() >> 63);
    }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). n must be positive.
    uint64_t uniform_below(uint64_t n) {
        if (n == 0) {
            return 0;
        }
        uint64_t mask = ~uint64_t{0} >> __builtin_clzll(n | 1);
        while (true) {
            uint64_t v = next_u64() & mask;
            if (v < n) {
                return v;
            }
        }
    }

    /// Standard normal via Box-Muller (two uniforms per call, no cached spare).
    double normal(double mean = 0.0, double stddev = 1.0) {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 < 1e-300) {
            u1 = 1e-300;
        }
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(2.0 * M_PI * u2);
    }

  private:
    std::mt19937_64 engine_;
};

/// One round of the splitmix64 output mix.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-based seed split: trial i of a run with master seed s gets
/// derive_seed(s, i), so any trial is reproducible in isolation.
inline uint64_t derive_seed(uint64_t master, uint64_t counter) {
    return splitmix64(splitmix64(master) ^ splitmix64(counter + 0x633D5C4A6F1E29B7ULL));
}

}  // namespace eprverify
