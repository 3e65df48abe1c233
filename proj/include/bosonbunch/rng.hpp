/*
 * Copyright 2026 bosonbunch developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BOSONBUNCH_RNG_HPP
#define BOSONBUNCH_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace bosonbunch {

/// Strong type for reproducibility seeds. Identical seed + identical trial
/// index yields identical samples, independent of worker count.
struct RngSeed {
    std::uint64_t value = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace detail

/**
 * @brief Deterministic random stream keyed by (seed, trial).
 *
 * Each (seed, trial) pair owns an independent generator, so callers may
 * partition trials over threads in any order without changing the samples.
 * Gaussians are produced by an explicit Box-Muller transform rather than
 * std::normal_distribution, whose output sequence is implementation-defined.
 */
class TrialStream {
  public:
    TrialStream(RngSeed seed, std::uint64_t trial)
        : gen_(detail::splitmix64(detail::splitmix64(seed.value) ^ (trial + 0x51ab2cd9d3e4f601ULL))) {}

    /// Uniform in (0, 1), 53-bit resolution, never exactly 0.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace bosonbunch

#endif // BOSONBUNCH_RNG_HPP
