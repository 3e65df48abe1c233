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

#ifndef BOSONBUNCH_TESTS_SUPPORT_HPP
#define BOSONBUNCH_TESTS_SUPPORT_HPP

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "bosonbunch/gram.hpp"
#include "bosonbunch/rng.hpp"

namespace bosonbunch::testsupport {

inline constexpr double kTestPi = 3.14159265358979323846264338327950288;

/// Uniform draw of realizable three-photon parameters: overlaps uniform in
/// [0,1] (rejecting triples outside the realizable region), phase uniform
/// over the admissible interval at those overlaps.
inline Gram3Params random_feasible_params(TrialStream& rng) {
    while (true) {
        const double d12 = rng.uniform01();
        const double d13 = rng.uniform01();
        const double d23 = rng.uniform01();
        const double x = std::sqrt(d12), y = std::sqrt(d13), z = std::sqrt(d23);
        double phi_max = kTestPi;
        if (x > 0.0 && y > 0.0 && z > 0.0) {
            const double raw = (x * x + y * y + z * z - 1.0) / (2.0 * x * y * z);
            if (raw > 1.0)
                continue;  // no phase realizes these overlaps
            if (raw > -1.0)
                phi_max = std::acos(raw);
        }
        const double phi = (2.0 * rng.uniform01() - 1.0) * phi_max;
        return {d12, d13, d23, phi};
    }
}

/// Random unit-norm internal states of dimension r.
inline InternalStateSet random_states(TrialStream& rng, std::size_t count, std::size_t dim) {
    InternalStateSet s(count, dim);
    for (std::size_t i = 0; i < count; ++i) {
        double norm = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            const cxd v(rng.gaussian(), rng.gaussian());
            s.amplitude(i, k) = v;
            norm += std::norm(v);
        }
        norm = std::sqrt(norm);
        for (std::size_t k = 0; k < dim; ++k)
            s.amplitude(i, k) /= norm;
    }
    return s;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Scratch-file path under the system temp directory, so test artifacts never
/// land in the working tree regardless of where the binary is launched.
inline std::string scratch(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace bosonbunch::testsupport

#endif // BOSONBUNCH_TESTS_SUPPORT_HPP
