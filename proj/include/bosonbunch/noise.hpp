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

#ifndef BOSONBUNCH_NOISE_HPP
#define BOSONBUNCH_NOISE_HPP

#include <span>
#include <utility>
#include <vector>

#include "bosonbunch/interference.hpp"

namespace bosonbunch {

/**
 * @brief Quantum-dot source noise parameters.
 *
 * Per trigger a time bin holds one photon with probability p1 and a second,
 * internally orthogonal noise photon with probability p2. The second-order
 * correlation is tied to the split by g2 = 2 p2 / (p1 + 2 p2)^2, which
 * vanishes with p2 as a single-photon correlation must. eta is the per-photon
 * end-to-end transmission.
 */
struct SourceModel {
    double g2 = 0.0;
    double p1 = 1.0;
    double p2 = 0.0;
    double eta = 0.011;

    static SourceModel from_g2_brightness(double g2, double brightness, double eta = 0.011);
    void validate() const;
};

/// Default parameters of the characterized source (correlation, fibered
/// brightness, overall transmission budget).
SourceModel default_source();

/// Solves g2 = 2 p2 / (p1 + 2 p2)^2 together with p1 + p2 = brightness.
/// Requires g2 in [0, 0.5) and brightness in (0, 1]; returns (p1, p2), p2 <= p1.
std::pair<double, double> split_brightness(double g2, double brightness);

/// Post-selection rule for the number of photons surviving transmission.
/// With more than three survivors, at_least_three keeps a uniformly random
/// three-photon subset (the extra photon is lost in detection).
enum class PostSelection { exactly_three, at_least_three };

/**
 * @brief Noise-corrected output distribution under three-fold post-selection.
 *
 * Enumerates the emission pattern of each input slot (nothing / signal /
 * signal + orthogonal noise photon), applies balanced per-photon loss eta,
 * post-selects on three surviving photons and mixes the conditional
 * distributions. Noise photons share the input mode of their signal photon.
 * The result is renormalized; the factor is recorded on the distribution.
 */
OutputDistribution noisy_distribution(const ComplexMatrix& u, const PhotonConfig& cfg,
                                      const GramMatrix& g, const SourceModel& src,
                                      PostSelection rule = PostSelection::exactly_three,
                                      double unitary_tol = 1e-10);

/**
 * @brief Unbias measured click patterns for pseudo-number-resolved detection.
 *
 * Each output mode is split over a two-detector pair with the given ratio;
 * k photons in one mode are resolved with probability 1 (k <= 1),
 * 2 r (1 - r) (k = 2) or 1 - r^3 - (1-r)^3 (k = 3, all-same-arm events are
 * unresolvable). Counts are divided by the resolving probability and
 * renormalized. An optional per-mode detection efficiency vector corrects
 * arm imbalance (uniform by default).
 */
OutputDistribution pseudo_pnr_correction(
    const std::vector<std::pair<std::vector<int>, double>>& raw_counts, double splitter_ratio,
    std::span<const double> mode_efficiency = {});

} // namespace bosonbunch

#endif // BOSONBUNCH_NOISE_HPP
