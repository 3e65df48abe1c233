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

#ifndef BOSONBUNCH_EXPLORE_HPP
#define BOSONBUNCH_EXPLORE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bosonbunch/complex_matrix.hpp"
#include "bosonbunch/noise.hpp"

namespace bosonbunch {

/// Antibunching gap p_dist(1...1) - p_indist(1...1) for one photon per mode:
/// Per(|U|^2) - |Per(U)|^2. For n photons in n modes a negative gap means
/// distinguishable particles bunch more than indistinguishable bosons.
double pb_gap(const ComplexMatrix& u);

/// Gaps below this threshold count as counter-intuitive; numerical zeros do not.
inline constexpr double kCounterIntuitiveThreshold = -1e-12;

struct SearchOffender {
    std::uint64_t trial;
    double gap;
};

struct SearchReport {
    int n = 0;
    std::uint64_t trials = 0;
    RngSeed seed;
    std::uint64_t count = 0;              ///< trials with gap < threshold
    double fraction = 0.0;
    std::vector<SearchOffender> offenders;       ///< every offender, ordered by trial
    std::vector<ComplexMatrix> first_matrices;   ///< matrices of the first 10 offenders

    std::string summary_text() const;   ///< "key: value" lines
};

/// Counts Haar-random n x n unitaries with a counter-intuitive antibunching
/// gap. Deterministic in (seed, trials) regardless of worker count; workers
/// stride over trial indices and aggregation is order-independent.
SearchReport haar_search(int n, std::uint64_t trials, RngSeed seed, int workers = 1);

struct BunchTableRow {
    int n = 0;
    double dist = 0.0;    ///< antibunching probability, distinguishable: n!/n^n
    double indist = 0.0;  ///< antibunching probability, indistinguishable: |Per|^2
    double gap = 0.0;
    double ratio = 0.0;   ///< indist / dist
};

/// Antibunching table for Fourier interferometers of the given orders.
std::vector<BunchTableRow> fourier_table(std::span<const int> n_values);

/// Antibunching table for balanced +-1/sqrt(n) interferometers: power-of-two
/// orders are built internally, any other order must be supplied as a matrix.
/// Supplied matrices are checked for the balanced +-1/sqrt(n) form.
std::vector<BunchTableRow> hadamard_table(std::span<const int> sylvester_orders,
                                          const std::vector<ComplexMatrix>& ingested = {});

/// Envelope of the tritter bunching probability at invariant modulus r and
/// phase phi: (7 - 4 r cos phi + 3 r^{2/3}) / 9 <= p_B <= (8 - 2 r cos phi) / 9.
std::pair<double, double> pb_bounds(double r, double phi);

/// Global extrema of the tritter bunching probability over all preparations.
inline constexpr double kPbMax = 11.0 / 12.0;  ///< at r = 1/8, phi = pi
inline constexpr double kPbMin = 2.0 / 3.0;    ///< at r = 1, phi = 0
Gram3Params pb_max_params();
Gram3Params pb_min_params();

/// Antibunching gap of k parallel tritters, (2/9)^k - (1/3)^k.
double parallel_tritter_gap(int k);

enum class ScanKind { polarization, time_delay, triad, counterfb };

struct ScanRow {
    double param_a = 0.0;  ///< scan coordinate (angle, time amplitude or phase)
    double param_b = 0.0;  ///< secondary coordinate where the family has one
    double d12 = 0.0, d13 = 0.0, d23 = 0.0;
    double dbar = 0.0;
    double r = 0.0;      ///< invariant modulus
    double phi = 0.0;    ///< triad phase, principal value
    double pb = 0.0;     ///< ideal tritter
    double pfb = 0.0;    ///< ideal tritter, total over modes
    bool has_noisy = false;
    double pb_noisy = 0.0;
    double pfb_noisy = 0.0;
};

/// Column names of param_a/param_b for a scan kind, for table output.
std::pair<std::string, std::string> scan_param_names(ScanKind kind);

/**
 * @brief Deterministic preparation scans behind the bunching phenomenology.
 *
 * polarization: x = 1, gamma = 0, state angles (2a, 4a, 0) for a in [0, pi/6];
 *   pairwise overlaps reach 1/4 at the endpoint with triad phase jumping to pi.
 * time_delay:   alpha = beta = gamma = 0, x in [0, 1]; real Gram family.
 * triad:        angles (pi/4 + delta, pi/4 - delta, pi/4) at delta = pi/6;
 *   for each phase the time amplitude is solved (bisection) so every
 *   sqrt(overlap) is 1/2 while the triad phase sweeps (-pi, pi].
 * counterfb:    the triad family continued in delta from pi/6 up to the
 *   average-overlap minimum at fixed (phase, x); exhibits full-bunching
 *   decreasing while the average overlap increases.
 *
 * grid = number of points per scan axis (counterfb uses grid x grid).
 * When with_noisy_model is set each row also carries the prediction for the
 * measured interferometer with the default source model.
 */
std::vector<ScanRow> scan_family(ScanKind kind, int grid = 0, bool with_noisy_model = false);

} // namespace bosonbunch

#endif // BOSONBUNCH_EXPLORE_HPP
