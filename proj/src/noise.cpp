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

#include "bosonbunch/noise.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>

namespace bosonbunch {

namespace {

double choose(int n, int k) {
    double c = 1.0;
    for (int i = 0; i < k; ++i)
        c = c * (n - i) / (i + 1);
    return c;
}

} // namespace

std::pair<double, double> split_brightness(double g2, double brightness) {
    if (g2 < 0.0 || g2 >= 0.5)
        throw DomainError("split_brightness: g2 must lie in [0, 0.5)");
    if (brightness <= 0.0 || brightness > 1.0)
        throw DomainError("split_brightness: brightness must lie in (0, 1]");
    if (g2 == 0.0)
        return {brightness, 0.0};
    const double disc = 1.0 - 2.0 * g2 * brightness;
    if (disc < 0.0)
        throw DomainError("split_brightness: no real solution for these parameters");
    // small root of g2 p2^2 + (2 g2 B - 2) p2 + g2 B^2 = 0, written via the
    // product of roots to dodge the cancellation in the direct formula
    const double p2 = g2 * brightness * brightness /
                      ((1.0 - g2 * brightness) + std::sqrt(disc));
    return {brightness - p2, p2};
}

SourceModel SourceModel::from_g2_brightness(double g2, double brightness, double eta) {
    auto [p1, p2] = split_brightness(g2, brightness);
    SourceModel src;
    src.g2 = g2;
    src.p1 = p1;
    src.p2 = p2;
    src.eta = eta;
    src.validate();
    return src;
}

void SourceModel::validate() const {
    for (double v : {p1, p2, eta})
        if (v < 0.0 || v > 1.0)
            throw DomainError("SourceModel: p1, p2, eta must lie in [0, 1]");
    if (p1 + p2 > 1.0 + 1e-12)
        throw DomainError("SourceModel: p1 + p2 exceeds 1");
    const double implied = 2.0 * p2 / ((p1 + 2.0 * p2) * (p1 + 2.0 * p2));
    if (std::abs(implied - g2) > 1e-9)
        throw DomainError("SourceModel: g2 = " + std::to_string(g2) +
                          " inconsistent with (p1, p2), implied " + std::to_string(implied));
}

SourceModel default_source() {
    return SourceModel::from_g2_brightness(0.017, 0.13, 0.011);
}

OutputDistribution noisy_distribution(const ComplexMatrix& u, const PhotonConfig& cfg,
                                      const GramMatrix& g, const SourceModel& src,
                                      PostSelection rule, double unitary_tol) {
    cfg.validate();
    if (cfg.input_modes.size() != 3)
        throw DomainError("noisy_distribution: modeled for three input slots");
    if (g.dim() != 3)
        throw ShapeError("noisy_distribution: Gram dimension must be 3");
    if (static_cast<std::size_t>(cfg.mode_count) != u.rows())
        throw ShapeError("noisy_distribution: config mode count must match matrix dimension");
    src.validate();
    if (src.eta <= 0.0)
        throw DegenerateError("noisy_distribution: eta = 0 leaves nothing to post-select");
    const double eta = src.eta;
    const double p0 = std::max(0.0, 1.0 - src.p1 - src.p2);
    const double slot_prob[3] = {p0, src.p1, src.p2};

    const int m = cfg.mode_count;
    const auto occupations = enumerate_occupations(3, m);
    std::vector<double> acc(occupations.size(), 0.0);
    double weight_total = 0.0;
    double worst_imag = 0.0;
    bool warn = false;

    // memoize conditionals: key = (sorted photon ids), photon id = slot for a
    // signal, slot + 3 for its noise companion
    std::map<std::vector<int>, OutputDistribution> memo;

    auto conditional = [&](std::vector<int> ids) -> const OutputDistribution& {
        std::sort(ids.begin(), ids.end());
        auto it = memo.find(ids);
        if (it != memo.end())
            return it->second;
        std::vector<int> inputs(3);
        ComplexMatrix gram(3, 3);
        for (int i = 0; i < 3; ++i) {
            inputs[i] = cfg.input_modes[static_cast<std::size_t>(ids[i] % 3)];
            gram(i, i) = 1.0;
            for (int j = i + 1; j < 3; ++j) {
                cxd overlap(0.0, 0.0);
                if (ids[i] < 3 && ids[j] < 3)
                    overlap = g.entry(ids[i], ids[j]);  // two signal photons
                // a noise photon is orthogonal to every other photon
                gram(i, j) = overlap;
                gram(j, i) = std::conj(overlap);
            }
        }
        auto dist = output_distribution_with_inputs(u, inputs, gram, unitary_tol);
        return memo.emplace(std::move(ids), std::move(dist)).first->second;
    };

    auto admit = [&](const std::vector<int>& chosen, double weight) {
        const OutputDistribution& d = conditional(chosen);
        worst_imag = std::max(worst_imag, d.max_imag_residue());
        warn = warn || d.unitary_warning();
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += weight * d.probability(i);
        weight_total += weight;
    };

    // slot emission patterns: 0 nothing, 1 signal, 2 signal + noise
    for (int e0 = 0; e0 < 3; ++e0)
        for (int e1 = 0; e1 < 3; ++e1)
            for (int e2 = 0; e2 < 3; ++e2) {
                const double pw = slot_prob[e0] * slot_prob[e1] * slot_prob[e2];
                if (pw == 0.0)
                    continue;
                std::vector<int> photons;
                const int pattern[3] = {e0, e1, e2};
                for (int slot = 0; slot < 3; ++slot) {
                    if (pattern[slot] >= 1)
                        photons.push_back(slot);
                    if (pattern[slot] == 2)
                        photons.push_back(slot + 3);
                }
                const int k = static_cast<int>(photons.size());
                if (k < 3)
                    continue;

                // survivor subsets, by bitmask over the emitted photons
                for (unsigned mask = 0; mask < (1u << k); ++mask) {
                    const int kept = std::popcount(mask);
                    if (kept < 3)
                        continue;
                    if (rule == PostSelection::exactly_three && kept != 3)
                        continue;
                    const double surv = pw * std::pow(eta, kept) * std::pow(1.0 - eta, k - kept);
                    std::vector<int> survivors;
                    for (int b = 0; b < k; ++b)
                        if (mask & (1u << b))
                            survivors.push_back(photons[static_cast<std::size_t>(b)]);
                    if (kept == 3) {
                        admit(survivors, surv);
                    } else {
                        // detector saturation keeps a uniformly random triple
                        const double share = surv / choose(kept, 3);
                        std::vector<int> triple(3);
                        for (int a = 0; a < kept; ++a)
                            for (int b = a + 1; b < kept; ++b)
                                for (int c = b + 1; c < kept; ++c) {
                                    triple[0] = survivors[static_cast<std::size_t>(a)];
                                    triple[1] = survivors[static_cast<std::size_t>(b)];
                                    triple[2] = survivors[static_cast<std::size_t>(c)];
                                    admit(triple, share);
                                }
                    }
                }
            }

    if (weight_total <= 0.0)
        throw DegenerateError("noisy_distribution: post-selection weight vanished");

    double raw_sum = 0.0;
    for (double v : acc)
        raw_sum += v;
    std::vector<double> probs(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
        probs[i] = acc[i] / raw_sum;

    OutputDistribution dist(m, 3, std::move(probs));
    dist.set_diagnostics(0.0, worst_imag, warn, raw_sum / weight_total);
    return dist;
}

OutputDistribution pseudo_pnr_correction(
    const std::vector<std::pair<std::vector<int>, double>>& raw_counts, double splitter_ratio,
    std::span<const double> mode_efficiency) {
    if (splitter_ratio <= 0.0 || splitter_ratio >= 1.0)
        throw DomainError("pseudo_pnr_correction: splitter ratio must lie in (0, 1)");
    if (raw_counts.empty())
        throw DegenerateError("pseudo_pnr_correction: no counts supplied");

    const std::size_t m = raw_counts.front().first.size();
    int photons = 0;
    for (int c : raw_counts.front().first)
        photons += c;

    double total = 0.0;
    for (const auto& [occ, count] : raw_counts) {
        if (occ.size() != m)
            throw ShapeError("pseudo_pnr_correction: inconsistent occupation length");
        int s = 0;
        for (int c : occ)
            s += c;
        if (s != photons)
            throw ShapeError("pseudo_pnr_correction: occupation vectors mix photon numbers");
        if (count < 0.0)
            throw DomainError("pseudo_pnr_correction: negative count");
        total += count;
    }
    if (total <= 0.0)
        throw DegenerateError("pseudo_pnr_correction: zero total counts");
    if (!mode_efficiency.empty() && mode_efficiency.size() != m)
        throw ShapeError("pseudo_pnr_correction: one efficiency per output mode expected");

    const double r = splitter_ratio;
    auto resolving = [&](int k) -> double {
        switch (k) {
            case 0:
            case 1: return 1.0;
            case 2: return 2.0 * r * (1.0 - r);
            case 3: return 1.0 - r * r * r - (1.0 - r) * (1.0 - r) * (1.0 - r);
            default:
                throw UnsupportedError("pseudo_pnr_correction: more than 3 photons per mode");
        }
    };

    const auto occupations = enumerate_occupations(photons, static_cast<int>(m));
    std::vector<double> weights(occupations.size(), 0.0);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < occupations.size(); ++i)
        index[occupations[i]] = i;

    for (const auto& [occ, count] : raw_counts) {
        double eff = 1.0;
        for (std::size_t j = 0; j < m; ++j) {
            eff *= resolving(occ[j]);
            if (!mode_efficiency.empty())
                eff *= std::pow(mode_efficiency[j], occ[j]);
        }
        auto it = index.find(occ);
        if (it == index.end())
            throw DomainError("pseudo_pnr_correction: invalid occupation vector");
        weights[it->second] += count / eff;
    }

    double wsum = 0.0;
    for (double w : weights)
        wsum += w;
    for (double& w : weights)
        w /= wsum;

    OutputDistribution dist(static_cast<int>(m), photons, std::move(weights));
    dist.set_diagnostics(0.0, 0.0, false, wsum / total);
    return dist;
}

} // namespace bosonbunch
