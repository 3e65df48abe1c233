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

#include "bosonbunch/interference.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "bosonbunch/permanent.hpp"

namespace bosonbunch {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double factorial_d(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

void PhotonConfig::validate() const {
    if (input_modes.empty())
        throw DomainError("PhotonConfig: at least one photon required");
    if (mode_count <= 0)
        throw DomainError("PhotonConfig: mode count must be positive");
    for (std::size_t k = 0; k < input_modes.size(); ++k) {
        if (input_modes[k] < 0 || input_modes[k] >= mode_count)
            throw DomainError("PhotonConfig: input mode out of range");
        if (k > 0 && input_modes[k] <= input_modes[k - 1])
            throw DomainError("PhotonConfig: input modes must be strictly increasing "
                              "(one photon per input mode)");
    }
}

PhotonConfig PhotonConfig::one_per_mode(int n) {
    PhotonConfig cfg;
    cfg.mode_count = n;
    cfg.input_modes.resize(static_cast<std::size_t>(n));
    std::iota(cfg.input_modes.begin(), cfg.input_modes.end(), 0);
    return cfg;
}

std::vector<std::vector<int>> enumerate_occupations(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(m), 0);
    // descending first-mode count yields lexicographically decreasing order
    auto rec = [&](auto&& self, int slot, int left) -> void {
        if (slot == m - 1) {
            cur[static_cast<std::size_t>(slot)] = left;
            out.push_back(cur);
            return;
        }
        for (int c = left; c >= 0; --c) {
            cur[static_cast<std::size_t>(slot)] = c;
            self(self, slot + 1, left - c);
        }
    };
    rec(rec, 0, n);
    return out;
}

OutputDistribution::OutputDistribution(int modes, int photons, std::vector<double> probabilities)
    : modes_(modes), photons_(photons), occupations_(enumerate_occupations(photons, modes)),
      probs_(std::move(probabilities)) {
    if (probs_.size() != occupations_.size())
        throw ShapeError("OutputDistribution: probability count does not match outcome count");
}

double OutputDistribution::probability_of(std::span<const int> occ) const {
    if (occ.size() != static_cast<std::size_t>(modes_))
        throw ShapeError("occupation vector length must equal mode count");
    for (std::size_t i = 0; i < occupations_.size(); ++i)
        if (std::equal(occ.begin(), occ.end(), occupations_[i].begin()))
            return probs_[i];
    throw DomainError("occupation vector does not sum to the photon number");
}

double OutputDistribution::p_bunching() const {
    double collision_free = 0.0;
    for (std::size_t i = 0; i < occupations_.size(); ++i) {
        bool free_of_collisions = true;
        for (int c : occupations_[i])
            if (c > 1) {
                free_of_collisions = false;
                break;
            }
        if (free_of_collisions)
            collision_free += probs_[i];
    }
    return 1.0 - collision_free;
}

double OutputDistribution::p_full_bunching() const {
    double total = 0.0;
    for (int mode = 0; mode < modes_; ++mode)
        total += p_full_bunching_mode(mode);
    return total;
}

double OutputDistribution::p_full_bunching_mode(int mode) const {
    std::vector<int> occ(static_cast<std::size_t>(modes_), 0);
    occ[static_cast<std::size_t>(mode)] = photons_;
    return probability_of(occ);
}

double OutputDistribution::sum() const {
    double s = 0.0;
    for (double p : probs_)
        s += p;
    return s;
}

void OutputDistribution::set_diagnostics(double clamped_mass, double max_imag_residue,
                                         bool unitary_warning, double renorm_factor) {
    clamped_mass_ = clamped_mass;
    max_imag_residue_ = max_imag_residue;
    unitary_warning_ = unitary_warning;
    renorm_factor_ = renorm_factor;
}

OutputDistribution output_distribution_with_inputs(const ComplexMatrix& u,
                                                   const std::vector<int>& input_modes,
                                                   const ComplexMatrix& gram, double unitary_tol) {
    if (!u.is_square())
        throw ShapeError("output_distribution: transfer matrix must be square");
    const int m = static_cast<int>(u.rows());
    const std::size_t n = input_modes.size();
    if (gram.rows() != n || gram.cols() != n)
        throw ShapeError("output_distribution: Gram dimension must equal photon number");
    if (static_cast<int>(n) > kMaxPhotonsFullDistribution || m > kMaxModesFullDistribution)
        throw SizeLimitError("output_distribution: full distributions are capped at " +
                             std::to_string(kMaxPhotonsFullDistribution) + " photons over " +
                             std::to_string(kMaxModesFullDistribution) + " modes");
    for (int mode : input_modes)
        if (mode < 0 || mode >= m)
            throw DomainError("output_distribution: input mode out of range");

    const bool warn = u.unitarity_defect() > unitary_tol;

    const auto perms = all_permutations(n);
    const std::size_t np = perms.size();

    // The Gram factor of each permutation pair is outcome-independent. The
    // summand pairs the unconjugated transfer amplitudes of permutation a
    // with <psi_{t(k)} | psi_{s(k)}>, i.e. the Gram entry indexed (b, a);
    // the opposite pairing would evaluate the conjugate Gram and flip the
    // sign of the triad phase against the Fock-expansion oracle.
    std::vector<cxd> gram_prod(np * np);
    for (std::size_t a = 0; a < np; ++a)
        for (std::size_t b = 0; b < np; ++b) {
            cxd p(1.0, 0.0);
            for (std::size_t k = 0; k < n; ++k)
                p *= gram(perms[b][k], perms[a][k]);
            gram_prod[a * np + b] = p;
        }

    const auto occupations = enumerate_occupations(static_cast<int>(n), m);
    std::vector<double> probs(occupations.size(), 0.0);
    double clamped = 0.0;
    double imag_residue = 0.0;

    std::vector<int> assignment(n);
    std::vector<cxd> amp(np);
    for (std::size_t oi = 0; oi < occupations.size(); ++oi) {
        const auto& occ = occupations[oi];
        std::size_t pos = 0;
        double norm = 1.0;
        for (int mode = 0; mode < m; ++mode) {
            norm *= factorial_d(occ[static_cast<std::size_t>(mode)]);
            for (int c = 0; c < occ[static_cast<std::size_t>(mode)]; ++c)
                assignment[pos++] = mode;
        }

        // P = (1/norm) sum_{a,b} gram_prod[a][b] * amp_a * conj(amp_b)
        for (std::size_t a = 0; a < np; ++a) {
            cxd prod(1.0, 0.0);
            for (std::size_t k = 0; k < n; ++k)
                prod *= u(static_cast<std::size_t>(input_modes[perms[a][k]]),
                          static_cast<std::size_t>(assignment[k]));
            amp[a] = prod;
        }
        cxd val(0.0, 0.0);
        for (std::size_t a = 0; a < np; ++a) {
            const cxd amp_a = amp[a];
            for (std::size_t b = 0; b < np; ++b)
                val += gram_prod[a * np + b] * amp_a * std::conj(amp[b]);
        }
        val /= norm;
        imag_residue = std::max(imag_residue, std::abs(val.imag()));
        double p = val.real();
        if (p < 0.0) {
            clamped += -p;
            p = 0.0;
        }
        probs[oi] = p;
    }

    OutputDistribution dist(m, static_cast<int>(n), std::move(probs));
    dist.set_diagnostics(clamped, imag_residue, warn);
    return dist;
}

OutputDistribution output_distribution(const ComplexMatrix& u, const PhotonConfig& cfg,
                                       const GramMatrix& g, double unitary_tol) {
    cfg.validate();
    if (static_cast<std::size_t>(cfg.mode_count) != u.rows())
        throw ShapeError("output_distribution: config mode count must match the matrix dimension");
    if (g.dim() != cfg.input_modes.size())
        throw ShapeError("output_distribution: Gram dimension must equal photon number");
    return output_distribution_with_inputs(u, cfg.input_modes, g.matrix(), unitary_tol);
}

OutputDistribution fock_oracle_distribution(const ComplexMatrix& u, const PhotonConfig& cfg,
                                            const InternalStateSet& states) {
    cfg.validate();
    const std::size_t n = cfg.input_modes.size();
    if (static_cast<int>(n) > kMaxPhotonsOracle)
        throw SizeLimitError("fock_oracle_distribution: capped at " +
                             std::to_string(kMaxPhotonsOracle) + " photons");
    if (states.count() != n)
        throw ShapeError("fock_oracle_distribution: one internal state per photon");
    if (static_cast<std::size_t>(cfg.mode_count) != u.rows())
        throw ShapeError("fock_oracle_distribution: config mode count must match matrix dimension");
    states.validate();

    const std::size_t m = u.rows();
    const std::size_t r = states.dim();
    const std::size_t labels = m * r;  // flattened (mode, internal) label

    // Accumulate the amplitude of each creation-operator multiset.
    std::map<std::vector<int>, cxd> amplitudes;
    std::vector<std::size_t> choice(n, 0);
    std::vector<int> key(n);
    while (true) {
        cxd amp(1.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t q = choice[k] / r;
            const std::size_t s = choice[k] % r;
            amp *= u(static_cast<std::size_t>(cfg.input_modes[k]), q) * states.amplitude(k, s);
            key[k] = static_cast<int>(choice[k]);
        }
        if (amp != cxd(0.0, 0.0)) {
            std::vector<int> sorted_key = key;
            std::sort(sorted_key.begin(), sorted_key.end());
            amplitudes[sorted_key] += amp;
        }
        std::size_t pos = 0;
        while (pos < n && ++choice[pos] == labels) {
            choice[pos] = 0;
            ++pos;
        }
        if (pos == n)
            break;
    }

    const auto occupations = enumerate_occupations(static_cast<int>(n), static_cast<int>(m));
    std::vector<double> probs(occupations.size(), 0.0);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < occupations.size(); ++i)
        index[occupations[i]] = i;

    for (const auto& [multiset, amp] : amplitudes) {
        // bosonic normalization: each repeated label contributes a factorial
        double weight = 1.0;
        std::size_t run = 1;
        for (std::size_t k = 1; k <= multiset.size(); ++k) {
            if (k < multiset.size() && multiset[k] == multiset[k - 1]) {
                ++run;
            } else {
                weight *= factorial_d(static_cast<int>(run));
                run = 1;
            }
        }
        std::vector<int> occ(m, 0);
        for (int label : multiset)
            occ[static_cast<std::size_t>(label) / r] += 1;
        probs[index.at(occ)] += weight * std::norm(amp);
    }

    OutputDistribution dist(static_cast<int>(m), static_cast<int>(n), std::move(probs));
    dist.set_diagnostics(0.0, 0.0, !u.is_unitary(1e-10));
    return dist;
}

double antibunched_probability_indistinguishable(const ComplexMatrix& u) {
    return std::norm(permanent_ryser(u));
}

double antibunched_probability_distinguishable(const ComplexMatrix& u) {
    return permanent_ryser(u.abs_squared()).real();
}

double tritter_pb_analytic(double dbar, double r, double phi) {
    return 1.0 + (3.0 * dbar - 4.0 * std::cos(phi) * r - 2.0) / 9.0;
}

double tritter_pfb_analytic_per_mode(double dbar, double r, double phi) {
    return (1.0 + 3.0 * dbar + 2.0 * std::cos(phi) * r) / 27.0;
}

double tritter_pfb_analytic_total(double dbar, double r, double phi) {
    return 3.0 * tritter_pfb_analytic_per_mode(dbar, r, phi);
}

double fb_ratio(const GramMatrix& g1, const GramMatrix& g2) {
    if (g1.dim() != g2.dim())
        throw ShapeError("fb_ratio: Gram matrices must have equal dimension");
    const cxd per1 = permanent_ryser(g1.matrix());
    const cxd per2 = permanent_ryser(g2.matrix());
    if (std::abs(per2) < 1e-12)
        throw DegenerateError("fb_ratio: denominator Gram permanent vanishes");
    return per1.real() / per2.real();
}

cxd extract_bargmann(const OutputDistribution& d) {
    if (d.modes() != 3 || d.photons() != 3)
        throw UnsupportedError("extract_bargmann: defined for 3 photons in 3 modes");
    auto p = [&](int a, int b, int c) {
        const int occ[3] = {a, b, c};
        return d.probability_of(occ);
    };
    // Which cyclic outcome class multiplies which cube root of unity depends
    // on the transfer-matrix orientation; this assignment is the one that
    // recovers the invariant (rather than its conjugate) under this
    // engine's conventions, verified against bargmann_invariant.
    const double pa = p(1, 1, 1) + p(3, 0, 0) + p(0, 3, 0) + p(0, 0, 3);
    const double pb = p(1, 2, 0) + p(0, 1, 2) + p(2, 0, 1);
    const double pc = p(0, 2, 1) + p(2, 1, 0) + p(1, 0, 2);
    const cxd w(std::cos(2.0 * kPi / 3.0), std::sin(2.0 * kPi / 3.0));
    return pa + pb * w + pc * w * w;
}

} // namespace bosonbunch
