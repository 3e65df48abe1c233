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

#include "bosonbunch/explore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

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
} // namespace

double pb_gap(const ComplexMatrix& u) {
    if (!u.is_square())
        throw ShapeError("pb_gap: matrix must be square");
    return antibunched_probability_distinguishable(u) -
           antibunched_probability_indistinguishable(u);
}

std::string SearchReport::summary_text() const {
    std::ostringstream os;
    os << "n: " << n << "\n"
       << "trials: " << trials << "\n"
       << "seed: " << seed.value << "\n"
       << "count: " << count << "\n"
       << "fraction: " << fraction << "\n"
       << "offenders_reported: " << first_matrices.size() << "\n";
    return os.str();
}

SearchReport haar_search(int n, std::uint64_t trials, RngSeed seed, int workers) {
    if (n < 1)
        throw DomainError("haar_search: dimension must be >= 1");
    if (workers < 1)
        throw DomainError("haar_search: worker count must be >= 1");

    SearchReport report;
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    if (trials == 0)
        return report;

    const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(workers), trials);
    std::vector<std::vector<SearchOffender>> local(w);
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (std::size_t wi = 0; wi < w; ++wi)
        pool.emplace_back([&, wi] {
            for (std::uint64_t t = wi; t < trials; t += w) {
                const ComplexMatrix u = haar_random_unitary(static_cast<std::size_t>(n), seed, t);
                const double gap = pb_gap(u);
                if (gap < kCounterIntuitiveThreshold)
                    local[wi].push_back({t, gap});
            }
        });
    for (auto& th : pool)
        th.join();

    for (auto& chunk : local)
        report.offenders.insert(report.offenders.end(), chunk.begin(), chunk.end());
    std::sort(report.offenders.begin(), report.offenders.end(),
              [](const SearchOffender& a, const SearchOffender& b) { return a.trial < b.trial; });
    report.count = report.offenders.size();
    report.fraction = static_cast<double>(report.count) / static_cast<double>(trials);
    const std::size_t keep = std::min<std::size_t>(10, report.offenders.size());
    report.first_matrices.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i)
        report.first_matrices.push_back(
            haar_random_unitary(static_cast<std::size_t>(n), seed, report.offenders[i].trial));
    return report;
}

namespace {

BunchTableRow antibunch_row(int n, const ComplexMatrix& u) {
    BunchTableRow row;
    row.n = n;
    row.dist = factorial_d(n) / std::pow(static_cast<double>(n), n);
    row.indist = antibunched_probability_indistinguishable(u);
    row.gap = row.dist - row.indist;
    row.ratio = row.indist / row.dist;
    return row;
}

void check_balanced_pm(const ComplexMatrix& u) {
    if (!u.is_square())
        throw DomainError("hadamard_table: ingested matrix must be square");
    const std::size_t n = u.rows();
    const double target = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cxd v = u(i, j);
            if (std::abs(v.imag()) > 1e-9 || std::abs(std::abs(v.real()) - target) > 1e-6)
                throw DomainError("hadamard_table: ingested matrix is not of the balanced "
                                  "+-1/sqrt(n) form");
        }
    if (!u.is_unitary(1e-6))
        throw DomainError("hadamard_table: ingested matrix is not unitary");
}

} // namespace

std::vector<BunchTableRow> fourier_table(std::span<const int> n_values) {
    std::vector<BunchTableRow> rows;
    rows.reserve(n_values.size());
    for (int n : n_values) {
        if (n < 1)
            throw DomainError("fourier_table: orders must be >= 1");
        rows.push_back(antibunch_row(n, fourier_matrix(static_cast<std::size_t>(n))));
    }
    return rows;
}

std::vector<BunchTableRow> hadamard_table(std::span<const int> sylvester_orders,
                                          const std::vector<ComplexMatrix>& ingested) {
    std::vector<BunchTableRow> rows;
    for (int n : sylvester_orders)
        rows.push_back(antibunch_row(n, sylvester_hadamard(static_cast<std::size_t>(n))));
    for (const auto& u : ingested) {
        check_balanced_pm(u);
        rows.push_back(antibunch_row(static_cast<int>(u.rows()), u));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const BunchTableRow& a, const BunchTableRow& b) { return a.n < b.n; });
    return rows;
}

std::pair<double, double> pb_bounds(double r, double phi) {
    if (r < 0.0 || r > 1.0)
        throw DomainError("pb_bounds: invariant modulus must lie in [0, 1]");
    const double rc = r * std::cos(phi);
    const double lower = (7.0 - 4.0 * rc + 3.0 * std::cbrt(r * r)) / 9.0;
    const double upper = (8.0 - 2.0 * rc) / 9.0;
    return {lower, upper};
}

Gram3Params pb_max_params() { return {0.25, 0.25, 0.25, kPi}; }
Gram3Params pb_min_params() { return {1.0, 1.0, 1.0, 0.0}; }

double parallel_tritter_gap(int k) {
    if (k < 1)
        throw DomainError("parallel_tritter_gap: k must be >= 1");
    return std::pow(2.0 / 9.0, k) - std::pow(1.0 / 3.0, k);
}

std::pair<std::string, std::string> scan_param_names(ScanKind kind) {
    switch (kind) {
        case ScanKind::polarization: return {"alpha", ""};
        case ScanKind::time_delay: return {"x", ""};
        case ScanKind::triad: return {"phi_pol", "x"};
        case ScanKind::counterfb: return {"phi_pol", "delta"};
    }
    throw DomainError("unknown scan kind");
}

namespace {

/// Bisect the time amplitude so that the 1-3 overlap hits the target.
double solve_time_amplitude(double alpha, double beta, double gamma, double phi_pol,
                            double target_d13) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const auto s = states_from_prep({alpha, beta, gamma, phi_pol, mid});
        const double d13 = std::norm(s.inner(0, 2));
        (d13 < target_d13 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

ScanRow row_from_states(const InternalStateSet& states, bool with_noisy) {
    const GramMatrix g = gram_from_states(states);
    ScanRow row;
    row.d12 = std::norm(g.entry(0, 1));
    row.d13 = std::norm(g.entry(0, 2));
    row.d23 = std::norm(g.entry(1, 2));
    row.dbar = average_overlap(g);
    const cxd inv = bargmann_invariant(g);
    row.r = std::abs(inv);
    row.phi = triad_phase(g);
    row.pb = tritter_pb_analytic(row.dbar, row.r, row.phi);
    row.pfb = tritter_pfb_analytic_total(row.dbar, row.r, row.phi);
    if (with_noisy) {
        const auto cfg = PhotonConfig::one_per_mode(3);
        const auto d = noisy_distribution(measured_tritter(), cfg, g, default_source(),
                                          PostSelection::exactly_three, 0.1);
        row.has_noisy = true;
        row.pb_noisy = d.p_bunching();
        row.pfb_noisy = d.p_full_bunching();
    }
    return row;
}

} // namespace

std::vector<ScanRow> scan_family(ScanKind kind, int grid, bool with_noisy_model) {
    if (grid < 0)
        throw DomainError("scan_family: grid must be positive");
    std::vector<ScanRow> rows;

    switch (kind) {
        case ScanKind::polarization: {
            const int g = grid > 0 ? grid : 9;
            if (g < 2)
                throw DomainError("scan_family: at least two grid points required");
            for (int i = 0; i < g; ++i) {
                const double a = (kPi / 6.0) * i / (g - 1);
                // state angles run at twice the scan coordinate, so the
                // endpoint lands on pairwise overlaps 1/4 with triad phase pi
                auto states = states_from_prep({2.0 * a, 4.0 * a, 0.0, 0.0, 1.0});
                ScanRow row = row_from_states(states, with_noisy_model);
                row.param_a = a;
                rows.push_back(row);
            }
            break;
        }
        case ScanKind::time_delay: {
            const int g = grid > 0 ? grid : 9;
            if (g < 2)
                throw DomainError("scan_family: at least two grid points required");
            for (int i = 0; i < g; ++i) {
                const double x = static_cast<double>(i) / (g - 1);
                auto states = states_from_prep({0.0, 0.0, 0.0, 0.0, x});
                ScanRow row = row_from_states(states, with_noisy_model);
                row.param_a = x;
                rows.push_back(row);
            }
            break;
        }
        case ScanKind::triad: {
            const int g = grid > 0 ? grid : 9;
            if (g < 2)
                throw DomainError("scan_family: at least two grid points required");
            const double delta = kPi / 6.0;
            for (int i = 0; i < g; ++i) {
                const double phi = -kPi + 2.0 * kPi * i / (g - 1);
                const double x =
                    solve_time_amplitude(kPi / 4.0 + delta, kPi / 4.0 - delta, kPi / 4.0, phi, 0.25);
                auto states =
                    states_from_prep({kPi / 4.0 + delta, kPi / 4.0 - delta, kPi / 4.0, phi, x});
                ScanRow row = row_from_states(states, with_noisy_model);
                row.param_a = phi;
                row.param_b = x;
                rows.push_back(row);
            }
            break;
        }
        case ScanKind::counterfb: {
            const int g = grid > 0 ? grid : 8;
            if (g < 2)
                throw DomainError("scan_family: at least two grid points required");
            for (int i = 0; i < g; ++i) {
                const double phi = kPi * i / (g - 1);
                const double alpha0 = kPi / 4.0 + kPi / 6.0;
                const double beta0 = kPi / 4.0 - kPi / 6.0;
                const double x = solve_time_amplitude(alpha0, beta0, kPi / 4.0, phi, 0.25);
                // the average overlap over delta (at fixed phase and x) is
                // minimized at cos(2 delta) = -x^2 cos(phi) / 2, clamped to
                // the band reachable beyond delta = pi/6
                const double c_star =
                    std::clamp(-x * x * std::cos(phi) / 2.0, 0.0, 0.5);
                const double delta_star = 0.5 * std::acos(c_star);
                const double delta_lo = kPi / 6.0;
                const int steps = delta_star > delta_lo + 1e-12 ? g : 1;
                for (int j = 0; j < steps; ++j) {
                    const double delta =
                        steps == 1 ? delta_lo
                                   : delta_lo + (delta_star - delta_lo) * j / (steps - 1);
                    auto states = states_from_prep(
                        {kPi / 4.0 + delta, kPi / 4.0 - delta, kPi / 4.0, phi, x});
                    ScanRow row = row_from_states(states, with_noisy_model);
                    row.param_a = phi;
                    row.param_b = delta;
                    rows.push_back(row);
                }
            }
            break;
        }
    }
    return rows;
}

} // namespace bosonbunch
