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

#include <doctest.h>

#include <cmath>

#include "bosonbunch/noise.hpp"
#include "support.hpp"

using namespace bosonbunch;
namespace ts = bosonbunch::testsupport;

namespace {

GramMatrix all_ones_gram3() {
    ComplexMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m(i, j) = 1.0;
    return GramMatrix(std::move(m));
}

} // namespace

TEST_CASE("brightness split") {
    auto [p1, p2] = split_brightness(0.0, 0.4);
    CHECK(p1 == doctest::Approx(0.4));
    CHECK(p2 == 0.0);

    auto [q1, q2] = split_brightness(0.017, 0.13);
    CHECK(q1 + q2 == doctest::Approx(0.13).epsilon(1e-14));
    CHECK(q2 < q1);
    // the defining relation is reproduced exactly
    CHECK(2.0 * q2 / ((q1 + 2 * q2) * (q1 + 2 * q2)) == doctest::Approx(0.017).epsilon(1e-12));
    // noise fraction is first-order small in g2 * brightness
    CHECK(q2 / q1 == doctest::Approx(0.017 * 0.13 / 2.0).epsilon(0.01));

    CHECK_THROWS_AS(split_brightness(0.6, 0.13), DomainError);
    CHECK_THROWS_AS(split_brightness(0.017, 0.0), DomainError);
    CHECK_THROWS_AS(split_brightness(-0.1, 0.5), DomainError);
}

TEST_CASE("source model consistency") {
    const auto src = SourceModel::from_g2_brightness(0.017, 0.13, 0.011);
    CHECK_NOTHROW(src.validate());

    SourceModel bad = src;
    bad.g2 = 0.05;  // no longer matches (p1, p2)
    CHECK_THROWS_AS(bad.validate(), DomainError);

    const auto def = default_source();
    CHECK(def.eta == doctest::Approx(0.011));
    CHECK(def.p1 + def.p2 == doctest::Approx(0.13));
}

TEST_CASE("no noise photons reduces to the exact distribution for any loss") {
    const auto f3 = fourier_matrix(3);
    const auto cfg = PhotonConfig::one_per_mode(3);
    const auto g = gram_from_params({0.5, 0.3, 0.6, 0.5});
    const auto ideal = output_distribution(f3, cfg, g);
    for (double eta : {1.0, 0.3, 0.011}) {
        const auto src = SourceModel::from_g2_brightness(0.0, 0.13, eta);
        const auto noisy = noisy_distribution(f3, cfg, g, src);
        for (std::size_t i = 0; i < ideal.size(); ++i)
            CHECK(std::abs(noisy.probability(i) - ideal.probability(i)) < 1e-15);
    }
}

TEST_CASE("unit transmission with saturated brightness filters the noise out") {
    // every slot fires; an extra photon forces four detections, which the
    // exactly-three rule rejects
    SourceModel src;
    src.p1 = 0.95;
    src.p2 = 0.05;
    src.g2 = 2.0 * src.p2 / ((src.p1 + 2 * src.p2) * (src.p1 + 2 * src.p2));
    src.eta = 1.0;
    const auto f3 = fourier_matrix(3);
    const auto cfg = PhotonConfig::one_per_mode(3);
    const auto g = gram_from_params({0.7, 0.7, 0.7, 0.2});
    const auto ideal = output_distribution(f3, cfg, g);
    const auto noisy = noisy_distribution(f3, cfg, g, src);
    for (std::size_t i = 0; i < ideal.size(); ++i)
        CHECK(std::abs(noisy.probability(i) - ideal.probability(i)) < 1e-12);

    // the at-least-three rule admits those events instead
    const auto loose = noisy_distribution(f3, cfg, g, src, PostSelection::at_least_three);
    CHECK(loose.sum() == doctest::Approx(1.0).epsilon(1e-12));
    double dev = 0.0;
    for (std::size_t i = 0; i < ideal.size(); ++i)
        dev = std::max(dev, std::abs(loose.probability(i) - ideal.probability(i)));
    CHECK(dev > 1e-4);
}

TEST_CASE("noisy distribution is a proper distribution on parameter corners") {
    const auto f3 = fourier_matrix(3);
    const auto cfg = PhotonConfig::one_per_mode(3);
    const auto g = all_ones_gram3();
    for (double g2 : {0.0, 0.017, 0.05})
        for (double eta : {0.005, 0.011, 1.0}) {
            const auto src = SourceModel::from_g2_brightness(g2, 0.13, eta);
            for (auto rule : {PostSelection::exactly_three, PostSelection::at_least_three}) {
                const auto d = noisy_distribution(f3, cfg, g, src, rule);
                CHECK(d.sum() == doctest::Approx(1.0).epsilon(1e-9));
            }
        }
}

TEST_CASE("noise admixture scales linearly with the pair probability") {
    const auto f3 = fourier_matrix(3);
    const auto cfg = PhotonConfig::one_per_mode(3);
    const auto g = all_ones_gram3();
    const auto ideal = output_distribution(f3, cfg, g);

    auto max_dev = [&](double g2) {
        const auto src = SourceModel::from_g2_brightness(g2, 0.13, 0.011);
        const auto d = noisy_distribution(f3, cfg, g, src);
        double dev = 0.0;
        for (std::size_t i = 0; i < ideal.size(); ++i)
            dev = std::max(dev, std::abs(d.probability(i) - ideal.probability(i)));
        return std::pair<double, double>{dev, src.p2};
    };

    const auto [dev_hi, p2_hi] = max_dev(0.02);
    const auto [dev_lo, p2_lo] = max_dev(0.01);
    CHECK(dev_hi < 200.0 * p2_hi);
    // halving p2 roughly halves the deviation
    CHECK(dev_lo / dev_hi == doctest::Approx(p2_lo / p2_hi).epsilon(0.15));
}

TEST_CASE("noise pushes tritter bunching up for identical photons") {
    const auto cfg = PhotonConfig::one_per_mode(3);
    const auto g = all_ones_gram3();
    const auto src = default_source();

    const auto noisy_ideal_u = noisy_distribution(fourier_matrix(3), cfg, g, src);
    CHECK(noisy_ideal_u.p_bunching() > 2.0 / 3.0);
    CHECK(noisy_ideal_u.p_bunching() - 2.0 / 3.0 < 3.0 * src.g2);
    CHECK(noisy_ideal_u.p_full_bunching() < 2.0 / 3.0);

    // with the measured interferometer the prediction approaches the observed
    // high-overlap values (reference point: measured pb 0.713, pfb 0.570)
    const auto gm = gram_from_params({0.897, 0.872, 0.910, -0.0084});
    const auto d = noisy_distribution(measured_tritter(), cfg, gm, src,
                                      PostSelection::exactly_three, 0.1);
    CHECK(std::abs(d.p_bunching() - 0.713) < 0.01);
    CHECK(std::abs(d.p_full_bunching() - 0.570) < 0.01);
    CHECK(d.renorm_factor() != 1.0);
}

TEST_CASE("degenerate post-selection") {
    SourceModel src = default_source();
    src.eta = 0.0;
    CHECK_THROWS_AS(noisy_distribution(fourier_matrix(3), PhotonConfig::one_per_mode(3),
                                       all_ones_gram3(), src),
                    DegenerateError);
}

TEST_CASE("pseudo-number-resolving correction") {
    using Counts = std::vector<std::pair<std::vector<int>, double>>;

    // collision-free bins are untouched
    const Counts free_only = {{{1, 1, 1}, 40.0}, {{1, 1, 1}, 0.0}};
    const auto d0 = pseudo_pnr_correction(free_only, 0.37);
    CHECK(d0.probability_of(std::vector<int>{1, 1, 1}) == doctest::Approx(1.0));

    // a two-photon bin at a balanced split is seen half the time
    const Counts mixed = {{{2, 1, 0}, 10.0}, {{1, 1, 1}, 10.0}};
    const auto d1 = pseudo_pnr_correction(mixed, 0.5);
    CHECK(d1.probability_of(std::vector<int>{2, 1, 0}) == doctest::Approx(2.0 / 3.0));
    CHECK(d1.probability_of(std::vector<int>{1, 1, 1}) == doctest::Approx(1.0 / 3.0));

    // three photons in one mode: all-same-arm events are unresolvable
    const Counts full = {{{3, 0, 0}, 3.0}, {{1, 1, 1}, 1.0}};
    const auto d2 = pseudo_pnr_correction(full, 0.5);
    const double eff3 = 1.0 - 2.0 * 0.125;
    CHECK(d2.probability_of(std::vector<int>{3, 0, 0}) ==
          doctest::Approx((3.0 / eff3) / (3.0 / eff3 + 1.0)));

    // per-mode detection efficiency
    const std::vector<double> eff{0.5, 1.0, 1.0};
    const auto d3 = pseudo_pnr_correction(mixed, 0.5, eff);
    // the (2,1,0) bin loses 0.25 of its counts to the weak mode
    CHECK(d3.probability_of(std::vector<int>{2, 1, 0}) ==
          doctest::Approx((10.0 / (0.5 * 0.25)) / (10.0 / (0.5 * 0.25) + 10.0 / 0.5)));

    CHECK_THROWS_AS(pseudo_pnr_correction(mixed, 0.0), DomainError);
    CHECK_THROWS_AS(pseudo_pnr_correction(mixed, 1.0), DomainError);
    CHECK_THROWS_AS(pseudo_pnr_correction(Counts{}, 0.5), DegenerateError);
    const Counts zeros = {{{1, 1, 1}, 0.0}};
    CHECK_THROWS_AS(pseudo_pnr_correction(zeros, 0.5), DegenerateError);
    const Counts ragged = {{{1, 1, 1}, 1.0}, {{2, 1}, 1.0}};
    CHECK_THROWS_AS(pseudo_pnr_correction(ragged, 0.5), ShapeError);
}
