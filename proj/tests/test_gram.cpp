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

#include "bosonbunch/gram.hpp"
#include "support.hpp"

using namespace bosonbunch;
namespace ts = bosonbunch::testsupport;
using ts::kTestPi;

TEST_CASE("gram_from_params construction and feasibility") {
    const auto all_ones = gram_from_params({1, 1, 1, 0});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(std::abs(all_ones.entry(i, j) - cxd(1, 0)) < 1e-15);

    // boundary of the always-allowed region: balanced overlaps 1/4 at phase pi
    const auto boundary = gram_from_params({0.25, 0.25, 0.25, kTestPi});
    CHECK(boundary.min_eigenvalue() >= -1e-10);
    CHECK(std::abs(boundary.entry(1, 2) - cxd(-0.5, 0.0)) < 1e-12);

    CHECK_THROWS_AS(gram_from_params({0.81, 0.81, 0.81, kTestPi}), FeasibilityError);
    CHECK_THROWS_AS(gram_from_params({1.2, 0.5, 0.5, 0}), DomainError);
    CHECK_THROWS_AS(gram_from_params({-0.1, 0.5, 0.5, 0}), DomainError);
}

TEST_CASE("GramMatrix validation") {
    // not Hermitian
    ComplexMatrix bad = {{1, cxd(0.5, 0.1), 0}, {cxd(0.5, 0.1), 1, 0}, {0, 0, 1}};
    CHECK_THROWS_AS((GramMatrix{bad}), FeasibilityError);
    // diagonal off
    ComplexMatrix diag = {{1.1, 0}, {0, 1}};
    CHECK_THROWS_AS((GramMatrix{diag}), FeasibilityError);
    // valid identity
    CHECK_NOTHROW(GramMatrix(ComplexMatrix::identity(4)));
}

TEST_CASE("triad phase bound") {
    CHECK(!triad_phase_bound(0.5, 0.5, 0.5).has_value());   // bound hits -1
    CHECK(!triad_phase_bound(0.0, 0.7, 0.7).has_value());   // vanishing product: pure gauge

    const auto b6 = triad_phase_bound(0.6, 0.6, 0.6);
    REQUIRE(b6.has_value());
    CHECK(*b6 == doctest::Approx(std::acos((3 * 0.36 - 1) / (2 * 0.216))).epsilon(1e-12));
    CHECK(*b6 == doctest::Approx(1.3845).epsilon(1e-3));

    const auto b1 = triad_phase_bound(1, 1, 1);
    REQUIRE(b1.has_value());
    CHECK(*b1 == doctest::Approx(0.0));

    CHECK_THROWS_AS(triad_phase_bound(1.5, 0.5, 0.5), DomainError);
}

TEST_CASE("phase bound sits on the rank boundary") {
    TrialStream rng(RngSeed{31}, 0);
    for (int k = 0; k < 200; ++k) {
        const double x = 0.55 + 0.4 * rng.uniform01();
        const double y = 0.55 + 0.4 * rng.uniform01();
        const double z = 0.55 + 0.4 * rng.uniform01();
        const double raw = (x * x + y * y + z * z - 1.0) / (2.0 * x * y * z);
        if (raw <= -1.0 || raw > 1.0)
            continue;  // boundary phase only meaningful inside the droplet
        const auto bound = triad_phase_bound(x, y, z);
        REQUIRE(bound.has_value());
        const double det = 1.0 + 2.0 * x * y * z * std::cos(*bound) - x * x - y * y - z * z;
        CHECK(std::abs(det) < 1e-9);
    }
}

TEST_CASE("cholesky realization") {
    const auto ortho = cholesky_realize(GramMatrix(ComplexMatrix::identity(3)));
    CHECK(ortho.dim() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(std::abs(ortho.inner(i, j) - (i == j ? cxd(1, 0) : cxd(0, 0))) < 1e-12);

    const auto same = cholesky_realize(gram_from_params({1, 1, 1, 0}));
    CHECK(same.dim() == 1);  // three identical vectors span one dimension
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(std::abs(same.inner(i, j) - cxd(1, 0)) < 1e-12);

    // rank-deficient boundary: last state confined to the plane of the others
    const auto rank2 = cholesky_realize(gram_from_params({0.25, 0.25, 0.25, kTestPi}));
    CHECK(rank2.dim() == 2);
    const auto back = gram_from_states(rank2);
    CHECK(std::abs(back.entry(1, 2) - cxd(-0.5, 0)) < 1e-9);
}

TEST_CASE("realization round trip over random feasible parameters") {
    TrialStream rng(RngSeed{77}, 0);
    for (int k = 0; k < 1000; ++k) {
        const auto params = ts::random_feasible_params(rng);
        const auto g = gram_from_params(params);
        const auto states = cholesky_realize(g);
        double dev = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                dev = std::max(dev, std::abs(states.inner(i, j) - g.entry(i, j)));
        CHECK(dev < 1e-9);
    }
}

TEST_CASE("state preparation family") {
    // identical states
    const auto same = states_from_prep({0, 0, 0, 0, 1});
    const auto g_same = gram_from_states(same);
    CHECK(average_overlap(g_same) == doctest::Approx(1.0).epsilon(1e-12));

    // pure time-delay preparation: first pair stays identical
    const auto timeonly = states_from_prep({0, 0, 0, 0, 0.5});
    const auto g_time = gram_from_states(timeonly);
    CHECK(std::norm(g_time.entry(0, 1)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::norm(g_time.entry(0, 2)) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::norm(g_time.entry(1, 2)) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(triad_phase(g_time) == doctest::Approx(0.0));

    // balanced sqrt-overlap 1/2 family: solve x for each phase
    const double alpha = kTestPi / 4 + kTestPi / 6;
    const double beta = kTestPi / 4 - kTestPi / 6;
    for (double phi : {0.0, 0.9, 2.2, kTestPi}) {
        double lo = 0, hi = 1;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            const auto s = states_from_prep({alpha, beta, kTestPi / 4, phi, mid});
            (std::norm(s.inner(0, 2)) < 0.25 ? lo : hi) = mid;
        }
        const auto s = states_from_prep({alpha, beta, kTestPi / 4, phi, 0.5 * (lo + hi)});
        const auto g = gram_from_states(s);
        CHECK(std::abs(std::abs(g.entry(0, 1)) - 0.5) < 1e-9);
        CHECK(std::abs(std::abs(g.entry(0, 2)) - 0.5) < 1e-9);
        CHECK(std::abs(std::abs(g.entry(1, 2)) - 0.5) < 1e-9);
    }

    CHECK_THROWS_AS(states_from_prep({0, 0, 0, 0, 1.5}), DomainError);
}

TEST_CASE("states always produce a PSD gram") {
    TrialStream rng(RngSeed{13}, 2);
    for (int k = 0; k < 300; ++k) {
        const auto states = ts::random_states(rng, 3, 3);
        const auto g = gram_from_states(states);
        CHECK(g.min_eigenvalue() >= -1e-12);
    }
    for (int k = 0; k < 100; ++k) {
        const auto prep = states_from_prep({rng.gaussian(), rng.gaussian(), rng.gaussian(),
                                            rng.gaussian(), rng.uniform01()});
        CHECK(gram_from_states(prep).min_eigenvalue() >= -1e-12);
    }
}

TEST_CASE("bargmann invariant") {
    CHECK(std::abs(bargmann_invariant(gram_from_params({1, 1, 1, 0})) - cxd(1, 0)) < 1e-12);

    const auto inv = bargmann_invariant(gram_from_params({0.25, 0.25, 0.25, kTestPi}));
    CHECK(std::abs(inv - cxd(-0.125, 0.0)) < 1e-12);

    TrialStream rng(RngSeed{3}, 9);
    for (int k = 0; k < 200; ++k) {
        const auto p = ts::random_feasible_params(rng);
        const auto g = gram_from_params(p);
        const cxd v = bargmann_invariant(g);
        CHECK(std::abs(std::abs(v) - std::sqrt(p.d12 * p.d13 * p.d23)) < 1e-12);
        if (std::abs(v) > 1e-9)
            CHECK(std::abs(wrap_angle(std::arg(v) - p.phi)) < 1e-12);
    }

    CHECK_THROWS_AS(bargmann_invariant(GramMatrix(ComplexMatrix::identity(4))), UnsupportedError);
}

TEST_CASE("average overlap") {
    CHECK(average_overlap(gram_from_params({1, 1, 1, 0})) == doctest::Approx(1.0));
    CHECK(average_overlap(GramMatrix(ComplexMatrix::identity(3))) == doctest::Approx(0.0));
    CHECK(average_overlap(gram_from_params({0.25, 0.25, 0.25, 0})) == doctest::Approx(0.25));
}

TEST_CASE("visibility to overlap correction") {
    CHECK(overlap_from_visibility(0.90, 0.017) == doctest::Approx(0.9329).epsilon(5e-4));
    CHECK(overlap_from_visibility(0.42, 0.0) == doctest::Approx(0.42));
    CHECK(overlap_from_visibility(1.0, 0.02) == doctest::Approx(1.0));  // clamped
    CHECK_THROWS_AS(overlap_from_visibility(0.9, 1.0), DomainError);
}

TEST_CASE("overlap mean is sandwiched by the invariant") {
    TrialStream rng(RngSeed{8}, 4);
    for (int k = 0; k < 1000; ++k) {
        const auto p = ts::random_feasible_params(rng);
        const auto g = gram_from_params(p);
        const double dbar = average_overlap(g);
        const double r = std::abs(bargmann_invariant(g));
        CHECK(std::cbrt(r * r) <= dbar + 1e-10);
        CHECK(dbar <= (1.0 + 2.0 * r * std::cos(p.phi)) / 3.0 + 1e-10);
    }
}

TEST_CASE("canonical parameter extraction") {
    TrialStream rng(RngSeed{21}, 6);
    for (int k = 0; k < 200; ++k) {
        const auto p = ts::random_feasible_params(rng);
        const auto ext = params_from_gram(gram_from_params(p));
        CHECK(ext.params.d12 == doctest::Approx(p.d12).epsilon(1e-12));
        CHECK(ext.params.d13 == doctest::Approx(p.d13).epsilon(1e-12));
        CHECK(ext.params.d23 == doctest::Approx(p.d23).epsilon(1e-12));
        if (!ext.gauge_degenerate)
            CHECK(std::abs(wrap_angle(ext.params.phi - p.phi)) < 1e-9);
    }

    // vanishing overlap: phase is reported as zero and flagged
    const auto degenerate = params_from_gram(gram_from_params({0.0, 0.5, 0.5, 0.3}));
    CHECK(degenerate.gauge_degenerate);
    CHECK(degenerate.params.phi == 0.0);
}

TEST_CASE("angle wrapping") {
    CHECK(wrap_angle(-3.63) == doctest::Approx(-3.63 + 2 * kTestPi).epsilon(1e-12));
    CHECK(wrap_angle(kTestPi) == doctest::Approx(kTestPi));
    CHECK(wrap_angle(-kTestPi) == doctest::Approx(kTestPi));
    CHECK(wrap_angle(5 * kTestPi) == doctest::Approx(kTestPi));
}
