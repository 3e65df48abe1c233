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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <vector>

#include "bosonbunch/permanent.hpp"
#include "support.hpp"

using namespace bosonbunch;
namespace ts = bosonbunch::testsupport;

namespace {

ComplexMatrix random_complex(TrialStream& rng, std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = cxd(rng.gaussian(), rng.gaussian());
    return m;
}

ComplexMatrix ones(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = 1.0;
    return m;
}

} // namespace

TEST_CASE("closed-form permanents") {
    CHECK(std::abs(permanent_ryser(ComplexMatrix::identity(3)) - cxd(1, 0)) < 1e-15);
    CHECK(std::abs(permanent_ryser(ones(3)) - cxd(6, 0)) < 1e-12);  // Per of all-ones = n!
    CHECK(std::abs(permanent_naive(ComplexMatrix::identity(2)) - cxd(1, 0)) < 1e-15);

    const cxd a(0.3, 1.2), b(-0.7, 0.1), c(2.0, -0.4), d(0.9, 0.9);
    const ComplexMatrix m2 = {{a, b}, {c, d}};
    CHECK(std::abs(permanent_naive(m2) - (a * d + b * c)) < 1e-14);
    CHECK(std::abs(permanent_ryser(m2) - (a * d + b * c)) < 1e-14);

    CHECK(std::norm(permanent_ryser(fourier_matrix(3))) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("ryser agrees with the permutation sum") {
    TrialStream rng(RngSeed{101}, 0);
    for (std::size_t n = 2; n <= 8; ++n) {
        const int cases = n <= 6 ? 100 : 100;
        for (int k = 0; k < cases; ++k) {
            const auto m = random_complex(rng, n);
            const cxd r = permanent_ryser(m);
            const cxd o = permanent_naive(m);
            CHECK(std::abs(r - o) <= 1e-9 * std::max(1.0, std::abs(o)));
        }
    }
}

TEST_CASE("permanent invariances") {
    TrialStream rng(RngSeed{7}, 3);
    const auto m = random_complex(rng, 6);
    const cxd base = permanent_ryser(m);

    // row/column permutation invariance
    std::vector<std::size_t> rp = {3, 0, 5, 1, 4, 2}, cp = {2, 4, 0, 5, 3, 1};
    ComplexMatrix shuffled(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            shuffled(i, j) = m(rp[i], cp[j]);
    CHECK(std::abs(permanent_ryser(shuffled) - base) < 1e-10 * std::abs(base));

    // conjugation commutes with the permanent
    CHECK(std::abs(permanent_ryser(m.conjugate()) - std::conj(base)) < 1e-12 * std::abs(base));
}

TEST_CASE("size caps are hard errors") {
    CHECK_THROWS_AS(permanent_ryser(ComplexMatrix(31, 31)), SizeLimitError);
    CHECK_THROWS_AS(permanent_naive(ComplexMatrix(11, 11)), SizeLimitError);
    CHECK_THROWS_AS(permanent_ryser(ComplexMatrix(2, 3)), ShapeError);
}

TEST_CASE("permanent with repeated columns") {
    TrialStream rng(RngSeed{55}, 1);
    const auto m = random_complex(rng, 4);
    const std::vector<int> unit{1, 1, 1, 1};
    CHECK(std::abs(permanent_with_repetitions(m, unit) - permanent_ryser(m)) < 1e-12);

    // all photons into the first column of the balanced three-mode transform
    const std::vector<int> bunched{3, 0, 0};
    const cxd per = permanent_with_repetitions(fourier_matrix(3), bunched);
    CHECK(std::norm(per) / 6.0 == doctest::Approx(2.0 / 9.0).epsilon(1e-12));

    const std::vector<int> wrong{2, 0, 0};
    CHECK_THROWS_AS(permanent_with_repetitions(fourier_matrix(3), wrong), ShapeError);
    const std::vector<int> negative{4, -1, 0};
    CHECK_THROWS_AS(permanent_with_repetitions(fourier_matrix(3), negative), DomainError);
}

TEST_CASE("21x21 permanent is fast enough") {
    const auto f21 = fourier_matrix(21);
    const auto t0 = std::chrono::steady_clock::now();
    const double indist = std::norm(permanent_ryser(f21));
    const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(indist == doctest::Approx(3.5404e-9).epsilon(1e-3));
    CHECK(dt < 10.0);
}
