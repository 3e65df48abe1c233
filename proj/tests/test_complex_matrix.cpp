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

#include "bosonbunch/complex_matrix.hpp"
#include "support.hpp"

using namespace bosonbunch;
namespace ts = bosonbunch::testsupport;

TEST_CASE("fourier matrix basics") {
    CHECK_THROWS_AS(fourier_matrix(0), DomainError);

    const auto f1 = fourier_matrix(1);
    CHECK(f1.rows() == 1);
    CHECK(std::abs(f1(0, 0) - cxd(1.0, 0.0)) < 1e-15);

    const auto f3 = fourier_matrix(3);
    const double s = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(f3(0, 0) - cxd(s, 0.0)) < 1e-15);
    CHECK(std::abs(f3(1, 1) - s * cxd(std::cos(2 * ts::kTestPi / 3), std::sin(2 * ts::kTestPi / 3))) <
          1e-15);
    CHECK(std::abs(f3(2, 2) - f3(1, 1)) < 1e-15);  // e^{i 8 pi / 3} = e^{i 2 pi / 3}
    CHECK(std::abs(f3(1, 2) - f3(2, 1)) < 1e-15);
}

TEST_CASE("fourier matrices are unitary up to order 32") {
    for (std::size_t n = 1; n <= 32; ++n)
        CHECK(fourier_matrix(n).unitarity_defect() <= 1e-12);
}

TEST_CASE("sylvester construction") {
    CHECK_THROWS_AS(sylvester_hadamard(3), UnsupportedError);
    CHECK_THROWS_AS(sylvester_hadamard(12), UnsupportedError);
    CHECK_THROWS_AS(sylvester_hadamard(0), UnsupportedError);

    const auto h2 = sylvester_hadamard(2);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(h2(0, 0).real() == doctest::Approx(s));
    CHECK(h2(1, 1).real() == doctest::Approx(-s));

    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{4}, std::size_t{8},
                          std::size_t{16}}) {
        const auto h = sylvester_hadamard(n);
        CHECK(h.unitarity_defect() <= 1e-12);
        const double target = 1.0 / std::sqrt(static_cast<double>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(std::abs(std::abs(h(i, j).real()) - target) < 1e-15);
                CHECK(h(i, j).imag() == 0.0);
            }
    }
}

TEST_CASE("haar sampling determinism and unitarity") {
    const RngSeed seed{42};
    const auto a = haar_random_unitary(5, seed, 17);
    const auto b = haar_random_unitary(5, seed, 17);
    CHECK(a.max_abs_diff(b) == 0.0);  // bit-identical

    const auto c = haar_random_unitary(5, seed, 18);
    CHECK(c.max_abs_diff(a) > 1e-3);  // different trial, different matrix

    for (std::size_t n = 3; n <= 9; ++n) {
        double worst = 0.0;
        for (std::uint64_t t = 0; t < 10000; ++t)
            worst = std::max(worst, haar_random_unitary(n, seed, t).unitarity_defect());
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("haar first moment at n = 4") {
    const RngSeed seed{2024};
    double acc = 0.0;
    const int samples = 1000;
    for (int t = 0; t < samples; ++t) {
        const auto u = haar_random_unitary(4, seed, static_cast<std::uint64_t>(t));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                acc += std::norm(u(i, j));
    }
    CHECK(acc / (samples * 16.0) == doctest::Approx(0.25).epsilon(0.04));
}

TEST_CASE("trace fidelity") {
    const auto f3 = fourier_matrix(3);
    CHECK(trace_fidelity(f3, f3) == doctest::Approx(1.0).epsilon(1e-12));

    const ComplexMatrix flip = {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
    CHECK(trace_fidelity(ComplexMatrix::identity(3), flip) == doctest::Approx(1.0 / 3.0));

    // measured device against the ideal transformation
    CHECK(trace_fidelity(f3, measured_tritter()) == doctest::Approx(0.99922).epsilon(2e-4));

    // symmetric under swapping arguments
    const auto u = haar_random_unitary(4, RngSeed{5}, 0);
    const auto v = haar_random_unitary(4, RngSeed{5}, 1);
    CHECK(trace_fidelity(u, v) == doctest::Approx(trace_fidelity(v, u)).epsilon(1e-13));

    CHECK_THROWS_AS(trace_fidelity(f3, ComplexMatrix::identity(2)), ShapeError);
}

TEST_CASE("assemble from modulus and phase") {
    const ComplexMatrix mods = {{0.5, 1.0}, {0.25, 0.0}};
    const ComplexMatrix zeros = {{0, 0}, {0, 0}};
    const auto real = assemble_from_modulus_phase(mods, zeros);
    CHECK(real.max_abs_diff(mods) == 0.0);

    const ComplexMatrix neg = {{-0.1, 0}, {0, 0}};
    CHECK_THROWS_AS(assemble_from_modulus_phase(neg, zeros), DomainError);
    CHECK_THROWS_AS(assemble_from_modulus_phase(mods, ComplexMatrix::identity(3)), ShapeError);

    // |F3| with arg(F3) reproduces F3
    const auto f3 = fourier_matrix(3);
    ComplexMatrix m(3, 3), p(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            m(i, j) = std::abs(f3(i, j));
            p(i, j) = std::arg(f3(i, j));
        }
    CHECK(assemble_from_modulus_phase(m, p).max_abs_diff(f3) < 1e-15);
}

TEST_CASE("measured tritter is approximately unitary") {
    const auto& u = measured_tritter();
    CHECK(u.is_unitary(0.05));
    CHECK(!u.is_unitary(1e-3));
    CHECK(u.unitarity_defect() < 0.05);
}

TEST_CASE("hermitian eigenvalues") {
    const auto evals_i = hermitian_eigenvalues(ComplexMatrix::identity(4));
    for (double v : evals_i)
        CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    ComplexMatrix j3(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            j3(i, j) = 1.0;
    const auto evals_j = hermitian_eigenvalues(j3);
    CHECK(std::abs(evals_j[0]) < 1e-12);
    CHECK(std::abs(evals_j[1]) < 1e-12);
    CHECK(evals_j[2] == doctest::Approx(3.0).epsilon(1e-12));

    // complex Hermitian with known spectrum {0.5, 1.5}
    const cxd z(0.3, -0.4);
    const ComplexMatrix m = {{1.0, z}, {std::conj(z), 1.0}};
    const auto evals = hermitian_eigenvalues(m);
    CHECK(evals[0] == doctest::Approx(0.5));
    CHECK(evals[1] == doctest::Approx(1.5));
}
