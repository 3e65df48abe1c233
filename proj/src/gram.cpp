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

#include "bosonbunch/gram.hpp"

#include <cmath>
#include <string>

namespace bosonbunch {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

double wrap_angle(double phi) {
    double w = std::remainder(phi, 2.0 * kPi);
    if (w <= -kPi)
        w += 2.0 * kPi;
    return w;
}

InternalStateSet::InternalStateSet(std::size_t count, std::size_t dim)
    : count_(count), dim_(dim), data_(count * dim, cxd(0.0, 0.0)) {}

cxd InternalStateSet::inner(std::size_t i, std::size_t j) const {
    cxd s(0.0, 0.0);
    for (std::size_t k = 0; k < dim_; ++k)
        s += std::conj(amplitude(i, k)) * amplitude(j, k);
    return s;
}

double InternalStateSet::norm_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < count_; ++i)
        worst = std::max(worst, std::abs(std::sqrt(inner(i, i).real()) - 1.0));
    return worst;
}

void InternalStateSet::validate(double tol) const {
    const double d = norm_defect();
    if (d > tol)
        throw DomainError("internal states must be unit-norm (defect " + std::to_string(d) + ")");
}

GramMatrix::GramMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
    if (!matrix_.is_square())
        throw ShapeError("Gram matrix must be square");
    const std::size_t n = matrix_.rows();
    if (!matrix_.is_hermitian(kHermitianTol))
        throw FeasibilityError("Gram matrix is not Hermitian at tolerance 1e-10");
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(matrix_(i, i) - cxd(1.0, 0.0)) > kDiagonalTol)
            throw FeasibilityError("Gram matrix diagonal entry " + std::to_string(i) +
                                   " deviates from 1");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(matrix_(i, j)) > 1.0 + 1e-9)
                throw FeasibilityError("Gram entry modulus exceeds 1 (Cauchy-Schwarz)");
    const auto evals = hermitian_eigenvalues(matrix_);
    min_eig_ = evals.front();
    if (min_eig_ < kPsdTol)
        throw FeasibilityError("Gram matrix is not positive semidefinite: min eigenvalue " +
                               std::to_string(min_eig_));
}

GramMatrix gram_from_params(const Gram3Params& p) {
    for (double d : {p.d12, p.d13, p.d23})
        if (d < 0.0 || d > 1.0)
            throw DomainError("overlaps must lie in [0, 1]");
    const double x = std::sqrt(p.d12);
    const double y = std::sqrt(p.d13);
    const double z = std::sqrt(p.d23);
    // realizability: det = 1 + 2xyz cos(phi) - x^2 - y^2 - z^2 >= 0
    const double det = 1.0 + 2.0 * x * y * z * std::cos(p.phi) - x * x - y * y - z * z;
    if (det < -1e-10)
        throw FeasibilityError(
            "infeasible overlap/phase combination: 1 + 2*sqrt(d12*d13*d23)*cos(phi) "
            "- d12 - d13 - d23 = " +
            std::to_string(det) + " < 0");
    ComplexMatrix m(3, 3);
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    m(0, 1) = m(1, 0) = x;
    m(0, 2) = m(2, 0) = y;
    m(1, 2) = cxd(z * std::cos(p.phi), z * std::sin(p.phi));
    m(2, 1) = std::conj(m(1, 2));
    return GramMatrix(std::move(m));
}

std::optional<double> triad_phase_bound(double x, double y, double z) {
    for (double v : {x, y, z})
        if (v < 0.0 || v > 1.0)
            throw DomainError("overlap amplitudes must lie in [0, 1]");
    // a vanishing product makes the invariant zero and the phase pure gauge
    if (x == 0.0 || y == 0.0 || z == 0.0)
        return std::nullopt;
    const double bound = (x * x + y * y + z * z - 1.0) / (2.0 * x * y * z);
    if (bound <= -1.0)
        return std::nullopt;
    return std::acos(std::min(bound, 1.0));
}

InternalStateSet cholesky_realize(const GramMatrix& g) {
    const std::size_t n = g.dim();
    // Lower Cholesky with zero-pivot handling: a pivot below tolerance marks a
    // rank deficiency, the whole column is zero for an exactly PSD input.
    ComplexMatrix lower(n, n);
    std::vector<bool> live(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        double d = g.entry(j, j).real();
        for (std::size_t k = 0; k < j; ++k)
            d -= std::norm(lower(j, k));
        if (d > 1e-12) {
            live[j] = true;
            const double pivot = std::sqrt(d);
            lower(j, j) = pivot;
            for (std::size_t i = j + 1; i < n; ++i) {
                cxd s = g.entry(i, j);
                for (std::size_t k = 0; k < j; ++k)
                    s -= lower(i, k) * std::conj(lower(j, k));
                lower(i, j) = s / pivot;
            }
        }
        // dead column: entries stay zero
    }

    std::size_t rank = 0;
    for (std::size_t j = 0; j < n; ++j)
        rank += live[j] ? 1 : 0;

    // conjugated rows: with <a|b> antilinear in the first slot, the rows of
    // conj(L) reproduce G = L L^dag while rows of L would give its transpose
    InternalStateSet states(n, rank);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (live[j])
                states.amplitude(i, c++) = std::conj(lower(i, j));
    }

    // renormalize away the rounding left by dropped pivots
    for (std::size_t i = 0; i < n; ++i) {
        double norm = 0.0;
        for (std::size_t k = 0; k < rank; ++k)
            norm += std::norm(states.amplitude(i, k));
        norm = std::sqrt(norm);
        if (norm > 0.0)
            for (std::size_t k = 0; k < rank; ++k)
                states.amplitude(i, k) /= norm;
    }
    return states;
}

InternalStateSet states_from_prep(const StatePrepParams& p) {
    if (p.x < 0.0 || p.x > 1.0)
        throw DomainError("time-overlap amplitude x must lie in [0, 1]");
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.gamma) ||
        !std::isfinite(p.phi_pol))
        throw DomainError("preparation angles must be finite");

    // basis order: |0t 0p>, |0t 1p>, |1t 0p>, |1t 1p>
    InternalStateSet s(3, 4);
    s.amplitude(0, 0) = std::cos(p.alpha);
    s.amplitude(0, 1) = std::sin(p.alpha);
    s.amplitude(1, 0) = std::cos(p.beta);
    s.amplitude(1, 1) = std::sin(p.beta);
    const double late = std::sqrt(std::max(0.0, 1.0 - p.x * p.x));
    const cxd pol0 = std::cos(p.gamma);
    const cxd pol1 = std::sin(p.gamma) * cxd(std::cos(p.phi_pol), std::sin(p.phi_pol));
    s.amplitude(2, 0) = p.x * pol0;
    s.amplitude(2, 1) = p.x * pol1;
    s.amplitude(2, 2) = late * pol0;
    s.amplitude(2, 3) = late * pol1;
    return s;
}

GramMatrix gram_from_states(const InternalStateSet& s) {
    s.validate();
    const std::size_t n = s.count();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = s.inner(i, j);
            m(j, i) = std::conj(m(i, j));
        }
    }
    return GramMatrix(std::move(m));
}

cxd bargmann_invariant(const GramMatrix& g) {
    if (g.dim() != 3)
        throw UnsupportedError("bargmann_invariant: only the three-state invariant is supported");
    return g.entry(0, 1) * g.entry(1, 2) * g.entry(2, 0);
}

double average_overlap(const GramMatrix& g) {
    if (g.dim() != 3)
        throw UnsupportedError("average_overlap is defined for dim 3");
    return (std::norm(g.entry(0, 1)) + std::norm(g.entry(0, 2)) + std::norm(g.entry(1, 2))) / 3.0;
}

double overlap_from_visibility(double v, double g2) {
    if (g2 < 0.0 || g2 >= 1.0)
        throw DomainError("g2 must lie in [0, 1)");
    const double raw = (v + g2) / (1.0 - g2);
    return std::min(1.0, std::max(0.0, raw));
}

Gram3Extraction params_from_gram(const GramMatrix& g) {
    if (g.dim() != 3)
        throw UnsupportedError("params_from_gram is defined for dim 3");
    Gram3Extraction out;
    out.params.d12 = std::min(1.0, std::norm(g.entry(0, 1)));
    out.params.d13 = std::min(1.0, std::norm(g.entry(0, 2)));
    out.params.d23 = std::min(1.0, std::norm(g.entry(1, 2)));
    const cxd inv = bargmann_invariant(g);
    if (std::abs(inv) < 1e-12) {
        out.params.phi = 0.0;
        out.gauge_degenerate = true;
    } else {
        out.params.phi = wrap_angle(std::arg(inv));
    }
    return out;
}

double triad_phase(const GramMatrix& g, bool* gauge_degenerate) {
    const auto ext = params_from_gram(g);
    if (gauge_degenerate)
        *gauge_degenerate = ext.gauge_degenerate;
    return ext.params.phi;
}

} // namespace bosonbunch
