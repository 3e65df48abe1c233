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

#include "bosonbunch/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bosonbunch {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cxd>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw ShapeError("ragged initializer for ComplexMatrix");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_ * cols_; ++i)
        m.data_[i] = std::conj(data_[i]);
    return m;
}

ComplexMatrix ComplexMatrix::abs_squared() const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_ * cols_; ++i)
        m.data_[i] = std::norm(data_[i]);
    return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeError("matrix shape mismatch in max_abs_diff");
    double d = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
        d = std::max(d, std::abs(data_[i] - other.data_[i]));
    return d;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_)
        throw ShapeError("matrix product shape mismatch");
    ComplexMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cxd aik = a(i, k);
            if (aik == cxd(0.0, 0.0))
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                m(i, j) += aik * b(k, j);
        }
    return m;
}

double ComplexMatrix::unitarity_defect() const {
    if (!is_square())
        throw ShapeError("unitarity defect requires a square matrix");
    return (adjoint() * (*this)).max_abs_diff(identity(rows_));
}

bool ComplexMatrix::is_unitary(double tol) const {
    return is_square() && unitarity_defect() <= tol;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (!is_square())
        return false;
    return max_abs_diff(adjoint()) <= tol;
}

ComplexMatrix fourier_matrix(std::size_t n) {
    if (n == 0)
        throw DomainError("fourier_matrix: dimension must be >= 1");
    ComplexMatrix m(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            // reduce j*k mod n before the trig call so large orders stay accurate
            const double arg = 2.0 * kPi * static_cast<double>((j * k) % n) / static_cast<double>(n);
            m(j, k) = cxd(std::cos(arg), std::sin(arg)) * norm;
        }
    return m;
}

ComplexMatrix sylvester_hadamard(std::size_t n) {
    if (n == 0 || (n & (n - 1)) != 0)
        throw UnsupportedError("sylvester_hadamard: order " + std::to_string(n) +
                               " is not a power of two (supply other orders via file)");
    ComplexMatrix h(n, n);
    h(0, 0) = 1.0;
    for (std::size_t k = 1; k < n; k <<= 1)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const cxd v = h(i, j);
                h(i, j + k) = v;
                h(i + k, j) = v;
                h(i + k, j + k) = -v;
            }
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) *= norm;
    return h;
}

ComplexMatrix haar_random_unitary(std::size_t n, RngSeed seed, std::uint64_t trial) {
    if (n == 0)
        throw DomainError("haar_random_unitary: dimension must be >= 1");
    TrialStream rng(seed, trial);

    // Ginibre ensemble: iid standard complex Gaussians, row-major fill order.
    ComplexMatrix a(n, n);
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double re = rng.gaussian();
            const double im = rng.gaussian();
            a(i, j) = cxd(re * inv_sqrt2, im * inv_sqrt2);
        }

    // Modified Gram-Schmidt over columns with one re-orthogonalization pass.
    // Pivots are the column norms, so the R factor has a positive diagonal;
    // that convention is exactly what removes the QR phase bias and makes the
    // Q factor Haar-distributed.
    ComplexMatrix q(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<cxd> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = a(i, j);
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                cxd proj(0.0, 0.0);
                for (std::size_t i = 0; i < n; ++i)
                    proj += std::conj(q(i, k)) * v[i];
                for (std::size_t i = 0; i < n; ++i)
                    v[i] -= proj * q(i, k);
            }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            norm += std::norm(v[i]);
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i)
            q(i, j) = v[i] / norm;
    }
    return q;
}

double trace_fidelity(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw ShapeError("trace_fidelity requires square matrices of equal dimension");
    cxd tr(0.0, 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.rows(); ++k)
            tr += std::conj(a(k, i)) * b(k, i);
    return std::abs(tr) / static_cast<double>(a.rows());
}

ComplexMatrix assemble_from_modulus_phase(const ComplexMatrix& mods, const ComplexMatrix& phases) {
    if (mods.rows() != phases.rows() || mods.cols() != phases.cols())
        throw ShapeError("modulus/phase matrices must have equal shape");
    ComplexMatrix m(mods.rows(), mods.cols());
    for (std::size_t i = 0; i < mods.rows(); ++i)
        for (std::size_t j = 0; j < mods.cols(); ++j) {
            const double r = mods(i, j).real();
            if (r < 0.0)
                throw DomainError("assemble_from_modulus_phase: negative modulus");
            const double ph = phases(i, j).real();
            m(i, j) = cxd(r * std::cos(ph), r * std::sin(ph));
        }
    return m;
}

const ComplexMatrix& measured_tritter() {
    static const ComplexMatrix u = [] {
        const ComplexMatrix mods = {{0.5998, 0.5563, 0.575},
                                    {0.5471, 0.5906, 0.593},
                                    {0.584, 0.585, 0.563}};
        const ComplexMatrix phases = {{0.0, 0.0, 0.0},
                                      {0.0, 2.135, -2.106},
                                      {0.0, -2.081, 2.158}};
        return assemble_from_modulus_phase(mods, phases);
    }();
    return u;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!m.is_square())
        throw ShapeError("hermitian_eigenvalues requires a square matrix");
    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    // symmetrize rounding noise so off() really measures what is left to kill
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const cxd v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                s += std::norm(a(i, j));
        return s;
    };

    // Cyclic complex Jacobi: unitary 2x2 rotations zeroing a(p,q).
    for (int sweep = 0; sweep < 60 && off_norm() > 1e-30; ++sweep) {
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const cxd apq = a(p, q);
                if (std::abs(apq) < 1e-300)
                    continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double abs_apq = std::abs(apq);
                const cxd phase = apq / abs_apq;
                const double tau = (aqq - app) / (2.0 * abs_apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cxd s = phase * (t * c);
                for (std::size_t k = 0; k < n; ++k) {
                    const cxd akp = a(k, p);
                    const cxd akq = a(k, q);
                    a(k, p) = c * akp - std::conj(s) * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cxd apk = a(p, k);
                    const cxd aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = std::conj(s) * apk + c * aqk;
                }
            }
    }

    std::vector<double> evals(n);
    for (std::size_t i = 0; i < n; ++i)
        evals[i] = a(i, i).real();
    std::sort(evals.begin(), evals.end());
    return evals;
}

} // namespace bosonbunch
