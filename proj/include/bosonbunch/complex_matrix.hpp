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

#ifndef BOSONBUNCH_COMPLEX_MATRIX_HPP
#define BOSONBUNCH_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "bosonbunch/errors.hpp"
#include "bosonbunch/rng.hpp"

namespace bosonbunch {

using cxd = std::complex<double>;

/**
 * @brief Dense complex matrix with row-major storage.
 *
 * Carrier type for interferometers and Gram matrices. Indexing is 0-based
 * everywhere; 1-based mode labels are translated at the CLI boundary.
 */
class ComplexMatrix {
  public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cxd(0.0, 0.0)) {}
    ComplexMatrix(std::initializer_list<std::initializer_list<cxd>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    cxd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cxd& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cxd>& entries() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    /// Entrywise squared moduli (the transfer matrix of distinguishable particles).
    ComplexMatrix abs_squared() const;

    /// max-norm of (this - other); shape error on mismatch.
    double max_abs_diff(const ComplexMatrix& other) const;

    /// max-norm of (M^dag M - I) <= tol
    bool is_unitary(double tol = 1e-10) const;
    /// max-norm of (M - M^dag) <= tol
    bool is_hermitian(double tol = 1e-10) const;

    /// Deviation from unitarity, max-norm of (M^dag M - I). Shape error if not square.
    double unitarity_defect() const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  private:
    std::size_t rows_, cols_;
    std::vector<cxd> data_;
};

/// n-mode Fourier interferometer, entry (j,k) = exp(i 2 pi j k / n) / sqrt(n).
ComplexMatrix fourier_matrix(std::size_t n);

/// Balanced real interferometer with entries +-1/sqrt(n), built by the
/// doubling rule H_{2k} = [[H_k, H_k], [H_k, -H_k]]. n must be a power of two;
/// other orders are ingested from files instead of constructed.
ComplexMatrix sylvester_hadamard(std::size_t n);

/// Haar-distributed random unitary, deterministic per (seed, trial) and
/// independent of how callers distribute trials over threads.
ComplexMatrix haar_random_unitary(std::size_t n, RngSeed seed, std::uint64_t trial);

/// |Tr(a^dag b)| / n for square matrices of equal dimension n.
double trace_fidelity(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entrywise mod * exp(i phase). Both arguments must be real-valued matrices
/// of equal shape with non-negative moduli.
ComplexMatrix assemble_from_modulus_phase(const ComplexMatrix& mods, const ComplexMatrix& phases);

/// The measured three-mode interferometer bundled with the toolkit
/// (moduli and phases of the characterized device; only approximately unitary).
const ComplexMatrix& measured_tritter();

/// Eigenvalues of a Hermitian matrix, ascending (cyclic Jacobi; intended for
/// the small dimensions used in this toolkit).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

} // namespace bosonbunch

#endif // BOSONBUNCH_COMPLEX_MATRIX_HPP
