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

#ifndef BOSONBUNCH_GRAM_HPP
#define BOSONBUNCH_GRAM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "bosonbunch/complex_matrix.hpp"

namespace bosonbunch {

/// Three-photon distinguishability parameters: pairwise overlaps
/// d_ij = |<psi_i|psi_j>|^2 in [0,1] and the triad phase phi in (-pi, pi].
/// The lone complex phase sits on the (2,3) entry of the Gram matrix.
struct Gram3Params {
    double d12 = 1.0;
    double d13 = 1.0;
    double d23 = 1.0;
    double phi = 0.0;
};

/// Two-qubit (time (x) polarization) preparation of three internal states:
///   psi_1 = |0>_t (x) (cos a |0>_p + sin a |1>_p)
///   psi_2 = |0>_t (x) (cos b |0>_p + sin b |1>_p)
///   psi_3 = (x |0>_t + sqrt(1-x^2) |1>_t) (x) (cos g |0>_p + sin g e^{i phi} |1>_p)
/// Angles are state-space angles, not waveplate hardware angles.
struct StatePrepParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double phi_pol = 0.0;
    double x = 1.0;
};

/// n unit-norm internal-state vectors of common dimension r <= n.
class InternalStateSet {
  public:
    InternalStateSet(std::size_t count, std::size_t dim);

    std::size_t count() const noexcept { return count_; }
    std::size_t dim() const noexcept { return dim_; }

    cxd& amplitude(std::size_t state, std::size_t component) {
        return data_[state * dim_ + component];
    }
    const cxd& amplitude(std::size_t state, std::size_t component) const {
        return data_[state * dim_ + component];
    }

    /// <psi_i | psi_j>, antilinear in the first argument.
    cxd inner(std::size_t i, std::size_t j) const;

    /// Largest deviation of any state norm from 1.
    double norm_defect() const;

    void validate(double tol = 1e-10) const;

  private:
    std::size_t count_, dim_;
    std::vector<cxd> data_;
};

/**
 * @brief Hermitian PSD matrix of pairwise internal-state inner products,
 * with unit diagonal.
 *
 * Construction validates Hermiticity and diagonal at 1e-10 and positive
 * semidefiniteness down to eigenvalue -1e-10 via the Jacobi eigensolver;
 * a plain Cholesky would conflate rank deficiency with infeasibility.
 */
class GramMatrix {
  public:
    explicit GramMatrix(ComplexMatrix m);

    std::size_t dim() const noexcept { return matrix_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    cxd entry(std::size_t i, std::size_t j) const { return matrix_(i, j); }

    /// Smallest eigenvalue observed at validation time.
    double min_eigenvalue() const noexcept { return min_eig_; }

    static constexpr double kHermitianTol = 1e-10;
    static constexpr double kDiagonalTol = 1e-10;
    static constexpr double kPsdTol = -1e-10;

  private:
    ComplexMatrix matrix_;
    double min_eig_ = 0.0;
};

/// Builds the 3x3 Gram matrix of a parameter set; throws a feasibility error
/// with the violated determinant bound if the parameters are not realizable.
GramMatrix gram_from_params(const Gram3Params& p);

/// Largest admissible |phi| for overlap amplitudes (x, y, z) = sqrt(d12, d13, d23),
/// from cos(phi) >= (x^2 + y^2 + z^2 - 1) / (2xyz). nullopt when every phase is
/// allowed (bound <= -1, or any amplitude vanishes and the phase is pure gauge).
std::optional<double> triad_phase_bound(double x, double y, double z);

/// Unit vectors realizing the Gram matrix, read off the rows of the lower
/// Cholesky factor G = L L^dag. Rank-deficient inputs yield vectors in the
/// reduced dimension r (zero-pivot columns are dropped).
InternalStateSet cholesky_realize(const GramMatrix& g);

InternalStateSet states_from_prep(const StatePrepParams& p);

/// Pairwise inner products of a state set; PSD by construction.
GramMatrix gram_from_states(const InternalStateSet& s);

/// G12 * G23 * G31 for dim-3 Gram matrices; modulus sqrt(d12 d13 d23),
/// argument the triad phase. Higher orders are not supported.
cxd bargmann_invariant(const GramMatrix& g);

/// Mean of the three squared off-diagonal moduli (dim 3 only).
double average_overlap(const GramMatrix& g);

/// Multiphoton-bias correction of a two-photon interference visibility:
/// (v + g2) / (1 - g2), clamped to [0, 1].
double overlap_from_visibility(double v, double g2);

/// Overlap/phase parameters of a dim-3 Gram matrix in the canonical gauge
/// (states rephased so the 1-2 and 1-3 inner products are real non-negative).
/// When some pairwise overlap vanishes the invariant carries no phase; phi is
/// reported as 0 and the set is flagged gauge-degenerate.
struct Gram3Extraction {
    Gram3Params params;
    bool gauge_degenerate = false;
};
Gram3Extraction params_from_gram(const GramMatrix& g);

/// Gauge-invariant triad phase arg(G12 G23 G31), wrapped to (-pi, pi].
double triad_phase(const GramMatrix& g, bool* gauge_degenerate = nullptr);

/// Wrap an angle to the principal interval (-pi, pi].
double wrap_angle(double phi);

} // namespace bosonbunch

#endif // BOSONBUNCH_GRAM_HPP
