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

#ifndef BOSONBUNCH_INTERFERENCE_HPP
#define BOSONBUNCH_INTERFERENCE_HPP

#include <span>
#include <vector>

#include "bosonbunch/complex_matrix.hpp"
#include "bosonbunch/gram.hpp"

namespace bosonbunch {

/// One photon per listed input mode of an m-mode interferometer.
struct PhotonConfig {
    std::vector<int> input_modes;  ///< strictly increasing, all < mode_count
    int mode_count = 0;

    void validate() const;
    /// Convenience: photons 0..n-1 into modes 0..n-1 of an n-mode device.
    static PhotonConfig one_per_mode(int n);
};

/// Full-distribution size caps (larger requests are refused, not truncated).
inline constexpr int kMaxPhotonsFullDistribution = 5;
inline constexpr int kMaxModesFullDistribution = 8;
inline constexpr int kMaxPhotonsOracle = 4;

/// All occupation vectors of n photons over m modes, lexicographically
/// decreasing. This is the fixed enumeration order of every distribution
/// and CSV emitted by the toolkit.
std::vector<std::vector<int>> enumerate_occupations(int n, int m);

/**
 * @brief Exact photon-number distribution at the interferometer output.
 *
 * Probabilities are stored in the fixed enumeration order. Negative rounding
 * residue is clamped to zero and accounted in clamped_mass(), never silently
 * renormalized. A non-unitary transfer matrix (measured hardware) yields a
 * warning flag and an unnormalized sum.
 */
class OutputDistribution {
  public:
    OutputDistribution(int modes, int photons, std::vector<double> probabilities);

    int modes() const noexcept { return modes_; }
    int photons() const noexcept { return photons_; }
    std::size_t size() const noexcept { return probs_.size(); }

    const std::vector<int>& occupation(std::size_t i) const { return occupations_[i]; }
    double probability(std::size_t i) const { return probs_[i]; }
    double probability_of(std::span<const int> occ) const;

    /// 1 minus the total probability of collision-free outcomes.
    double p_bunching() const;
    /// Total probability of all photons exiting one mode.
    double p_full_bunching() const;
    /// Probability of all photons exiting the given mode.
    double p_full_bunching_mode(int mode) const;

    double sum() const;

    double clamped_mass() const noexcept { return clamped_mass_; }
    double max_imag_residue() const noexcept { return max_imag_residue_; }
    bool unitary_warning() const noexcept { return unitary_warning_; }
    /// Post-selection renormalization applied by the noise model (1 otherwise).
    double renorm_factor() const noexcept { return renorm_factor_; }

    void set_diagnostics(double clamped_mass, double max_imag_residue, bool unitary_warning,
                         double renorm_factor = 1.0);

  private:
    int modes_, photons_;
    std::vector<std::vector<int>> occupations_;
    std::vector<double> probs_;
    double clamped_mass_ = 0.0;
    double max_imag_residue_ = 0.0;
    bool unitary_warning_ = false;
    double renorm_factor_ = 1.0;
};

/**
 * @brief Exact output distribution of n partially distinguishable photons.
 *
 * For occupation n_vec with mode-assignment list d (nondecreasing), the
 * probability is the double permutation sum
 *
 *   P(n_vec) = (1 / prod_j n_j!) * sum_{s,t in S_n}
 *              prod_k G(t(k), s(k)) * U(in_{s(k)}, d_k) * conj(U(in_{t(k)}, d_k)),
 *
 * where U(j, q) is the amplitude from input mode j to output mode q and
 * G(i, j) = <psi_i | psi_j>. The Gram index pairing is fixed by agreement
 * with the Fock-expansion oracle; transposing it would evaluate conj(G).
 * Hermiticity of G makes every probability real; the imaginary residue is
 * tracked as a diagnostic.
 */
OutputDistribution output_distribution(const ComplexMatrix& u, const PhotonConfig& cfg,
                                       const GramMatrix& g, double unitary_tol = 1e-10);

/// Same engine for input lists with repeated modes (noise photons share the
/// input mode of their signal photon). Photons occupying one input mode must
/// be internally orthogonal for the input state to stay normalized.
OutputDistribution output_distribution_with_inputs(const ComplexMatrix& u,
                                                   const std::vector<int>& input_modes,
                                                   const ComplexMatrix& gram,
                                                   double unitary_tol = 1e-10);

/**
 * @brief Independent oracle: monomial expansion of the output Fock state.
 *
 * Expands prod_j (sum_q U(in_j, q) a^dag_{q}(psi_j)) |0> over (mode, internal)
 * labels with bosonic normalization, then sums |amplitude|^2 over internal
 * configurations per mode occupation. n <= 4.
 */
OutputDistribution fock_oracle_distribution(const ComplexMatrix& u, const PhotonConfig& cfg,
                                            const InternalStateSet& states);

/// Antibunched-outcome fast path, |Per(U)|^2 (all photons mutually identical).
double antibunched_probability_indistinguishable(const ComplexMatrix& u);
/// Antibunched-outcome fast path, Per(|U|^2) (fully distinguishable particles).
double antibunched_probability_distinguishable(const ComplexMatrix& u);

/// Three-photon tritter closed forms in (average overlap, invariant modulus, phase).
double tritter_pb_analytic(double dbar, double r, double phi);
double tritter_pfb_analytic_per_mode(double dbar, double r, double phi);
double tritter_pfb_analytic_total(double dbar, double r, double phi);

/// Full-bunching ratio Per(G1)/Per(G2); independent of interferometer and mode.
double fb_ratio(const GramMatrix& g1, const GramMatrix& g2);

/// Recovers the three-photon invariant from an ideal-tritter distribution by
/// grouping outcomes into three cyclic classes:
///   P_A = p(111) + p(300) + p(030) + p(003)
///   P_B = p(120) + p(012) + p(201)
///   P_C = p(021) + p(210) + p(102)
/// and evaluating P_A + P_B e^{i 2pi/3} + P_C e^{i 4pi/3}. Equals
/// bargmann_invariant of the preparation on the ideal transform; the
/// class-to-phase assignment is tied to this engine's conventions.
cxd extract_bargmann(const OutputDistribution& d);

} // namespace bosonbunch

#endif // BOSONBUNCH_INTERFERENCE_HPP
