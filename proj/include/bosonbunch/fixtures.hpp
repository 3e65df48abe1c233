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

#ifndef BOSONBUNCH_FIXTURES_HPP
#define BOSONBUNCH_FIXTURES_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bosonbunch {

/// One measured preparation: pairwise overlaps, average overlap, the invariant
/// modulus estimated from visibilities (rv) and from the output distribution
/// (rn), the triad phase, and the measured bunching probabilities. Symmetric
/// uncertainties ride along; the bunching probability is absent in the
/// counter-intuitive full-bunching data set.
struct MeasuredRow {
    double d12 = 0, u_d12 = 0;
    double d23 = 0, u_d23 = 0;
    double d31 = 0, u_d31 = 0;
    double dbar = 0, u_dbar = 0;
    double rv = 0, u_rv = 0;
    double rn = 0, u_rn = 0;
    double phi = 0, u_phi = 0;  ///< stored verbatim; wrap at comparison time
    std::optional<double> pb, u_pb;
    double pfb = 0, u_pfb = 0;
};

/// Bundled data sets: polarization-only scan, time-delay scan, triad-phase
/// (liquid crystal) scan, and the counter-intuitive full-bunching runs.
enum class FixtureTable { pol, time_delay, lc, counter };

const char* fixture_table_name(FixtureTable t);
FixtureTable fixture_table_from_name(const std::string& name);

/// Column header shared by the bundled tables and any external file.
extern const char* const kFixtureCsvHeader;

/// Bundled table contents, verbatim CSV.
const std::string& fixture_csv(FixtureTable t);

std::vector<MeasuredRow> parse_fixture_csv(std::istream& in);
std::vector<MeasuredRow> load_table(FixtureTable t);

enum class ModelKind { ideal, noisy };
ModelKind model_kind_from_name(const std::string& name);

struct ResidualRow {
    int index = 0;
    std::optional<double> pb_pred, pb_meas, pb_resid;
    double pfb_pred = 0, pfb_meas = 0, pfb_resid = 0;
    bool projected = false;  ///< noisy model had to project the overlaps onto the feasible set
    bool pass = false;
};

/**
 * @brief Model-vs-data comparison for a measured table.
 *
 * ideal: closed-form tritter probabilities evaluated at (dbar, rn, phi).
 * noisy: the measured-interferometer noise model fed with the Gram matrix
 * built from (d12, d23, d31, phi); noise-biased rows whose parameters fall
 * outside the positive-semidefinite region are projected onto its boundary by
 * clamping cos(phi), and flagged.
 */
std::vector<ResidualRow> residual_report(std::span<const MeasuredRow> rows, ModelKind model,
                                         double tol);

} // namespace bosonbunch

#endif // BOSONBUNCH_FIXTURES_HPP
