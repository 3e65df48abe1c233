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

#include "bosonbunch/fixtures.hpp"

#include <cmath>
#include <sstream>

#include "bosonbunch/noise.hpp"

namespace bosonbunch {

const char* const kFixtureCsvHeader =
    "d12,u_d12,d23,u_d23,d31,u_d31,dbar,u_dbar,rv,u_rv,rn,u_rn,phi,u_phi,pb,u_pb,pfb,u_pfb";

namespace {

// Measured values are committed verbatim, uncertainties as separate columns.
const std::string kPolCsv = std::string(kFixtureCsvHeader) + "\n" + R"(0.269,0.004,0.316,0.004,0.243,0.004,0.276,0.003,0.144,0.002,0.092,0.009,2.98,0.08,0.893,0.003,0.165,0.006
0.461,0.004,0.340,0.004,0.129,0.004,0.310,0.003,0.142,0.003,0.063,0.004,-2.71,0.06,0.883,0.001,0.179,0.003
0.476,0.004,0.422,0.004,0.086,0.004,0.328,0.003,0.132,0.004,0.046,0.004,-2.51,0.08,0.880,0.001,0.188,0.003
0.563,0.004,0.570,0.004,0.135,0.004,0.423,0.003,0.208,0.004,0.120,0.005,0.126,0.003,0.844,0.002,0.257,0.004
0.658,0.004,0.670,0.004,0.220,0.005,0.516,0.003,0.312,0.004,0.264,0.005,0.161,0.001,0.816,0.002,0.323,0.004
0.595,0.003,0.714,0.003,0.268,0.004,0.526,0.002,0.338,0.003,0.276,0.004,-0.020,0.009,0.818,0.001,0.335,0.003
0.769,0.003,0.808,0.003,0.463,0.003,0.680,0.003,0.536,0.003,0.476,0.004,0.0607,0.0004,0.778,0.002,0.428,0.003
0.853,0.004,0.837,0.004,0.680,0.004,0.790,0.003,0.696,0.004,0.642,0.004,0.0048,0.0003,0.740,0.002,0.501,0.003
0.897,0.003,0.910,0.003,0.872,0.003,0.893,0.002,0.844,0.003,0.785,0.003,-0.0084,0.0002,0.713,0.002,0.570,0.003
)";

const std::string kTimeCsv = std::string(kFixtureCsvHeader) + "\n" + R"(0.422,0.004,0.902,0.003,0.405,0.004,0.576,0.003,0.393,0.003,0.355,0.008,-0.01,0.01,0.796,0.004,0.366,0.007
0.447,0.005,0.861,0.004,0.434,0.005,0.581,0.004,0.409,0.004,0.342,0.009,-0.03,0.02,0.800,0.004,0.362,0.008
0.495,0.004,0.900,0.003,0.484,0.004,0.626,0.003,0.464,0.004,0.397,0.009,-0.02,0.01,0.796,0.004,0.394,0.007
0.574,0.004,0.874,0.003,0.539,0.004,0.662,0.003,0.520,0.004,0.454,0.008,0.00,0.01,0.780,0.004,0.416,0.007
0.644,0.004,0.882,0.003,0.596,0.004,0.707,0.003,0.582,0.004,0.517,0.008,0.005,0.009,0.767,0.004,0.445,0.007
0.629,0.004,0.894,0.003,0.608,0.004,0.710,0.003,0.584,0.004,0.519,0.008,0.00,0.01,0.768,0.004,0.448,0.007
0.715,0.004,0.892,0.004,0.666,0.004,0.758,0.003,0.652,0.004,0.589,0.008,0.003,0.008,0.746,0.004,0.472,0.007
0.753,0.004,0.878,0.003,0.740,0.004,0.790,0.003,0.699,0.004,0.650,0.007,-0.006,0.007,0.746,0.005,0.512,0.007
0.808,0.003,0.892,0.003,0.747,0.003,0.815,0.003,0.733,0.004,0.674,0.006,0.012,0.005,0.736,0.004,0.519,0.006
0.886,0.003,0.887,0.003,0.847,0.003,0.873,0.003,0.816,0.004,0.750,0.006,0.0006,0.0004,0.723,0.004,0.557,0.006
)";

const std::string kLcCsv = std::string(kFixtureCsvHeader) + "\n" + R"(0.264,0.006,0.277,0.007,0.315,0.006,0.285,0.004,0.152,0.004,0.104,0.009,-3.13,0.07,0.889,0.003,0.154,0.006
0.268,0.007,0.299,0.007,0.287,0.007,0.285,0.004,0.152,0.004,0.099,0.009,-2.27,0.09,0.883,0.003,0.174,0.007
0.317,0.006,0.287,0.007,0.299,0.007,0.301,0.004,0.165,0.004,0.119,0.007,-1.41,0.08,0.845,0.003,0.191,0.007
0.315,0.006,0.277,0.007,0.314,0.006,0.302,0.004,0.165,0.004,0.122,0.008,-0.85,0.08,0.831,0.004,0.218,0.007
0.286,0.006,0.266,0.007,0.240,0.007,0.264,0.004,0.135,0.004,0.091,0.009,0.015,0.008,0.812,0.004,0.206,0.007
0.330,0.007,0.283,0.007,0.319,0.007,0.311,0.004,0.172,0.004,0.109,0.009,0.574,0.008,0.819,0.004,0.213,0.007
0.302,0.007,0.284,0.007,0.367,0.007,0.317,0.004,0.177,0.004,0.118,0.007,1.25,0.08,0.839,0.004,0.198,0.007
0.290,0.007,0.283,0.006,0.276,0.007,0.283,0.004,0.151,0.004,0.096,0.009,2.17,0.09,0.869,0.003,0.166,0.007
0.291,0.007,0.283,0.007,0.303,0.006,0.292,0.004,0.158,0.004,0.115,0.009,2.73,0.07,0.894,0.003,0.157,0.006
)";

// phi values beyond the principal interval are kept verbatim and wrapped only
// at comparison time
const std::string kCounterCsv = std::string(kFixtureCsvHeader) + "\n" + R"(0.254,0.006,0.061,0.006,0.168,0.007,0.161,0.004,0.051,0.003,0.023,0.002,-0.23,0.09,,,0.153,0.002
0.255,0.006,0.082,0.006,0.169,0.006,0.169,0.003,0.059,0.003,0.028,0.002,-0.21,0.07,,,0.158,0.002
0.284,0.007,0.102,0.006,0.189,0.007,0.192,0.004,0.074,0.003,0.040,0.003,-0.18,0.05,,,0.167,0.002
0.291,0.006,0.126,0.007,0.198,0.007,0.205,0.004,0.085,0.003,0.055,0.003,-0.17,0.04,,,0.177,0.002
0.303,0.006,0.185,0.006,0.196,0.006,0.228,0.004,0.105,0.003,0.072,0.003,-0.12,0.03,,,0.189,0.002
0.274,0.006,0.159,0.006,0.261,0.006,0.231,0.003,0.107,0.003,0.079,0.002,-1.10,0.04,,,0.185,0.002
0.236,0.007,0.239,0.006,0.258,0.006,0.244,0.004,0.120,0.004,0.094,0.003,-3.63,0.02,,,0.165,0.002
0.254,0.006,0.201,0.006,0.326,0.006,0.260,0.003,0.129,0.004,0.091,0.002,-3.26,0.02,,,0.157,0.001
)";

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_field(const std::string& s, int line_no) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("fixture line " + std::to_string(line_no) + ": bad numeric field '" + s +
                         "'");
    }
}

void validate_rows(const std::vector<MeasuredRow>& rows) {
    int i = 0;
    for (const auto& r : rows) {
        ++i;
        for (double d : {r.d12, r.d23, r.d31, r.dbar, r.rv, r.rn})
            if (d < 0.0 || d > 1.0)
                throw ParseError("fixture row " + std::to_string(i) + ": value outside [0, 1]");
        for (double u : {r.u_d12, r.u_d23, r.u_d31, r.u_dbar, r.u_rv, r.u_rn, r.u_phi, r.u_pfb})
            if (u <= 0.0)
                throw ParseError("fixture row " + std::to_string(i) + ": non-positive uncertainty");
        const double rv_check = std::sqrt(r.d12 * r.d23 * r.d31);
        if (std::abs(rv_check - r.rv) > 0.01)
            throw ParseError("fixture row " + std::to_string(i) +
                             ": rv inconsistent with the pairwise overlaps");
    }
}

} // namespace

const char* fixture_table_name(FixtureTable t) {
    switch (t) {
        case FixtureTable::pol: return "pol";
        case FixtureTable::time_delay: return "time";
        case FixtureTable::lc: return "lc";
        case FixtureTable::counter: return "counter";
    }
    return "?";
}

FixtureTable fixture_table_from_name(const std::string& name) {
    if (name == "pol") return FixtureTable::pol;
    if (name == "time") return FixtureTable::time_delay;
    if (name == "lc") return FixtureTable::lc;
    if (name == "counter") return FixtureTable::counter;
    throw DomainError("unknown measured table '" + name + "' (expected pol|time|lc|counter)");
}

const std::string& fixture_csv(FixtureTable t) {
    switch (t) {
        case FixtureTable::pol: return kPolCsv;
        case FixtureTable::time_delay: return kTimeCsv;
        case FixtureTable::lc: return kLcCsv;
        case FixtureTable::counter: return kCounterCsv;
    }
    return kPolCsv;
}

std::vector<MeasuredRow> parse_fixture_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("fixture: empty input");
    if (line != kFixtureCsvHeader)
        throw ParseError("fixture: unexpected header '" + line + "'");
    std::vector<MeasuredRow> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        const auto f = split_csv_line(line);
        if (f.size() != 18)
            throw ParseError("fixture line " + std::to_string(line_no) + ": expected 18 fields, got " +
                             std::to_string(f.size()));
        MeasuredRow r;
        r.d12 = parse_field(f[0], line_no);
        r.u_d12 = parse_field(f[1], line_no);
        r.d23 = parse_field(f[2], line_no);
        r.u_d23 = parse_field(f[3], line_no);
        r.d31 = parse_field(f[4], line_no);
        r.u_d31 = parse_field(f[5], line_no);
        r.dbar = parse_field(f[6], line_no);
        r.u_dbar = parse_field(f[7], line_no);
        r.rv = parse_field(f[8], line_no);
        r.u_rv = parse_field(f[9], line_no);
        r.rn = parse_field(f[10], line_no);
        r.u_rn = parse_field(f[11], line_no);
        r.phi = parse_field(f[12], line_no);
        r.u_phi = parse_field(f[13], line_no);
        if (!f[14].empty()) {
            r.pb = parse_field(f[14], line_no);
            r.u_pb = parse_field(f[15], line_no);
        } else if (!f[15].empty()) {
            throw ParseError("fixture line " + std::to_string(line_no) +
                             ": uncertainty present without value");
        }
        r.pfb = parse_field(f[16], line_no);
        r.u_pfb = parse_field(f[17], line_no);
        rows.push_back(r);
    }
    validate_rows(rows);
    return rows;
}

std::vector<MeasuredRow> load_table(FixtureTable t) {
    std::istringstream in(fixture_csv(t));
    return parse_fixture_csv(in);
}

ModelKind model_kind_from_name(const std::string& name) {
    if (name == "ideal") return ModelKind::ideal;
    if (name == "noisy") return ModelKind::noisy;
    throw DomainError("unknown model '" + name + "' (expected ideal|noisy)");
}

namespace {

/// Gram matrix of a measured row, projected onto the feasible set when the
/// noise-biased estimates land outside of it.
std::pair<GramMatrix, bool> measured_gram(const MeasuredRow& row) {
    const double x = std::sqrt(row.d12);
    const double y = std::sqrt(row.d31);
    const double z = std::sqrt(row.d23);
    const double phi = wrap_angle(row.phi);
    const double bound = (x * x + y * y + z * z - 1.0) / (2.0 * x * y * z);
    bool projected = false;
    double cos_eff = std::cos(phi);
    if (cos_eff < bound) {
        cos_eff = std::min(1.0, bound);
        projected = true;
    }
    const double phi_eff = std::copysign(std::acos(std::clamp(cos_eff, -1.0, 1.0)), phi);
    return {gram_from_params({row.d12, row.d31, row.d23, phi_eff}), projected};
}

} // namespace

std::vector<ResidualRow> residual_report(std::span<const MeasuredRow> rows, ModelKind model,
                                         double tol) {
    if (tol < 0.0)
        throw DomainError("residual_report: tolerance must be non-negative");
    std::vector<ResidualRow> out;
    out.reserve(rows.size());
    int index = 0;
    for (const auto& row : rows) {
        ResidualRow res;
        res.index = index++;
        double pb_pred = 0.0, pfb_pred = 0.0;
        const double phi = wrap_angle(row.phi);
        if (model == ModelKind::ideal) {
            pb_pred = tritter_pb_analytic(row.dbar, row.rn, phi);
            pfb_pred = tritter_pfb_analytic_total(row.dbar, row.rn, phi);
        } else {
            auto [gram, projected] = measured_gram(row);
            res.projected = projected;
            const auto cfg = PhotonConfig::one_per_mode(3);
            const auto dist = noisy_distribution(measured_tritter(), cfg, gram, default_source(),
                                                 PostSelection::exactly_three, 0.1);
            pb_pred = dist.p_bunching();
            pfb_pred = dist.p_full_bunching();
        }
        res.pfb_pred = pfb_pred;
        res.pfb_meas = row.pfb;
        res.pfb_resid = std::abs(pfb_pred - row.pfb);
        bool pass = res.pfb_resid <= tol;
        if (row.pb) {
            res.pb_pred = pb_pred;
            res.pb_meas = *row.pb;
            res.pb_resid = std::abs(pb_pred - *row.pb);
            pass = pass && *res.pb_resid <= tol;
        }
        res.pass = pass;
        out.push_back(res);
    }
    return out;
}

} // namespace bosonbunch
