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

#include "bosonbunch/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <type_traits>
#include <sstream>

#include <CLI11.hpp>

#include "bosonbunch/explore.hpp"
#include "bosonbunch/fixtures.hpp"
#include "bosonbunch/textio.hpp"

namespace bosonbunch::cli {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad numeric value '" + s + "' for " + what);
    }
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer value '" + s + "' for " + what);
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

/// Flat key=value configuration file; '#' starts a comment line.
std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file '" + path + "'");
    std::map<std::string, std::string> cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(line_no) + ": expected key=value");
        cfg[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return cfg;
}

struct Settings {
    std::map<std::string, std::string> config;

    bool has(const std::string& key) const { return config.count(key) != 0; }
    const std::string& get(const std::string& key) const { return config.at(key); }

    /// flags > config file > environment (seed only) > built-in default
    template <typename T, typename Parse>
    void fill(const CLI::Option* opt, const std::string& key, T& var, Parse parse) const {
        if (opt != nullptr && opt->count() > 0)
            return;
        if (has(key)) {
            var = parse(get(key), key);
            return;
        }
        if constexpr (std::is_integral_v<T>) {
            if (key == "seed")
                if (const char* env = std::getenv("BOSONBUNCH_SEED"))
                    var = static_cast<T>(parse_u64(env, "BOSONBUNCH_SEED"));
        }
    }
};

ComplexMatrix unitary_from_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "u3tilde")
        return measured_tritter();
    if (head == "fourier")
        return fourier_matrix(parse_u64(rest, "fourier order"));
    if (head == "hadamard")
        return sylvester_hadamard(parse_u64(rest, "hadamard order"));
    if (head == "file")
        return read_matrix_file(rest);
    throw ParseError("unknown unitary spec '" + spec +
                     "' (expected fourier:N | hadamard:N | file:PATH | u3tilde)");
}

GramMatrix gram_from_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "params") {
        const auto f = split(rest, ',');
        if (f.size() != 4)
            throw ParseError("gram params: expected d12,d13,d23,phi");
        return gram_from_params({parse_double(f[0], "d12"), parse_double(f[1], "d13"),
                                 parse_double(f[2], "d23"), parse_double(f[3], "phi")});
    }
    if (head == "prep") {
        const auto f = split(rest, ',');
        if (f.size() != 5)
            throw ParseError("gram prep: expected alpha,beta,gamma,phi,x");
        const StatePrepParams p{parse_double(f[0], "alpha"), parse_double(f[1], "beta"),
                                parse_double(f[2], "gamma"), parse_double(f[3], "phi"),
                                parse_double(f[4], "x")};
        return gram_from_states(states_from_prep(p));
    }
    if (head == "file")
        return read_gram_file(rest);
    throw ParseError("unknown gram spec '" + spec +
                     "' (expected params:d12,d13,d23,phi | prep:alpha,beta,gamma,phi,x | file:PATH)");
}

SourceModel source_from_noise_spec(const std::string& spec, const Settings& st) {
    double g2 = 0.017, brightness = 0.13, eta = 0.011;
    if (st.has("g2"))
        g2 = parse_double(st.get("g2"), "g2");
    if (st.has("brightness"))
        brightness = parse_double(st.get("brightness"), "brightness");
    if (st.has("eta"))
        eta = parse_double(st.get("eta"), "eta");
    if (!spec.empty() && spec != "default") {
        for (const auto& kv : split(spec, ',')) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw ParseError("noise spec: expected k=v entries, got '" + kv + "'");
            const std::string key = kv.substr(0, eq);
            const double value = parse_double(kv.substr(eq + 1), key);
            if (key == "g2")
                g2 = value;
            else if (key == "brightness")
                brightness = value;
            else if (key == "eta")
                eta = value;
            else
                throw ParseError("noise spec: unknown key '" + key + "'");
        }
    }
    return SourceModel::from_g2_brightness(g2, brightness, eta);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open output file '" + path + "'");
    return out;
}

std::vector<int> parse_orders(const std::string& list) {
    std::vector<int> orders;
    for (const auto& tok : split(list, ','))
        if (!tok.empty())
            orders.push_back(static_cast<int>(parse_u64(tok, "order")));
    return orders;
}

// ---- subcommand bodies ----------------------------------------------------

void cmd_distribution(const std::string& unitary_spec, const std::string& gram_spec,
                      const std::string& noise_spec, const std::string& out_path,
                      const Settings& st, std::ostream& out) {
    const ComplexMatrix u = unitary_from_spec(unitary_spec);
    const GramMatrix g = gram_from_spec(gram_spec);
    PhotonConfig cfg;
    cfg.mode_count = static_cast<int>(u.rows());
    for (std::size_t i = 0; i < g.dim(); ++i)
        cfg.input_modes.push_back(static_cast<int>(i));

    OutputDistribution dist =
        noise_spec.empty()
            ? output_distribution(u, cfg, g)
            : noisy_distribution(u, cfg, g, source_from_noise_spec(noise_spec, st),
                                 PostSelection::exactly_three, 0.1);
    auto f = open_out(out_path);
    write_distribution_csv(f, dist);
    out << "wrote " << out_path << " (" << dist.size() << " outcomes)\n";
}

void cmd_scan(const std::string& kind_name, int grid, const std::string& model,
              const std::string& out_path, std::ostream& out) {
    ScanKind kind;
    if (kind_name == "polarization")
        kind = ScanKind::polarization;
    else if (kind_name == "time")
        kind = ScanKind::time_delay;
    else if (kind_name == "triad")
        kind = ScanKind::triad;
    else if (kind_name == "counterfb")
        kind = ScanKind::counterfb;
    else
        throw ParseError("unknown scan kind '" + kind_name +
                         "' (expected polarization|time|triad|counterfb)");
    const bool noisy = model == "noisy";
    if (!noisy && model != "ideal")
        throw ParseError("unknown model '" + model + "' (expected ideal|noisy)");

    const auto rows = scan_family(kind, grid, noisy);
    auto f = open_out(out_path);
    const auto [name_a, name_b] = scan_param_names(kind);
    f << name_a;
    if (!name_b.empty())
        f << ',' << name_b;
    f << ",d12,d13,d23,dbar,r,phi,p_B,p_FB";
    if (noisy)
        f << ",p_B_noisy,p_FB_noisy";
    f << '\n';
    for (const auto& r : rows) {
        f << format_value(r.param_a);
        if (!name_b.empty())
            f << ',' << format_value(r.param_b);
        f << ',' << format_value(r.d12) << ',' << format_value(r.d13) << ',' << format_value(r.d23)
          << ',' << format_value(r.dbar) << ',' << format_value(r.r) << ',' << format_value(r.phi)
          << ',' << format_value(r.pb) << ',' << format_value(r.pfb);
        if (noisy)
            f << ',' << format_value(r.pb_noisy) << ',' << format_value(r.pfb_noisy);
        f << '\n';
    }
    f << "# kind=" << kind_name << ", rows=" << rows.size() << ", model=" << model << '\n';
    out << "wrote " << out_path << " (" << rows.size() << " rows)\n";
}

void cmd_search(int n, std::uint64_t trials, std::uint64_t seed, int workers,
                const std::string& out_path, std::ostream& out) {
    const SearchReport report = haar_search(n, trials, RngSeed{seed}, workers);
    auto f = open_out(out_path);
    f << "trial,gap\n";
    for (const auto& o : report.offenders)
        f << o.trial << ',' << format_value(o.gap) << '\n';
    f << "# n=" << report.n << ", trials=" << report.trials << ", seed=" << report.seed.value
      << ", count=" << report.count << ", fraction=" << format_value(report.fraction) << '\n';
    out << report.summary_text();
    out << "wrote " << out_path << '\n';
}

void cmd_tables(const std::string& which, const std::string& orders_list,
                const std::vector<std::string>& hadamard_files, const std::string& out_path,
                std::ostream& out) {
    auto f = open_out(out_path);
    std::size_t rows = 0;
    if (which == "fourier" || which == "hadamard") {
        std::vector<BunchTableRow> table;
        if (which == "fourier") {
            std::vector<int> orders = parse_orders(orders_list);
            if (orders.empty())
                for (int n = 2; n <= 21; ++n)
                    orders.push_back(n);
            table = fourier_table(orders);
        } else {
            std::vector<int> orders = parse_orders(orders_list);
            if (orders.empty() && hadamard_files.empty())
                orders = {2, 4, 8, 16};
            std::vector<ComplexMatrix> ingested;
            for (const auto& path : hadamard_files)
                ingested.push_back(read_matrix_file(path));
            table = hadamard_table(orders, ingested);
        }
        f << "n,dist,indist,gap,ratio\n";
        for (const auto& r : table)
            f << r.n << ',' << format_value(r.dist) << ',' << format_value(r.indist) << ','
              << format_value(r.gap) << ',' << format_value(r.ratio) << '\n';
        rows = table.size();
    } else if (which == "bounds") {
        f << "r,phi,lower,upper\n";
        for (int i = 0; i <= 8; ++i)
            for (int j = 0; j <= 8; ++j) {
                const double r = i / 8.0;
                const double phi = -kPi + 2.0 * kPi * j / 8.0;
                const auto [lo, hi] = pb_bounds(r, phi);
                f << format_value(r) << ',' << format_value(phi) << ',' << format_value(lo) << ','
                  << format_value(hi) << '\n';
                ++rows;
            }
        f << "# p_B_max=" << format_value(kPbMax) << " at r=0.125, phi=pi; p_B_min="
          << format_value(kPbMin) << " at r=1, phi=0\n";
    } else {
        throw ParseError("unknown table '" + which + "' (expected fourier|hadamard|bounds)");
    }
    out << "wrote " << out_path << " (" << rows << " rows)\n";
}

void cmd_validate(const std::string& table, const std::string& model, double tol,
                  const std::string& out_path, std::ostream& out) {
    const auto rows = load_table(fixture_table_from_name(table));
    const auto report = residual_report(rows, model_kind_from_name(model), tol);
    auto f = open_out(out_path);
    f << "index,pb_pred,pb_meas,pb_resid,pfb_pred,pfb_meas,pfb_resid,projected,status\n";
    bool all_pass = true;
    double max_resid = 0.0;
    for (const auto& r : report) {
        f << r.index << ',';
        if (r.pb_pred) {
            f << format_value(*r.pb_pred) << ',' << format_value(*r.pb_meas) << ','
              << format_value(*r.pb_resid) << ',';
            max_resid = std::max(max_resid, *r.pb_resid);
        } else {
            f << ",,,";
        }
        f << format_value(r.pfb_pred) << ',' << format_value(r.pfb_meas) << ','
          << format_value(r.pfb_resid) << ',' << (r.projected ? 1 : 0) << ','
          << (r.pass ? "PASS" : "FAIL") << '\n';
        max_resid = std::max(max_resid, r.pfb_resid);
        all_pass = all_pass && r.pass;
    }
    f << "# table=" << table << ", model=" << model << ", tol=" << format_value(tol)
      << ", all_pass=" << (all_pass ? 1 : 0) << ", max_resid=" << format_value(max_resid) << '\n';
    out << "validate " << table << " (" << model << "): " << (all_pass ? "all rows PASS" : "FAILURES present")
        << ", max residual " << format_value(max_resid) << "\n";
    out << "wrote " << out_path << '\n';
}

void cmd_pnrcorrect(const std::string& counts_path, double ratio, const std::string& out_path,
                    std::ostream& out) {
    const OutputDistribution raw = read_distribution_csv_file(counts_path);
    std::vector<std::pair<std::vector<int>, double>> counts;
    for (std::size_t i = 0; i < raw.size(); ++i)
        counts.emplace_back(raw.occupation(i), raw.probability(i));
    const auto corrected = pseudo_pnr_correction(counts, ratio);
    auto f = open_out(out_path);
    write_distribution_csv(f, corrected);
    out << "wrote " << out_path << " (" << corrected.size() << " outcomes)\n";
}

void cmd_bargmann(const std::string& dist_path, std::ostream& out) {
    const OutputDistribution dist = read_distribution_csv_file(dist_path);
    const cxd inv = extract_bargmann(dist);
    out << "modulus: " << format_value(std::abs(inv)) << "\n"
        << "phase: " << format_value(std::abs(inv) < 1e-12 ? 0.0 : wrap_angle(std::arg(inv)))
        << "\n"
        << "real: " << format_value(inv.real()) << "\n"
        << "imag: " << format_value(inv.imag()) << "\n";
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"multiphoton bunching toolkit: exact distributions, Gram-matrix feasibility, "
                 "parameter scans, Haar searches and measured-data validation"};
    app.require_subcommand(1);
    // let --config work on either side of the subcommand name
    app.fallthrough(true);

    std::string config_path;
    app.add_option("--config", config_path, "flat key=value configuration file");

    // distribution
    auto* sub_dist = app.add_subcommand("distribution",
                                        "exact or noise-corrected output distribution CSV");
    std::string d_unitary, d_gram, d_noise, d_out;
    sub_dist->add_option("--unitary", d_unitary, "fourier:N | hadamard:N | file:PATH | u3tilde")
        ->required();
    sub_dist->add_option("--gram", d_gram,
                         "params:d12,d13,d23,phi | prep:alpha,beta,gamma,phi,x | file:PATH")
        ->required();
    auto* d_noise_opt = sub_dist->add_option(
        "--noise", d_noise, "source noise spec g2=..,eta=..,brightness=.. (or 'default')");
    d_noise_opt->expected(0, 1);
    sub_dist->add_option("--out", d_out, "output CSV path")->required();

    // scan
    auto* sub_scan = app.add_subcommand("scan", "preparation-family scan CSV");
    std::string s_kind, s_model = "ideal", s_out;
    int s_grid = 0;
    sub_scan->add_option("--kind", s_kind, "polarization | time | triad | counterfb")->required();
    auto* s_grid_opt = sub_scan->add_option("--grid", s_grid, "grid points per scan axis");
    auto* s_model_opt = sub_scan->add_option("--model", s_model, "ideal | noisy");
    sub_scan->add_option("--out", s_out, "output CSV path")->required();

    // search
    auto* sub_search = app.add_subcommand("search", "count counter-intuitive Haar-random unitaries");
    int se_n = 3, se_workers = 1;
    std::uint64_t se_trials = 0, se_seed = 0;
    std::string se_out;
    sub_search->add_option("--n", se_n, "matrix dimension (photons = modes)")->required();
    sub_search->add_option("--trials", se_trials, "number of Haar samples")->required();
    auto* se_seed_opt = sub_search->add_option("--seed", se_seed, "random seed");
    auto* se_workers_opt = sub_search->add_option("--workers", se_workers, "worker threads");
    sub_search->add_option("--out", se_out, "output CSV path")->required();

    // tables
    auto* sub_tables = app.add_subcommand("tables", "antibunching tables and bunching bounds");
    std::string t_which, t_orders, t_out;
    std::vector<std::string> t_files;
    sub_tables->add_option("--which", t_which, "fourier | hadamard | bounds")->required();
    sub_tables->add_option("--orders", t_orders, "comma-separated interferometer orders");
    sub_tables->add_option("--hadamard-files", t_files, "matrix files for non power-of-two orders");
    sub_tables->add_option("--out", t_out, "output CSV path")->required();

    // validate
    auto* sub_validate = app.add_subcommand("validate", "model-vs-measurement residual report");
    std::string v_table, v_model = "ideal", v_out;
    double v_tol = 0.05;
    sub_validate->add_option("--table", v_table, "pol | time | lc | counter")->required();
    auto* v_model_opt = sub_validate->add_option("--model", v_model, "ideal | noisy");
    auto* v_tol_opt = sub_validate->add_option("--tol", v_tol, "pass/fail residual tolerance");
    sub_validate->add_option("--out", v_out, "output CSV path")->required();

    // bargmann
    auto* sub_bargmann = app.add_subcommand("bargmann",
                                            "extract the three-photon invariant from a distribution CSV");
    std::string b_dist;
    sub_bargmann->add_option("--dist", b_dist, "distribution CSV path")->required();

    // pnrcorrect
    auto* sub_pnr = app.add_subcommand(
        "pnrcorrect", "unbias raw pseudo-number-resolved click counts into a distribution");
    std::string p_counts, p_out;
    double p_ratio = 0.5;
    sub_pnr->add_option("--counts", p_counts, "raw counts CSV (distribution schema)")->required();
    auto* p_ratio_opt = sub_pnr->add_option("--splitter-ratio", p_ratio, "two-way split ratio");
    sub_pnr->add_option("--out", p_out, "output CSV path")->required();

    std::vector<const char*> cargv;
    cargv.reserve(argv.size());
    for (const auto& a : argv)
        cargv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "ERROR[usage]: " << e.what() << "\n";
        return 2;
    }

    try {
        Settings st;
        if (!config_path.empty())
            st.config = load_config(config_path);

        if (sub_dist->parsed()) {
            std::string noise_spec = d_noise;
            if (d_noise_opt->count() > 0 && noise_spec.empty())
                noise_spec = "default";
            cmd_distribution(d_unitary, d_gram, noise_spec, d_out, st, out);
        } else if (sub_scan->parsed()) {
            st.fill(s_grid_opt, "grid", s_grid,
                    [](const std::string& s, const std::string& w) {
                        return static_cast<int>(parse_u64(s, w));
                    });
            st.fill(s_model_opt, "model", s_model,
                    [](const std::string& s, const std::string&) { return s; });
            cmd_scan(s_kind, s_grid, s_model, s_out, out);
        } else if (sub_search->parsed()) {
            st.fill(se_seed_opt, "seed", se_seed, parse_u64);
            st.fill(se_workers_opt, "workers", se_workers,
                    [](const std::string& s, const std::string& w) {
                        return static_cast<int>(parse_u64(s, w));
                    });
            cmd_search(se_n, se_trials, se_seed, se_workers, se_out, out);
        } else if (sub_tables->parsed()) {
            cmd_tables(t_which, t_orders, t_files, t_out, out);
        } else if (sub_validate->parsed()) {
            st.fill(v_model_opt, "model", v_model,
                    [](const std::string& s, const std::string&) { return s; });
            st.fill(v_tol_opt, "tol", v_tol, parse_double);
            cmd_validate(v_table, v_model, v_tol, v_out, out);
        } else if (sub_bargmann->parsed()) {
            cmd_bargmann(b_dist, out);
        } else if (sub_pnr->parsed()) {
            st.fill(p_ratio_opt, "splitter_ratio", p_ratio, parse_double);
            cmd_pnrcorrect(p_counts, p_ratio, p_out, out);
        }
        return 0;
    } catch (const Error& e) {
        err << "ERROR[" << e.slug() << "]: " << e.what() << "\n";
        return (e.code() == errc::parse || e.code() == errc::io) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "ERROR[internal]: " << e.what() << "\n";
        return 1;
    }
}

int run_main(int argc, const char* const argv[]) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc));
    for (int i = 0; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

} // namespace bosonbunch::cli
