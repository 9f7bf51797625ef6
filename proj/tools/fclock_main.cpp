/* Copyright 2026 The feynman-clock Authors
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

// fclock: clock-model quantum computer analysis harness.
//
// Subcommands
//   pk-curve     sample P_k(t) over a time grid          -> CSV (+SVG)
//   sweep        first/second maxima over a list of k    -> CSV (+JSON)
//   fit          scaling-law fit of a sweep CSV          -> JSON (+SVG)
//   gap          adiabatic clock gap scans               -> CSV + JSON
//   asymptotics  analytic vs numeric P_k(tau) routes     -> JSON
//   verify       runtime verification suites             -> report
//
// Flags override config-file values override defaults; the effective
// configuration is echoed into every output file, and a re-run with the
// same configuration reproduces outputs byte for byte.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "fclock/asymptotics.hpp"
#include "fclock/gate_io.hpp"
#include "fclock/svg.hpp"
#include "fclock/table_io.hpp"
#include "fclock/verify.hpp"

namespace {

using nlohmann::json;

json load_config_file(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("config: " + path + " is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("config: top level must be an object");
    return j;
}

template <typename T>
void apply_config(const CLI::Option* opt, const json& cfg, const std::string& key, T& value) {
    if (opt->count() == 0 && cfg.contains(key)) {
        try {
            value = cfg.at(key).get<T>();
        } catch (const json::exception&) {
            throw std::runtime_error("config: field \"" + key + "\" has the wrong type");
        }
    }
}

std::vector<std::size_t> parse_k_list(const std::string& spec) {
    std::vector<std::size_t> out;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        try {
            const long long v = std::stoll(token);
            if (v < 1) throw std::runtime_error("");
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw std::runtime_error("k list: bad entry '" + token + "'");
        }
    }
    if (out.empty()) throw std::runtime_error("k list: empty");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// --k-log lo:hi:n  ->  n log-spaced integers, deduplicated
std::vector<std::size_t> parse_k_log(const std::string& spec) {
    std::size_t lo = 0, hi = 0, n = 0;
    if (std::sscanf(spec.c_str(), "%zu:%zu:%zu", &lo, &hi, &n) != 3)
        throw std::runtime_error("k-log: expected lo:hi:count, got '" + spec + "'");
    return fclock::log_spaced_k(lo, hi, n);
}

std::string with_extension(const std::string& path, const std::string& ext) {
    const std::size_t slash = path.find_last_of('/');
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + ext;
    return path.substr(0, dot) + ext;
}

int run_pk_curve(const json& cfg, const CLI::App* cmd, std::size_t k, double t_min, double t_max,
                 std::size_t points, std::string out, bool svg) {
    apply_config(cmd->get_option("--k"), cfg, "k", k);
    apply_config(cmd->get_option("--t-min"), cfg, "t_min", t_min);
    apply_config(cmd->get_option("--t-max"), cfg, "t_max", t_max);
    apply_config(cmd->get_option("--points"), cfg, "points", points);
    apply_config(cmd->get_option("--out"), cfg, "out", out);
    if (cmd->get_option("--svg")->count() == 0 && cfg.contains("svg")) svg = cfg["svg"].get<bool>();

    if (k < 1) throw std::runtime_error("pk-curve: need --k >= 1");
    if (out.empty()) throw std::runtime_error("pk-curve: need --out");
    if (points < 2) throw std::runtime_error("pk-curve: need --points >= 2");
    if (t_max <= 0.0) t_max = 1.2 * static_cast<double>(k + 2);
    if (!(t_max > t_min)) throw std::runtime_error("pk-curve: need t_max > t_min");

    const json effective = {{"command", "pk-curve"}, {"k", k},      {"t_min", t_min},
                            {"t_max", t_max},        {"points", points}, {"out", out},
                            {"svg", svg}};

    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = t_min + (t_max - t_min) * static_cast<double>(i) /
                              static_cast<double>(points - 1);
    const fclock::AmplitudeSeries series = fclock::probability_series(k, grid);
    fclock::write_text_file(out, fclock::series_to_csv(series, effective));

    if (svg) {
        fclock::SvgPlotSpec spec;
        spec.title = "P_k(t), k = " + std::to_string(k);
        spec.x_label = "t";
        spec.y_label = "P_k(t)";
        spec.description = "config: " + effective.dump();
        fclock::SvgSeries s;
        s.label = "P_k(t)";
        for (std::size_t i = 0; i < grid.size(); ++i)
            s.points.push_back({series.times[i], series.probabilities[i]});
        spec.series = {s};
        fclock::write_text_file(with_extension(out, ".svg"), fclock::render_svg_plot(spec));
    }
    return 0;
}

int run_sweep(const json& cfg, const CLI::App* cmd, std::string k_list, std::string k_log,
              std::string out, std::string json_out, unsigned jobs) {
    apply_config(cmd->get_option("--k-list"), cfg, "k_list", k_list);
    apply_config(cmd->get_option("--k-log"), cfg, "k_log", k_log);
    apply_config(cmd->get_option("--out"), cfg, "out", out);
    apply_config(cmd->get_option("--json-out"), cfg, "json_out", json_out);
    apply_config(cmd->get_option("--jobs"), cfg, "jobs", jobs);

    if (k_list.empty() == k_log.empty())
        throw std::runtime_error("sweep: need exactly one of --k-list or --k-log");
    if (out.empty()) throw std::runtime_error("sweep: need --out");
    const std::vector<std::size_t> ks = k_list.empty() ? parse_k_log(k_log)
                                                       : parse_k_list(k_list);

    const json effective = {{"command", "sweep"},
                            {"k_list", k_list},
                            {"k_log", k_log},
                            {"out", out},
                            {"json_out", json_out},
                            {"jobs", jobs}};

    const fclock::SweepTable table = fclock::sweep(ks, jobs);
    fclock::write_text_file(out, fclock::sweep_to_csv(table, effective));
    if (!json_out.empty())
        fclock::write_text_file(json_out, fclock::sweep_to_json(table, effective).dump(2) + "\n");
    return 0;
}

int run_fit(const json& cfg, const CLI::App* cmd, std::string in, std::string law,
            std::string out, bool svg) {
    apply_config(cmd->get_option("--in"), cfg, "in", in);
    apply_config(cmd->get_option("--law"), cfg, "law", law);
    apply_config(cmd->get_option("--out"), cfg, "out", out);
    if (cmd->get_option("--svg")->count() == 0 && cfg.contains("svg")) svg = cfg["svg"].get<bool>();

    if (in.empty()) throw std::runtime_error("fit: need --in <sweep.csv>");
    const fclock::SweepTable table = fclock::sweep_from_csv_file(in);

    fclock::FitResult fit;
    std::vector<std::pair<double, double>> data;
    bool loglog = true;
    if (law == "tau") {
        fit = fclock::fit_tau_scaling(table);
        loglog = false;
        for (const auto& r : table.rows) data.push_back({double(r.k), r.tau1});
    } else if (law == "prob") {
        fit = fclock::fit_probability_scaling(table);
        for (const auto& r : table.rows) data.push_back({double(r.k), r.p1});
    } else if (law == "spacing") {
        fit = fclock::fit_spacing_scaling(table);
        for (const auto& r : table.rows) data.push_back({double(r.k), r.delta_tau});
    } else if (law == "runtime") {
        fit = fclock::fit_runtime_scaling(table);
        for (const auto& r : table.rows)
            data.push_back({double(r.k), fclock::runtime_estimate(r).total_time});
    } else {
        throw std::runtime_error("fit: --law must be one of tau|prob|spacing|runtime");
    }

    const json effective = {
        {"command", "fit"}, {"in", in}, {"law", law}, {"out", out}, {"svg", svg}};
    const json result = fclock::fit_to_json(fit, law, effective);
    if (out.empty() || out == "-")
        std::cout << result.dump(2) << "\n";
    else
        fclock::write_text_file(out, result.dump(2) + "\n");

    if (svg) {
        if (out.empty() || out == "-")
            throw std::runtime_error("fit: --svg needs --out to name the file");
        fclock::SvgPlotSpec spec;
        spec.title = "fit: " + law;
        spec.x_label = "k";
        spec.y_label = law;
        spec.log_x = spec.log_y = loglog;
        spec.description = "config: " + effective.dump();
        fclock::SvgSeries points;
        points.label = "sweep";
        points.markers = true;
        points.points = data;
        fclock::SvgSeries overlay;
        overlay.label = "fitted law";
        overlay.color = "#d62728";
        for (const auto& [x, y] : data) {
            (void)y;
            const double fy = loglog ? fit.coefficient * std::pow(x, fit.exponent)
                                     : fit.coefficient * x + fit.intercept;
            overlay.points.push_back({x, fy});
        }
        spec.series = {points, overlay};
        fclock::write_text_file(with_extension(out, ".svg"), fclock::render_svg_plot(spec));
    }
    return 0;
}

int run_gap(const json& cfg, const CLI::App* cmd, std::string k_list, std::size_t grid,
            std::string out) {
    apply_config(cmd->get_option("--k-list"), cfg, "k_list", k_list);
    apply_config(cmd->get_option("--grid"), cfg, "grid", grid);
    apply_config(cmd->get_option("--out"), cfg, "out", out);

    if (k_list.empty()) throw std::runtime_error("gap: need --k-list");
    if (out.empty()) throw std::runtime_error("gap: need --out prefix");
    const std::vector<std::size_t> ks = parse_k_list(k_list);

    const json effective = {
        {"command", "gap"}, {"k_list", k_list}, {"grid", grid}, {"out", out}};

    std::vector<fclock::GapScan> scans;
    for (std::size_t k : ks) {
        scans.push_back(fclock::gap_scan(k, grid));
        fclock::write_text_file(out + "_k" + std::to_string(k) + ".csv",
                                fclock::gap_scan_to_csv(scans.back(), effective));
    }
    fclock::write_text_file(out + "_summary.csv", fclock::gap_summary_to_csv(scans, effective));

    json summary;
    summary["config"] = effective;
    summary["rows"] = json::array();
    for (const auto& s : scans)
        summary["rows"].push_back({{"k", s.k}, {"s_min", s.s_min}, {"gap_min", s.gap_min}});
    if (ks.size() >= 5 && static_cast<double>(ks.back()) >= 10.0 * static_cast<double>(ks.front())) {
        const fclock::GapScalingReport rep = fclock::fit_gap_scaling(ks, grid);
        summary["fit"] = {{"exponent", rep.fit.exponent},
                          {"coefficient", rep.fit.coefficient},
                          {"r_squared", rep.fit.r_squared},
                          {"runtime_exponent_born", rep.runtime_exponent_born},
                          {"runtime_exponent_jansen", rep.runtime_exponent_jansen}};
    }
    fclock::write_text_file(out + "_summary.json", summary.dump(2) + "\n");
    return 0;
}

int run_asymptotics(const json& cfg, const CLI::App* cmd, std::string k_list, std::string out,
                    unsigned jobs) {
    apply_config(cmd->get_option("--k-list"), cfg, "k_list", k_list);
    apply_config(cmd->get_option("--out"), cfg, "out", out);
    apply_config(cmd->get_option("--jobs"), cfg, "jobs", jobs);

    if (k_list.empty()) throw std::runtime_error("asymptotics: need --k-list");
    if (out.empty()) throw std::runtime_error("asymptotics: need --out");
    const std::vector<std::size_t> ks = parse_k_list(k_list);

    const json effective = {
        {"command", "asymptotics"}, {"k_list", k_list}, {"out", out}, {"jobs", jobs}};

    std::vector<fclock::AsymptoticReport> rows;
    std::vector<std::string> failures;
    const fclock::SweepTable table = fclock::sweep(ks, jobs);
    for (const auto& peak : table.rows) {
        try {
            rows.push_back(fclock::make_asymptotic_report(peak));
        } catch (const std::exception& e) {
            failures.push_back("k=" + std::to_string(peak.k) + ": " + e.what());
        }
    }
    fclock::write_text_file(out,
                            fclock::asymptotic_reports_to_json(rows, effective).dump(2) + "\n");
    if (!failures.empty()) {
        for (const auto& f : failures) std::cerr << "asymptotics: " << f << "\n";
        return 1;
    }
    return 0;
}

int run_verify(const json& cfg, const CLI::App* cmd, std::string level, std::uint64_t seed,
               std::string gates_path) {
    apply_config(cmd->get_option("--level"), cfg, "level", level);
    apply_config(cmd->get_option("--seed"), cfg, "seed", seed);
    apply_config(cmd->get_option("--gates"), cfg, "gates", gates_path);

    fclock::VerifyLevel lvl;
    if (level == "quick")
        lvl = fclock::VerifyLevel::quick;
    else if (level == "full")
        lvl = fclock::VerifyLevel::full;
    else
        throw std::runtime_error("verify: --level must be quick or full");

    std::vector<fclock::VerifyCheck> checks = fclock::run_verification(lvl, seed);

    if (!gates_path.empty()) {
        // user-supplied sequence: evolve it and check the block theorem
        const fclock::UnitarySequence seq = fclock::load_unitary_sequence(gates_path);
        const double t = 0.5 * static_cast<double>(seq.gate_count() + 2);
        const fclock::BlockEvolution ev = fclock::evolve(seq, t);
        const fclock::StructureReport rep =
            fclock::verify_structure(ev, seq, fclock::tol::structure_residual);
        fclock::VerifyCheck c;
        c.name = "gates-file-structure";
        c.residual = rep.max_residual;
        c.tolerance = rep.tolerance;
        c.passed = rep.passed;
        c.detail = gates_path;
        checks.push_back(c);
    }

    bool ok = true;
    for (const auto& c : checks) {
        std::printf("%-26s %-5s residual %.3e (tol %.1e)%s%s\n", c.name.c_str(),
                    c.passed ? "PASS" : "FAIL", c.residual, c.tolerance,
                    c.detail.empty() ? "" : "  ", c.detail.c_str());
        if (!c.passed) {
            std::cerr << "verify: " << c.name << " failed: residual " << c.residual
                      << " exceeds " << c.tolerance << "\n";
            ok = false;
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clock-model quantum computer analysis harness"};
    app.require_subcommand(1);

    std::string config_path;

    // pk-curve
    auto* pk = app.add_subcommand("pk-curve", "Sample P_k(t) over a time grid");
    std::size_t pk_k = 0;
    double pk_tmin = 0.0, pk_tmax = -1.0;
    std::size_t pk_points = 1000;
    std::string pk_out;
    bool pk_svg = false;
    pk->add_option("--k", pk_k, "gate count");
    pk->add_option("--t-min", pk_tmin, "grid start (default 0)");
    pk->add_option("--t-max", pk_tmax, "grid end (default 1.2*(k+2))");
    pk->add_option("--points", pk_points, "number of samples (default 1000)");
    pk->add_option("--out", pk_out, "output CSV path");
    pk->add_flag("--svg", pk_svg, "also write an SVG plot");
    pk->add_option("--config", config_path, "JSON config file");
    std::uint64_t pk_seed = 0;
    unsigned pk_jobs = 1;
    pk->add_option("--seed", pk_seed, "accepted for interface uniformity; unused");
    pk->add_option("--jobs", pk_jobs, "accepted for interface uniformity; unused");

    // sweep
    auto* sw = app.add_subcommand("sweep", "First/second maxima over a list of k");
    std::string sw_klist, sw_klog, sw_out, sw_json;
    unsigned sw_jobs = 1;
    sw->add_option("--k-list", sw_klist, "comma-separated k values");
    sw->add_option("--k-log", sw_klog, "log-spaced spec lo:hi:count");
    sw->add_option("--out", sw_out, "output CSV path");
    sw->add_option("--json-out", sw_json, "optional JSON output path");
    sw->add_option("--jobs", sw_jobs, "worker threads (default 1)");
    sw->add_option("--config", config_path, "JSON config file");
    std::uint64_t sw_seed = 0;
    bool sw_svg = false;
    sw->add_option("--seed", sw_seed, "accepted for interface uniformity; unused");
    sw->add_flag("--svg", sw_svg, "accepted for interface uniformity; unused");

    // fit
    auto* ft = app.add_subcommand("fit", "Fit a scaling law to a sweep CSV");
    std::string ft_in, ft_law = "tau", ft_out;
    bool ft_svg = false;
    ft->add_option("--in", ft_in, "sweep CSV produced by the sweep subcommand");
    ft->add_option("--law", ft_law, "tau|prob|spacing|runtime");
    ft->add_option("--out", ft_out, "output JSON path ('-' = stdout)");
    ft->add_flag("--svg", ft_svg, "also write an SVG with data and fitted law");
    ft->add_option("--config", config_path, "JSON config file");
    unsigned ft_jobs = 1;
    std::uint64_t ft_seed = 0;
    ft->add_option("--jobs", ft_jobs, "accepted for interface uniformity; unused");
    ft->add_option("--seed", ft_seed, "accepted for interface uniformity; unused");

    // gap
    auto* gp = app.add_subcommand("gap", "Adiabatic clock spectral-gap scans");
    std::string gp_klist, gp_out;
    std::size_t gp_grid = 257;
    gp->add_option("--k-list", gp_klist, "comma-separated k values");
    gp->add_option("--grid", gp_grid, "s-grid size (default 257)");
    gp->add_option("--out", gp_out, "output path prefix");
    gp->add_option("--config", config_path, "JSON config file");
    unsigned gp_jobs = 1;
    std::uint64_t gp_seed = 0;
    bool gp_svg = false;
    gp->add_option("--jobs", gp_jobs, "accepted for interface uniformity; unused");
    gp->add_option("--seed", gp_seed, "accepted for interface uniformity; unused");
    gp->add_flag("--svg", gp_svg, "accepted for interface uniformity; unused");

    // asymptotics
    auto* as = app.add_subcommand("asymptotics", "Analytic vs numeric P_k(tau) routes");
    std::string as_klist, as_out;
    unsigned as_jobs = 1;
    as->add_option("--k-list", as_klist, "comma-separated even k values");
    as->add_option("--out", as_out, "output JSON path");
    as->add_option("--jobs", as_jobs, "worker threads (default 1)");
    as->add_option("--config", config_path, "JSON config file");
    std::uint64_t as_seed = 0;
    bool as_svg = false;
    as->add_option("--seed", as_seed, "accepted for interface uniformity; unused");
    as->add_flag("--svg", as_svg, "accepted for interface uniformity; unused");

    // verify
    auto* vf = app.add_subcommand("verify", "Run the verification suites");
    std::string vf_level = "quick", vf_gates;
    std::uint64_t vf_seed = 12345;
    vf->add_option("--level", vf_level, "quick|full (default quick)");
    vf->add_option("--seed", vf_seed, "random seed (default 12345)");
    vf->add_option("--gates", vf_gates, "optional gate-sequence JSON to verify");
    vf->add_option("--config", config_path, "JSON config file");
    unsigned vf_jobs = 1;
    std::string vf_out;
    bool vf_svg = false;
    vf->add_option("--jobs", vf_jobs, "accepted for interface uniformity; unused");
    vf->add_option("--out", vf_out, "accepted for interface uniformity; unused");
    vf->add_flag("--svg", vf_svg, "accepted for interface uniformity; unused");

    CLI11_PARSE(app, argc, argv);

    try {
        const json cfg = load_config_file(config_path);
        if (pk->parsed())
            return run_pk_curve(cfg, pk, pk_k, pk_tmin, pk_tmax, pk_points, pk_out, pk_svg);
        if (sw->parsed()) return run_sweep(cfg, sw, sw_klist, sw_klog, sw_out, sw_json, sw_jobs);
        if (ft->parsed()) return run_fit(cfg, ft, ft_in, ft_law, ft_out, ft_svg);
        if (gp->parsed()) return run_gap(cfg, gp, gp_klist, gp_grid, gp_out);
        if (as->parsed()) return run_asymptotics(cfg, as, as_klist, as_out, as_jobs);
        if (vf->parsed()) return run_verify(cfg, vf, vf_level, vf_seed, vf_gates);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
