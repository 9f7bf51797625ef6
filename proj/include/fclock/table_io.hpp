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

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fclock/adiabatic.hpp"
#include "fclock/asymptotics.hpp"
#include "fclock/peak_analysis.hpp"

// CSV/JSON serialization of result tables.  CSV files carry the
// effective configuration as leading '#' comment lines, then the header
// row; numbers are written with %.12g, locale-free, so identical runs
// produce identical bytes.

namespace fclock {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace detail {

inline std::string csv_preamble(const std::string& tool, const nlohmann::json& config) {
    std::string out = "# " + tool + "\n";
    if (!config.empty()) out += "# config: " + config.dump() + "\n";
    return out;
}

}  // namespace detail

inline std::string sweep_to_csv(const SweepTable& table, const nlohmann::json& config = {}) {
    std::string out = detail::csv_preamble("sweep", config);
    out += "k,tau1,p1,tau2,p2,delta_tau\n";
    for (const auto& r : table.rows) {
        out += std::to_string(r.k) + "," + format_double(r.tau1) + "," + format_double(r.p1) +
               "," + format_double(r.tau2) + "," + format_double(r.p2) + "," +
               format_double(r.delta_tau) + "\n";
    }
    return out;
}

inline nlohmann::json sweep_to_json(const SweepTable& table, const nlohmann::json& config = {}) {
    nlohmann::json j;
    if (!config.empty()) j["config"] = config;
    j["provenance"] = {{"coarse_step_factor", table.provenance.coarse_step_factor},
                       {"min_step", table.provenance.min_step},
                       {"refine_rel_tol", table.provenance.refine_rel_tol}};
    j["rows"] = nlohmann::json::array();
    for (const auto& r : table.rows)
        j["rows"].push_back({{"k", r.k},
                             {"tau1", r.tau1},
                             {"p1", r.p1},
                             {"tau2", r.tau2},
                             {"p2", r.p2},
                             {"delta_tau", r.delta_tau}});
    return j;
}

/// Parse a sweep CSV produced by sweep_to_csv ('#' comments skipped).
inline SweepTable sweep_from_csv_text(const std::string& text) {
    SweepTable table;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "k,tau1,p1,tau2,p2,delta_tau")
                throw std::runtime_error("sweep csv: unexpected header: " + line);
            header_seen = true;
            continue;
        }
        PeakReport r;
        std::istringstream row(line);
        std::string field;
        double vals[6];
        for (int i = 0; i < 6; ++i) {
            if (!std::getline(row, field, ','))
                throw std::runtime_error("sweep csv: line " + std::to_string(lineno) +
                                         ": expected 6 fields");
            try {
                vals[i] = std::stod(field);
            } catch (const std::exception&) {
                throw std::runtime_error("sweep csv: line " + std::to_string(lineno) +
                                         ": bad number '" + field + "'");
            }
        }
        r.k = static_cast<std::size_t>(vals[0]);
        r.tau1 = vals[1];
        r.p1 = vals[2];
        r.tau2 = vals[3];
        r.p2 = vals[4];
        r.delta_tau = vals[5];
        table.rows.push_back(r);
    }
    if (!header_seen) throw std::runtime_error("sweep csv: missing header");
    return table;
}

inline SweepTable sweep_from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("sweep csv: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return sweep_from_csv_text(buf.str());
}

inline std::string series_to_csv(const AmplitudeSeries& series,
                                 const nlohmann::json& config = {}) {
    std::string out = detail::csv_preamble("pk-curve", config);
    out += "t,P\n";
    for (std::size_t i = 0; i < series.times.size(); ++i)
        out += format_double(series.times[i]) + "," + format_double(series.probabilities[i]) +
               "\n";
    return out;
}

inline std::string gap_scan_to_csv(const GapScan& scan, const nlohmann::json& config = {}) {
    std::string out = detail::csv_preamble("gap k=" + std::to_string(scan.k), config);
    out += "s,gap\n";
    for (std::size_t i = 0; i < scan.s_grid.size(); ++i)
        out += format_double(scan.s_grid[i]) + "," + format_double(scan.gap[i]) + "\n";
    return out;
}

inline std::string gap_summary_to_csv(const std::vector<GapScan>& scans,
                                      const nlohmann::json& config = {}) {
    std::string out = detail::csv_preamble("gap summary", config);
    out += "k,s_min,gap_min\n";
    for (const auto& s : scans)
        out += std::to_string(s.k) + "," + format_double(s.s_min) + "," +
               format_double(s.gap_min) + "\n";
    return out;
}

inline nlohmann::json fit_to_json(const FitResult& fit, const std::string& law,
                                  const nlohmann::json& config = {}) {
    nlohmann::json j;
    if (!config.empty()) j["config"] = config;
    j["law"] = law;
    j["exponent"] = fit.exponent;
    j["coefficient"] = fit.coefficient;
    j["intercept"] = fit.intercept;
    j["r_squared"] = fit.r_squared;
    j["residual_max"] = fit.residual_max;
    return j;
}

inline nlohmann::json asymptotic_reports_to_json(const std::vector<AsymptoticReport>& rows,
                                                 const nlohmann::json& config = {}) {
    nlohmann::json j;
    if (!config.empty()) j["config"] = config;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows)
        j["rows"].push_back({{"k", r.k},
                             {"p_tau_sum", r.p_tau_sum},
                             {"p_tau_integral", r.p_tau_integral},
                             {"p_tau_numeric", r.p_tau_numeric},
                             {"coefficient_estimate", r.coefficient_estimate},
                             {"delta_predicted", r.delta_predicted},
                             {"delta_numeric", r.delta_numeric}});
    return j;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace fclock
