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

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fclock/clock_spectrum.hpp"
#include "fclock/fit.hpp"
#include "fclock/parallel.hpp"
#include "fclock/tolerances.hpp"

// Location of the first and second maxima of P_k(t) and the scaling
// laws extracted from sweeps over k.  The first maximum is the global
// one; later maxima decay, with spacing growing like k^{1/3}.

namespace fclock {

/// First/second maximum of P_k(t) for one k.
struct PeakReport {
    std::size_t k = 0;
    double tau1 = 0.0;
    double p1 = 0.0;
    double tau2 = 0.0;
    double p2 = 0.0;
    double delta_tau = 0.0;
};

inline void validate(const PeakReport& r) {
    if (!(r.tau1 > 0.0) || !(r.tau2 > r.tau1))
        throw std::runtime_error("PeakReport: need 0 < tau1 < tau2 (k=" + std::to_string(r.k) +
                                 ")");
    if (r.p1 + 1e-12 < r.p2)
        throw std::runtime_error("PeakReport: first maximum must be global (k=" +
                                 std::to_string(r.k) + ")");
    if (!(r.p1 > 0.0) || r.p1 > 1.0 + 1e-12 || !(r.p2 > 0.0) || r.p2 > 1.0 + 1e-12)
        throw std::runtime_error("PeakReport: probabilities out of (0, 1] (k=" +
                                 std::to_string(r.k) + ")");
}

/// How a sweep was produced; serialized next to its rows.
struct SweepProvenance {
    double coarse_step_factor = 0.05;  // h = max(factor*(k+2)^{1/3}, min_step)
    double min_step = 0.01;
    double refine_rel_tol = tol::refine_rel;  // golden-section width / (k+2)
};

struct SweepTable {
    std::vector<PeakReport> rows;  // ascending k
    SweepProvenance provenance;
};

namespace detail {

inline double coarse_step(std::size_t k, const SweepProvenance& prov) {
    return std::max(prov.coarse_step_factor * std::cbrt(static_cast<double>(k + 2)),
                    prov.min_step);
}

/// Golden-section maximization on [a, b]; returns the best point ever
/// evaluated, so refinement can only improve on the bracketing grid.
inline std::pair<double, double> golden_max(const std::function<double(double)>& f, double a,
                                            double b, double xtol) {
    constexpr double invphi = 0.6180339887498948482;
    double best_x = a, best_f = f(a);
    const double fb = f(b);
    if (fb > best_f) {
        best_x = b;
        best_f = fb;
    }
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    auto track = [&](double x, double fx) {
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
    };
    track(c, fc);
    track(d, fd);
    while (b - a > xtol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
            track(c, fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
            track(d, fd);
        }
    }
    return {best_x, best_f};
}

/// First strict grid local maximum of f at t = start + i*h, i >= 1,
/// above the noise floor, refined by golden section.  Throws
/// SearchFailure when no interior maximum shows up within max_steps.
inline std::pair<double, double> first_grid_maximum(const std::function<double(double)>& f,
                                                    double start, double h, std::size_t max_steps,
                                                    double xtol, const std::string& what) {
    double pm = f(start);
    double p0 = f(start + h);
    for (std::size_t i = 1; i + 1 <= max_steps; ++i) {
        const double t1 = start + static_cast<double>(i + 1) * h;
        const double p1 = f(t1);
        if (p0 > tol::peak_noise_floor && pm < p0 && p0 > p1) {
            const double lo = start + static_cast<double>(i - 1) * h;
            auto [x, fx] = golden_max(f, lo, t1, xtol);
            // Never report worse than the bracketing grid point.
            if (fx < p0) return {start + static_cast<double>(i) * h, p0};
            return {x, fx};
        }
        pm = p0;
        p0 = p1;
    }
    throw SearchFailure(what + ": no local maximum found in scan window");
}

}  // namespace detail

/// Optimal stopping time: the first (and global) maximum of P_k(t).
/// Coarse scan over [0.3(k+2), 0.7(k+2)] (widened to [0, 2(k+2)] for
/// k < 10) with step resolving the k^{1/3} oscillation scale, then
/// golden-section refinement.
inline std::pair<double, double> find_first_maximum(std::size_t k,
                                                    const SweepProvenance& prov = {}) {
    if (k < 2) throw std::invalid_argument("find_first_maximum: need k >= 2");
    const TransferKernel kernel(k);
    const auto f = [&kernel](double t) { return kernel.probability(t); };

    const double span = static_cast<double>(k + 2);
    const double lo = (k < 10) ? 0.0 : 0.3 * span;
    const double hi = (k < 10) ? 2.0 * span : 0.7 * span;
    const double h = detail::coarse_step(k, prov);
    const auto steps = static_cast<std::size_t>(std::floor((hi - lo) / h));
    const double xtol = prov.refine_rel_tol * span;
    return detail::first_grid_maximum(f, lo, h, steps, xtol, "find_first_maximum(k=" +
                                                                 std::to_string(k) + ")");
}

/// The next local maximum strictly after tau1.
inline std::pair<double, double> find_second_maximum(std::size_t k, double tau1,
                                                     const SweepProvenance& prov = {}) {
    if (k < 2) throw std::invalid_argument("find_second_maximum: need k >= 2");
    const TransferKernel kernel(k);
    const auto f = [&kernel](double t) { return kernel.probability(t); };

    const double span = static_cast<double>(k + 2);
    const double h = detail::coarse_step(k, prov);
    // The next maximum sits about one oscillation (~k^{1/3}) away; the
    // window allows dozens of them before giving up.
    const auto steps = static_cast<std::size_t>(std::ceil(60.0 * std::cbrt(span) / h));
    const double xtol = prov.refine_rel_tol * span;
    return detail::first_grid_maximum(f, tau1, h, steps, xtol, "find_second_maximum(k=" +
                                                                   std::to_string(k) + ")");
}

inline PeakReport peak_report(std::size_t k, const SweepProvenance& prov = {}) {
    PeakReport r;
    r.k = k;
    std::tie(r.tau1, r.p1) = find_first_maximum(k, prov);
    std::tie(r.tau2, r.p2) = find_second_maximum(k, r.tau1, prov);
    r.delta_tau = r.tau2 - r.tau1;
    validate(r);
    return r;
}

/// PeakReport per k, rows independent and parallelizable; output is
/// ordered by k regardless of the worker count.
inline SweepTable sweep(const std::vector<std::size_t>& k_values, unsigned jobs = 1,
                        const SweepProvenance& prov = {}) {
    for (std::size_t i = 0; i < k_values.size(); ++i) {
        if (k_values[i] < 2)
            throw std::invalid_argument("sweep: need k >= 2");
        if (i > 0 && k_values[i] <= k_values[i - 1])
            throw std::invalid_argument("sweep: k values must strictly ascend");
    }
    SweepTable table;
    table.provenance = prov;
    table.rows.resize(k_values.size());
    std::mutex error_mutex;
    std::size_t failed_index = k_values.size();
    std::string error_what;
    parallel_for_index(k_values.size(), jobs, [&](std::size_t i) {
        try {
            table.rows[i] = peak_report(k_values[i], prov);
        } catch (const std::exception& e) {
            // Deterministic propagation: report the smallest failing k.
            std::lock_guard<std::mutex> lock(error_mutex);
            if (i < failed_index) {
                failed_index = i;
                error_what = e.what();
            }
        }
    });
    if (failed_index < k_values.size())
        throw SearchFailure("sweep failed at k=" + std::to_string(k_values[failed_index]) + ": " +
                            error_what);
    return table;
}

/// `count` logarithmically spaced integers in [lo, hi], deduplicated.
inline std::vector<std::size_t> log_spaced_k(std::size_t lo, std::size_t hi, std::size_t count) {
    if (lo < 2 || hi < lo || count < 2)
        throw std::invalid_argument("log_spaced_k: invalid range");
    std::vector<std::size_t> out;
    const double llo = std::log10(static_cast<double>(lo));
    const double lhi = std::log10(static_cast<double>(hi));
    for (std::size_t i = 0; i < count; ++i) {
        const double x = llo + (lhi - llo) * static_cast<double>(i) /
                                   static_cast<double>(count - 1);
        const auto k = static_cast<std::size_t>(std::llround(std::pow(10.0, x)));
        if (out.empty() || k > out.back()) out.push_back(k);
    }
    return out;
}

namespace detail {

inline void require_rows(const SweepTable& table, std::size_t minimum) {
    if (table.rows.size() < minimum)
        throw std::invalid_argument("fit: need at least " + std::to_string(minimum) +
                                    " sweep rows");
}

inline std::vector<double> column(const SweepTable& table,
                                  const std::function<double(const PeakReport&)>& get) {
    std::vector<double> out;
    out.reserve(table.rows.size());
    for (const auto& r : table.rows) out.push_back(get(r));
    return out;
}

}  // namespace detail

/// Affine law tau1 = slope*k + intercept (slope in `coefficient`).
inline FitResult fit_tau_scaling(const SweepTable& table) {
    detail::require_rows(table, 5);
    return fit_affine(detail::column(table, [](const PeakReport& r) { return double(r.k); }),
                      detail::column(table, [](const PeakReport& r) { return r.tau1; }));
}

/// Power law p1 ~ coefficient * k^exponent.
inline FitResult fit_probability_scaling(const SweepTable& table) {
    detail::require_rows(table, 5);
    return fit_power_law(detail::column(table, [](const PeakReport& r) { return double(r.k); }),
                         detail::column(table, [](const PeakReport& r) { return r.p1; }));
}

/// Power law delta_tau ~ coefficient * k^exponent.
inline FitResult fit_spacing_scaling(const SweepTable& table) {
    detail::require_rows(table, 5);
    return fit_power_law(detail::column(table, [](const PeakReport& r) { return double(r.k); }),
                         detail::column(table, [](const PeakReport& r) { return r.delta_tau; }));
}

/// Expected wall time to one success: stop at tau1, repeat until the
/// counter is caught.
struct RuntimeEstimate {
    std::size_t k = 0;
    std::uint64_t repeats = 0;     // ceil(1/p1)
    double total_time = 0.0;       // tau1 * repeats
};

inline RuntimeEstimate runtime_estimate(const PeakReport& report) {
    validate(report);
    RuntimeEstimate est;
    est.k = report.k;
    est.repeats = static_cast<std::uint64_t>(std::ceil(1.0 / report.p1));
    est.total_time = report.tau1 * static_cast<double>(est.repeats);
    return est;
}

/// Power law of total run time tau1*ceil(1/p1) against k.
inline FitResult fit_runtime_scaling(const SweepTable& table) {
    detail::require_rows(table, 5);
    return fit_power_law(
        detail::column(table, [](const PeakReport& r) { return double(r.k); }),
        detail::column(table,
                       [](const PeakReport& r) { return runtime_estimate(r).total_time; }));
}

}  // namespace fclock
