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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fclock/fit.hpp"
#include "fclock/tridiag.hpp"

// Spectral gap of the interpolating clock Hamiltonian used for the
// adiabatic-runtime comparison.  Only the clock sector is diagonalized;
// its minimum gap scales as k^{-2}, giving the O(k^4) adiabatic
// baseline against which the direct evolution is compared.

namespace fclock {

/// H_clock(s): diagonal [s/2, 1, ..., 1, 1-s/2], off-diagonal -s/2.
inline SymTridiag build_adiabatic_clock(std::size_t k, double s) {
    if (k < 1) throw std::invalid_argument("build_adiabatic_clock: need k >= 1");
    if (!(s >= 0.0 && s <= 1.0))
        throw std::invalid_argument("build_adiabatic_clock: s must lie in [0, 1]");
    SymTridiag m;
    m.diag.assign(k + 1, 1.0);
    m.diag.front() = 0.5 * s;
    m.diag.back() = 1.0 - 0.5 * s;
    m.offdiag.assign(k, -0.5 * s);
    return m;
}

/// Gap Delta(s) = lambda_1(s) - lambda_0(s) over a uniform s grid, plus
/// the refined location and value of the minimum.
struct GapScan {
    std::size_t k = 0;
    std::vector<double> s_grid;
    std::vector<double> gap;
    double s_min = 0.0;
    double gap_min = 0.0;
};

namespace detail {

inline double clock_gap(std::size_t k, double s) {
    const auto ev = tridiag_eigenvalues(build_adiabatic_clock(k, s), 2);
    return ev[1] - ev[0];
}

}  // namespace detail

/// Uniform coarse grid, then golden-section refinement around the
/// coarse minimum.  The minimum sits just below s = 1 where the gap
/// moves fast, hence the refinement.
inline GapScan gap_scan(std::size_t k, std::size_t grid_size = 257) {
    if (grid_size < 16) throw std::invalid_argument("gap_scan: need grid_size >= 16");
    GapScan scan;
    scan.k = k;
    scan.s_grid.resize(grid_size);
    scan.gap.resize(grid_size);

    std::size_t best = 0;
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(grid_size - 1);
        scan.s_grid[i] = s;
        scan.gap[i] = detail::clock_gap(k, s);
        if (scan.gap[i] < scan.gap[best]) best = i;
    }

    const double h = 1.0 / static_cast<double>(grid_size - 1);
    double a = std::max(0.0, scan.s_grid[best] - h);
    double b = std::min(1.0, scan.s_grid[best] + h);
    constexpr double invphi = 0.6180339887498948482;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    double fc = detail::clock_gap(k, c), fd = detail::clock_gap(k, d);
    while (b - a > 1e-7) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = detail::clock_gap(k, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = detail::clock_gap(k, d);
        }
    }
    scan.s_min = 0.5 * (a + b);
    scan.gap_min = std::min(detail::clock_gap(k, scan.s_min), scan.gap[best]);
    return scan;
}

/// Minimum-gap scaling over a list of k values, with the adiabatic
/// run-time exponents this implies: Delta^{-2} (Born criterion) is the
/// headline number, Delta^{-3} (Jansen) kept as the footnote variant.
struct GapScalingReport {
    FitResult fit;  // power law gap_min ~ coefficient * k^exponent
    double runtime_exponent_born = 0.0;
    double runtime_exponent_jansen = 0.0;
    std::vector<std::size_t> k_values;
    std::vector<double> gap_minima;
    std::vector<double> s_minima;
};

inline GapScalingReport fit_gap_scaling(const std::vector<std::size_t>& k_values,
                                        std::size_t grid_size = 257) {
    if (k_values.size() < 5)
        throw std::invalid_argument("fit_gap_scaling: need at least 5 k values");
    const auto [mn, mx] = std::minmax_element(k_values.begin(), k_values.end());
    if (static_cast<double>(*mx) < 10.0 * static_cast<double>(*mn))
        throw std::invalid_argument("fit_gap_scaling: k values must span at least a decade");

    GapScalingReport rep;
    rep.k_values = k_values;
    std::vector<double> xs, ys;
    for (std::size_t k : k_values) {
        const GapScan scan = gap_scan(k, grid_size);
        rep.gap_minima.push_back(scan.gap_min);
        rep.s_minima.push_back(scan.s_min);
        xs.push_back(static_cast<double>(k));
        ys.push_back(scan.gap_min);
    }
    rep.fit = fit_power_law(xs, ys);
    rep.runtime_exponent_born = -2.0 * rep.fit.exponent;
    rep.runtime_exponent_jansen = -3.0 * rep.fit.exponent;
    return rep;
}

}  // namespace fclock
