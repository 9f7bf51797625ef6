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

namespace fclock {

/// Least-squares fit summary.
///
/// Affine fit y = coefficient*x + intercept carries exponent = 1.
/// Power-law fit y = coefficient * x^exponent carries the log-space
/// intercept in `intercept`.  r_squared and residual_max live in the
/// space the regression ran in (linear for affine, log-log for power).
struct FitResult {
    double exponent = 0.0;
    double coefficient = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double residual_max = 0.0;
};

namespace detail {

inline FitResult least_squares_line(const std::vector<double>& xs,
                                    const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit: all x values identical");

    FitResult fit;
    fit.coefficient = sxy / sxx;            // slope
    fit.intercept = my - fit.coefficient * mx;

    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (fit.coefficient * xs[i] + fit.intercept);
        ss_res += r * r;
        fit.residual_max = std::max(fit.residual_max, std::fabs(r));
    }
    fit.r_squared = (syy == 0.0) ? 1.0 : 1.0 - ss_res / syy;
    fit.r_squared = std::clamp(fit.r_squared, 0.0, 1.0);
    return fit;
}

inline void require_fit_input(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("fit: xs and ys must have equal length");
    if (xs.size() < 3)
        throw std::invalid_argument("fit: need at least 3 points");
}

}  // namespace detail

/// Ordinary least squares of y = a*x + b.  Slope lands in
/// `coefficient`, b in `intercept`, exponent is fixed at 1.
inline FitResult fit_affine(const std::vector<double>& xs, const std::vector<double>& ys) {
    detail::require_fit_input(xs, ys);
    FitResult fit = detail::least_squares_line(xs, ys);
    fit.exponent = 1.0;
    return fit;
}

/// Ordinary least squares on (log x, log y): y = coefficient * x^exponent.
inline FitResult fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys) {
    detail::require_fit_input(xs, ys);
    std::vector<double> lx(xs.size()), ly(ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] <= 0.0 || ys[i] <= 0.0)
            throw std::invalid_argument("fit_power_law: values must be strictly positive");
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
    }
    FitResult line = detail::least_squares_line(lx, ly);
    FitResult fit;
    fit.exponent = line.coefficient;
    fit.intercept = line.intercept;
    fit.coefficient = std::exp(line.intercept);
    fit.r_squared = line.r_squared;
    fit.residual_max = line.residual_max;
    return fit;
}

/// Power law with the exponent pinned: only the coefficient is fitted
/// (geometric mean of y_i * x_i^-exponent).  Used for reporting a
/// coefficient under an assumed theoretical exponent.
inline double fit_power_law_coefficient(const std::vector<double>& xs,
                                        const std::vector<double>& ys, double exponent) {
    detail::require_fit_input(xs, ys);
    double acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] <= 0.0 || ys[i] <= 0.0)
            throw std::invalid_argument("fit_power_law_coefficient: values must be positive");
        acc += std::log(ys[i]) - exponent * std::log(xs[i]);
    }
    return std::exp(acc / static_cast<double>(xs.size()));
}

}  // namespace fclock
