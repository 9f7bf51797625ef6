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
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fclock/common.hpp"

// Evaluation of int_0^infty cos(x^3/6) dx.  The integrand decays only
// through ever-faster oscillation, so the integral is summed lobe by
// lobe between consecutive zeros and the alternating tail is resummed
// by repeated averaging of the partial sums.

namespace fclock {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// Gauss-Legendre nodes/weights by Newton iteration on P_n.
inline GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

namespace detail {

inline double integrate_cos_cubic_panel(double a, double b, const GaussLegendreRule& rule) {
    const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = mid + hw * rule.nodes[i];
        s += rule.weights[i] * std::cos(x * x * x / 6.0);
    }
    return s * hw;
}

}  // namespace detail

/// n-th positive zero of cos(x^3/6): x^3/6 = (2n+1) pi/2.
inline double cos_cubic_zero(int n) {
    if (n < 0) throw std::invalid_argument("cos_cubic_zero: n must be >= 0");
    return std::cbrt(3.0 * kPi * (2.0 * n + 1.0));
}

/// Signed integral of cos(x^3/6) over lobe n: lobe 0 is [0, zero_0],
/// lobe n >= 1 spans [zero_{n-1}, zero_n].  Lobes alternate in sign.
inline double cos_cubic_lobe(int n, int points = 24) {
    const double a = (n == 0) ? 0.0 : cos_cubic_zero(n - 1);
    const double b = cos_cubic_zero(n);
    return detail::integrate_cos_cubic_panel(a, b, gauss_legendre(points));
}

enum class CosCubicTail {
    first_zero,  // truncate the integral at the first zero of the integrand
    full,        // resum the whole oscillatory tail
};

/// int_0^infty cos(x^3/6) dx, absolute error well below 1e-6 in `full`
/// mode.  `points` is the Gauss-Legendre order per lobe; `lobes` the
/// number of tail lobes fed into the averaging scheme.
inline double oscillatory_integral_cos_cubic(CosCubicTail mode = CosCubicTail::full,
                                             int points = 24, int lobes = 64) {
    const GaussLegendreRule rule = gauss_legendre(points);
    const double head = detail::integrate_cos_cubic_panel(0.0, cos_cubic_zero(0), rule);
    if (mode == CosCubicTail::first_zero) return head;

    if (lobes < 2) throw std::invalid_argument("oscillatory_integral_cos_cubic: need lobes >= 2");

    // Partial sums S_m = head + lobes 1..m oscillate around the limit.
    std::vector<double> partial(static_cast<std::size_t>(lobes));
    double run = head;
    for (int n = 1; n <= lobes; ++n) {
        run += detail::integrate_cos_cubic_panel(cos_cubic_zero(n - 1), cos_cubic_zero(n), rule);
        partial[static_cast<std::size_t>(n - 1)] = run;
    }

    // Repeated averaging: each pass halves the alternating envelope and
    // gains roughly one power of n in the error.
    std::vector<double> row = partial;
    while (row.size() > 1) {
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
        row.pop_back();
    }
    return row[0];
}

}  // namespace fclock
