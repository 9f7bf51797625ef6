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

#include <cfloat>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fclock {

/// Real symmetric tridiagonal matrix: diag has length N, offdiag N-1.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t size() const { return diag.size(); }

    void validate() const {
        if (diag.empty())
            throw std::invalid_argument("SymTridiag: empty matrix");
        if (offdiag.size() + 1 != diag.size())
            throw std::invalid_argument("SymTridiag: offdiag must have length N-1");
    }
};

inline std::vector<double> mat_vec(const SymTridiag& m, const std::vector<double>& v) {
    const std::size_t n = m.size();
    if (v.size() != n) throw std::invalid_argument("SymTridiag mat_vec: dimension mismatch");
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = m.diag[i] * v[i];
        if (i > 0) s += m.offdiag[i - 1] * v[i - 1];
        if (i + 1 < n) s += m.offdiag[i] * v[i + 1];
        out[i] = s;
    }
    return out;
}

namespace detail {

// Sturm count: number of eigenvalues of m strictly below x, from the
// signs of the LDL^T pivots (Barth, Martin & Wilkinson bisection).
// Pivots of magnitude below pivmin are forced negative, matching the
// LAPACK convention so the count is monotone in x.
inline int sturm_count(const SymTridiag& m, double x, double pivmin) {
    int count = 0;
    double q = m.diag[0] - x;
    if (std::fabs(q) <= pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    const std::size_t n = m.size();
    for (std::size_t i = 1; i < n; ++i) {
        q = m.diag[i] - x - m.offdiag[i - 1] * m.offdiag[i - 1] / q;
        if (std::fabs(q) <= pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace detail

/// The `lowest` smallest eigenvalues in ascending order, each computed
/// by Sturm-sequence bisection to machine precision.  O(N) per
/// bisection step, so selected eigenvalues stay cheap at large N.
inline std::vector<double> tridiag_eigenvalues(const SymTridiag& m, std::size_t lowest) {
    m.validate();
    const std::size_t n = m.size();
    if (lowest > n)
        throw std::invalid_argument("tridiag_eigenvalues: requested more eigenvalues than N");
    if (lowest == 0) return {};

    // Gershgorin bounds.
    double gl = m.diag[0], gu = m.diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::fabs(m.offdiag[i - 1]);
        if (i + 1 < n) r += std::fabs(m.offdiag[i]);
        gl = std::min(gl, m.diag[i] - r);
        gu = std::max(gu, m.diag[i] + r);
    }
    double emax = 0.0;
    for (double e : m.offdiag) emax = std::max(emax, e * e);
    const double pivmin = std::max(emax, 1.0) * DBL_MIN;
    const double span = std::max(gu - gl, 1.0);
    gl -= 2.0 * DBL_EPSILON * span + pivmin;
    gu += 2.0 * DBL_EPSILON * span + pivmin;

    std::vector<double> out(lowest);
    for (std::size_t idx = 0; idx < lowest; ++idx) {
        const int want = static_cast<int>(idx) + 1;  // eigenvalue index, 1-based
        double lo = gl, hi = gu;
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;  // interval at machine resolution
            if (detail::sturm_count(m, mid, pivmin) >= want)
                hi = mid;
            else
                lo = mid;
            if (hi - lo <= 2.0 * DBL_EPSILON * std::max(std::fabs(lo), std::fabs(hi)) + pivmin)
                break;
        }
        out[idx] = 0.5 * (lo + hi);
    }
    return out;
}

}  // namespace fclock
