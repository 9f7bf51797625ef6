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
#include "fclock/tridiag.hpp"

// Closed-form spectral machinery of the bare clock chain: k+1 sites
// (one per counter position 0..k), zero on-site energy, unit hopping.
// The chain is an open tight-binding segment, so with N = k+1 sites
// the standing-wave quantum number runs over pi*q/(N+1) = pi*q/(k+2):
//
//   lambda_j   = 2 cos(pi (j+1) / (k+2)),                 j = 0..k
//   <m|phi_j>  = sqrt(2/(k+2)) sin(pi (m+1)(j+1)/(k+2)),  m = 0..k
//
// Transfer amplitudes a_ij(t) = (e^{-i H_clock t})_ij follow by
// spectral summation; the success probability is P_k(t) = |a_k0(t)|^2.

namespace fclock {

/// (k+1)-site clock matrix: zero diagonal, unit off-diagonals.
inline SymTridiag build_clock_matrix(std::size_t k) {
    if (k < 1) throw std::invalid_argument("build_clock_matrix: need k >= 1");
    SymTridiag m;
    m.diag.assign(k + 1, 0.0);
    m.offdiag.assign(k, 1.0);
    return m;
}

inline double clock_eigenvalue(std::size_t k, std::size_t j) {
    return 2.0 * std::cos(kPi * static_cast<double>(j + 1) / static_cast<double>(k + 2));
}

/// Eigenvector component <m|phi_j>, evaluated with exact integer
/// reduction of the sine argument so large k loses no accuracy.
inline double clock_overlap(std::size_t k, std::size_t m, std::size_t j) {
    const auto den = static_cast<long long>(k + 2);
    const auto num = static_cast<long long>(m + 1) * static_cast<long long>(j + 1);
    return std::sqrt(2.0 / static_cast<double>(k + 2)) * sin_pi_ratio(num, den);
}

/// Materialized spectrum of the clock chain.  O((k+1)^2) storage; meant
/// for analysis and tests, not for the large-k production path.
struct ClockSpectrum {
    std::size_t k = 0;
    std::vector<double> eigenvalues;    // lambda_j, j = 0..k (descending in j)
    std::vector<double> overlap_table;  // row-major (k+1)x(k+1), (m, j) = <m|phi_j>

    double overlap(std::size_t m, std::size_t j) const { return overlap_table[m * (k + 1) + j]; }
};

inline ClockSpectrum clock_eigensystem(std::size_t k) {
    if (k < 1) throw std::invalid_argument("clock_eigensystem: need k >= 1");
    ClockSpectrum s;
    s.k = k;
    s.eigenvalues.resize(k + 1);
    s.overlap_table.resize((k + 1) * (k + 1));
    for (std::size_t j = 0; j <= k; ++j) s.eigenvalues[j] = clock_eigenvalue(k, j);
    for (std::size_t m = 0; m <= k; ++m)
        for (std::size_t j = 0; j <= k; ++j)
            s.overlap_table[m * (k + 1) + j] = clock_overlap(k, m, j);
    return s;
}

/// Transfer amplitude a_ij(t) = sum_l e^{-i lambda_l t} <i|phi_l><phi_l|j>.
inline cplx amplitude(std::size_t k, std::size_t i, std::size_t j, double t) {
    if (k < 1) throw std::invalid_argument("amplitude: need k >= 1");
    if (i > k || j > k) throw std::invalid_argument("amplitude: site index out of range");
    double re = 0.0, im = 0.0;
    for (std::size_t l = 0; l <= k; ++l) {
        const double w = clock_overlap(k, i, l) * clock_overlap(k, j, l);
        const double ph = clock_eigenvalue(k, l) * t;
        re += w * std::cos(ph);
        im -= w * std::sin(ph);
    }
    return {re, im};
}

/// P_k(t) = |a_k0(t)|^2.
inline double success_probability(std::size_t k, double t) {
    if (k < 1) throw std::invalid_argument("success_probability: need k >= 1");
    if (t < 0.0) throw std::invalid_argument("success_probability: need t >= 0");
    const cplx a = amplitude(k, k, 0, t);
    return std::norm(a);
}

/// Same quantity through the alternating-sign form: mirror symmetry of
/// the chain gives <k|phi_j> = (-1)^j <0|phi_j>, so
/// a_k0(t) = (2/(k+2)) sum_j (-1)^j e^{-i lambda_j t} sin^2(pi(j+1)/(k+2)).
inline double success_probability_alternating(std::size_t k, double t) {
    if (k < 1) throw std::invalid_argument("success_probability_alternating: need k >= 1");
    const double pref = 2.0 / static_cast<double>(k + 2);
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j <= k; ++j) {
        const double s = sin_pi_ratio(static_cast<long long>(j + 1), static_cast<long long>(k + 2));
        double w = pref * s * s;
        if (j % 2 == 1) w = -w;
        const double ph = clock_eigenvalue(k, j) * t;
        re += w * std::cos(ph);
        im -= w * std::sin(ph);
    }
    return re * re + im * im;
}

/// Precomputed evaluator for a_k0(t).  Folds the spectrum over the
/// lambda -> -lambda symmetry, halving the trigonometric work; for even
/// k the amplitude is purely real, for odd k purely imaginary.
class TransferKernel {
public:
    explicit TransferKernel(std::size_t k) : k_(k) {
        if (k < 1) throw std::invalid_argument("TransferKernel: need k >= 1");
        const std::size_t modes = (k + 1) / 2;
        freq_.resize(modes);
        weight_.resize(modes);
        for (std::size_t m = 0; m < modes; ++m) {
            const double s =
                sin_pi_ratio(static_cast<long long>(m + 1), static_cast<long long>(k + 2));
            freq_[m] = clock_eigenvalue(k, m);
            weight_[m] = (m % 2 == 0 ? 1.0 : -1.0) * s * s;
        }
        even_ = (k % 2 == 0);
        mid_ = even_ ? ((k / 2) % 2 == 0 ? 1.0 : -1.0) : 0.0;
        pref_ = 2.0 / static_cast<double>(k + 2);
    }

    std::size_t k() const { return k_; }

    cplx amplitude(double t) const {
        double acc = 0.0;
        if (even_) {
            for (std::size_t m = 0; m < freq_.size(); ++m)
                acc += weight_[m] * std::cos(freq_[m] * t);
            return {pref_ * (mid_ + 2.0 * acc), 0.0};
        }
        for (std::size_t m = 0; m < freq_.size(); ++m)
            acc += weight_[m] * std::sin(freq_[m] * t);
        return {0.0, -2.0 * pref_ * acc};
    }

    double probability(double t) const { return std::norm(amplitude(t)); }

private:
    std::size_t k_;
    std::vector<double> freq_;
    std::vector<double> weight_;
    bool even_ = true;
    double mid_ = 0.0;
    double pref_ = 0.0;
};

/// a_k0 and P_k sampled over a time grid.
struct AmplitudeSeries {
    std::size_t k = 0;
    std::vector<double> times;
    std::vector<cplx> amplitudes;
    std::vector<double> probabilities;
};

inline AmplitudeSeries probability_series(std::size_t k, const std::vector<double>& t_grid) {
    if (k < 1) throw std::invalid_argument("probability_series: need k >= 1");
    if (t_grid.empty()) throw std::invalid_argument("probability_series: empty time grid");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (t_grid[i] <= t_grid[i - 1])
            throw std::invalid_argument("probability_series: time grid must ascend");

    const TransferKernel kernel(k);
    AmplitudeSeries out;
    out.k = k;
    out.times = t_grid;
    out.amplitudes.resize(t_grid.size());
    out.probabilities.resize(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        out.amplitudes[i] = kernel.amplitude(t_grid[i]);
        out.probabilities[i] = std::norm(out.amplitudes[i]);
    }
    return out;
}

}  // namespace fclock
