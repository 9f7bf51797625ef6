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

#include "fclock/peak_analysis.hpp"
#include "fclock/quadrature.hpp"

// Analytic approximations of P_k at the nominal stopping time
// tau = (k+1)/2: the truncated double-cosine sum, the stationary-phase
// integral, and the predicted spacing between the first two maxima.
// The three routes carry different coefficients; reports keep them all
// side by side rather than reconciling them.

namespace fclock {

/// Taylor-truncated form of P_k((k+1)/2) for even k:
///   P = | (4/(k+1)) sum_{p=0}^{k/2} cos^2(pi(2p-1)/(2(k+1)))
///                 * cos(pi^3 (p-1/2)^3 / (6(k+1)^2)) |^2.
/// Only derived for even k; odd k is rejected.
inline double pk_tau_cosine_sum(std::size_t k) {
    if (k < 4) throw std::invalid_argument("pk_tau_cosine_sum: need k >= 4");
    if (k % 2 != 0)
        throw std::invalid_argument("pk_tau_cosine_sum: only derived for even k");
    const double kp1 = static_cast<double>(k + 1);
    double s = 0.0;
    for (std::size_t p = 0; p <= k / 2; ++p) {
        const double pd = static_cast<double>(p);
        const double c1 = std::cos(kPi * (2.0 * pd - 1.0) / (2.0 * kp1));
        const double c2 =
            std::cos(kPi * kPi * kPi / (6.0 * kp1 * kp1) * std::pow(pd - 0.5, 3));
        s += c1 * c1 * c2;
    }
    const double a = 4.0 / kp1 * s;
    return a * a;
}

struct IntegralApprox {
    double p_tau = 0.0;        // (4 I / (pi (k+1)^{1/3}))^2
    double coefficient = 0.0;  // implied coefficient of k^{-2/3}: (4 I / pi)^2
};

/// Stationary-phase route: |a_k0| ~ 4 I / (pi (k+1)^{1/3}) with
/// I = int_0^infty cos(x^3/6) dx.
inline IntegralApprox pk_tau_integral_approx(std::size_t k) {
    if (k < 4) throw std::invalid_argument("pk_tau_integral_approx: need k >= 4");
    static const double integral = oscillatory_integral_cos_cubic();
    IntegralApprox out;
    const double base = 4.0 * integral / kPi;
    out.coefficient = base * base;
    out.p_tau = out.coefficient / std::pow(static_cast<double>(k + 1), 2.0 / 3.0);
    return out;
}

struct SecondMaxPrediction {
    double delta = 0.0;      // fractional shift of the second maximum
    double delta_tau = 0.0;  // predicted tau2 - tau1
};

/// delta = 0.5 (3 pi)^{2/3} (k+1)^{-2/3}, delta_tau = delta * (k+2)/2.
inline SecondMaxPrediction second_maximum_prediction(std::size_t k) {
    if (k < 4) throw std::invalid_argument("second_maximum_prediction: need k >= 4");
    SecondMaxPrediction out;
    out.delta = 0.5 * std::pow(3.0 * kPi, 2.0 / 3.0) /
                std::pow(static_cast<double>(k + 1), 2.0 / 3.0);
    out.delta_tau = out.delta * static_cast<double>(k + 2) / 2.0;
    return out;
}

/// All P_k(tau) evaluation routes and both spacing numbers for one k.
struct AsymptoticReport {
    std::size_t k = 0;
    double p_tau_sum = 0.0;           // cosine-sum route (even k only)
    double p_tau_integral = 0.0;      // stationary-phase route
    double p_tau_numeric = 0.0;       // measured first maximum
    double coefficient_estimate = 0;  // p_tau_numeric * k^{2/3}
    double delta_predicted = 0.0;     // closed-form delta_tau
    double delta_numeric = 0.0;       // measured tau2 - tau1
};

inline AsymptoticReport make_asymptotic_report(const PeakReport& peak) {
    AsymptoticReport rep;
    rep.k = peak.k;
    rep.p_tau_sum = pk_tau_cosine_sum(peak.k);
    rep.p_tau_integral = pk_tau_integral_approx(peak.k).p_tau;
    rep.p_tau_numeric = peak.p1;
    rep.coefficient_estimate =
        peak.p1 * std::pow(static_cast<double>(peak.k), 2.0 / 3.0);
    rep.delta_predicted = second_maximum_prediction(peak.k).delta_tau;
    rep.delta_numeric = peak.delta_tau;
    return rep;
}

}  // namespace fclock
