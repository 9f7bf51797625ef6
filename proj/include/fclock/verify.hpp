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

#include <cstdint>
#include <string>
#include <vector>

#include "fclock/gate_evolution.hpp"
#include "fclock/random_unitary.hpp"
#include "fclock/tolerances.hpp"

// Runtime verification suites: oracle equivalence of the closed-form
// probability against dense exponentials, the block-structure theorem,
// gate independence of the clock coefficients, unitarity, transfer
// normalization, and occupation-number conservation.

namespace fclock {

enum class VerifyLevel { quick, full };

struct VerifyCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

inline bool all_passed(const std::vector<VerifyCheck>& checks) {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace detail {

inline UnitarySequence random_sequence(std::size_t k, std::size_t n, Rng& rng) {
    UnitarySequence seq;
    seq.n_qubits = n;
    for (std::size_t g = 0; g < k; ++g) seq.gates.push_back(random_unitary(1ull << n, rng));
    return seq;
}

inline VerifyCheck make_check(const std::string& name, double residual, double tolerance,
                              const std::string& extra = "") {
    VerifyCheck c;
    c.name = name;
    c.residual = residual;
    c.tolerance = tolerance;
    c.passed = residual <= tolerance;
    c.detail = extra;
    return c;
}

}  // namespace detail

/// Closed-form P_k(t) against |(e^{-i H_clock t})_{k0}|^2 from the
/// dense exponential of the explicitly assembled chain.
inline VerifyCheck verify_clock_oracle(std::size_t k_max, std::size_t samples, Rng& rng) {
    double worst = 0.0;
    for (std::size_t k = 2; k <= k_max; ++k) {
        const SymTridiag chain = build_clock_matrix(k);
        ComplexMatrix h(k + 1, k + 1);
        for (std::size_t i = 0; i < k; ++i) {
            h(i, i + 1) = chain.offdiag[i];
            h(i + 1, i) = chain.offdiag[i];
        }
        for (std::size_t s = 0; s < samples; ++s) {
            const double t = rng.uniform() * 2.0 * static_cast<double>(k + 2);
            const ComplexMatrix g = matrix_exponential(h, t);
            const double dense = std::norm(g(k, 0));
            worst = std::max(worst, std::fabs(dense - success_probability(k, t)));
        }
    }
    return detail::make_check("clock-oracle-equivalence", worst, tol::oracle_probability,
                              "k=2.." + std::to_string(k_max));
}

/// Structure theorem on random sequences: every propagator block equals
/// its gate string scaled by a_ij(t).
inline VerifyCheck verify_structure_theorem(std::size_t k_max, std::size_t n_max,
                                            std::size_t sequences, std::size_t times, Rng& rng) {
    double worst = 0.0;
    for (std::size_t k = 2; k <= k_max; ++k)
        for (std::size_t n = 1; n <= n_max; ++n)
            for (std::size_t s = 0; s < sequences; ++s) {
                const UnitarySequence seq = detail::random_sequence(k, n, rng);
                for (std::size_t it = 0; it < times; ++it) {
                    const double t = rng.uniform() * 2.0 * static_cast<double>(k);
                    const BlockEvolution ev = evolve(seq, t);
                    const StructureReport rep =
                        verify_structure(ev, seq, tol::structure_residual);
                    worst = std::max(worst, rep.max_residual);
                }
            }
    return detail::make_check("evolution-structure", worst, tol::structure_residual,
                              "k<=" + std::to_string(k_max) + " n<=" + std::to_string(n_max));
}

/// |a_ij| must agree between different random gate sequences.
inline VerifyCheck verify_gate_independence(std::size_t k_max, std::size_t n_max,
                                            std::size_t times, Rng& rng) {
    double worst = 0.0;
    for (std::size_t k = 2; k <= k_max; ++k)
        for (std::size_t n = 1; n <= n_max; ++n)
            for (std::size_t it = 0; it < times; ++it) {
                const UnitarySequence a = detail::random_sequence(k, n, rng);
                const UnitarySequence b = detail::random_sequence(k, n, rng);
                const double t = rng.uniform() * 2.0 * static_cast<double>(k);
                worst = std::max(worst, coefficient_divergence(evolve(a, t), evolve(b, t)));
            }
    return detail::make_check("gate-independence", worst, tol::gate_independence);
}

/// Unitarity of assembled block evolutions.
inline VerifyCheck verify_unitarity(std::size_t k_max, std::size_t n_max, Rng& rng) {
    double worst = 0.0;
    for (std::size_t k = 2; k <= k_max; ++k)
        for (std::size_t n = 1; n <= n_max; ++n) {
            const UnitarySequence seq = detail::random_sequence(k, n, rng);
            const double t = rng.uniform() * 2.0 * static_cast<double>(k);
            const ComplexMatrix g = matrix_exponential(build_reduced_hamiltonian(seq), t);
            worst = std::max(worst, g.unitarity_error());
        }
    return detail::make_check("propagator-unitarity", worst, tol::evolution_unitarity);
}

/// sum_j |a_j0(t)|^2 = 1 on the bare chain.
inline VerifyCheck verify_normalization(std::size_t k_max, std::size_t times, Rng& rng) {
    double worst = 0.0;
    for (std::size_t k : {std::size_t{25}, std::size_t{77}, k_max}) {
        if (k < 2) continue;
        for (std::size_t it = 0; it < times; ++it) {
            const double t = rng.uniform() * 2.0 * static_cast<double>(k + 2);
            double total = 0.0;
            for (std::size_t j = 0; j <= k; ++j) total += std::norm(amplitude(k, j, 0, t));
            worst = std::max(worst, std::fabs(total - 1.0));
        }
    }
    return detail::make_check("transfer-normalization", worst, tol::normalization,
                              "k up to " + std::to_string(k_max));
}

/// [H_TOT, N] = 0 on the full clock occupation space.
inline VerifyCheck verify_number_conservation(std::size_t k_max, Rng& rng) {
    double worst = 0.0;
    for (std::size_t k = 2; k <= k_max; ++k) {
        const UnitarySequence seq = detail::random_sequence(k, 1, rng);
        const ComplexMatrix h = build_full_clock_hamiltonian(seq);
        const ComplexMatrix num = total_number_operator(k, 1);
        worst = std::max(worst, (h * num - num * h).max_abs());
    }
    return detail::make_check("number-conservation", worst, tol::number_conservation,
                              "k<=" + std::to_string(k_max));
}

/// Dense k=2 evolution against the explicit closed form.
inline VerifyCheck verify_k2_closed_form(std::size_t times, Rng& rng) {
    double worst = 0.0;
    for (std::size_t it = 0; it < times; ++it) {
        const ComplexMatrix u1 = random_unitary(2, rng);
        const ComplexMatrix u2 = random_unitary(2, rng);
        UnitarySequence seq;
        seq.n_qubits = 1;
        seq.gates = {u1, u2};
        const double t = rng.uniform() * 8.0;
        const ComplexMatrix dense = matrix_exponential(build_reduced_hamiltonian(seq), t);
        worst = std::max(worst, (dense - k2_closed_form(u1, u2, t)).max_abs());
    }
    return detail::make_check("k2-closed-form", worst, tol::propagator_unitarity);
}

inline std::vector<VerifyCheck> run_verification(VerifyLevel level, std::uint64_t seed) {
    Rng rng(seed);
    const bool full = (level == VerifyLevel::full);
    std::vector<VerifyCheck> checks;
    checks.push_back(verify_clock_oracle(full ? 12 : 8, full ? 20 : 8, rng));
    checks.push_back(verify_structure_theorem(full ? 8 : 4, full ? 2 : 1, full ? 5 : 2,
                                              full ? 5 : 2, rng));
    checks.push_back(verify_gate_independence(full ? 6 : 4, full ? 2 : 1, full ? 3 : 2, rng));
    checks.push_back(verify_unitarity(full ? 8 : 5, full ? 2 : 1, rng));
    checks.push_back(verify_normalization(full ? 200 : 100, full ? 10 : 4, rng));
    checks.push_back(verify_number_conservation(full ? 6 : 4, rng));
    checks.push_back(verify_k2_closed_form(full ? 10 : 4, rng));
    return checks;
}

}  // namespace fclock
