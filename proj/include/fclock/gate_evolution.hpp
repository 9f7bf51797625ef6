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

#include <bit>
#include <cstddef>
#include <string>
#include <vector>

#include "fclock/clock_spectrum.hpp"
#include "fclock/complex_matrix.hpp"
#include "fclock/matrix_exponential.hpp"
#include "fclock/tolerances.hpp"

// Circuit-to-Hamiltonian evolution with actual gates.  The hopping
// Hamiltonian on clock register x data register, restricted to the
// single-excitation clock sector, is block tridiagonal with the gates
// on the hopping bonds.  Its propagator G(t) = e^{-iHt} factorizes
// block-wise into gate strings times the bare-chain amplitudes:
//
//   G(t)_{ij} = a_ij(t) * U_{i+1}^dag ... U_j^dag   (i < j)
//   G(t)_{ii} = a_ii(t) * I
//   G(t)_{ij} = a_ij(t) * U_i ... U_{j+1}           (i > j)
//
// so G_{k0} = a_k0(t) U_k ... U_1 carries the whole computation.

namespace fclock {

/// Ordered gate list U_1..U_k acting on an n-qubit register.
struct UnitarySequence {
    std::size_t n_qubits = 0;
    std::vector<ComplexMatrix> gates;

    std::size_t gate_count() const { return gates.size(); }
    std::size_t dim() const { return std::size_t{1} << n_qubits; }

    void validate() const {
        if (gates.empty()) throw std::invalid_argument("UnitarySequence: no gates");
        const std::size_t d = dim();
        for (std::size_t g = 0; g < gates.size(); ++g) {
            if (gates[g].rows() != d || gates[g].cols() != d)
                throw std::invalid_argument("UnitarySequence: gate " + std::to_string(g + 1) +
                                            " is not " + std::to_string(d) + "x" +
                                            std::to_string(d));
            const double err = gates[g].unitarity_error();
            if (err > tol::gate_unitarity)
                throw std::invalid_argument("UnitarySequence: gate " + std::to_string(g + 1) +
                                            " is not unitary (deviation " + std::to_string(err) +
                                            ")");
        }
    }
};

namespace detail {

inline void require_dense_size(const UnitarySequence& seq) {
    seq.validate();
    const std::size_t total = (seq.gate_count() + 1) * seq.dim();
    if (total > tol::dense_dimension_cap)
        throw std::length_error("dense dimension " + std::to_string(total) +
                                " exceeds cap " + std::to_string(tol::dense_dimension_cap));
}

inline void place_block(ComplexMatrix& dst, std::size_t bi, std::size_t bj,
                        const ComplexMatrix& block) {
    const std::size_t d = block.rows();
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < block.cols(); ++c)
            dst(bi * d + r, bj * d + c) = block(r, c);
}

inline ComplexMatrix extract_block(const ComplexMatrix& src, std::size_t bi, std::size_t bj,
                                   std::size_t d) {
    ComplexMatrix out(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) out(r, c) = src(bi * d + r, bj * d + c);
    return out;
}

}  // namespace detail

/// Single-excitation-sector Hamiltonian: (k+1)x(k+1) blocks of size
/// 2^n, zero diagonal, U_{i+1} on the sub-diagonal and its adjoint
/// above.
inline ComplexMatrix build_reduced_hamiltonian(const UnitarySequence& seq) {
    detail::require_dense_size(seq);
    const std::size_t k = seq.gate_count();
    const std::size_t d = seq.dim();
    ComplexMatrix h((k + 1) * d, (k + 1) * d);
    for (std::size_t i = 0; i < k; ++i) {
        detail::place_block(h, i + 1, i, seq.gates[i]);
        detail::place_block(h, i, i + 1, seq.gates[i].adjoint());
    }
    return h;
}

/// Hopping Hamiltonian on the full clock occupation space (2^{k+1}
/// basis states) tensored with the register:
///   H = sum_i q_{i+1}^dag q_i (x) U_{i+1} + h.c.
/// Occupation bitstrings index the clock factor with site 0 as the most
/// significant bit.  Exact diagonalization territory, so k and n are
/// deliberately small.
inline ComplexMatrix build_full_clock_hamiltonian(const UnitarySequence& seq) {
    seq.validate();
    const std::size_t k = seq.gate_count();
    if (k > 8)
        throw std::length_error("build_full_clock_hamiltonian: k > 8 not supported");
    if (seq.n_qubits > 2)
        throw std::length_error("build_full_clock_hamiltonian: n > 2 not supported");

    const std::size_t sites = k + 1;
    const std::size_t clock_dim = std::size_t{1} << sites;
    const std::size_t d = seq.dim();
    ComplexMatrix h(clock_dim * d, clock_dim * d);

    const auto bit = [sites](std::size_t state, std::size_t site) {
        return (state >> (sites - 1 - site)) & 1u;
    };
    for (std::size_t state = 0; state < clock_dim; ++state) {
        for (std::size_t i = 0; i < k; ++i) {
            if (bit(state, i) != 1 || bit(state, i + 1) != 0) continue;
            // q_{i+1}^dag q_i moves the excitation one site right.
            const std::size_t hopped =
                (state & ~(std::size_t{1} << (sites - 1 - i))) | (std::size_t{1} << (sites - 2 - i));
            const ComplexMatrix& u = seq.gates[i];
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) {
                    h(hopped * d + r, state * d + c) += u(r, c);
                    h(state * d + c, hopped * d + r) += std::conj(u(r, c));
                }
        }
    }
    return h;
}

/// Total clock occupation number, tensored with the register identity.
inline ComplexMatrix total_number_operator(std::size_t k, std::size_t n_qubits) {
    const std::size_t sites = k + 1;
    const std::size_t clock_dim = std::size_t{1} << sites;
    const std::size_t d = std::size_t{1} << n_qubits;
    ComplexMatrix num(clock_dim * d, clock_dim * d);
    for (std::size_t state = 0; state < clock_dim; ++state) {
        const double occ = static_cast<double>(std::popcount(state));
        for (std::size_t r = 0; r < d; ++r) num(state * d + r, state * d + r) = occ;
    }
    return num;
}

/// The gate string predicted by the block structure for position (i, j).
inline ComplexMatrix predicted_block_string(const UnitarySequence& seq, std::size_t i,
                                            std::size_t j) {
    const std::size_t d = seq.dim();
    ComplexMatrix s = ComplexMatrix::identity(d);
    if (i < j) {
        // U_{i+1}^dag ... U_j^dag (gate indices are 1-based)
        for (std::size_t g = i + 1; g <= j; ++g) s = s * seq.gates[g - 1].adjoint();
    } else if (i > j) {
        // U_i ... U_{j+1}
        for (std::size_t g = i; g >= j + 1; --g) s = s * seq.gates[g - 1];
    }
    return s;
}

/// Dense propagator of the reduced Hamiltonian, cut into clock blocks.
/// clock_coeffs holds a_ij(t) recovered from each block by projection
/// onto its predicted gate string: a_ij = tr(S^dag G_ij) / 2^n, exact
/// whenever the structure theorem holds.
struct BlockEvolution {
    std::size_t k = 0;
    std::size_t n_qubits = 0;
    double t = 0.0;
    std::vector<ComplexMatrix> blocks;  // row-major (k+1)x(k+1)
    std::vector<cplx> clock_coeffs;     // row-major (k+1)x(k+1)

    const ComplexMatrix& block(std::size_t i, std::size_t j) const {
        return blocks[i * (k + 1) + j];
    }
    cplx coeff(std::size_t i, std::size_t j) const { return clock_coeffs[i * (k + 1) + j]; }
};

inline BlockEvolution evolve(const UnitarySequence& seq, double t) {
    detail::require_dense_size(seq);
    const std::size_t k = seq.gate_count();
    const std::size_t d = seq.dim();

    const ComplexMatrix g = matrix_exponential(build_reduced_hamiltonian(seq), t);

    BlockEvolution ev;
    ev.k = k;
    ev.n_qubits = seq.n_qubits;
    ev.t = t;
    ev.blocks.reserve((k + 1) * (k + 1));
    ev.clock_coeffs.resize((k + 1) * (k + 1));
    for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = 0; j <= k; ++j) {
            ComplexMatrix blk = detail::extract_block(g, i, j, d);
            const ComplexMatrix s = predicted_block_string(seq, i, j);
            cplx acc = 0.0;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) acc += std::conj(s(r, c)) * blk(r, c);
            ev.clock_coeffs[i * (k + 1) + j] = acc / static_cast<double>(d);
            ev.blocks.push_back(std::move(blk));
        }
    return ev;
}

struct StructureReport {
    double max_residual = 0.0;   // max entry of |G_ij - a_ij * S_ij| over all blocks
    std::size_t worst_i = 0;
    std::size_t worst_j = 0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Residual of every block against its predicted gate string scaled by
/// the extracted coefficient.
inline StructureReport verify_structure(const BlockEvolution& ev, const UnitarySequence& seq,
                                        double tolerance) {
    seq.validate();
    if (ev.k != seq.gate_count() || ev.n_qubits != seq.n_qubits)
        throw std::invalid_argument("verify_structure: evolution does not match sequence");
    StructureReport report;
    report.tolerance = tolerance;
    for (std::size_t i = 0; i <= ev.k; ++i)
        for (std::size_t j = 0; j <= ev.k; ++j) {
            const ComplexMatrix predicted = predicted_block_string(seq, i, j) * ev.coeff(i, j);
            const double res = (ev.block(i, j) - predicted).max_abs();
            if (res > report.max_residual) {
                report.max_residual = res;
                report.worst_i = i;
                report.worst_j = j;
            }
        }
    report.passed = report.max_residual <= tolerance;
    return report;
}

/// max over (i, j) of | |a_ij| - |b_ij| | between two evolutions of the
/// same shape; the clock coefficients must not care about the gates.
inline double coefficient_divergence(const BlockEvolution& a, const BlockEvolution& b) {
    if (a.k != b.k)
        throw std::invalid_argument("coefficient_divergence: mismatched gate counts");
    double m = 0.0;
    for (std::size_t i = 0; i < a.clock_coeffs.size(); ++i)
        m = std::max(m, std::fabs(std::abs(a.clock_coeffs[i]) - std::abs(b.clock_coeffs[i])));
    return m;
}

/// Exact k=2 propagator.  H^3 = 2H collapses the exponential series to
///   e^{-iHt} = I - i (H/sqrt2) sin(sqrt2 t) + (H^2/2)(cos(sqrt2 t) - 1),
/// whose nine blocks are assembled here directly.
inline ComplexMatrix k2_closed_form(const ComplexMatrix& u1, const ComplexMatrix& u2, double t) {
    if (!u1.square() || !u2.square() || u1.rows() != u2.rows())
        throw std::invalid_argument("k2_closed_form: gate dimensions must match");
    if (u1.unitarity_error() > tol::gate_unitarity || u2.unitarity_error() > tol::gate_unitarity)
        throw std::invalid_argument("k2_closed_form: gates must be unitary");

    const std::size_t d = u1.rows();
    const double c = std::cos(std::sqrt(2.0) * t);
    const double s = std::sin(std::sqrt(2.0) * t);
    const cplx half_cm1(0.5 * (c - 1.0), 0.0);
    const cplx diag0(1.0 + 0.5 * (c - 1.0), 0.0);
    const cplx i_s(0.0, s / std::sqrt(2.0));

    // Every single-hop block carries -i/sqrt2 sin(sqrt2 t): the terms
    // come from -i(H/sqrt2) sin(sqrt2 t) with H symmetric in the block
    // pattern.
    const ComplexMatrix id = ComplexMatrix::identity(d);
    ComplexMatrix g(3 * d, 3 * d);
    detail::place_block(g, 0, 0, id * diag0);
    detail::place_block(g, 0, 1, u1.adjoint() * (-i_s));
    detail::place_block(g, 0, 2, (u1.adjoint() * u2.adjoint()) * half_cm1);
    detail::place_block(g, 1, 0, u1 * (-i_s));
    detail::place_block(g, 1, 1, id * cplx(c, 0.0));
    detail::place_block(g, 1, 2, u2.adjoint() * (-i_s));
    detail::place_block(g, 2, 0, (u2 * u1) * half_cm1);
    detail::place_block(g, 2, 1, u2 * (-i_s));
    detail::place_block(g, 2, 2, id * diag0);
    return g;
}

struct ComputationResult {
    /// Register state conditioned on the counter having reached site k;
    /// empty when the success probability is numerically zero.
    std::vector<cplx> conditional_state;
    double success_probability = 0.0;
};

/// Evolve |0>_c (x) |input> for time t and project the counter onto
/// site k.  The success probability equals |a_k0(t)|^2 regardless of
/// the input, and the conditional state is U_k...U_1 |input> up to a
/// global phase.
inline ComputationResult run_computation(const UnitarySequence& seq,
                                         const std::vector<cplx>& input_state, double t) {
    detail::require_dense_size(seq);
    const std::size_t d = seq.dim();
    if (input_state.size() != d)
        throw std::invalid_argument("run_computation: input state dimension mismatch");
    double norm = 0.0;
    for (const auto& v : input_state) norm += std::norm(v);
    if (std::fabs(std::sqrt(norm) - 1.0) > tol::state_norm)
        throw std::invalid_argument("run_computation: input state is not normalized");

    const BlockEvolution ev = evolve(seq, t);
    const std::vector<cplx> final_block = mat_vec(ev.block(seq.gate_count(), 0), input_state);

    ComputationResult result;
    for (const auto& v : final_block) result.success_probability += std::norm(v);
    if (result.success_probability > 1e-30) {
        const double amp = std::sqrt(result.success_probability);
        result.conditional_state = final_block;
        for (auto& v : result.conditional_state) v /= amp;
    }
    return result;
}

}  // namespace fclock
