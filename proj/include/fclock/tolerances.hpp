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

#include <cstddef>

// Every numerical tolerance used across the library, in one place.

namespace fclock::tol {

// Input validation.
inline constexpr double hermiticity = 1e-12;        // max|H - H^dag| for accepted generators
inline constexpr double gate_unitarity = 1e-10;     // max|U^dag U - I| for accepted gates
inline constexpr double state_norm = 1e-10;         // |norm - 1| for accepted input states

// Guarantees on produced propagators.
inline constexpr double propagator_unitarity = 1e-10;  // single dense exponential
inline constexpr double evolution_unitarity = 1e-9;    // assembled block evolution

// Spectral identities of the clock chain.
inline constexpr double spectral_identity = 1e-12;  // closed form vs alternating sum, symmetry
inline constexpr double orthogonality = 1e-10;      // eigenvector pair overlaps
inline constexpr double eigen_residual = 1e-10;     // |H v - lambda v|
inline constexpr double normalization = 1e-10;      // sum_j |a_j0|^2 - 1

// Structure of the gate evolution (block decomposition).
inline constexpr double structure_residual = 1e-9;
inline constexpr double gate_independence = 1e-9;
inline constexpr double number_conservation = 1e-12;
inline constexpr double phase_free_overlap = 1e-9;  // | |<a|b>| - 1 | for state comparison

// Oracles and cross-route agreement.
inline constexpr double oracle_probability = 1e-10;

// Quadrature.
inline constexpr double integral_abs = 1e-6;

// Peak search.
inline constexpr double peak_noise_floor = 1e-12;   // reject grid maxima below this P
inline constexpr double refine_rel = 1e-8;          // golden-section width, relative to k+2

// Dense work is refused above this dimension.
inline constexpr std::size_t dense_dimension_cap = 4096;

}  // namespace fclock::tol
