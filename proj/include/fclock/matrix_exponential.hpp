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

#include "fclock/dense_eigen.hpp"
#include "fclock/tolerances.hpp"

namespace fclock {

/// e^{-i H t} for Hermitian H, via eigendecomposition.  The result is
/// unitary to within tol::propagator_unitarity.
inline ComplexMatrix matrix_exponential(const ComplexMatrix& h, double t) {
    if (!h.square())
        throw std::invalid_argument("matrix_exponential: matrix must be square");
    const double herm = h.hermiticity_error();
    if (herm > tol::hermiticity)
        throw std::invalid_argument("matrix_exponential: input is not Hermitian (max deviation " +
                                    std::to_string(herm) + ")");

    const std::size_t n = h.rows();
    const HermitianEigensystem es = hermitian_eigensystem(h);

    std::vector<cplx> phase(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double a = -es.eigenvalues[j] * t;
        phase[j] = cplx(std::cos(a), std::sin(a));
    }

    // V diag(phase) V^dag
    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            cplx s = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                s += es.eigenvectors(r, j) * phase[j] * std::conj(es.eigenvectors(c, j));
            out(r, c) = s;
        }
    return out;
}

}  // namespace fclock
