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

// Test-only reference implementations, kept independent of the library
// paths they check.

#include <cmath>
#include <vector>

#include "fclock/complex_matrix.hpp"
#include "fclock/dense_eigen.hpp"
#include "fclock/tridiag.hpp"

namespace oracles {

/// e^{-iHt} by scaling-and-squaring of the Taylor series.  Slow and
/// simple; used to cross-check the eigendecomposition route.
inline fclock::ComplexMatrix taylor_expm(const fclock::ComplexMatrix& h, double t) {
    using fclock::ComplexMatrix;
    const std::size_t n = h.rows();
    ComplexMatrix a = h * fclock::cplx(0.0, -t);

    int squarings = 0;
    double scale = a.max_abs();
    while (scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    const double factor = std::pow(2.0, -squarings);
    a = a * fclock::cplx(factor, 0.0);

    ComplexMatrix result = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int order = 1; order <= 30; ++order) {
        term = term * a;
        term = term * fclock::cplx(1.0 / order, 0.0);
        result = result + term;
        if (term.max_abs() < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

/// Eigenvalues of a SymTridiag through a dense symmetric solver:
/// independent of the Sturm bisection path.
inline std::vector<double> dense_tridiag_eigenvalues(const fclock::SymTridiag& m) {
    const std::size_t n = m.size();
    std::vector<double> dense(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        dense[i * n + i] = m.diag[i];
        if (i + 1 < n) {
            dense[i * n + i + 1] = m.offdiag[i];
            dense[(i + 1) * n + i] = m.offdiag[i];
        }
    }
    return fclock::symmetric_eigenvalues(dense, n);
}

/// Dense clock-chain Hamiltonian as a ComplexMatrix.
inline fclock::ComplexMatrix dense_clock_hamiltonian(std::size_t k) {
    fclock::ComplexMatrix h(k + 1, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        h(i, i + 1) = 1.0;
        h(i + 1, i) = 1.0;
    }
    return h;
}

}  // namespace oracles
