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

#include <Eigen/Dense>

#include "fclock/complex_matrix.hpp"

// The only place Eigen is touched: dense Hermitian/symmetric
// eigendecompositions behind the library's own matrix type.

namespace fclock {

struct HermitianEigensystem {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns
};

inline HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& h) {
    if (!h.square())
        throw std::invalid_argument("hermitian_eigensystem: matrix must be square");
    const auto n = static_cast<Eigen::Index>(h.rows());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            m(r, c) = h(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigensystem: eigensolver failed");

    HermitianEigensystem out;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    out.eigenvectors = ComplexMatrix(h.rows(), h.rows());
    for (Eigen::Index i = 0; i < n; ++i) {
        out.eigenvalues[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        for (Eigen::Index r = 0; r < n; ++r)
            out.eigenvectors(static_cast<std::size_t>(r), static_cast<std::size_t>(i)) =
                solver.eigenvectors()(r, i);
    }
    return out;
}

inline std::vector<double> symmetric_eigenvalues(const std::vector<double>& dense_row_major,
                                                 std::size_t n) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                dense_row_major[r * n + c];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    return out;
}

}  // namespace fclock
