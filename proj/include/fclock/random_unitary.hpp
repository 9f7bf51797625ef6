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
#include <random>

#include "fclock/complex_matrix.hpp"

namespace fclock {

/// Deterministic random source.  Normal deviates come from a hand-rolled
/// Box-Muller on top of mt19937_64 so streams are identical across
/// standard libraries (std::normal_distribution is not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {
        // 53-bit mantissa in [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * kPi * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * kPi * u2);
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
    ComplexMatrix h(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        h(r, r) = rng.normal();
        for (std::size_t c = r + 1; c < dim; ++c) {
            const cplx v(rng.normal(), rng.normal());
            h(r, c) = v;
            h(c, r) = std::conj(v);
        }
    }
    return h;
}

/// Approximately Haar unitary: complex Gaussian matrix orthonormalized
/// by modified Gram-Schmidt.
inline ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
    ComplexMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = cplx(rng.normal(), rng.normal());

    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            cplx proj = 0.0;
            for (std::size_t r = 0; r < dim; ++r) proj += std::conj(m(r, prev)) * m(r, c);
            for (std::size_t r = 0; r < dim; ++r) m(r, c) -= proj * m(r, prev);
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < dim; ++r) norm += std::norm(m(r, c));
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < dim; ++r) m(r, c) /= norm;
    }
    return m;
}

inline std::vector<cplx> random_state(std::size_t dim, Rng& rng) {
    std::vector<cplx> v(dim);
    double norm = 0.0;
    for (auto& x : v) {
        x = cplx(rng.normal(), rng.normal());
        norm += std::norm(x);
    }
    norm = std::sqrt(norm);
    for (auto& x : v) x /= norm;
    return v;
}

}  // namespace fclock
