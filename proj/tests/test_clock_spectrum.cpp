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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fclock/clock_spectrum.hpp"
#include "fclock/matrix_exponential.hpp"
#include "fclock/random_unitary.hpp"
#include "oracles.hpp"

using namespace fclock;

TEST_SUITE_BEGIN("clock-spectrum");

TEST_CASE("build_clock_matrix: shapes and values") {
    const SymTridiag m2 = build_clock_matrix(2);
    CHECK(m2.diag == std::vector<double>{0.0, 0.0, 0.0});
    CHECK(m2.offdiag == std::vector<double>{1.0, 1.0});

    const SymTridiag m1 = build_clock_matrix(1);
    CHECK(m1.diag.size() == 2);
    CHECK(m1.offdiag == std::vector<double>{1.0});

    const SymTridiag m5 = build_clock_matrix(5);
    REQUIRE(m5.diag.size() == 6);
    for (double d : m5.diag) CHECK(d == 0.0);
    for (double e : m5.offdiag) CHECK(e == 1.0);

    CHECK_THROWS_AS(build_clock_matrix(0), std::invalid_argument);
}

TEST_CASE("clock_eigensystem: k=2 spectrum {sqrt2, 0, -sqrt2}") {
    const ClockSpectrum s = clock_eigensystem(2);
    REQUIRE(s.eigenvalues.size() == 3);
    CHECK(s.eigenvalues[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(std::fabs(s.eigenvalues[1]) < 1e-14);
    CHECK(s.eigenvalues[2] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("clock_eigensystem: k=1 spectrum {1, -1}") {
    const ClockSpectrum s = clock_eigensystem(1);
    CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("clock_eigensystem: invariants for several k") {
    for (std::size_t k : {1u, 2u, 5u, 12u, 40u}) {
        const ClockSpectrum s = clock_eigensystem(k);

        // spectrum symmetric about zero
        std::vector<double> sorted = s.eigenvalues;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t j = 0; j <= k; ++j)
            CHECK(std::fabs(sorted[j] + sorted[k - j]) < 1e-12);

        // unit norms and pairwise orthogonality
        for (std::size_t j = 0; j <= k; ++j) {
            double norm = 0.0;
            for (std::size_t m = 0; m <= k; ++m) norm += s.overlap(m, j) * s.overlap(m, j);
            CHECK(std::fabs(norm - 1.0) < 1e-12);
        }
        for (std::size_t a = 0; a <= k; ++a)
            for (std::size_t b = a + 1; b <= k; ++b) {
                double dot = 0.0;
                for (std::size_t m = 0; m <= k; ++m) dot += s.overlap(m, a) * s.overlap(m, b);
                CHECK(std::fabs(dot) < 1e-10);
            }

        // eigenvector residual against the explicit tridiagonal matrix
        const SymTridiag chain = build_clock_matrix(k);
        for (std::size_t j = 0; j <= k; ++j) {
            std::vector<double> v(k + 1);
            for (std::size_t m = 0; m <= k; ++m) v[m] = s.overlap(m, j);
            const std::vector<double> hv = mat_vec(chain, v);
            for (std::size_t m = 0; m <= k; ++m)
                CHECK(std::fabs(hv[m] - s.eigenvalues[j] * v[m]) < 1e-10);
        }

        // mirror symmetry: <k|phi_j> = (-1)^j <0|phi_j>
        for (std::size_t j = 0; j <= k; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            CHECK(std::fabs(s.overlap(k, j) - sign * s.overlap(0, j)) < 1e-12);
        }
    }
}

TEST_CASE("amplitude: a_20(t) for k=2 equals (cos(sqrt2 t)-1)/2") {
    for (double t : {0.0, 0.3, 1.1, 2.221441469, 5.0, 17.7}) {
        const cplx a = amplitude(2, 2, 0, t);
        const double expected = 0.5 * (std::cos(std::sqrt(2.0) * t) - 1.0);
        CHECK(std::abs(a - cplx(expected, 0.0)) < 1e-13);
    }
}

TEST_CASE("amplitude: identity at t=0") {
    for (std::size_t k : {1u, 4u, 9u})
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j <= k; ++j) {
                const double expected = (i == j) ? 1.0 : 0.0;
                CHECK(std::abs(amplitude(k, i, j, 0.0) - cplx(expected, 0.0)) < 1e-12);
            }
}

TEST_CASE("amplitude: a_40(1.3) matches dense exponential") {
    const ComplexMatrix g = matrix_exponential(oracles::dense_clock_hamiltonian(4), 1.3);
    CHECK(std::abs(amplitude(4, 4, 0, 1.3) - g(4, 0)) < 1e-10);
}

TEST_CASE("amplitude: rejects out-of-range sites") {
    CHECK_THROWS_AS(amplitude(3, 4, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(amplitude(3, 0, 5, 1.0), std::invalid_argument);
}

TEST_CASE("success_probability: P_2(pi/sqrt2) = 1 and P_k(0) = 0") {
    CHECK(success_probability(2, kPi / std::sqrt(2.0)) == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t k : {1u, 2u, 7u, 30u}) CHECK(success_probability(k, 0.0) < 1e-28);
    CHECK_THROWS_AS(success_probability(4, -0.5), std::invalid_argument);
}

TEST_CASE("success_probability: P_6 over a grid matches dense oracle") {
    const ComplexMatrix h = oracles::dense_clock_hamiltonian(6);
    for (double t = 0.0; t <= 10.0; t += 0.25) {
        const ComplexMatrix g = matrix_exponential(h, t);
        CHECK(std::fabs(success_probability(6, t) - std::norm(g(6, 0))) < 1e-10);
    }
}

TEST_CASE("success_probability: equals the alternating-sign spectral sum") {
    Rng rng(31);
    for (std::size_t k : {2u, 3u, 8u, 41u, 200u, 1001u}) {
        for (int rep = 0; rep < 4; ++rep) {
            const double t = rng.uniform() * static_cast<double>(k + 2);
            const double a = success_probability(k, t);
            const double b = success_probability_alternating(k, t);
            CHECK(std::fabs(a - b) < 1e-12);
        }
    }
}

TEST_CASE("TransferKernel agrees with generic amplitude for even and odd k") {
    Rng rng(77);
    for (std::size_t k : {1u, 2u, 3u, 10u, 11u, 100u, 101u}) {
        const TransferKernel kernel(k);
        for (int rep = 0; rep < 5; ++rep) {
            const double t = rng.uniform() * static_cast<double>(k + 2);
            CHECK(std::abs(kernel.amplitude(t) - amplitude(k, k, 0, t)) < 1e-12);
        }
    }
}

TEST_CASE("normalization: sum_j |a_j0(t)|^2 = 1 up to k=200") {
    Rng rng(5150);
    for (std::size_t k : {2u, 9u, 50u, 200u}) {
        for (int rep = 0; rep < 4; ++rep) {
            const double t = rng.uniform() * 2.0 * static_cast<double>(k + 2);
            double total = 0.0;
            for (std::size_t j = 0; j <= k; ++j) total += std::norm(amplitude(k, j, 0, t));
            CHECK(std::fabs(total - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("time-reversal symmetry: |a_k0| = |a_0k|") {
    Rng rng(66);
    for (std::size_t k : {2u, 5u, 33u}) {
        for (int rep = 0; rep < 5; ++rep) {
            const double t = rng.uniform() * 2.0 * static_cast<double>(k + 2);
            const double p_from = std::norm(amplitude(k, k, 0, t));
            const double p_back = std::norm(amplitude(k, 0, k, t));
            CHECK(std::fabs(p_from - p_back) < 1e-12);
        }
    }
}

TEST_CASE("probability_series: k=2 rises monotonically to 1 on [0, pi/sqrt2]") {
    std::vector<double> grid;
    const double t_end = kPi / std::sqrt(2.0);
    for (int i = 0; i <= 100; ++i) grid.push_back(t_end * i / 100.0);
    const AmplitudeSeries series = probability_series(2, grid);
    for (std::size_t i = 1; i < series.probabilities.size(); ++i)
        CHECK(series.probabilities[i] >= series.probabilities[i - 1] - 1e-12);
    CHECK(series.probabilities.back() == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < series.probabilities.size(); ++i)
        CHECK(series.probabilities[i] == std::norm(series.amplitudes[i]));
}

TEST_CASE("probability_series: k=9999 over [4900, 5100]") {
    std::vector<double> grid;
    for (int i = 0; i <= 2000; ++i) grid.push_back(4900.0 + 0.1 * i);
    const AmplitudeSeries series = probability_series(9999, grid);

    // all probabilities are Born-bounded
    for (double p : series.probabilities) {
        CHECK(p >= 0.0);
        CHECK(p <= 1.0 + 1e-12);
    }

    // single dominant maximum near t ~ 5009, nothing comparable before it
    const auto it = std::max_element(series.probabilities.begin(), series.probabilities.end());
    const std::size_t arg = static_cast<std::size_t>(it - series.probabilities.begin());
    CHECK(series.times[arg] == doctest::Approx(5009.18).epsilon(2e-4));
    CHECK(*it == doctest::Approx(0.0155798).epsilon(1e-4));
    for (std::size_t i = 1; i + 1 < arg; ++i) {
        const bool local_max = series.probabilities[i] > series.probabilities[i - 1] &&
                               series.probabilities[i] > series.probabilities[i + 1];
        if (local_max) CHECK(series.probabilities[i] < 1e-12);
    }

    // decaying oscillations after the peak: successive maxima shrink
    std::vector<double> maxima;
    for (std::size_t i = arg + 1; i + 1 < series.probabilities.size(); ++i)
        if (series.probabilities[i] > series.probabilities[i - 1] &&
            series.probabilities[i] > series.probabilities[i + 1])
            maxima.push_back(series.probabilities[i]);
    REQUIRE(maxima.size() >= 3);
    for (std::size_t i = 1; i < maxima.size(); ++i) CHECK(maxima[i] < maxima[i - 1]);
}

TEST_CASE("probability_series: rejects bad grids") {
    CHECK_THROWS_AS(probability_series(4, {}), std::invalid_argument);
    CHECK_THROWS_AS(probability_series(4, {1.0, 0.5}), std::invalid_argument);
}

TEST_CASE("oracle equivalence: closed form vs dense exponential, k=2..12") {
    Rng rng(314159);
    double worst = 0.0;
    for (std::size_t k = 2; k <= 12; ++k) {
        const ComplexMatrix h = oracles::dense_clock_hamiltonian(k);
        for (int rep = 0; rep < 20; ++rep) {
            const double t = rng.uniform() * 2.0 * static_cast<double>(k + 2);
            const ComplexMatrix g = matrix_exponential(h, t);
            worst = std::max(worst,
                             std::fabs(std::norm(g(k, 0)) - success_probability(k, t)));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_SUITE_END();
