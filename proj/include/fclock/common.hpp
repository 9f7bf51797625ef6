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
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fclock {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Thrown when a scan fails to bracket the feature it was asked to locate.
struct SearchFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// sin(pi * num / den) with the argument reduced in exact integer
/// arithmetic first.  Chain overlaps need sin at integer multiples of
/// pi/den where num can reach ~1e10; reducing num mod 2*den before
/// touching floating point keeps full accuracy at any chain length.
inline double sin_pi_ratio(long long num, long long den) {
    long long r = num % (2 * den);
    if (r < 0) r += 2 * den;
    double sign = 1.0;
    if (r >= den) {
        sign = -1.0;
        r -= den;
    }
    if (2 * r > den) r = den - r;
    return sign * std::sin(kPi * static_cast<double>(r) / static_cast<double>(den));
}

}  // namespace fclock
