// Copyright 2026 The timbrecolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>

#include "timbrecolor/simd.hpp"

namespace timbrecolor::simd::scalar {

double dot(std::span<const double> x, std::span<const double> y) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * y[i];
    }
    return sum;
}

std::pair<double, double> dot2(std::span<const double> x, std::span<const double> a,
                               std::span<const double> b) {
    double sa = 0.0;
    double sb = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sa += x[i] * a[i];
        sb += x[i] * b[i];
    }
    return {sa, sb};
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] += alpha * x[i];
    }
}

double maxAbs(std::span<const double> x) {
    double peak = 0.0;
    for (double v : x) {
        peak = std::max(peak, std::fabs(v));
    }
    return peak;
}

void quantizeI16(std::span<const double> x, std::span<std::int16_t> out) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double clamped = std::clamp(x[i], -1.0, 1.0);
        out[i] = static_cast<std::int16_t>(std::nearbyint(clamped * 32767.0));
    }
}

}  // namespace timbrecolor::simd::scalar
