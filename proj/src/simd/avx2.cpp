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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "timbrecolor/simd.hpp"

namespace timbrecolor::simd::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

}  // namespace

double dot(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(&x[i]), _mm256_loadu_pd(&y[i]), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(&x[i + 4]), _mm256_loadu_pd(&y[i + 4]), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(&x[i]), _mm256_loadu_pd(&y[i]), acc0);
    }
    double sum = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        sum += x[i] * y[i];
    }
    return sum;
}

std::pair<double, double> dot2(std::span<const double> x, std::span<const double> a,
                               std::span<const double> b) {
    const std::size_t n = x.size();
    __m256d acc_a = _mm256_setzero_pd();
    __m256d acc_b = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(&x[i]);
        acc_a = _mm256_fmadd_pd(xv, _mm256_loadu_pd(&a[i]), acc_a);
        acc_b = _mm256_fmadd_pd(xv, _mm256_loadu_pd(&b[i]), acc_b);
    }
    double sa = hsum(acc_a);
    double sb = hsum(acc_b);
    for (; i < n; ++i) {
        sa += x[i] * a[i];
        sb += x[i] * b[i];
    }
    return {sa, sb};
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    const std::size_t n = x.size();
    const __m256d av = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d yv = _mm256_fmadd_pd(av, _mm256_loadu_pd(&x[i]), _mm256_loadu_pd(&y[i]));
        _mm256_storeu_pd(&y[i], yv);
    }
    for (; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

double maxAbs(std::span<const double> x) {
    const std::size_t n = x.size();
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d peak = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        peak = _mm256_max_pd(peak, _mm256_andnot_pd(sign, _mm256_loadu_pd(&x[i])));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, peak);
    double result = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    for (; i < n; ++i) {
        result = std::max(result, std::fabs(x[i]));
    }
    return result;
}

void quantizeI16(std::span<const double> x, std::span<std::int16_t> out) {
    const std::size_t n = x.size();
    const __m256d lo = _mm256_set1_pd(-1.0);
    const __m256d hi = _mm256_set1_pd(1.0);
    const __m256d scale = _mm256_set1_pd(32767.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_min_pd(_mm256_max_pd(_mm256_loadu_pd(&x[i]), lo), hi);
        v = _mm256_round_pd(_mm256_mul_pd(v, scale), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
        const __m128i q32 = _mm256_cvtpd_epi32(v);
        const __m128i q16 = _mm_packs_epi32(q32, q32);
        _mm_storel_epi64(reinterpret_cast<__m128i*>(&out[i]), q16);
    }
    for (; i < n; ++i) {
        const double clamped = std::clamp(x[i], -1.0, 1.0);
        out[i] = static_cast<std::int16_t>(std::nearbyint(clamped * 32767.0));
    }
}

}  // namespace timbrecolor::simd::avx2
