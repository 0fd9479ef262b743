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

#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference in
// `simd::scalar` and, on x86-64 builds, an AVX2+FMA variant in `simd::avx2`.
// The free functions in `simd` forward to whichever table is active; the
// best supported ISA is picked on first use unless TIMBRECOLOR_ISA=scalar
// is set in the environment.

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

namespace timbrecolor::simd {

enum class Isa { Scalar, Avx2 };

std::string_view name(Isa isa) noexcept;

/// True when the kernels for `isa` were compiled in and the CPU runs them.
bool supported(Isa isa) noexcept;

Isa active() noexcept;

/// Switches the active kernel table. Throws DomainError if unsupported.
void select(Isa isa);

/// Sum of x[i] * y[i]. Spans must have equal length.
double dot(std::span<const double> x, std::span<const double> y);

/// Returns (sum x[i]*a[i], sum x[i]*b[i]) in one pass.
std::pair<double, double> dot2(std::span<const double> x, std::span<const double> a,
                               std::span<const double> b);

/// y[i] += alpha * x[i]
void axpy(double alpha, std::span<const double> x, std::span<double> y);

/// max |x[i]|, 0 for an empty span.
double maxAbs(std::span<const double> x);

/// out[i] = round-to-nearest-even(clamp(x[i], -1, 1) * 32767)
void quantizeI16(std::span<const double> x, std::span<std::int16_t> out);

namespace scalar {
double dot(std::span<const double> x, std::span<const double> y);
std::pair<double, double> dot2(std::span<const double> x, std::span<const double> a,
                               std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
double maxAbs(std::span<const double> x);
void quantizeI16(std::span<const double> x, std::span<std::int16_t> out);
}  // namespace scalar

#if defined(TIMBRECOLOR_HAVE_AVX2)
namespace avx2 {
double dot(std::span<const double> x, std::span<const double> y);
std::pair<double, double> dot2(std::span<const double> x, std::span<const double> a,
                               std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
double maxAbs(std::span<const double> x);
void quantizeI16(std::span<const double> x, std::span<std::int16_t> out);
}  // namespace avx2
#endif

}  // namespace timbrecolor::simd
