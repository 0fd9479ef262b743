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

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <string>

#include "timbrecolor/error.hpp"
#include "timbrecolor/simd.hpp"

namespace timbrecolor::simd {

namespace {

struct KernelTable {
    Isa isa;
    double (*dot)(std::span<const double>, std::span<const double>);
    std::pair<double, double> (*dot2)(std::span<const double>, std::span<const double>,
                                      std::span<const double>);
    void (*axpy)(double, std::span<const double>, std::span<double>);
    double (*maxAbs)(std::span<const double>);
    void (*quantizeI16)(std::span<const double>, std::span<std::int16_t>);
};

constexpr KernelTable kScalar{Isa::Scalar, scalar::dot, scalar::dot2, scalar::axpy,
                              scalar::maxAbs, scalar::quantizeI16};
#if defined(TIMBRECOLOR_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, avx2::dot, avx2::dot2, avx2::axpy, avx2::maxAbs,
                            avx2::quantizeI16};
#endif

const KernelTable* tableFor(Isa isa) {
#if defined(TIMBRECOLOR_HAVE_AVX2)
    if (isa == Isa::Avx2) return &kAvx2;
#endif
    (void)isa;
    return &kScalar;
}

const KernelTable* initialTable() {
    if (const char* forced = std::getenv("TIMBRECOLOR_ISA")) {
        if (std::string(forced) == "scalar") return &kScalar;
    }
    return supported(Isa::Avx2) ? tableFor(Isa::Avx2) : &kScalar;
}

std::atomic<const KernelTable*>& current() {
    static std::atomic<const KernelTable*> table{initialTable()};
    return table;
}

const KernelTable& kernels() { return *current().load(std::memory_order_acquire); }

}  // namespace

std::string_view name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool supported(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(TIMBRECOLOR_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

Isa active() noexcept { return kernels().isa; }

void select(Isa isa) {
    if (!supported(isa)) {
        throw DomainError("SIMD kernels for " + std::string(name(isa)) + " are not available");
    }
    current().store(tableFor(isa), std::memory_order_release);
}

double dot(std::span<const double> x, std::span<const double> y) {
    assert(x.size() == y.size());
    return kernels().dot(x, y);
}

std::pair<double, double> dot2(std::span<const double> x, std::span<const double> a,
                               std::span<const double> b) {
    assert(x.size() == a.size() && x.size() == b.size());
    return kernels().dot2(x, a, b);
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    assert(x.size() == y.size());
    kernels().axpy(alpha, x, y);
}

double maxAbs(std::span<const double> x) { return kernels().maxAbs(x); }

void quantizeI16(std::span<const double> x, std::span<std::int16_t> out) {
    assert(x.size() == out.size());
    kernels().quantizeI16(x, out);
}

}  // namespace timbrecolor::simd
