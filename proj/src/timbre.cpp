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

#include "timbrecolor/timbre.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "timbrecolor/error.hpp"
#include "timbrecolor/simd.hpp"

namespace timbrecolor {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void checkParams(const FMParams& p) {
    if (!(p.carrierHz > 0.0) || !(p.modulatorHz > 0.0)) {
        throw DomainError("FM carrier and modulator frequencies must be positive");
    }
    if (!(p.modulationIndex >= 0.0)) {
        throw DomainError("FM modulation index must be nonnegative");
    }
}

std::size_t sampleCount(double durationSec, int sampleRateHz) {
    if (!(durationSec > 0.0)) {
        throw DomainError("duration must be positive");
    }
    if (sampleRateHz <= 0) {
        throw DomainError("sample rate must be positive");
    }
    const double count = std::round(durationSec * sampleRateHz);
    if (count > static_cast<double>(kMaxRenderSamples)) {
        throw DomainError("render of " + std::to_string(count) + " samples exceeds the size guard");
    }
    return static_cast<std::size_t>(count);
}

void checkAliasing(const FMParams& params, int sampleRateHz, AliasPolicy policy) {
    if (policy == AliasPolicy::Allow) return;
    const double top = highestSidebandHz(params);
    if (top >= sampleRateHz / 2.0) {
        throw AliasingError("sideband at " + std::to_string(top) + " Hz (I = " +
                            std::to_string(params.modulationIndex) + ") reaches Nyquist " +
                            std::to_string(sampleRateHz / 2.0) + " Hz");
    }
}

// 2 pi * frac(f * k / rate)
double cyclePhase(double frequency, double sampleRateHz, std::size_t k) {
    const double cycles = frequency * static_cast<double>(k) / sampleRateHz;
    return kTwoPi * (cycles - std::floor(cycles));
}

struct SegmentPlan {
    std::size_t start = 0;
    double offset = 0.0;  // added to the total phase of this segment
};

// Sequential prepass: start index and the phase offset that keeps
// wc t + I sin(wm t) + offset continuous when I steps at a boundary.
std::vector<SegmentPlan> planSegments(double modulatorHz, std::span<const double> indexGrid,
                                      std::size_t perSegment, int sampleRateHz) {
    std::vector<SegmentPlan> plan(indexGrid.size());
    for (std::size_t s = 1; s < indexGrid.size(); ++s) {
        plan[s].start = plan[s - 1].start + perSegment;
        const double t = static_cast<double>(plan[s].start) / static_cast<double>(sampleRateHz);
        plan[s].offset =
            plan[s - 1].offset + (indexGrid[s - 1] - indexGrid[s]) * std::sin(kTwoPi * modulatorHz * t);
        plan[s].offset = std::remainder(plan[s].offset, kTwoPi);
    }
    return plan;
}

// Same expression as fmSample at t = k / rate, plus the segment offset.
double pathSample(double carrierHz, double modulatorHz, double index, double offset, int sampleRateHz,
                  std::size_t k) {
    const double t = static_cast<double>(k) / static_cast<double>(sampleRateHz);
    return std::sin(kTwoPi * carrierHz * t + index * std::sin(kTwoPi * modulatorHz * t) + offset);
}

}  // namespace

double fmSample(const FMParams& params, double t) {
    return std::sin(kTwoPi * params.carrierHz * t +
                    params.modulationIndex * std::sin(kTwoPi * params.modulatorHz * t));
}

double highestSidebandHz(const FMParams& params, double tailTolerance) {
    checkParams(params);
    const int order = energyTruncationOrder(params.modulationIndex, tailTolerance);
    return params.carrierHz + order * params.modulatorHz;
}

SampledWave renderFMWave(const FMParams& params, double durationSec, int sampleRateHz,
                         AliasPolicy aliasPolicy) {
    checkParams(params);
    const std::size_t count = sampleCount(durationSec, sampleRateHz);
    checkAliasing(params, sampleRateHz, aliasPolicy);
    SampledWave wave;
    wave.sampleRateHz = sampleRateHz;
    wave.samples.resize(count);
    const double rate = static_cast<double>(sampleRateHz);
    for (std::size_t k = 0; k < count; ++k) {
        wave.samples[k] = fmSample(params, static_cast<double>(k) / rate);
    }
    // A sine of a real phase never leaves [-1, 1]; this only guards rounding.
    const double peak = simd::maxAbs(wave.samples);
    if (peak > 1.0) {
        for (double& s : wave.samples) s /= peak;
    }
    return wave;
}

SampledWave renderFMPath(double carrierHz, double modulatorHz, std::span<const double> indexGrid,
                         double segmentDurationSec, int sampleRateHz, AliasPolicy aliasPolicy) {
    if (indexGrid.empty()) {
        throw DomainError("renderFMPath: index grid is empty");
    }
    for (std::size_t i = 0; i < indexGrid.size(); ++i) {
        checkParams({carrierHz, modulatorHz, indexGrid[i]});
        if (i > 0 && indexGrid[i] < indexGrid[i - 1]) {
            throw DomainError("renderFMPath: index grid must be ascending");
        }
        checkAliasing({carrierHz, modulatorHz, indexGrid[i]}, sampleRateHz, aliasPolicy);
    }
    const std::size_t perSegment = sampleCount(segmentDurationSec, sampleRateHz);
    if (perSegment * indexGrid.size() > kMaxRenderSamples) {
        throw DomainError("renderFMPath: total length exceeds the size guard");
    }
    const auto plan = planSegments(modulatorHz, indexGrid, perSegment, sampleRateHz);

    SampledWave wave;
    wave.sampleRateHz = sampleRateHz;
    wave.samples.resize(perSegment * indexGrid.size());
    for (std::size_t s = 0; s < indexGrid.size(); ++s) {
        for (std::size_t k = plan[s].start; k < plan[s].start + perSegment; ++k) {
            wave.samples[k] = pathSample(carrierHz, modulatorHz, indexGrid[s], plan[s].offset, sampleRateHz, k);
        }
    }
    return wave;
}

double maxPathBoundaryJump(double carrierHz, double modulatorHz, std::span<const double> indexGrid,
                           double segmentDurationSec, int sampleRateHz, const SampledWave& rendered) {
    const std::size_t perSegment = sampleCount(segmentDurationSec, sampleRateHz);
    const auto plan = planSegments(modulatorHz, indexGrid, perSegment, sampleRateHz);
    double worst = 0.0;
    for (std::size_t s = 1; s < plan.size(); ++s) {
        const std::size_t k = plan[s].start;
        const double continued =
            pathSample(carrierHz, modulatorHz, indexGrid[s - 1], plan[s - 1].offset, sampleRateHz, k);
        worst = std::max(worst, std::fabs(rendered.samples.at(k) - continued));
    }
    return worst;
}

std::size_t harmonicWindowLength(std::size_t available, int sampleRateHz, double fundamentalHz) {
    const double samplesPerPeriod = sampleRateHz / fundamentalHz;
    const auto maxPeriods = static_cast<std::size_t>(std::floor(available / samplesPerPeriod));
    // Prefer P periods that span an integer sample count: then the sin/cos
    // basis is exactly orthogonal over the window.
    for (std::size_t periods = maxPeriods; periods >= 1 && periods + 10000 > maxPeriods; --periods) {
        const double length = static_cast<double>(periods) * samplesPerPeriod;
        const double rounded = std::round(length);
        if (std::fabs(length - rounded) < 1e-9 * std::max(1.0, length) && rounded <= available) {
            return static_cast<std::size_t>(rounded);
        }
    }
    // Irrational period: whole periods rounded to the nearest sample.
    return std::min(available, static_cast<std::size_t>(std::llround(maxPeriods * samplesPerPeriod)));
}

LineSpectrum analyzeHarmonics(const SampledWave& wave, double fundamentalHz, int maxHarmonic) {
    if (!(fundamentalHz > 0.0) || maxHarmonic < 1) {
        throw DomainError("analyzeHarmonics: fundamental must be positive and maxHarmonic >= 1");
    }
    const double rate = static_cast<double>(wave.sampleRateHz);
    if (!(maxHarmonic * fundamentalHz < rate / 2.0)) {
        throw DomainError("analyzeHarmonics: harmonic " + std::to_string(maxHarmonic) + " of " +
                          std::to_string(fundamentalHz) + " Hz is not below Nyquist " +
                          std::to_string(rate / 2.0) + " Hz");
    }
    const double periodSamples = rate / fundamentalHz;
    if (static_cast<double>(wave.samples.size()) < 10.0 * periodSamples) {
        throw DomainError("analyzeHarmonics: wave spans fewer than 10 fundamental periods");
    }
    const std::size_t length = harmonicWindowLength(wave.samples.size(), wave.sampleRateHz, fundamentalHz);
    const std::span<const double> window(wave.samples.data(), length);

    double mean = 0.0;
    for (double s : window) mean += s;
    mean /= static_cast<double>(length);

    std::vector<double> sinBasis(length);
    std::vector<double> cosBasis(length);
    std::vector<SpectralLine> lines;
    for (int n = 1; n <= maxHarmonic; ++n) {
        const double frequency = n * fundamentalHz;
        for (std::size_t k = 0; k < length; ++k) {
            const double phase = cyclePhase(frequency, rate, k);
            sinBasis[k] = std::sin(phase);
            cosBasis[k] = std::cos(phase);
        }
        const auto [sinPart, cosPart] = simd::dot2(window, sinBasis, cosBasis);
        // a sin(x + p) = a cos p sin x + a sin p cos x
        const double scale = 2.0 / static_cast<double>(length);
        const double inPhase = scale * sinPart;
        const double quadrature = scale * cosPart;
        const double amplitude = std::hypot(inPhase, quadrature);
        if (amplitude < kHarmonicAmplitudeFloor) continue;
        lines.push_back({frequency, amplitude, std::atan2(quadrature, inPhase)});
    }
    return LineSpectrum(std::move(lines), mean);
}

SampledWave superpose(const SampledWave& a, const SampledWave& b) {
    if (a.sampleRateHz != b.sampleRateHz || a.samples.size() != b.samples.size()) {
        throw DomainError("superpose: waves differ in sample rate or length");
    }
    SampledWave out = a;
    simd::axpy(1.0, b.samples, out.samples);
    return out;
}

}  // namespace timbrecolor
