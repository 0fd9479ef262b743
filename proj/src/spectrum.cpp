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

#include "timbrecolor/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "timbrecolor/error.hpp"
#include "timbrecolor/simd.hpp"

namespace timbrecolor {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrapPhase(double phase) {
    double wrapped = std::fmod(phase, kTwoPi);
    if (wrapped < 0.0) wrapped += kTwoPi;
    if (wrapped >= kTwoPi) wrapped = 0.0;
    return wrapped;
}

SpectralLine mergeLines(const SpectralLine& a, const SpectralLine& b) {
    if (a.phase == 0.0 && b.phase == 0.0) {
        return {a.frequency, a.amplitude + b.amplitude, 0.0};
    }
    // a sin(x + p) = a cos p sin x + a sin p cos x
    const double s = a.amplitude * std::cos(a.phase) + b.amplitude * std::cos(b.phase);
    const double c = a.amplitude * std::sin(a.phase) + b.amplitude * std::sin(b.phase);
    return {a.frequency, std::hypot(s, c), wrapPhase(std::atan2(c, s))};
}

// Phase of a sample of a sinusoid at `frequency`, reduced before scaling by 2 pi
// so long renders keep full precision.
double cyclePhase(double frequency, double sampleRateHz, std::size_t k) {
    const double cycles = frequency * static_cast<double>(k) / sampleRateHz;
    return kTwoPi * (cycles - std::floor(cycles));
}

}  // namespace

LineSpectrum::LineSpectrum(std::vector<SpectralLine> lines, double dcTerm) : dcTerm_(dcTerm) {
    for (const auto& line : lines) {
        if (!(line.frequency >= 0.0)) {
            throw DomainError("LineSpectrum: negative frequency " + std::to_string(line.frequency));
        }
    }
    std::stable_sort(lines.begin(), lines.end(),
                     [](const SpectralLine& a, const SpectralLine& b) { return a.frequency < b.frequency; });
    for (auto& line : lines) {
        line.phase = wrapPhase(line.phase);
        if (!lines_.empty() && line.frequency - lines_.back().frequency <= kFrequencyMergeTolerance) {
            lines_.back() = mergeLines(lines_.back(), line);
        } else {
            lines_.push_back(line);
        }
    }
    // A 0 Hz partial is the constant a sin(phase); zero-phase ones vanish.
    if (!lines_.empty() && lines_.front().frequency <= kFrequencyMergeTolerance) {
        dcTerm_ += lines_.front().amplitude * std::sin(lines_.front().phase);
        lines_.erase(lines_.begin());
    }
}

LineSpectrum LineSpectrum::operator+(const LineSpectrum& other) const {
    std::vector<SpectralLine> all(lines_.begin(), lines_.end());
    all.insert(all.end(), other.lines_.begin(), other.lines_.end());
    return LineSpectrum(std::move(all), dcTerm_ + other.dcTerm_);
}

std::vector<SpectralLine> fmSidebands(double carrierHz, double modulatorHz, double modulationIndex,
                                      double tailTolerance) {
    if (!(carrierHz > 0.0) || !(modulatorHz > 0.0)) {
        throw DomainError("fmSidebands: carrier and modulator frequencies must be positive");
    }
    if (!(modulationIndex >= 0.0)) {
        throw DomainError("fmSidebands: modulation index must be nonnegative");
    }
    const BesselCoefficients row = besselRow(modulationIndex, tailTolerance);
    std::vector<SpectralLine> raw;
    raw.reserve(static_cast<std::size_t>(2 * row.maxOrder + 1));
    for (int n = -row.maxOrder; n <= row.maxOrder; ++n) {
        raw.push_back({carrierHz + n * modulatorHz, row.at(n), 0.0});
    }
    return raw;
}

LineSpectrum foldSpectrum(std::span<const SpectralLine> raw) {
    std::vector<SpectralLine> folded;
    folded.reserve(raw.size());
    for (const auto& line : raw) {
        if (!std::isfinite(line.amplitude) || !std::isfinite(line.frequency)) {
            throw DomainError("foldSpectrum: non-finite line");
        }
        SpectralLine out = line;
        if (line.frequency < 0.0) {
            // sin(-w t + p) = -sin(w t - p)
            out.frequency = -line.frequency;
            out.amplitude = -line.amplitude;
            out.phase = wrapPhase(-line.phase);
        }
        folded.push_back(out);
    }
    return LineSpectrum(std::move(folded));
}

std::vector<double> renderLines(std::span<const SpectralLine> lines, double dcTerm,
                                double sampleRateHz, std::size_t count) {
    if (!(sampleRateHz > 0.0)) {
        throw DomainError("renderLines: sample rate must be positive");
    }
    std::vector<double> out(count, dcTerm);
    std::vector<double> partial(count);
    for (const auto& line : lines) {
        for (std::size_t k = 0; k < count; ++k) {
            partial[k] = std::sin(cyclePhase(line.frequency, sampleRateHz, k) + line.phase);
        }
        simd::axpy(line.amplitude, partial, out);
    }
    return out;
}

std::vector<double> renderSpectrum(const LineSpectrum& spectrum, double sampleRateHz,
                                   std::size_t count) {
    return renderLines(spectrum.lines(), spectrum.dcTerm(), sampleRateHz, count);
}

}  // namespace timbrecolor
