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

#include <span>
#include <vector>

#include "timbrecolor/bessel.hpp"

namespace timbrecolor {

/// Frequencies closer than this are treated as the same line.
inline constexpr double kFrequencyMergeTolerance = 1e-9;

/// One partial a * sin(2 pi f t + phase). Amplitude is signed; phase in [0, 2 pi).
struct SpectralLine {
    double frequency = 0.0;
    double amplitude = 0.0;
    double phase = 0.0;

    bool operator==(const SpectralLine&) const = default;
};

/// Sorted, frequency-distinct partials plus a constant term.
class LineSpectrum {
public:
    LineSpectrum() = default;

    /// Sorts `lines` and merges entries whose frequencies agree within
    /// kFrequencyMergeTolerance. Two zero-phase lines add their signed
    /// amplitudes; otherwise the phasors are added. Frequencies must be >= 0;
    /// a line at frequency 0 contributes nothing (sin 0 = 0) and is dropped.
    LineSpectrum(std::vector<SpectralLine> lines, double dcTerm = 0.0);

    std::span<const SpectralLine> lines() const noexcept { return lines_; }
    double dcTerm() const noexcept { return dcTerm_; }
    bool empty() const noexcept { return lines_.empty(); }
    std::size_t size() const noexcept { return lines_.size(); }

    /// Superposition of two spectra (sum of the waves they describe).
    LineSpectrum operator+(const LineSpectrum& other) const;

private:
    std::vector<SpectralLine> lines_;
    double dcTerm_ = 0.0;
};

/// Two-sided sideband list of sin(wc t + I sin(wm t)): one entry per
/// n in [-N, N] at frequency fc + n fm (possibly negative) with amplitude J_n(I),
/// N from the energy tail bound.
std::vector<SpectralLine> fmSidebands(double carrierHz, double modulatorHz, double modulationIndex,
                                      double tailTolerance = kDefaultTailTolerance);

/// Rewrites sin(-w t) as -sin(w t), merges coinciding frequencies and moves a
/// line landing on 0 Hz into the constant term (where a zero-phase line
/// contributes a sin 0 = 0). The result describes the same
/// waveform as the input.
LineSpectrum foldSpectrum(std::span<const SpectralLine> raw);

/// Samples dc + sum a sin(2 pi f t + phase) at t = k / sampleRateHz, k < count.
/// Negative frequencies are allowed.
std::vector<double> renderLines(std::span<const SpectralLine> lines, double dcTerm,
                                double sampleRateHz, std::size_t count);

std::vector<double> renderSpectrum(const LineSpectrum& spectrum, double sampleRateHz,
                                   std::size_t count);

}  // namespace timbrecolor
