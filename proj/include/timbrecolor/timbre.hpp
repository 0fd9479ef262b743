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

#include "timbrecolor/spectrum.hpp"

namespace timbrecolor {

/// Uniformly sampled mono audio.
struct SampledWave {
    int sampleRateHz = 44100;
    std::vector<double> samples;

    double durationSec() const noexcept {
        return static_cast<double>(samples.size()) / static_cast<double>(sampleRateHz);
    }
};

/// sin(2 pi fc t + I sin(2 pi fm t))
struct FMParams {
    double carrierHz = 440.0;
    double modulatorHz = 880.0;
    double modulationIndex = 0.0;
};

/// What to do when sidebands of significant energy reach Nyquist.
enum class AliasPolicy { Reject, Allow };

inline constexpr std::size_t kMaxRenderSamples = 100'000'000;

double fmSample(const FMParams& params, double t);

/// Highest sideband frequency fc + N fm with N from the energy tail bound.
double highestSidebandHz(const FMParams& params, double tailTolerance = kDefaultTailTolerance);

/// samples[k] = fmSample(params, k / rate) for k < round(duration * rate).
///
/// With AliasPolicy::Reject, throws AliasingError when highestSidebandHz is not
/// below rate / 2. Throws DomainError for nonpositive inputs or more than
/// kMaxRenderSamples samples.
SampledWave renderFMWave(const FMParams& params, double durationSec, int sampleRateHz,
                         AliasPolicy aliasPolicy = AliasPolicy::Reject);

/// Concatenated segments, one per modulation index in `indexGrid` (ascending),
/// each round(segmentDurationSec * rate) samples long. Carrier and modulator
/// phases run on across segment boundaries and the total phase is offset so it
/// is continuous where the index steps.
SampledWave renderFMPath(double carrierHz, double modulatorHz, std::span<const double> indexGrid,
                         double segmentDurationSec, int sampleRateHz,
                         AliasPolicy aliasPolicy = AliasPolicy::Reject);

/// Largest boundary jump of a rendered path: for every boundary, the distance
/// between the first sample of the next segment and the previous segment's
/// formula continued one sample further.
double maxPathBoundaryJump(double carrierHz, double modulatorHz, std::span<const double> indexGrid,
                           double segmentDurationSec, int sampleRateHz, const SampledWave& rendered);

/// Lines below this amplitude are not reported by analyzeHarmonics.
inline constexpr double kHarmonicAmplitudeFloor = 1e-6;

/// Projects the wave onto sin/cos at n f (n = 1..maxHarmonic) over the longest
/// prefix spanning a whole number of fundamental periods, preferring windows
/// whose length in samples is exact. dcTerm is the mean over that window.
///
/// Throws DomainError if the wave spans fewer than 10 periods or if
/// maxHarmonic * f is not below Nyquist.
LineSpectrum analyzeHarmonics(const SampledWave& wave, double fundamentalHz, int maxHarmonic);

/// Number of samples analyzeHarmonics projects over.
std::size_t harmonicWindowLength(std::size_t available, int sampleRateHz, double fundamentalHz);

/// Samplewise sum; rates and lengths must match.
SampledWave superpose(const SampledWave& a, const SampledWave& b);

}  // namespace timbrecolor
