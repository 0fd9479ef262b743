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

// End-to-end runs behind the command-line tool: the FM index sweep, colour of a
// recorded periodic sound, and transfer of an ADSR envelope to a colour.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "timbrecolor/colorimetry.hpp"
#include "timbrecolor/gesture.hpp"
#include "timbrecolor/ppm.hpp"
#include "timbrecolor/timbre.hpp"

namespace timbrecolor {

/// Swatch grid layout of fm-path images.
inline constexpr std::size_t kGridColumns = 16;
inline constexpr std::size_t kSquarePixels = 32;

struct FmPathConfig {
    double carrierHz = 440.0;
    double modulatorHz = 880.0;
    double indexStart = 0.0;
    double indexEnd = 20.0;
    double indexStep = 0.1;
    double octaveBaseHz = OctaveMap::kDefaultBaseHz;
    int sampleRateHz = 44100;
    double segmentDurationSec = 0.1;
    bool flipOrientation = false;
    double tailTolerance = kDefaultTailTolerance;
    std::filesystem::path outWav = "fm_path.wav";
    std::filesystem::path outImg = "fm_path.ppm";
    std::filesystem::path outCsv = "fm_path.csv";
    std::filesystem::path outLog = "fm_path.log";
};

struct FmPathRow {
    double index = 0.0;
    int sidebandOrder = 0;     // N from the energy tail bound
    double highestHz = 0.0;    // fc + N fm
    double weightSum = 0.0;    // sum of |a_n| over the folded spectrum
    XYZColor xyz;              // projected into the unit cube
    SRGBColor rgb;
};

struct FmPathResult {
    std::vector<FmPathRow> rows;
    std::size_t audioSamples = 0;
    double audioSeconds = 0.0;
    std::size_t indicesAboveNyquist = 0;
    double maxAdjacentRgbDistance = 0.0;
    double rgbSpan = 0.0;  // Euclidean norm of the per-channel ranges
    double maxBoundaryJump = 0.0;
};

/// start, start + step, ... while <= end (with a 1e-9 relative slack on end).
std::vector<double> indexGrid(double start, double end, double step);

OctaveMap makeOctaveMap(double baseHz, bool flipOrientation);

/// Colour of sin(wc t + I sin(wm t)) through the Bessel sideband route.
FmPathRow fmColor(double carrierHz, double modulatorHz, double index, const OctaveMap& map,
                  const ColorMatchingTable& cmf, double tailTolerance = kDefaultTailTolerance);

/// Colour rows only, no I/O.
std::vector<FmPathRow> fmPathColors(const FmPathConfig& config, const ColorMatchingTable& cmf);

/// Header "I,X,Y,Z,R,G,B"; reals with 6 decimals, channels as integers.
std::string formatFmPathCsv(const std::vector<FmPathRow>& rows);

/// One kSquarePixels square per colour, kGridColumns per row, unused cells black.
Image swatchGrid(const std::vector<SRGBColor>& colors, std::size_t columns = kGridColumns,
                 std::size_t squarePixels = kSquarePixels);

/// Validates, renders the audio path, writes WAV, PPM, CSV and the run log.
FmPathResult runFmPath(const FmPathConfig& config, const ColorMatchingTable& cmf = standardObserver());

struct Wav2ColorConfig {
    std::filesystem::path inputWav;
    double fundamentalHz = 440.0;
    int maxHarmonic = 0;  // 0: every harmonic below Nyquist
    double octaveBaseHz = OctaveMap::kDefaultBaseHz;
    bool flipOrientation = false;
    std::size_t swatchPixels = 64;
    std::filesystem::path outImg = "wav2color.ppm";
    std::filesystem::path outCsv = "wav2color.csv";
};

struct Wav2ColorResult {
    LineSpectrum spectrum;
    XYZColor xyz;
    SRGBColor rgb;
};

/// analyzeHarmonics -> spectrumToXYZ -> xyzToSRGB.
Wav2ColorResult waveColor(const SampledWave& wave, double fundamentalHz, int maxHarmonic,
                          const OctaveMap& map, const ColorMatchingTable& cmf);

std::string formatWav2ColorCsv(const Wav2ColorResult& result, const OctaveMap& map,
                               const ColorMatchingTable& cmf);

Wav2ColorResult runWav2Color(const Wav2ColorConfig& config, const ColorMatchingTable& cmf = standardObserver());

struct EnvelopeConfig {
    SRGBColor baseColor{255, 0, 0};
    gesture::AdsrParams adsr;
    std::size_t samplesPerSegment = 32;
    std::size_t stripWidth = 512;
    std::size_t stripHeight = 32;
    std::filesystem::path outGesture = "envelope.gesture";
    std::filesystem::path outImg = "envelope.ppm";
};

/// (t, a) -> (t, a r, a g, a b) with r, g, b the base colour's channels in [0, 1].
gesture::PointMap intensityMap(SRGBColor baseColor);

/// Colour of a (t, r, g, b) gesture at time t, by linear interpolation along the
/// arrow path covering t.
SRGBColor colorAtTime(const gesture::Gesture& colorGesture, double t);

/// Column x shows the colour at t = x * T / (width - 1), T the final time.
Image envelopeStrip(const gesture::Gesture& colorGesture, std::size_t width, std::size_t height);

struct EnvelopeResult {
    gesture::Gesture amplitudeGesture;
    gesture::Gesture colorGesture;
    Image strip;
};

EnvelopeResult envelopeTransfer(const EnvelopeConfig& config);
EnvelopeResult runEnvelopeTransfer(const EnvelopeConfig& config);

/// round-half-up(255 v) for v clamped to [0, 1].
std::uint8_t toChannel(double v);

}  // namespace timbrecolor
