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

#include "timbrecolor/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "timbrecolor/error.hpp"
#include "timbrecolor/wav.hpp"

namespace timbrecolor {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void writeText(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw Error("write failed: " + path.string());
}

double rgbDistance(SRGBColor a, SRGBColor b) {
    const double dr = double(a.r) - double(b.r);
    const double dg = double(a.g) - double(b.g);
    const double db = double(a.b) - double(b.b);
    return std::sqrt(dr * dr + dg * dg + db * db);
}

void validate(const FmPathConfig& c) {
    if (!(c.carrierHz > 0.0) || !(c.modulatorHz > 0.0)) {
        throw DomainError("carrier and modulator frequencies must be positive");
    }
    if (!(c.indexStart >= 0.0) || !(c.indexStart <= c.indexEnd)) {
        throw DomainError("need 0 <= index start <= index end");
    }
    if (!(c.indexStep > 0.0)) {
        throw DomainError("index step must be positive");
    }
    if (c.sampleRateHz <= 0) {
        throw DomainError("sample rate must be positive");
    }
    if (!(c.segmentDurationSec > 0.0)) {
        throw DomainError("segment duration must be positive");
    }
}

}  // namespace

std::uint8_t toChannel(double v) {
    return static_cast<std::uint8_t>(std::floor(std::clamp(v, 0.0, 1.0) * 255.0 + 0.5));
}

std::vector<double> indexGrid(double start, double end, double step) {
    if (!(step > 0.0) || !(start <= end)) {
        throw DomainError("index grid needs start <= end and a positive step");
    }
    const double span = (end - start) / step;
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9 * std::max(1.0, span))) + 1;
    std::vector<double> grid(count);
    for (std::size_t n = 0; n < count; ++n) {
        grid[n] = start + static_cast<double>(n) * step;
    }
    return grid;
}

OctaveMap makeOctaveMap(double baseHz, bool flipOrientation) {
    return OctaveMap(baseHz, flipOrientation ? OctaveMap::Orientation::PitchUpToRed
                                             : OctaveMap::Orientation::PitchUpToViolet);
}

FmPathRow fmColor(double carrierHz, double modulatorHz, double index, const OctaveMap& map,
                  const ColorMatchingTable& cmf, double tailTolerance) {
    const auto raw = fmSidebands(carrierHz, modulatorHz, index, tailTolerance);
    const LineSpectrum folded = foldSpectrum(raw);
    FmPathRow row;
    row.index = index;
    row.sidebandOrder = energyTruncationOrder(index, tailTolerance);
    row.highestHz = carrierHz + row.sidebandOrder * modulatorHz;
    for (const auto& line : folded.lines()) row.weightSum += std::fabs(line.amplitude);
    row.xyz = spectrumToXYZ(folded, map, cmf);
    row.rgb = xyzToSRGB(row.xyz);
    return row;
}

std::vector<FmPathRow> fmPathColors(const FmPathConfig& config, const ColorMatchingTable& cmf) {
    validate(config);
    const OctaveMap map = makeOctaveMap(config.octaveBaseHz, config.flipOrientation);
    std::vector<FmPathRow> rows;
    for (double index : indexGrid(config.indexStart, config.indexEnd, config.indexStep)) {
        rows.push_back(fmColor(config.carrierHz, config.modulatorHz, index, map, cmf, config.tailTolerance));
    }
    return rows;
}

std::string formatFmPathCsv(const std::vector<FmPathRow>& rows) {
    std::string out = "I,X,Y,Z,R,G,B\n";
    for (const auto& row : rows) {
        out += fixed6(row.index) + "," + fixed6(row.xyz.x) + "," + fixed6(row.xyz.y) + "," + fixed6(row.xyz.z) +
               "," + std::to_string(row.rgb.r) + "," + std::to_string(row.rgb.g) + "," +
               std::to_string(row.rgb.b) + "\n";
    }
    return out;
}

Image swatchGrid(const std::vector<SRGBColor>& colors, std::size_t columns, std::size_t squarePixels) {
    const std::size_t rows = std::max<std::size_t>(1, (colors.size() + columns - 1) / columns);
    const std::size_t cols = std::min(columns, std::max<std::size_t>(1, colors.size()));
    Image image(cols * squarePixels, rows * squarePixels);
    for (std::size_t i = 0; i < colors.size(); ++i) {
        image.fillRect((i % columns) * squarePixels, (i / columns) * squarePixels, squarePixels, squarePixels,
                       colors[i]);
    }
    return image;
}

FmPathResult runFmPath(const FmPathConfig& config, const ColorMatchingTable& cmf) {
    FmPathResult result;
    result.rows = fmPathColors(config, cmf);

    std::vector<double> grid;
    std::vector<SRGBColor> colors;
    for (const auto& row : result.rows) {
        grid.push_back(row.index);
        colors.push_back(row.rgb);
        if (row.highestHz >= config.sampleRateHz / 2.0) ++result.indicesAboveNyquist;
    }
    const SampledWave wave = renderFMPath(config.carrierHz, config.modulatorHz, grid, config.segmentDurationSec,
                                          config.sampleRateHz, AliasPolicy::Allow);
    result.audioSamples = wave.samples.size();
    result.audioSeconds = wave.durationSec();
    result.maxBoundaryJump = maxPathBoundaryJump(config.carrierHz, config.modulatorHz, grid,
                                                 config.segmentDurationSec, config.sampleRateHz, wave);

    std::array<int, 3> lo{255, 255, 255};
    std::array<int, 3> hi{0, 0, 0};
    for (std::size_t i = 0; i < colors.size(); ++i) {
        const std::array<int, 3> c{colors[i].r, colors[i].g, colors[i].b};
        for (std::size_t k = 0; k < 3; ++k) {
            lo[k] = std::min(lo[k], c[k]);
            hi[k] = std::max(hi[k], c[k]);
        }
        if (i > 0) {
            result.maxAdjacentRgbDistance = std::max(result.maxAdjacentRgbDistance, rgbDistance(colors[i - 1], colors[i]));
        }
    }
    result.rgbSpan = std::sqrt(double((hi[0] - lo[0]) * (hi[0] - lo[0]) + (hi[1] - lo[1]) * (hi[1] - lo[1]) +
                                      (hi[2] - lo[2]) * (hi[2] - lo[2])));

    writeWav(wave, config.outWav);
    writePpm(swatchGrid(colors), config.outImg);
    writeText(config.outCsv, formatFmPathCsv(result.rows));

    std::string log = "command fm-path\n";
    log += "carrier_hz " + fixed6(config.carrierHz) + "\nmodulator_hz " + fixed6(config.modulatorHz) + "\n";
    log += "index_start " + fixed6(config.indexStart) + "\nindex_end " + fixed6(config.indexEnd) +
           "\nindex_step " + fixed6(config.indexStep) + "\n";
    log += "octave_base_hz " + fixed6(config.octaveBaseHz) + "\norientation " +
           (config.flipOrientation ? "pitch-up-to-red" : "pitch-up-to-violet") + "\n";
    log += "sample_rate_hz " + std::to_string(config.sampleRateHz) + "\nsegment_duration_s " +
           fixed6(config.segmentDurationSec) + "\n";
    char tail[32];
    std::snprintf(tail, sizeof tail, "%g", config.tailTolerance);
    log += std::string("tail_tolerance ") + tail + "\n";
    log += "grid_values " + std::to_string(result.rows.size()) + "\n";
    log += "audio_samples " + std::to_string(result.audioSamples) + "\naudio_seconds " +
           fixed6(result.audioSeconds) + "\n";
    log += "indices_with_sidebands_above_nyquist " + std::to_string(result.indicesAboveNyquist) + "\n";
    log += "max_boundary_jump " + fixed6(result.maxBoundaryJump) + "\n";
    log += "max_adjacent_rgb_distance " + fixed6(result.maxAdjacentRgbDistance) + "\n";
    log += "rgb_span " + fixed6(result.rgbSpan) + "\n";
    log += "# I N highest_sideband_hz weight_sum R G B\n";
    for (const auto& row : result.rows) {
        log += fixed6(row.index) + " " + std::to_string(row.sidebandOrder) + " " + fixed6(row.highestHz) + " " +
               fixed6(row.weightSum) + " " + std::to_string(row.rgb.r) + " " + std::to_string(row.rgb.g) + " " +
               std::to_string(row.rgb.b) + "\n";
    }
    writeText(config.outLog, log);
    return result;
}

Wav2ColorResult waveColor(const SampledWave& wave, double fundamentalHz, int maxHarmonic, const OctaveMap& map,
                          const ColorMatchingTable& cmf) {
    if (maxHarmonic == 0) {
        if (!(fundamentalHz > 0.0)) throw DomainError("fundamental must be positive");
        const double nyquist = wave.sampleRateHz / 2.0;
        maxHarmonic = static_cast<int>(std::ceil(nyquist / fundamentalHz)) - 1;
        if (maxHarmonic < 1) {
            throw DomainError("fundamental " + std::to_string(fundamentalHz) + " Hz is not below Nyquist");
        }
    }
    Wav2ColorResult result;
    result.spectrum = analyzeHarmonics(wave, fundamentalHz, maxHarmonic);
    result.xyz = spectrumToXYZ(result.spectrum, map, cmf);
    result.rgb = xyzToSRGB(result.xyz);
    return result;
}

std::string formatWav2ColorCsv(const Wav2ColorResult& result, const OctaveMap& map, const ColorMatchingTable& cmf) {
    std::string out = "kind,frequency,amplitude,phase,wavelength,X,Y,Z,R,G,B\n";
    out += "dc,0.000000," + fixed6(result.spectrum.dcTerm()) + ",,,,,,,,\n";
    for (const auto& line : result.spectrum.lines()) {
        const double lambda = freqToWavelength(octaveReduce(line.frequency, map), map);
        const XYZColor c = wavelengthToXYZ(lambda, cmf);
        out += "line," + fixed6(line.frequency) + "," + fixed6(line.amplitude) + "," + fixed6(line.phase) + "," +
               fixed6(lambda) + "," + fixed6(c.x) + "," + fixed6(c.y) + "," + fixed6(c.z) + ",,,\n";
    }
    out += "color,,,,," + fixed6(result.xyz.x) + "," + fixed6(result.xyz.y) + "," + fixed6(result.xyz.z) + "," +
           std::to_string(result.rgb.r) + "," + std::to_string(result.rgb.g) + "," + std::to_string(result.rgb.b) +
           "\n";
    return out;
}

Wav2ColorResult runWav2Color(const Wav2ColorConfig& config, const ColorMatchingTable& cmf) {
    const OctaveMap map = makeOctaveMap(config.octaveBaseHz, config.flipOrientation);
    const SampledWave wave = readWav(config.inputWav);
    Wav2ColorResult result = waveColor(wave, config.fundamentalHz, config.maxHarmonic, map, cmf);
    writePpm(Image(config.swatchPixels, config.swatchPixels, result.rgb), config.outImg);
    writeText(config.outCsv, formatWav2ColorCsv(result, map, cmf));
    return result;
}

gesture::PointMap intensityMap(SRGBColor baseColor) {
    const double r = baseColor.r / 255.0;
    const double g = baseColor.g / 255.0;
    const double b = baseColor.b / 255.0;
    return [r, g, b](std::span<const double> p) -> gesture::Point {
        if (p.size() != 2) {
            throw DomainError("intensity map expects (time, amplitude) points");
        }
        const double a = p[1];
        if (!(a >= 0.0 && a <= 1.0)) {
            throw DomainError("amplitude " + std::to_string(a) + " outside [0, 1]");
        }
        return {p[0], a * r, a * g, a * b};
    };
}

SRGBColor colorAtTime(const gesture::Gesture& colorGesture, double t) {
    if (colorGesture.dimension() != 4) {
        throw DomainError("colour gesture points must be (t, r, g, b)");
    }
    const gesture::SampledPath* last = nullptr;
    for (const auto& path : colorGesture.arrowPaths()) {
        last = &path;
        if (t > path.back()[0]) continue;
        for (std::size_t i = 1; i < path.size(); ++i) {
            const auto p = path.point(i - 1);
            const auto q = path.point(i);
            if (t <= q[0]) {
                const double s = q[0] > p[0] ? std::clamp((t - p[0]) / (q[0] - p[0]), 0.0, 1.0) : 1.0;
                return {toChannel(p[1] + s * (q[1] - p[1])), toChannel(p[2] + s * (q[2] - p[2])),
                        toChannel(p[3] + s * (q[3] - p[3]))};
            }
        }
    }
    if (last == nullptr) {
        const auto& v = colorGesture.vertexPoints().front();
        return {toChannel(v[1]), toChannel(v[2]), toChannel(v[3])};
    }
    const auto end = last->back();
    return {toChannel(end[1]), toChannel(end[2]), toChannel(end[3])};
}

Image envelopeStrip(const gesture::Gesture& colorGesture, std::size_t width, std::size_t height) {
    if (width < 2 || height < 1) {
        throw DomainError("strip needs width >= 2 and height >= 1");
    }
    double endTime = 0.0;
    for (const auto& v : colorGesture.vertexPoints()) endTime = std::max(endTime, v[0]);
    Image image(width, height);
    for (std::size_t x = 0; x < width; ++x) {
        const double t = endTime * static_cast<double>(x) / static_cast<double>(width - 1);
        image.fillRect(x, 0, 1, height, colorAtTime(colorGesture, t));
    }
    return image;
}

EnvelopeResult envelopeTransfer(const EnvelopeConfig& config) {
    gesture::Gesture amplitude = gesture::adsrGesture(config.adsr, config.samplesPerSegment);
    gesture::Gesture color = gesture::mapGesture(intensityMap(config.baseColor), amplitude);
    Image strip = envelopeStrip(color, config.stripWidth, config.stripHeight);
    return {std::move(amplitude), std::move(color), std::move(strip)};
}

EnvelopeResult runEnvelopeTransfer(const EnvelopeConfig& config) {
    EnvelopeResult result = envelopeTransfer(config);
    writeText(config.outGesture, gesture::serializeGesture(result.colorGesture));
    writePpm(result.strip, config.outImg);
    return result;
}

}  // namespace timbrecolor
