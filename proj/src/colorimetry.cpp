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

#include "timbrecolor/colorimetry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "timbrecolor/error.hpp"

namespace timbrecolor {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parseNumber(std::string_view token, std::size_t lineNo) {
    double value = 0.0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw FormatError("not a number: '" + std::string(token) + "'", lineNo);
    }
    return value;
}

}  // namespace

XYZColor ColorMatchingTable::columnSums() const {
    XYZColor sum;
    for (const auto& e : entries_) {
        sum.x += e.xbar;
        sum.y += e.ybar;
        sum.z += e.zbar;
    }
    return sum;
}

ColorMatchingTable loadCMF(std::string_view tableText) {
    ColorMatchingTable table;
    std::size_t lineNo = 0;
    std::size_t pos = 0;
    while (pos <= tableText.size()) {
        const auto eol = std::min(tableText.find('\n', pos), tableText.size());
        std::string_view line = tableText.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineNo;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        std::array<double, 4> cols{};
        std::size_t count = 0;
        while (!line.empty()) {
            const auto split = line.find_first_of(" \t");
            const auto token = line.substr(0, split);
            if (count == cols.size()) {
                throw FormatError("expected 4 columns, found more", lineNo);
            }
            cols[count++] = parseNumber(token, lineNo);
            line = split == std::string_view::npos ? std::string_view{} : trim(line.substr(split));
        }
        if (count != cols.size()) {
            throw FormatError("expected 4 columns, found " + std::to_string(count), lineNo);
        }
        if (cols[1] < 0.0 || cols[2] < 0.0 || cols[3] < 0.0) {
            throw FormatError("negative sensitivity value", lineNo);
        }
        const double expected = ColorMatchingTable::kMinWavelength +
                                ColorMatchingTable::kStep * static_cast<double>(table.entries_.size());
        if (cols[0] != expected) {
            if (cols[0] > expected && expected <= ColorMatchingTable::kMaxWavelength) {
                throw FormatError("domain gap: expected " + std::to_string(static_cast<int>(expected)) +
                                      " nm, found " + std::to_string(cols[0]),
                                  lineNo);
            }
            throw FormatError("wavelength " + std::to_string(cols[0]) +
                                  " is out of order or off the 5 nm grid over [380, 780]",
                              lineNo);
        }
        table.entries_.push_back({cols[0], cols[1], cols[2], cols[3]});
    }
    if (table.entries_.size() != ColorMatchingTable::kRows) {
        const double missing = ColorMatchingTable::kMinWavelength +
                               ColorMatchingTable::kStep * static_cast<double>(table.entries_.size());
        throw FormatError("domain gap: table ends before " + std::to_string(static_cast<int>(missing)) +
                              " nm (need 380..780 nm)",
                          lineNo);
    }
    return table;
}

const ColorMatchingTable& standardObserver() {
    static const ColorMatchingTable table = loadCMF(builtinCmfText());
    return table;
}

XYZColor wavelengthToXYZ(double lambdaNm, const ColorMatchingTable& cmf) {
    if (!(lambdaNm >= ColorMatchingTable::kMinWavelength && lambdaNm <= ColorMatchingTable::kMaxWavelength)) {
        throw DomainError("wavelength " + std::to_string(lambdaNm) + " nm outside [380, 780]");
    }
    const auto& rows = cmf.entries();
    const double offset = (lambdaNm - ColorMatchingTable::kMinWavelength) / ColorMatchingTable::kStep;
    const auto lower = std::min(static_cast<std::size_t>(offset), rows.size() - 1);
    const double t = offset - static_cast<double>(lower);
    if (t == 0.0) {
        return {rows[lower].xbar, rows[lower].ybar, rows[lower].zbar};
    }
    const auto& a = rows[lower];
    const auto& b = rows[lower + 1];
    return {a.xbar + t * (b.xbar - a.xbar), a.ybar + t * (b.ybar - a.ybar), a.zbar + t * (b.zbar - a.zbar)};
}

OctaveMap::OctaveMap(double baseFrequencyHz, Orientation orientation)
    : base_(baseFrequencyHz), orientation_(orientation) {
    if (!(baseFrequencyHz >= 20.0 && baseFrequencyHz <= 20000.0)) {
        throw DomainError("octave base frequency " + std::to_string(baseFrequencyHz) +
                          " Hz outside [20, 20000]");
    }
}

double octaveReduce(double frequencyHz, const OctaveMap& map) {
    if (!(frequencyHz > 0.0) || !std::isfinite(frequencyHz)) {
        throw DomainError("octaveReduce: frequency must be positive and finite");
    }
    const double base = map.baseFrequency();
    // Scaling by 2 is exact, so g and 2g reduce to the same bits.
    double reduced = frequencyHz;
    while (reduced >= 2.0 * base) reduced *= 0.5;
    while (reduced < base) reduced *= 2.0;
    return reduced;
}

double freqToWavelength(double frequencyHz, const OctaveMap& map) {
    const double f = map.baseFrequency();
    if (!(frequencyHz >= f && frequencyHz <= 2.0 * f)) {
        throw DomainError("freqToWavelength: " + std::to_string(frequencyHz) + " Hz outside the octave [" +
                          std::to_string(f) + ", " + std::to_string(2.0 * f) + "]");
    }
    if (map.orientation() == OctaveMap::Orientation::PitchUpToViolet) {
        return 760.0 * f / frequencyHz;
    }
    return 760.0 * f / (3.0 * f - frequencyHz);
}

XYZColor projectToCube(const XYZColor& raw) {
    const double hi = std::max({raw.x, raw.y, raw.z});
    const double lo = std::min({raw.x, raw.y, raw.z});
    if (hi <= 1.0 && lo >= 0.0) {
        return raw;
    }
    if (hi <= 0.0) {
        return {};
    }
    return {std::max(raw.x / hi, 0.0), std::max(raw.y / hi, 0.0), std::max(raw.z / hi, 0.0)};
}

XYZColor spectrumToXYZUnprojected(const LineSpectrum& spectrum, const OctaveMap& map,
                                  const ColorMatchingTable& cmf) {
    XYZColor sum;
    double weight = 0.0;
    for (const auto& line : spectrum.lines()) {
        const double w = std::fabs(line.amplitude);
        if (w == 0.0) continue;
        const XYZColor c = wavelengthToXYZ(freqToWavelength(octaveReduce(line.frequency, map), map), cmf);
        sum.x += w * c.x;
        sum.y += w * c.y;
        sum.z += w * c.z;
        weight += w;
    }
    if (weight == 0.0) {
        throw DegenerateSpectrumError("spectrum has no nonzero partials to colour");
    }
    return {sum.x / weight, sum.y / weight, sum.z / weight};
}

XYZColor spectrumToXYZ(const LineSpectrum& spectrum, const OctaveMap& map, const ColorMatchingTable& cmf) {
    return projectToCube(spectrumToXYZUnprojected(spectrum, map, cmf));
}

double srgbEncode(double linear) {
    if (linear <= 0.0031308) {
        return 12.92 * linear;
    }
    return 1.055 * std::pow(linear, 1.0 / 2.4) - 0.055;
}

SRGBColor xyzToSRGB(const XYZColor& xyz) {
    const std::array<double, 3> in{xyz.x, xyz.y, xyz.z};
    std::array<std::uint8_t, 3> out{};
    for (std::size_t row = 0; row < 3; ++row) {
        double linear = 0.0;
        for (std::size_t col = 0; col < 3; ++col) {
            linear += kXyzToLinearSrgb[row][col] * in[col];
        }
        const double encoded = srgbEncode(std::clamp(linear, 0.0, 1.0));
        out[row] = static_cast<std::uint8_t>(std::clamp(std::floor(encoded * 255.0 + 0.5), 0.0, 255.0));
    }
    return {out[0], out[1], out[2]};
}

SRGBColor parseHexColor(std::string_view hex) {
    if (!hex.empty() && hex.front() == '#') hex.remove_prefix(1);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), value, 16);
    if (hex.size() != 6 || ec != std::errc{} || ptr != hex.data() + hex.size()) {
        throw FormatError("colour must be six hex digits RRGGBB, got '" + std::string(hex) + "'");
    }
    return {static_cast<std::uint8_t>(value >> 16), static_cast<std::uint8_t>((value >> 8) & 0xff),
            static_cast<std::uint8_t>(value & 0xff)};
}

std::string toHex(const SRGBColor& color) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out(6, '0');
    const std::array<std::uint8_t, 3> c{color.r, color.g, color.b};
    for (std::size_t i = 0; i < 3; ++i) {
        out[2 * i] = kDigits[c[i] >> 4];
        out[2 * i + 1] = kDigits[c[i] & 0xf];
    }
    return out;
}

}  // namespace timbrecolor
