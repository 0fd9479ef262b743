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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "timbrecolor/spectrum.hpp"

namespace timbrecolor {

struct XYZColor {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const XYZColor&) const = default;
};

struct SRGBColor {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const SRGBColor&) const = default;
};

/// Tabulated CIE 1931 colour matching functions on a 5 nm grid over [380, 780].
class ColorMatchingTable {
public:
    struct Entry {
        double wavelength;
        double xbar;
        double ybar;
        double zbar;
    };

    static constexpr double kMinWavelength = 380.0;
    static constexpr double kMaxWavelength = 780.0;
    static constexpr double kStep = 5.0;
    static constexpr std::size_t kRows = 81;

    const std::vector<Entry>& entries() const noexcept { return entries_; }

    /// Column sums of xbar, ybar and zbar.
    XYZColor columnSums() const;

private:
    friend ColorMatchingTable loadCMF(std::string_view tableText);
    std::vector<Entry> entries_;
};

/// Parses "wavelength xbar ybar zbar" rows; blank lines and '#' comments are
/// skipped. Throws FormatError (carrying the line number) on a malformed row, a
/// negative value, a wavelength off the 5 nm grid or a gap in [380, 780].
ColorMatchingTable loadCMF(std::string_view tableText);

/// Contents of data/cie1931_2deg_5nm.txt, compiled into the library.
std::string_view builtinCmfText() noexcept;

/// The CIE 1931 2-degree observer parsed from builtinCmfText().
const ColorMatchingTable& standardObserver();

/// Linear interpolation of the table at `lambdaNm` in [380, 780].
XYZColor wavelengthToXYZ(double lambdaNm, const ColorMatchingTable& cmf);

/// A musical octave [f, 2f] matched against the colour octave [380, 760] nm.
class OctaveMap {
public:
    enum class Orientation {
        /// f -> 760 nm, 2f -> 380 nm: rising pitch runs red to violet.
        PitchUpToViolet,
        /// f -> 380 nm, 2f -> 760 nm.
        PitchUpToRed,
    };

    static constexpr double kDefaultBaseHz = 440.0;

    explicit OctaveMap(double baseFrequencyHz = kDefaultBaseHz,
                       Orientation orientation = Orientation::PitchUpToViolet);

    double baseFrequency() const noexcept { return base_; }
    Orientation orientation() const noexcept { return orientation_; }

private:
    double base_;
    Orientation orientation_;
};

/// g * 2^k in [f, 2f) for the unique integer k.
double octaveReduce(double frequencyHz, const OctaveMap& map);

/// Wavelength in [380, 760] nm for g in [f, 2f]. The default orientation is
/// 760 f / g. The flipped one mirrors the spatial frequency 1/lambda inside the
/// colour octave, giving 760 f / (3 f - g). Throws DomainError outside [f, 2f].
double freqToWavelength(double frequencyHz, const OctaveMap& map);

/// Identity inside [0,1]^3, otherwise divide by the largest component and
/// clamp negatives to zero.
XYZColor projectToCube(const XYZColor& raw);

/// Weighted mean of XYZ(h(f_n)) with weights |a_n|, before projection. The
/// constant term and the phases do not take part.
XYZColor spectrumToXYZUnprojected(const LineSpectrum& spectrum, const OctaveMap& map,
                                  const ColorMatchingTable& cmf);

/// projectToCube(spectrumToXYZUnprojected(...)). Throws DegenerateSpectrumError
/// when every amplitude is zero.
XYZColor spectrumToXYZ(const LineSpectrum& spectrum, const OctaveMap& map,
                       const ColorMatchingTable& cmf);

/// XYZ -> linear sRGB (D65) coefficients, IEC 61966-2-1.
inline constexpr std::array<std::array<double, 3>, 3> kXyzToLinearSrgb{{
    {{3.2406, -1.5372, -0.4986}},
    {{-0.9689, 1.8758, 0.0415}},
    {{0.0557, -0.2040, 1.0570}},
}};

/// sRGB electro-optical transfer inverse (linear -> encoded), for c in [0, 1].
double srgbEncode(double linear);

/// Matrix, clamp to [0,1], transfer curve, 8-bit quantisation (round half up).
SRGBColor xyzToSRGB(const XYZColor& xyz);

/// "#rrggbb" style parsing without the '#'. Throws FormatError.
SRGBColor parseHexColor(std::string_view hex);
std::string toHex(const SRGBColor& color);

}  // namespace timbrecolor
