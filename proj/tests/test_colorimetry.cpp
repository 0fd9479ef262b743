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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "oracle_values.hpp"
#include "timbrecolor/colorimetry.hpp"
#include "timbrecolor/error.hpp"

using namespace timbrecolor;

namespace {

std::string tableWithout(double wavelength) {
    std::string out = "# trimmed\n";
    for (const auto& e : standardObserver().entries()) {
        if (e.wavelength == wavelength) continue;
        out += std::to_string(e.wavelength) + " " + std::to_string(e.xbar) + " " + std::to_string(e.ybar) + " " +
               std::to_string(e.zbar) + "\n";
    }
    return out;
}

std::size_t errorLine(const std::string& text) {
    try {
        loadCMF(text);
    } catch (const FormatError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("the shipped table has 81 rows covering 380..780") {
    const auto& cmf = standardObserver();
    REQUIRE(cmf.entries().size() == 81);
    CHECK(cmf.entries().front().wavelength == 380.0);
    CHECK(cmf.entries().back().wavelength == 780.0);
    for (const auto& e : cmf.entries()) {
        CHECK(e.xbar >= 0.0);
        CHECK(e.ybar >= 0.0);
        CHECK(e.zbar >= 0.0);
    }
}

TEST_CASE("ybar peaks at 555 nm") {
    const auto& rows = standardObserver().entries();
    const auto peak = std::max_element(rows.begin(), rows.end(),
                                       [](const auto& a, const auto& b) { return a.ybar < b.ybar; });
    CHECK(peak->wavelength == oracle::kYbarPeakNm);
}

TEST_CASE("loadCMF reports gaps and malformed rows with line numbers") {
    CHECK_THROWS_WITH_AS(loadCMF(tableWithout(780.0)), doctest::Contains("domain gap"), FormatError);
    CHECK_THROWS_WITH_AS(loadCMF(tableWithout(500.0)), doctest::Contains("domain gap"), FormatError);
    CHECK(errorLine(tableWithout(500.0)) == 2 + 24);

    std::string text(builtinCmfText());
    const auto at = text.find("\n400 ");
    std::string bad = text;
    bad.replace(at + 1, 3, "40x");
    CHECK_THROWS_WITH_AS(loadCMF(bad), doctest::Contains("not a number"), FormatError);
    CHECK(errorLine(bad) == 3 + 1 + 4);

    std::string negative = text;
    const auto row = negative.find("\n600 ");
    negative.insert(negative.find(' ', row + 1) + 1, "-");
    CHECK_THROWS_WITH_AS(loadCMF(negative), doctest::Contains("negative"), FormatError);

    CHECK_THROWS_AS(loadCMF("380 1 2\n"), FormatError);
    CHECK_THROWS_AS(loadCMF(""), FormatError);
}

TEST_CASE("wavelengthToXYZ interpolates linearly between rows") {
    const auto& cmf = standardObserver();
    const auto& rows = cmf.entries();
    for (std::size_t i = 0; i < rows.size(); i += 7) {
        const XYZColor c = wavelengthToXYZ(rows[i].wavelength, cmf);
        CHECK(c == XYZColor{rows[i].xbar, rows[i].ybar, rows[i].zbar});
    }
    const XYZColor mid = wavelengthToXYZ(382.5, cmf);
    CHECK(mid.x == doctest::Approx((rows[0].xbar + rows[1].xbar) / 2).epsilon(1e-15));
    CHECK(mid.y == doctest::Approx((rows[0].ybar + rows[1].ybar) / 2).epsilon(1e-15));
    CHECK(mid.z == doctest::Approx((rows[0].zbar + rows[1].zbar) / 2).epsilon(1e-15));
    CHECK(wavelengthToXYZ(555.0, cmf).y == 1.0);
    CHECK_THROWS_AS(wavelengthToXYZ(379.9, cmf), DomainError);
    CHECK_THROWS_AS(wavelengthToXYZ(780.1, cmf), DomainError);
}

TEST_CASE("octaveReduce lands in [f, 2f)") {
    const OctaveMap map(440.0);
    CHECK(octaveReduce(440.0, map) == 440.0);
    CHECK(octaveReduce(1760.0, map) == 440.0);
    CHECK(octaveReduce(880.0, map) == 440.0);
    CHECK(octaveReduce(660.0, map) == 660.0);
    CHECK(octaveReduce(330.0, map) == 660.0);
    CHECK_THROWS_AS(octaveReduce(0.0, map), DomainError);
    CHECK_THROWS_AS(octaveReduce(-5.0, map), DomainError);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(20.0, 20000.0);
    for (int i = 0; i < 1000; ++i) {
        const double g = dist(rng);
        const double r = octaveReduce(g, map);
        CHECK(r >= 440.0);
        CHECK(r < 880.0);
        CHECK(octaveReduce(2.0 * g, map) == r);
    }
}

TEST_CASE("freqToWavelength endpoints and formula") {
    const OctaveMap map(440.0);
    CHECK(freqToWavelength(440.0, map) == 760.0);
    CHECK(freqToWavelength(880.0, map) == 380.0);
    CHECK(freqToWavelength(660.0, map) == doctest::Approx(506.67).epsilon(1e-5));
    CHECK_THROWS_AS(freqToWavelength(439.0, map), DomainError);
    CHECK_THROWS_AS(freqToWavelength(881.0, map), DomainError);

    double previous = 761.0;
    for (double g = 440.0; g <= 880.0; g += 3.3) {
        const double lambda = freqToWavelength(g, map);
        CHECK(lambda < previous);
        previous = lambda;
    }
}

TEST_CASE("flipped orientation reverses the endpoints") {
    const OctaveMap flipped(440.0, OctaveMap::Orientation::PitchUpToRed);
    CHECK(freqToWavelength(440.0, flipped) == 380.0);
    CHECK(freqToWavelength(880.0, flipped) == 760.0);
    double previous = 379.0;
    for (double g = 440.0; g <= 880.0; g += 3.3) {
        const double lambda = freqToWavelength(g, flipped);
        CHECK(lambda > previous);
        previous = lambda;
    }
}

TEST_CASE("OctaveMap base must be audible") {
    CHECK_THROWS_AS(OctaveMap(10.0), DomainError);
    CHECK_THROWS_AS(OctaveMap(30000.0), DomainError);
}

TEST_CASE("projectToCube") {
    CHECK(projectToCube({0.2, 0.5, 0.1}) == XYZColor{0.2, 0.5, 0.1});
    CHECK(projectToCube({2.0, 1.0, 0.5}) == XYZColor{1.0, 0.5, 0.25});
    CHECK(projectToCube({0.0, 0.0, 0.0}) == XYZColor{0.0, 0.0, 0.0});
    CHECK(projectToCube({4.0, -1.0, 2.0}) == XYZColor{1.0, 0.0, 0.5});
}

TEST_CASE("spectrumToXYZ of one line is that wavelength's row") {
    const auto& cmf = standardObserver();
    const OctaveMap map(440.0);
    const LineSpectrum one({{440.0, 1.0, 0.0}});
    CHECK(spectrumToXYZ(one, map, cmf) == projectToCube(wavelengthToXYZ(760.0, cmf)));

    // 880 Hz reduces to 440 Hz, so both lines land on 760 nm.
    const LineSpectrum two({{440.0, 1.0, 0.0}, {880.0, 1.0, 0.0}});
    CHECK(spectrumToXYZ(two, map, cmf) == projectToCube(wavelengthToXYZ(760.0, cmf)));

    const XYZColor a = wavelengthToXYZ(760.0, cmf);
    const LineSpectrum spread({{440.0, 1.0, 0.0}, {879.0, 1.0, 0.0}});
    const XYZColor c = wavelengthToXYZ(760.0 * 440.0 / 879.0, cmf);
    const XYZColor mean = spectrumToXYZ(spread, map, cmf);
    CHECK(mean.x == doctest::Approx((a.x + c.x) / 2).epsilon(1e-14));
    CHECK(mean.y == doctest::Approx((a.y + c.y) / 2).epsilon(1e-14));
    CHECK(mean.z == doctest::Approx((a.z + c.z) / 2).epsilon(1e-14));
}

TEST_CASE("spectrumToXYZ of the folded I = 2 FM spectrum matches the brute-force sum") {
    const auto& cmf = standardObserver();
    const XYZColor raw =
        spectrumToXYZUnprojected(foldSpectrum(fmSidebands(440.0, 880.0, 2.0, 1e-10)), OctaveMap(440.0), cmf);
    CHECK(std::fabs(raw.x - oracle::kFmI2RawXyz[0]) < 1e-9);
    CHECK(std::fabs(raw.y - oracle::kFmI2RawXyz[1]) < 1e-9);
    CHECK(std::fabs(raw.z - oracle::kFmI2RawXyz[2]) < 1e-9);
}

TEST_CASE("spectrumToXYZ ignores scale, sign and phase, and lies in the hull") {
    const auto& cmf = standardObserver();
    const OctaveMap map(440.0);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> freq(20.0, 20000.0);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<SpectralLine> lines;
        std::vector<SpectralLine> scaled;
        for (int i = 0; i < 6; ++i) {
            const double f = freq(rng);
            const double a = amp(rng);
            lines.push_back({f, a, 0.0});
            scaled.push_back({f, -3.5 * a, 1.0});
        }
        const XYZColor base = spectrumToXYZUnprojected(LineSpectrum(lines), map, cmf);
        const XYZColor other = spectrumToXYZUnprojected(LineSpectrum(scaled), map, cmf);
        CHECK(other.x == doctest::Approx(base.x).epsilon(1e-12));
        CHECK(other.y == doctest::Approx(base.y).epsilon(1e-12));
        CHECK(other.z == doctest::Approx(base.z).epsilon(1e-12));

        XYZColor lo{1e9, 1e9, 1e9};
        XYZColor hi{-1e9, -1e9, -1e9};
        for (const auto& l : lines) {
            const XYZColor c = wavelengthToXYZ(freqToWavelength(octaveReduce(l.frequency, map), map), cmf);
            lo = {std::min(lo.x, c.x), std::min(lo.y, c.y), std::min(lo.z, c.z)};
            hi = {std::max(hi.x, c.x), std::max(hi.y, c.y), std::max(hi.z, c.z)};
        }
        CHECK(base.x >= lo.x - 1e-15);
        CHECK(base.x <= hi.x + 1e-15);
        CHECK(base.y >= lo.y - 1e-15);
        CHECK(base.y <= hi.y + 1e-15);
    }
}

TEST_CASE("spectrumToXYZ rejects a silent spectrum") {
    const auto& cmf = standardObserver();
    CHECK_THROWS_AS(spectrumToXYZ(LineSpectrum({}, 0.0), OctaveMap(), cmf), DegenerateSpectrumError);
    CHECK_THROWS_AS(spectrumToXYZ(LineSpectrum({{440.0, 0.0, 0.0}}, 0.3), OctaveMap(), cmf),
                    DegenerateSpectrumError);
}

TEST_CASE("xyzToSRGB reference points") {
    CHECK(xyzToSRGB({0.0, 0.0, 0.0}) == SRGBColor{0, 0, 0});

    const double m = 1.08883;
    const SRGBColor white = xyzToSRGB({0.95047 / m, 1.0 / m, 1.08883 / m});
    CHECK(white == SRGBColor{static_cast<std::uint8_t>(oracle::kD65Srgb[0]),
                             static_cast<std::uint8_t>(oracle::kD65Srgb[1]),
                             static_cast<std::uint8_t>(oracle::kD65Srgb[2])});
    CHECK(std::abs(int(white.r) - int(white.g)) <= 1);
    CHECK(std::abs(int(white.g) - int(white.b)) <= 1);

    const SRGBColor unit = xyzToSRGB({1.0, 1.0, 1.0});
    CHECK(unit.r >= 230);
    CHECK(unit.g >= 230);
    CHECK(unit.b >= 230);
    CHECK(int(unit.r) == oracle::kUnitCubeSrgb[0]);
    CHECK(int(unit.g) == oracle::kUnitCubeSrgb[1]);
    CHECK(int(unit.b) == oracle::kUnitCubeSrgb[2]);
}

TEST_CASE("sRGB encoding is monotone") {
    double previous = -1.0;
    for (int i = 0; i <= 10000; ++i) {
        const double v = srgbEncode(i / 10000.0);
        CHECK(v > previous);
        previous = v;
    }
    CHECK(srgbEncode(0.0031308) == doctest::Approx(12.92 * 0.0031308));
    CHECK(srgbEncode(1.0) == doctest::Approx(1.0));
}

TEST_CASE("hex colours") {
    CHECK(parseHexColor("ff8000") == SRGBColor{255, 128, 0});
    CHECK(parseHexColor("#0A0b0C") == SRGBColor{10, 11, 12});
    CHECK(toHex({255, 128, 0}) == "ff8000");
    CHECK_THROWS_AS(parseHexColor("ff80"), FormatError);
    CHECK_THROWS_AS(parseHexColor("gg0000"), FormatError);
}
