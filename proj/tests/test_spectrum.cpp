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
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracle_values.hpp"
#include "test_support.hpp"
#include "timbrecolor/error.hpp"
#include "timbrecolor/spectrum.hpp"
#include "timbrecolor/timbre.hpp"

using namespace timbrecolor;

TEST_CASE("fmSidebands with I = 0 is a pure carrier") {
    const auto raw = fmSidebands(440.0, 880.0, 0.0, 1e-12);
    REQUIRE(raw.size() == 1);
    CHECK(raw[0].frequency == 440.0);
    CHECK(raw[0].amplitude == 1.0);
}

TEST_CASE("fmSidebands puts -J1 at -440 Hz for I = 2") {
    const auto raw = fmSidebands(440.0, 880.0, 2.0, 1e-10);
    const int order = static_cast<int>(raw.size() / 2);
    const auto& minusOne = raw[static_cast<std::size_t>(order - 1)];
    CHECK(minusOne.frequency == -440.0);
    CHECK(minusOne.amplitude == -besselJ(1, 2.0));
    for (std::size_t i = 0; i < raw.size(); ++i) {
        CHECK(raw[i].frequency == 440.0 + (static_cast<int>(i) - order) * 880.0);
    }
}

TEST_CASE("fmSidebands at I = 5 matches the reference Bessel table") {
    const auto raw = fmSidebands(440.0, 880.0, 5.0, 1e-10);
    REQUIRE(raw.size() == oracle::kSidebandAmpsI5.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        CAPTURE(i);
        CHECK(std::fabs(raw[i].amplitude - oracle::kSidebandAmpsI5[i]) < 1e-12);
        CHECK(raw[i].phase == 0.0);
    }
}

TEST_CASE("fmSidebands rejects bad parameters") {
    CHECK_THROWS_AS(fmSidebands(0.0, 880.0, 1.0), DomainError);
    CHECK_THROWS_AS(fmSidebands(440.0, -1.0, 1.0), DomainError);
    CHECK_THROWS_AS(fmSidebands(440.0, 880.0, -1.0), DomainError);
}

TEST_CASE("folding a single positive line changes nothing") {
    const std::vector<SpectralLine> raw{{440.0, 1.0, 0.0}};
    const LineSpectrum folded = foldSpectrum(raw);
    REQUIRE(folded.size() == 1);
    CHECK(folded.lines()[0] == SpectralLine{440.0, 1.0, 0.0});
    CHECK(folded.dcTerm() == 0.0);
}

TEST_CASE("folding flips the sign and merges") {
    const double j0 = besselJ(0, 2.0);
    const double j1 = besselJ(1, 2.0);
    const std::vector<SpectralLine> raw{{-440.0, -j1, 0.0}, {440.0, j0, 0.0}};
    const LineSpectrum folded = foldSpectrum(raw);
    REQUIRE(folded.size() == 1);
    CHECK(folded.lines()[0].frequency == 440.0);
    CHECK(folded.lines()[0].amplitude == doctest::Approx(j0 + j1).epsilon(1e-15));
    CHECK(folded.lines()[0].phase == 0.0);
}

TEST_CASE("folded FM spectrum is sorted, distinct and nonnegative") {
    for (double index : {0.5, 2.0, 5.0, 10.0, 20.0}) {
        for (double ratio : {1.0, 2.0, 0.5, 3.0}) {
            const LineSpectrum folded = foldSpectrum(fmSidebands(440.0, 440.0 * ratio, index));
            for (std::size_t i = 0; i < folded.size(); ++i) {
                CHECK(folded.lines()[i].frequency > 0.0);
                if (i > 0) CHECK(folded.lines()[i].frequency > folded.lines()[i - 1].frequency);
            }
        }
    }
}

TEST_CASE("folding preserves the waveform, merges or not") {
    const double rate = 48000.0;
    for (double ratio : {2.0, 1.0, 0.75, 1.41421356}) {
        for (double index : {1.0, 3.5, 8.0}) {
            const auto raw = fmSidebands(300.0, 300.0 * ratio, index);
            const LineSpectrum folded = foldSpectrum(raw);
            const auto before = renderLines(raw, 0.0, rate, 4800);
            const auto after = renderSpectrum(folded, rate, 4800);
            double worst = 0.0;
            for (std::size_t k = 0; k < before.size(); ++k) worst = std::max(worst, std::fabs(before[k] - after[k]));
            CAPTURE(ratio);
            CAPTURE(index);
            CHECK(worst < 1e-9);
        }
    }
}

TEST_CASE("folding conserves squared amplitude when nothing merges") {
    // fc / fm irrational: fc + n fm never lands on |fc + m fm|.
    const auto raw = fmSidebands(440.0, 440.0 * std::numbers::sqrt2, 4.0);
    const LineSpectrum folded = foldSpectrum(raw);
    REQUIRE(folded.size() == raw.size());
    double two = 0.0;
    double one = folded.dcTerm() * folded.dcTerm();
    for (const auto& l : raw) two += l.amplitude * l.amplitude;
    for (const auto& l : folded.lines()) one += l.amplitude * l.amplitude;
    CHECK(one == doctest::Approx(two).epsilon(1e-14));
}

TEST_CASE("a line landing on 0 Hz is inert") {
    // fc = fm: n = -1 lands on 0 Hz.
    const auto raw = fmSidebands(440.0, 440.0, 2.0);
    const LineSpectrum folded = foldSpectrum(raw);
    CHECK(folded.dcTerm() == 0.0);
    CHECK(folded.lines().front().frequency == 440.0);
}

TEST_CASE("LineSpectrum merges phased lines as phasors") {
    const LineSpectrum s({{100.0, 1.0, 0.0}, {100.0, 1.0, std::numbers::pi / 2}});
    REQUIRE(s.size() == 1);
    CHECK(s.lines()[0].amplitude == doctest::Approx(std::sqrt(2.0)));
    CHECK(s.lines()[0].phase == doctest::Approx(std::numbers::pi / 4));
    CHECK_THROWS_AS(LineSpectrum({{-1.0, 1.0, 0.0}}), DomainError);
}

TEST_CASE("folded I = 2 spectrum matches FFT peaks of the rendered wave") {
    const SampledWave wave = renderFMWave({440.0, 880.0, 2.0}, 1.0, 44100);
    const auto fft = testsupport::fftAmplitudes(wave.samples);
    const LineSpectrum folded = foldSpectrum(fmSidebands(440.0, 880.0, 2.0, 1e-10));
    for (const auto& line : folded.lines()) {
        if (std::fabs(line.amplitude) < 1e-3) continue;
        const auto bin = static_cast<std::size_t>(line.frequency);
        CAPTURE(line.frequency);
        CHECK(std::fabs(fft[bin] - std::fabs(line.amplitude)) <= 1e-3 * std::fabs(line.amplitude));
    }
}
