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

// timbrecolor: FM index sweeps, wave-to-colour analysis and envelope transfer.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"
#include "timbrecolor/error.hpp"
#include "timbrecolor/pipeline.hpp"
#include "timbrecolor/simd.hpp"

namespace {

using namespace timbrecolor;

ColorMatchingTable loadTable(const std::string& path) {
    if (path.empty()) return standardObserver();
    std::ifstream in(path);
    if (!in) throw Error("cannot open CMF table " + path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return loadCMF(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Timbre to colour: FM sweeps, harmonic analysis and ADSR transfer"};
    app.set_config("--config", "", "key=value file with one [subcommand] section per command; flags override it");
    app.require_subcommand(1);

    std::string cmfPath;
    app.add_option("--cmf", cmfPath, "colour matching table (defaults to the built-in CIE 1931 2 degree observer)");
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "print run summary and SIMD kernel choice");

    FmPathConfig fm;
    std::string fmWav = fm.outWav.string(), fmImg = fm.outImg.string(), fmCsv = fm.outCsv.string(),
                fmLog = fm.outLog.string();
    auto* fmCmd = app.add_subcommand("fm-path", "sweep the modulation index and colour every step");
    fmCmd->add_option("--fc", fm.carrierHz, "carrier frequency (Hz)")->capture_default_str();
    fmCmd->add_option("--fm", fm.modulatorHz, "modulator frequency (Hz)")->capture_default_str();
    fmCmd->add_option("--i-start", fm.indexStart, "first modulation index")->capture_default_str();
    fmCmd->add_option("--i-end", fm.indexEnd, "last modulation index")->capture_default_str();
    fmCmd->add_option("--i-step", fm.indexStep, "index step")->capture_default_str();
    fmCmd->add_option("--base", fm.octaveBaseHz, "octave base frequency f of [f, 2f] (Hz)")->capture_default_str();
    fmCmd->add_option("--rate", fm.sampleRateHz, "sample rate (Hz)")->capture_default_str();
    fmCmd->add_option("--seg-dur", fm.segmentDurationSec, "audio seconds per index value")->capture_default_str();
    fmCmd->add_flag("--flip-orientation", fm.flipOrientation, "map rising pitch from violet to red");
    fmCmd->add_option("--out-wav", fmWav, "audio output")->capture_default_str();
    fmCmd->add_option("--out-img", fmImg, "PPM swatch grid output")->capture_default_str();
    fmCmd->add_option("--out-csv", fmCsv, "CSV output")->capture_default_str();
    fmCmd->add_option("--out-log", fmLog, "run log output")->capture_default_str();

    Wav2ColorConfig w2c;
    std::string w2cIn, w2cImg = w2c.outImg.string(), w2cCsv = w2c.outCsv.string();
    auto* w2cCmd = app.add_subcommand("wav2color", "colour of a periodic 16-bit mono PCM recording");
    w2cCmd->add_option("--in", w2cIn, "input WAV")->required();
    w2cCmd->add_option("--fundamental", w2c.fundamentalHz, "fundamental frequency (Hz)")->required();
    w2cCmd->add_option("--max-harmonic", w2c.maxHarmonic, "highest harmonic (0: all below Nyquist)")
        ->capture_default_str();
    w2cCmd->add_option("--base", w2c.octaveBaseHz, "octave base frequency (Hz)")->capture_default_str();
    w2cCmd->add_flag("--flip-orientation", w2c.flipOrientation, "map rising pitch from violet to red");
    w2cCmd->add_option("--out-img", w2cImg, "PPM swatch output")->capture_default_str();
    w2cCmd->add_option("--out-csv", w2cCsv, "CSV output")->capture_default_str();

    EnvelopeConfig env;
    std::string envColor = "ff0000", envGesture = env.outGesture.string(), envImg = env.outImg.string();
    auto* envCmd = app.add_subcommand("envelope-transfer", "carry an ADSR envelope over to a colour intensity");
    envCmd->add_option("--color", envColor, "base colour RRGGBB")->capture_default_str();
    envCmd->add_option("--attack-level", env.adsr.attackLevel, "peak amplitude in [0, 1]")->capture_default_str();
    envCmd->add_option("--attack", env.adsr.attackSec, "attack time (s)")->capture_default_str();
    envCmd->add_option("--decay", env.adsr.decaySec, "decay time (s)")->capture_default_str();
    envCmd->add_option("--sustain-level", env.adsr.sustainLevel, "sustain amplitude in [0, 1]")
        ->capture_default_str();
    envCmd->add_option("--sustain", env.adsr.sustainSec, "sustain time (s)")->capture_default_str();
    envCmd->add_option("--release", env.adsr.releaseSec, "release time (s)")->capture_default_str();
    envCmd->add_option("--samples", env.samplesPerSegment, "samples per envelope segment")->capture_default_str();
    envCmd->add_option("--width", env.stripWidth, "strip width (px)")->capture_default_str();
    envCmd->add_option("--height", env.stripHeight, "strip height (px)")->capture_default_str();
    envCmd->add_option("--out-gesture", envGesture, "colour gesture text output")->capture_default_str();
    envCmd->add_option("--out-img", envImg, "PPM strip output")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        const ColorMatchingTable cmf = loadTable(cmfPath);
        if (verbose) {
            std::cerr << "simd kernels: " << simd::name(simd::active()) << "\n";
        }
        if (*fmCmd) {
            fm.outWav = fmWav;
            fm.outImg = fmImg;
            fm.outCsv = fmCsv;
            fm.outLog = fmLog;
            const FmPathResult r = runFmPath(fm, cmf);
            std::cout << "fm-path: " << r.rows.size() << " colours, " << r.audioSamples << " samples ("
                      << r.audioSeconds << " s), max adjacent RGB distance " << r.maxAdjacentRgbDistance
                      << " of span " << r.rgbSpan << "\n";
            if (r.indicesAboveNyquist > 0) {
                std::cout << "warning: " << r.indicesAboveNyquist
                          << " index values put sidebands above Nyquist; the audio aliases there\n";
            }
        } else if (*w2cCmd) {
            w2c.inputWav = w2cIn;
            w2c.outImg = w2cImg;
            w2c.outCsv = w2cCsv;
            const Wav2ColorResult r = runWav2Color(w2c, cmf);
            std::cout << "wav2color: " << r.spectrum.size() << " harmonics, colour #" << toHex(r.rgb) << "\n";
        } else if (*envCmd) {
            env.baseColor = parseHexColor(envColor);
            env.outGesture = envGesture;
            env.outImg = envImg;
            runEnvelopeTransfer(env);
            std::cout << "envelope-transfer: wrote " << env.outGesture.string() << " and " << env.outImg.string()
                      << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
