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

#include "timbrecolor/wav.hpp"

#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "timbrecolor/error.hpp"
#include "timbrecolor/simd.hpp"

namespace timbrecolor {

namespace {

void put16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int shift = 0; shift < 32; shift += 8) {
        out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
    }
}

void putTag(std::vector<std::uint8_t>& out, const char (&tag)[5]) {
    out.insert(out.end(), tag, tag + 4);
}

std::uint16_t get16(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t get32(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
           (static_cast<std::uint32_t>(b[at + 2]) << 16) | (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

bool tagIs(std::span<const std::uint8_t> b, std::size_t at, const char (&tag)[5]) {
    return std::memcmp(b.data() + at, tag, 4) == 0;
}

}  // namespace

std::vector<std::uint8_t> encodeWav(const SampledWave& wave) {
    if (wave.sampleRateHz <= 0) {
        throw DomainError("encodeWav: sample rate must be positive");
    }
    const std::size_t dataBytes = wave.samples.size() * 2;
    if (dataBytes > 0xffffffffull - kWavHeaderBytes) {
        throw DomainError("encodeWav: wave too long for a RIFF file");
    }
    std::vector<std::int16_t> pcm(wave.samples.size());
    simd::quantizeI16(wave.samples, pcm);

    std::vector<std::uint8_t> out;
    out.reserve(kWavHeaderBytes + dataBytes);
    putTag(out, "RIFF");
    put32(out, static_cast<std::uint32_t>(36 + dataBytes));
    putTag(out, "WAVE");
    putTag(out, "fmt ");
    put32(out, 16);
    put16(out, 1);  // PCM
    put16(out, 1);  // mono
    put32(out, static_cast<std::uint32_t>(wave.sampleRateHz));
    put32(out, static_cast<std::uint32_t>(wave.sampleRateHz) * 2);  // byte rate
    put16(out, 2);  // block align
    put16(out, 16);
    putTag(out, "data");
    put32(out, static_cast<std::uint32_t>(dataBytes));
    for (std::int16_t s : pcm) {
        put16(out, static_cast<std::uint16_t>(s));
    }
    return out;
}

SampledWave decodeWav(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 12) {
        throw FormatError("truncated file: missing RIFF header");
    }
    if (!tagIs(bytes, 0, "RIFF")) {
        throw FormatError("not a RIFF file (chunk id)");
    }
    if (!tagIs(bytes, 8, "WAVE")) {
        throw FormatError("RIFF form type is not WAVE");
    }
    bool haveFmt = false;
    SampledWave wave;
    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const std::uint32_t size = get32(bytes, pos + 4);
        const std::size_t body = pos + 8;
        if (tagIs(bytes, pos, "fmt ")) {
            if (size < 16 || body + 16 > bytes.size()) {
                throw FormatError("truncated fmt chunk");
            }
            const std::uint16_t format = get16(bytes, body);
            const std::uint16_t channels = get16(bytes, body + 2);
            const std::uint32_t rate = get32(bytes, body + 4);
            const std::uint16_t bits = get16(bytes, body + 14);
            if (format != 1) {
                throw FormatError("unsupported audioFormat " + std::to_string(format) +
                                  " (only PCM = 1 is supported)");
            }
            if (channels != 1) {
                throw FormatError("unsupported numChannels " + std::to_string(channels) +
                                  " (only mono is supported)");
            }
            if (bits != 16) {
                throw FormatError("unsupported bitsPerSample " + std::to_string(bits) +
                                  " (only 16 is supported)");
            }
            if (rate == 0 || rate > 0x7fffffff) {
                throw FormatError("invalid sampleRate " + std::to_string(rate));
            }
            wave.sampleRateHz = static_cast<int>(rate);
            haveFmt = true;
        } else if (tagIs(bytes, pos, "data")) {
            if (!haveFmt) {
                throw FormatError("data chunk before fmt chunk");
            }
            if (body + size > bytes.size()) {
                throw FormatError("truncated data chunk: header declares " + std::to_string(size) +
                                  " bytes, file holds " + std::to_string(bytes.size() - body));
            }
            wave.samples.resize(size / 2);
            for (std::size_t i = 0; i < wave.samples.size(); ++i) {
                const auto raw = static_cast<std::int16_t>(get16(bytes, body + 2 * i));
                wave.samples[i] = static_cast<double>(raw) / 32767.0;
            }
            return wave;
        }
        pos = body + size + (size & 1u);
    }
    throw FormatError(haveFmt ? "missing data chunk" : "missing fmt chunk");
}

void writeWav(const SampledWave& wave, const std::filesystem::path& path) {
    const auto bytes = encodeWav(wave);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw Error("write failed: " + path.string());
    }
}

SampledWave readWav(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decodeWav(bytes);
}

}  // namespace timbrecolor
