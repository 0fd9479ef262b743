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

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "timbrecolor/timbre.hpp"

namespace timbrecolor {

/// Size of the canonical RIFF/WAVE header written by encodeWav.
inline constexpr std::size_t kWavHeaderBytes = 44;

/// RIFF/WAVE, PCM (format 1), mono, 16-bit little-endian. Samples are clamped
/// to [-1, 1] and scaled by 32767.
std::vector<std::uint8_t> encodeWav(const SampledWave& wave);

/// Inverse of encodeWav. Unknown chunks are skipped. Throws FormatError naming
/// the offending field or the missing chunk.
SampledWave decodeWav(std::span<const std::uint8_t> bytes);

void writeWav(const SampledWave& wave, const std::filesystem::path& path);
SampledWave readWav(const std::filesystem::path& path);

}  // namespace timbrecolor
