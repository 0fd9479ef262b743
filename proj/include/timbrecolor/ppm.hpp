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

#include "timbrecolor/colorimetry.hpp"

namespace timbrecolor {

/// 8-bit RGB raster, row-major, top row first.
struct Image {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> rgb;

    Image() = default;
    Image(std::size_t w, std::size_t h, SRGBColor fill = {});

    SRGBColor at(std::size_t x, std::size_t y) const;
    void set(std::size_t x, std::size_t y, SRGBColor c);
    void fillRect(std::size_t x0, std::size_t y0, std::size_t w, std::size_t h, SRGBColor c);

    bool operator==(const Image&) const = default;
};

/// Binary PPM: "P6\n<w> <h>\n255\n" followed by the raw RGB bytes.
std::vector<std::uint8_t> encodePpm(const Image& image);
Image decodePpm(std::span<const std::uint8_t> bytes);

void writePpm(const Image& image, const std::filesystem::path& path);
Image readPpm(const std::filesystem::path& path);

}  // namespace timbrecolor
